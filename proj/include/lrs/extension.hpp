#pragma once

#include <cstdint>
#include <vector>

#include "lrs/chain_ring.hpp"

namespace lrs {

namespace op_counter {
/// Number of S-multiplications performed on this thread. Used only for
/// complexity smoke checks.
inline thread_local std::uint64_t ext_mul = 0;
}  // namespace op_counter

/// The Galois extension S = R[z]/(h) of rank m together with the generator
/// sigma of its automorphism group. Coordinate layout: coefficient j of
/// xi = z mod h occupies slots [j*s, (j+1)*s).
class Extension : public detail::CoefficientSpace {
public:
    /// `h` lists m+1 elements of R in ascending degree; it must be monic with
    /// irreducible reduction over F_q. Sigma is obtained by Newton-lifting the
    /// residue Frobenius xi^q to an exact root of h.
    Extension(ChainRing base, Poly h)
        : CoefficientSpace(base.p(), base.r(), 0), base_(std::move(base)), h_(std::move(h)) {
        for (auto& c : h_) c = base_.reduce(c);
        trim(h_);
        if (h_.size() < 2) fail(ErrorCode::NotMonic, "h must have degree >= 1");
        if (h_.back() != base_.one()) fail(ErrorCode::NotMonic, "h must be monic");
        m_ = h_.size() - 1;
        if (m_ > static_cast<std::size_t>(kMaxDegree))
            fail(ErrorCode::TooLarge, "deg(h) above desk-scale limit");
        if (m_ * base_.degree() > kMaxWidth) fail(ErrorCode::TooLarge, "s*m exceeds element capacity");
        width_ = m_ * base_.degree();

        if (m_ > 1) {
            const ChainRing fq = base_.residue_field();
            Poly hbar(h_.size());
            for (std::size_t i = 0; i < h_.size(); ++i) hbar[i] = base_.project(h_[i]);
            if (!is_irreducible_over(fq, hbar))
                fail(ErrorCode::ReducibleModIdeal, "h is reducible modulo the maximal ideal");
        }
        compute_sigma();
    }

    const ChainRing& base() const { return base_; }
    const Poly& h() const { return h_; }
    std::size_t rank() const { return m_; }
    std::uint64_t residue_size() const { return base_.residue_size(); }

    /// xi^j.
    Elem xi_power(std::size_t j) const {
        Elem out;
        out.c[j * base_.degree()] = 1;
        return out;
    }

    /// The R-coordinate of x at xi^j.
    Elem coord(const Elem& x, std::size_t j) const {
        Elem out;
        const std::size_t s = base_.degree();
        for (std::size_t i = 0; i < s; ++i) out.c[i] = x.c[j * s + i];
        return out;
    }

    void set_coord(Elem& x, std::size_t j, const Elem& value) const {
        const std::size_t s = base_.degree();
        for (std::size_t i = 0; i < s; ++i) x.c[j * s + i] = value.c[i];
    }

    /// True iff every coordinate beyond xi^0 vanishes.
    bool in_base(const Elem& x) const {
        for (std::size_t i = base_.degree(); i < width_; ++i)
            if (x.c[i] != 0) return false;
        return true;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        ++op_counter::ext_mul;
        if (m_ == 1) return base_.mul(a, b);
        std::array<Elem, 2 * kMaxDegree> t{};
        for (std::size_t i = 0; i < m_; ++i) {
            const Elem ai = coord(a, i);
            if (ai.is_zero()) continue;
            for (std::size_t j = 0; j < m_; ++j) t[i + j] = base_.add(t[i + j], base_.mul(ai, coord(b, j)));
        }
        for (std::size_t d = 2 * m_ - 2; d >= m_; --d) {
            const Elem lead = t[d];
            if (!lead.is_zero()) {
                t[d] = Elem{};
                for (std::size_t i = 0; i < m_; ++i)
                    t[d - m_ + i] = base_.sub(t[d - m_ + i], base_.mul(lead, h_[i]));
            }
        }
        Elem out;
        for (std::size_t j = 0; j < m_; ++j) set_coord(out, j, t[j]);
        return out;
    }

    Elem pow(Elem x, std::uint64_t e) const {
        Elem out = one();
        while (e > 0) {
            if (e & 1) out = mul(out, x);
            x = mul(x, x);
            e >>= 1;
        }
        return out;
    }

    /// Inverse of a unit via x^{q^m - 2} modulo the maximal ideal and Newton lifting.
    Elem inverse(const Elem& x) const {
        if (!is_unit(x)) fail(ErrorCode::NotUnit, "element is not a unit");
        std::uint64_t qm = 1;
        for (std::size_t i = 0; i < m_; ++i) qm *= residue_size();
        return ChainRing::newton_inverse(*this, x, qm - 2);
    }

    /// The exact image of xi under sigma.
    const Elem& sigma_image() const { return sigma_image_; }

    /// sigma^i(x) for any integer i (taken mod m).
    Elem frobenius(const Elem& x, long long i) const {
        const std::size_t k = static_cast<std::size_t>(((i % static_cast<long long>(m_)) + static_cast<long long>(m_)) %
                                                        static_cast<long long>(m_));
        if (k == 0) return x;
        const auto& table = sigma_pow_[k];
        Elem out;
        for (std::size_t j = 0; j < m_; ++j) {
            const Elem cj = coord(x, j);
            if (!cj.is_zero()) out = add(out, mul(cj, table[j]));
        }
        return out;
    }

    Elem sigma(const Elem& x) const { return frobenius(x, 1); }

    /// h evaluated at an element of S.
    Elem eval_h(const Elem& t) const {
        Elem acc;
        for (std::size_t i = h_.size(); i > 0; --i) acc = add(mul(acc, t), h_[i - 1]);
        return acc;
    }

    /// F_{q^m} as the extension of F_q by the reduction of h.
    Extension residue_field() const {
        Poly hbar(h_.size());
        for (std::size_t i = 0; i < h_.size(); ++i) hbar[i] = base_.project(h_[i]);
        return Extension(base_.residue_field(), std::move(hbar));
    }

    /// |S*| = |S| (1 - q^{-m}).
    std::uint64_t unit_count() const {
        std::uint64_t qm = 1;
        for (std::size_t i = 0; i < m_; ++i) qm *= residue_size();
        return size() / qm * (qm - 1);
    }

    friend bool operator==(const Extension& a, const Extension& b) { return a.base_ == b.base_ && a.h_ == b.h_; }

private:
    void compute_sigma() {
        const Elem xi = m_ == 1 ? base_.neg(h_[0]) : xi_power(1);
        Elem t = pow(xi, residue_size());
        Elem hprime_t;
        int iter = 0;
        for (; iter < 64 && !eval_h(t).is_zero(); ++iter) {
            hprime_t = Elem{};
            for (std::size_t i = h_.size() - 1; i > 0; --i)
                hprime_t = add(mul(hprime_t, t), scale_int(h_[i], static_cast<Int>(i)));
            t = sub(t, mul(eval_h(t), inverse(hprime_t)));
        }
        if (iter == 64) fail(ErrorCode::LiftDivergence, "Hensel lifting of sigma did not converge");
        sigma_image_ = t;

        sigma_pow_.assign(m_, std::vector<Elem>(m_));
        // images[i] = sigma^i(xi), obtained by composing the generator image.
        std::vector<Elem> images(m_);
        images[0] = xi;
        for (std::size_t i = 1; i < m_; ++i) {
            // sigma(images[i-1]) = sum_j coord_j(images[i-1]) t^j
            Elem acc;
            Elem tp = one();
            for (std::size_t j = 0; j < m_; ++j) {
                acc = add(acc, mul(coord(images[i - 1], j), tp));
                tp = mul(tp, t);
            }
            images[i] = acc;
        }
        for (std::size_t i = 0; i < m_; ++i) {
            Elem tp = one();
            for (std::size_t j = 0; j < m_; ++j) {
                sigma_pow_[i][j] = tp;
                tp = mul(tp, images[i]);
            }
        }
        if (m_ == 1) sigma_pow_[0][0] = one();
        validate_sigma_order(t);
    }

    void validate_sigma_order(const Elem& t) {
        if (m_ == 1) return;
        // sigma^m(xi) must return to xi and no smaller power may.
        Elem cur = xi_power(1);
        for (std::size_t i = 1; i <= m_; ++i) {
            Elem next;
            Elem tp = one();
            for (std::size_t j = 0; j < m_; ++j) {
                next = add(next, mul(coord(cur, j), tp));
                tp = mul(tp, t);
            }
            cur = next;
            const bool back = cur == xi_power(1);
            if (back != (i == m_)) fail(ErrorCode::LiftDivergence, "lifted sigma does not have order m");
        }
    }

    ChainRing base_;
    Poly h_;
    std::size_t m_ = 1;
    std::vector<std::vector<Elem>> sigma_pow_;  // [i][j] = sigma^i(xi)^j
    Elem sigma_image_;
};

}  // namespace lrs
