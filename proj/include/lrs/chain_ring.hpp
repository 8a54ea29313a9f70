#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lrs/error.hpp"
#include "lrs/random.hpp"

namespace lrs {

using Int = std::int64_t;

/// Upper bound on s*m, the number of integer coordinates of an element of S.
inline constexpr std::size_t kMaxWidth = 16;

/// Upper bound on the degree of g and h; irreducibility is checked by trial
/// division, which is only practical for small degrees.
inline constexpr int kMaxDegree = 6;

/// An element of R = GR(p^r, s) or of S = R[z]/(h), stored as integer
/// coordinates in [0, p^r). An element of R occupies the first s slots and is
/// also the embedding of that element in S, so R-scalars multiply S-elements
/// directly. Unused trailing slots are always zero.
struct Elem {
    std::array<Int, kMaxWidth> c{};

    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](Int v) { return v == 0; });
    }

    friend bool operator==(const Elem&, const Elem&) = default;
    friend auto operator<=>(const Elem&, const Elem&) = default;
};

namespace detail {

inline Int mod_floor(Int x, Int m) {
    Int v = x % m;
    return v < 0 ? v + m : v;
}

inline bool is_prime(Int p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline Int ipow(Int base, int e) {
    Int out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

inline int p_adic_valuation(Int x, Int p, int cap) {
    if (x == 0) return cap;
    int v = 0;
    while (v < cap && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

/// Arithmetic shared by every ring whose elements are vectors of `width`
/// integers modulo p^r over a free Z_{p^r}-basis: additive structure,
/// valuation, enumeration and sampling.
class CoefficientSpace {
public:
    Int p() const { return p_; }
    int r() const { return r_; }
    Int modulus() const { return mod_; }
    std::size_t width() const { return width_; }

    Elem zero() const { return Elem{}; }

    Elem from_int(Int v) const {
        Elem e;
        e.c[0] = mod_floor(v, mod_);
        return e;
    }

    Elem one() const { return from_int(1); }

    bool is_zero(const Elem& x) const { return x.is_zero(); }

    Elem add(const Elem& a, const Elem& b) const {
        Elem out;
        for (std::size_t i = 0; i < width_; ++i) out.c[i] = (a.c[i] + b.c[i]) % mod_;
        return out;
    }

    Elem sub(const Elem& a, const Elem& b) const {
        Elem out;
        for (std::size_t i = 0; i < width_; ++i) out.c[i] = mod_floor(a.c[i] - b.c[i], mod_);
        return out;
    }

    Elem neg(const Elem& a) const {
        Elem out;
        for (std::size_t i = 0; i < width_; ++i) out.c[i] = mod_floor(-a.c[i], mod_);
        return out;
    }

    /// Multiplication by an integer (the Z_{p^r}-module structure).
    Elem scale_int(const Elem& a, Int k) const {
        const Int kk = mod_floor(k, mod_);
        Elem out;
        for (std::size_t i = 0; i < width_; ++i) out.c[i] = (a.c[i] * kk) % mod_;
        return out;
    }

    /// Largest v with x in (p^v); valuation(0) = r.
    int valuation(const Elem& x) const {
        int v = r_;
        for (std::size_t i = 0; i < width_; ++i)
            if (x.c[i] != 0) v = std::min(v, p_adic_valuation(x.c[i], p_, r_));
        return v;
    }

    bool is_unit(const Elem& x) const { return valuation(x) == 0; }

    /// The constant p^v (zero once v >= r).
    Elem p_power(int v) const {
        if (v >= r_) return zero();
        return from_int(ipow(p_, v));
    }

    /// Coordinatewise x / p^v for x with valuation(x) >= v. The result is the
    /// representative with every coordinate in [0, p^{r-v}).
    Elem divide_by_p_power(const Elem& x, int v) const {
        const Int pv = ipow(p_, v);
        Elem out;
        for (std::size_t i = 0; i < width_; ++i) out.c[i] = x.c[i] / pv;
        return out;
    }

    /// Reduction modulo the maximal ideal; every coordinate lands in [0, p).
    Elem project(const Elem& x) const {
        Elem out;
        for (std::size_t i = 0; i < width_; ++i) out.c[i] = x.c[i] % p_;
        return out;
    }

    /// |ring| = (p^r)^width, saturating at UINT64_MAX.
    std::uint64_t size() const {
        std::uint64_t out = 1;
        for (std::size_t i = 0; i < width_; ++i) {
            if (out > UINT64_MAX / static_cast<std::uint64_t>(mod_)) return UINT64_MAX;
            out *= static_cast<std::uint64_t>(mod_);
        }
        return out;
    }

    /// The index-th element in mixed-radix order (coordinate 0 least significant).
    Elem element(std::uint64_t index) const {
        Elem out;
        for (std::size_t i = 0; i < width_; ++i) {
            out.c[i] = static_cast<Int>(index % static_cast<std::uint64_t>(mod_));
            index /= static_cast<std::uint64_t>(mod_);
        }
        return out;
    }

    Elem random(Rng& rng) const {
        Elem out;
        for (std::size_t i = 0; i < width_; ++i)
            out.c[i] = static_cast<Int>(rng.below(static_cast<std::uint64_t>(mod_)));
        return out;
    }

    Elem random_unit(Rng& rng) const {
        for (;;) {
            Elem x = random(rng);
            if (is_unit(x)) return x;
        }
    }

    /// Canonicalize arbitrary integer coordinates.
    Elem reduce(const Elem& x) const {
        Elem out;
        for (std::size_t i = 0; i < width_; ++i) out.c[i] = mod_floor(x.c[i], mod_);
        return out;
    }

protected:
    CoefficientSpace() = default;
    CoefficientSpace(Int p, int r, std::size_t width) : p_(p), r_(r), mod_(ipow(p, r)), width_(width) {}

    Int p_ = 2;
    int r_ = 1;
    Int mod_ = 2;
    std::size_t width_ = 1;
};

}  // namespace detail

/// Dense univariate polynomial with coefficients in some ring, ascending degree.
using Poly = std::vector<Elem>;

inline void trim(Poly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

inline int degree(const Poly& f) {
    for (std::size_t i = f.size(); i > 0; --i)
        if (!f[i - 1].is_zero()) return static_cast<int>(i) - 1;
    return -1;
}

/// Remainder of f modulo a monic divisor over any commutative ring context.
template <class Ring>
Poly poly_mod_monic(const Ring& ring, Poly f, const Poly& divisor) {
    const int dg = degree(divisor);
    for (int d = degree(f); d >= dg; d = degree(f)) {
        const Elem lead = f[static_cast<std::size_t>(d)];
        for (int i = 0; i <= dg; ++i) {
            auto& slot = f[static_cast<std::size_t>(d - dg + i)];
            slot = ring.sub(slot, ring.mul(lead, divisor[static_cast<std::size_t>(i)]));
        }
    }
    trim(f);
    return f;
}

/// Trial division by every monic polynomial of degree <= deg(f)/2 over a
/// finite field context.
template <class Field>
bool is_irreducible_over(const Field& field, const Poly& f) {
    const int df = degree(f);
    if (df <= 0) return false;
    const std::uint64_t q = field.size();
    for (int d = 1; 2 * d <= df; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= q;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly divisor(static_cast<std::size_t>(d) + 1);
            std::uint64_t rest = idx;
            for (int i = 0; i < d; ++i) {
                divisor[static_cast<std::size_t>(i)] = field.element(rest % q);
                rest /= q;
            }
            divisor[static_cast<std::size_t>(d)] = field.one();
            if (poly_mod_monic(field, f, divisor).empty()) return false;
        }
    }
    return true;
}

/// The Galois ring R = GR(p^r, s) = Z_{p^r}[y]/(g). Immutable once built.
class ChainRing : public detail::CoefficientSpace {
public:
    /// Validates p prime, r >= 1, g monic of degree s >= 1 with irreducible
    /// reduction mod p. `g` holds integer coefficients in ascending degree.
    ChainRing(Int p, int r, std::vector<Int> g) : CoefficientSpace() {
        if (!detail::is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
        if (r < 1) fail(ErrorCode::TooLarge, "nilpotency exponent r must be >= 1");
        Int mod = 1;
        for (int i = 0; i < r; ++i) {
            mod *= p;
            if (mod >= (Int{1} << 31)) fail(ErrorCode::TooLarge, "p^r must stay below 2^31");
        }
        while (!g.empty() && detail::mod_floor(g.back(), mod) == 0) g.pop_back();
        if (g.size() < 2) fail(ErrorCode::NotMonic, "g must have degree >= 1");
        if (detail::mod_floor(g.back(), mod) != 1) fail(ErrorCode::NotMonic, "g must be monic");
        const std::size_t s = g.size() - 1;
        if (s > static_cast<std::size_t>(kMaxDegree) || s > kMaxWidth)
            fail(ErrorCode::TooLarge, "deg(g) above desk-scale limit");
        p_ = p;
        r_ = r;
        mod_ = mod;
        width_ = s;
        g_.resize(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) g_[i] = detail::mod_floor(g[i], mod);

        if (s > 1) {
            const ChainRing prime_field = ChainRing::unchecked(p, 1, {0, 1});
            Poly gbar(g_.size());
            for (std::size_t i = 0; i < g_.size(); ++i) gbar[i] = prime_field.from_int(g_[i] % p);
            if (!is_irreducible_over(prime_field, gbar))
                fail(ErrorCode::ReducibleModP, "g is reducible modulo p");
        }
    }

    /// Z_{p^r}, i.e. g = y.
    static ChainRing integers_mod(Int p, int r) { return ChainRing(p, r, {0, 1}); }

    std::size_t degree() const { return width_; }
    const std::vector<Int>& g() const { return g_; }

    /// q = |R/m| = p^s.
    std::uint64_t residue_size() const { return static_cast<std::uint64_t>(detail::ipow(p_, static_cast<int>(width_))); }

    /// F_q presented as GR(p, s) with the reduced modulus.
    ChainRing residue_field() const {
        std::vector<Int> gbar(g_.size());
        for (std::size_t i = 0; i < g_.size(); ++i) gbar[i] = g_[i] % p_;
        return unchecked(p_, 1, std::move(gbar));
    }

    Elem mul(const Elem& a, const Elem& b) const {
        std::array<Int, 2 * kMaxWidth> t{};
        const std::size_t s = width_;
        for (std::size_t i = 0; i < s; ++i) {
            if (a.c[i] == 0) continue;
            for (std::size_t j = 0; j < s; ++j) t[i + j] = (t[i + j] + a.c[i] * b.c[j]) % mod_;
        }
        for (std::size_t d = 2 * s - 2; d >= s && d < 2 * s; --d) {
            const Int lead = t[d];
            if (lead == 0) continue;
            t[d] = 0;
            for (std::size_t i = 0; i < s; ++i)
                t[d - s + i] = detail::mod_floor(t[d - s + i] - lead * g_[i], mod_);
        }
        Elem out;
        for (std::size_t i = 0; i < s; ++i) out.c[i] = t[i];
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

    /// Inverse of a unit: invert modulo p via x^{q-2}, then Newton-lift
    /// w <- w(2 - xw) until exact.
    Elem inverse(const Elem& x) const {
        if (!is_unit(x)) fail(ErrorCode::NotUnit, "element is not a unit");
        return newton_inverse(*this, x, residue_size() - 2);
    }

    /// Shared by R and S: lift an inverse modulo p to an exact one.
    template <class Ring>
    static Elem newton_inverse(const Ring& ring, const Elem& x, std::uint64_t field_exponent) {
        Elem w = ring.pow(x, field_exponent);
        const Elem two = ring.from_int(2);
        for (int iter = 0; iter < 64; ++iter) {
            if (ring.mul(x, w) == ring.one()) return w;
            w = ring.mul(w, ring.sub(two, ring.mul(x, w)));
        }
        fail(ErrorCode::LiftDivergence, "inverse lifting did not converge");
    }

    friend bool operator==(const ChainRing& a, const ChainRing& b) {
        return a.p_ == b.p_ && a.r_ == b.r_ && a.g_ == b.g_;
    }

private:
    static ChainRing unchecked(Int p, int r, std::vector<Int> g) {
        ChainRing out;
        out.p_ = p;
        out.r_ = r;
        out.mod_ = detail::ipow(p, r);
        out.width_ = g.size() - 1;
        out.g_ = std::move(g);
        return out;
    }

    ChainRing() = default;

    std::vector<Int> g_;
};

}  // namespace lrs
