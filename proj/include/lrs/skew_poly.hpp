#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "lrs/sum_rank.hpp"

namespace lrs {

/// Element of S[x; sigma] with x a = sigma(a) x. Coefficients ascend in
/// degree with no trailing zeros; the zero polynomial is empty.
struct SkewPolynomial {
    Vector coeffs;

    SkewPolynomial() = default;
    explicit SkewPolynomial(Vector c) : coeffs(std::move(c)) { normalize(); }

    static SkewPolynomial constant(const Elem& c) { return SkewPolynomial(Vector{c}); }

    /// x^d.
    static SkewPolynomial monomial(std::size_t d) {
        Vector c(d + 1);
        c[d].c[0] = 1;
        return SkewPolynomial(std::move(c));
    }

    void normalize() { trim(coeffs); }
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    /// Coefficient of x^i, zero past the end.
    Elem operator[](std::size_t i) const { return i < coeffs.size() ? coeffs[i] : Elem{}; }

    bool is_monic(const Extension& ext) const { return !is_zero() && coeffs.back() == ext.one(); }

    friend bool operator==(const SkewPolynomial&, const SkewPolynomial&) = default;
};

namespace skew {

inline SkewPolynomial add(const Extension& ext, const SkewPolynomial& f, const SkewPolynomial& g) {
    Vector out(std::max(f.coeffs.size(), g.coeffs.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ext.add(f[i], g[i]);
    return SkewPolynomial(std::move(out));
}

inline SkewPolynomial sub(const Extension& ext, const SkewPolynomial& f, const SkewPolynomial& g) {
    Vector out(std::max(f.coeffs.size(), g.coeffs.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ext.sub(f[i], g[i]);
    return SkewPolynomial(std::move(out));
}

/// c * F (scalar on the left).
inline SkewPolynomial scale_left(const Extension& ext, const Elem& c, const SkewPolynomial& f) {
    Vector out(f.coeffs.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ext.mul(c, f.coeffs[i]);
    return SkewPolynomial(std::move(out));
}

/// (F G)_k = sum_{i+j=k} F_i sigma^i(G_j).
inline SkewPolynomial mul(const Extension& ext, const SkewPolynomial& f, const SkewPolynomial& g) {
    if (f.is_zero() || g.is_zero()) return {};
    Vector out(f.coeffs.size() + g.coeffs.size() - 1);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (f.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
            if (g.coeffs[j].is_zero()) continue;
            out[i + j] = ext.add(out[i + j], ext.mul(f.coeffs[i], ext.frobenius(g.coeffs[j], static_cast<long long>(i))));
        }
    }
    return SkewPolynomial(std::move(out));
}

/// (x - c) G, the update step of the annihilator construction.
inline SkewPolynomial mul_linear_left(const Extension& ext, const Elem& c, const SkewPolynomial& g) {
    Vector out(g.coeffs.size() + 1);
    for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
        out[i + 1] = ext.add(out[i + 1], ext.sigma(g.coeffs[i]));
        out[i] = ext.sub(out[i], ext.mul(c, g.coeffs[i]));
    }
    return SkewPolynomial(std::move(out));
}

struct DivMod {
    SkewPolynomial quotient;
    SkewPolynomial remainder;
};

/// F = Q G + Rm with deg Rm < deg G.
inline DivMod right_divmod(const Extension& ext, SkewPolynomial f, const SkewPolynomial& g) {
    if (g.is_zero() || !ext.is_unit(g.coeffs.back())) fail(ErrorCode::LeadingNotUnit, "divisor leading coefficient is not a unit");
    const int dg = g.degree();
    const Elem lead_inv = ext.inverse(g.coeffs.back());
    Vector q(f.degree() >= dg ? static_cast<std::size_t>(f.degree() - dg + 1) : 0);
    while (f.degree() >= dg) {
        const int d = f.degree() - dg;
        // (c x^d) G has leading coefficient c sigma^d(lead(G)).
        const Elem c = ext.mul(f.coeffs.back(), ext.frobenius(lead_inv, d));
        q[static_cast<std::size_t>(d)] = c;
        Vector sub(static_cast<std::size_t>(d) + g.coeffs.size());
        for (std::size_t j = 0; j < g.coeffs.size(); ++j)
            sub[static_cast<std::size_t>(d) + j] = ext.mul(c, ext.frobenius(g.coeffs[j], d));
        const std::size_t before = f.coeffs.size();
        f = skew::sub(ext, f, SkewPolynomial(std::move(sub)));
        if (f.coeffs.size() >= before) fail(ErrorCode::LiftDivergence, "division made no progress");
    }
    return {SkewPolynomial(std::move(q)), std::move(f)};
}

/// F = G Q + Rm with deg Rm < deg G; needs sigma^{-1}.
inline DivMod left_divmod(const Extension& ext, SkewPolynomial f, const SkewPolynomial& g) {
    if (g.is_zero() || !ext.is_unit(g.coeffs.back())) fail(ErrorCode::LeadingNotUnit, "divisor leading coefficient is not a unit");
    const int dg = g.degree();
    const Elem lead_inv = ext.inverse(g.coeffs.back());
    Vector q(f.degree() >= dg ? static_cast<std::size_t>(f.degree() - dg + 1) : 0);
    while (f.degree() >= dg) {
        const int d = f.degree() - dg;
        // G (c x^d) has leading coefficient lead(G) sigma^{dg}(c).
        const Elem c = ext.frobenius(ext.mul(lead_inv, f.coeffs.back()), -dg);
        q[static_cast<std::size_t>(d)] = c;
        const std::size_t before = f.coeffs.size();
        Vector term(static_cast<std::size_t>(d) + 1);
        term[static_cast<std::size_t>(d)] = c;
        f = skew::sub(ext, f, skew::mul(ext, g, SkewPolynomial(std::move(term))));
        if (f.coeffs.size() >= before) fail(ErrorCode::LiftDivergence, "division made no progress");
    }
    return {SkewPolynomial(std::move(q)), std::move(f)};
}

}  // namespace skew

/// N_i(a) = sigma^{i-1}(a) ... sigma(a) a, N_0 = 1.
inline Elem norm(const Extension& ext, const Elem& a, std::size_t i) {
    Elem out = ext.one();
    for (std::size_t j = 0; j < i; ++j) out = ext.mul(ext.frobenius(a, static_cast<long long>(j)), out);
    return out;
}

/// N_0(a), ..., N_{count-1}(a) via N_{i+1} = sigma^i(a) N_i.
inline Vector norms(const Extension& ext, const Elem& a, std::size_t count) {
    Vector out(count);
    if (count == 0) return out;
    out[0] = ext.one();
    for (std::size_t i = 1; i < count; ++i) out[i] = ext.mul(ext.frobenius(a, static_cast<long long>(i - 1)), out[i - 1]);
    return out;
}

/// D_a^i(beta) = sigma^i(beta) N_i(a).
inline Elem operator_power(const Extension& ext, const Elem& a, const Elem& beta, std::size_t i) {
    return ext.mul(ext.frobenius(beta, static_cast<long long>(i)), norm(ext, a, i));
}

/// F_a(beta) = sum_i F_i sigma^i(beta) N_i(a).
inline Elem operator_eval(const Extension& ext, const SkewPolynomial& f, const Elem& a, const Elem& beta) {
    Elem out;
    Elem n = ext.one();
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (i > 0) n = ext.mul(ext.frobenius(a, static_cast<long long>(i - 1)), n);
        if (f.coeffs[i].is_zero()) continue;
        out = ext.add(out, ext.mul(f.coeffs[i], ext.mul(ext.frobenius(beta, static_cast<long long>(i)), n)));
    }
    return out;
}

/// F(a) = sum_i F_i N_i(a), the remainder of right division by x - a.
inline Elem remainder_eval(const Extension& ext, const SkewPolynomial& f, const Elem& a) {
    Elem out;
    Elem n = ext.one();
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (i > 0) n = ext.mul(ext.frobenius(a, static_cast<long long>(i - 1)), n);
        out = ext.add(out, ext.mul(f.coeffs[i], n));
    }
    return out;
}

/// a^beta = sigma(beta) a beta^{-1}.
inline Elem conjugate(const Extension& ext, const Elem& a, const Elem& beta) {
    if (!ext.is_unit(beta)) fail(ErrorCode::NotUnit, "conjugation needs a unit");
    return ext.mul(ext.mul(ext.sigma(beta), a), ext.inverse(beta));
}

/// One evaluation pair (a_i, beta_{i,j}).
struct EvalPoint {
    Elem a;
    Elem beta;

    friend bool operator==(const EvalPoint&, const EvalPoint&) = default;
};

/// Evaluation data (a, beta) of a linearized Reed-Solomon code: one a_i per
/// block and n_i directions beta_{i,j} in block i. Columns are block-major.
struct PointSystem {
    Vector a;
    std::vector<Vector> beta;

    LengthPartition partition() const {
        std::vector<std::size_t> sizes;
        for (const auto& b : beta) sizes.push_back(b.size());
        return LengthPartition(std::move(sizes));
    }

    std::size_t length() const {
        std::size_t n = 0;
        for (const auto& b : beta) n += b.size();
        return n;
    }

    std::vector<EvalPoint> flatten() const {
        std::vector<EvalPoint> out;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (const auto& b : beta[i]) out.push_back({a[i], b});
        return out;
    }

    friend bool operator==(const PointSystem&, const PointSystem&) = default;
};

inline constexpr std::uint64_t kExhaustiveUnitLimit = 10000;

enum class UnitDifferenceCheck { Auto, Exhaustive, ResidueNorm };

/// a_i - a_j^beta in S* for every unit beta and i < j. Exhaustive over the
/// units for small rings; otherwise compares the residue norms
/// N_{F_{q^m}/F_q}(a_i), which separate the sigma-conjugacy classes of
/// F_{q^m}^* (Hilbert 90: sigma(b)/b is exactly the norm-one subgroup).
inline bool unit_differences_hold(const Extension& ext, std::span<const Elem> a,
                                  UnitDifferenceCheck method = UnitDifferenceCheck::Auto) {
    for (const auto& ai : a)
        if (!ext.is_unit(ai)) return false;
    if (a.size() < 2) return true;
    if (method == UnitDifferenceCheck::Auto)
        method = ext.unit_count() <= kExhaustiveUnitLimit ? UnitDifferenceCheck::Exhaustive : UnitDifferenceCheck::ResidueNorm;

    if (method == UnitDifferenceCheck::ResidueNorm) {
        std::vector<Elem> classes;
        for (const auto& ai : a) classes.push_back(ext.project(norm(ext, ai, ext.rank())));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = i + 1; j < a.size(); ++j)
                if (classes[i] == classes[j]) return false;
        return true;
    }

    // a_i - a_j^beta is a unit iff its residue is nonzero, and that residue only
    // depends on the residue of beta; every nonzero residue lifts to a unit, so
    // running beta over F_{q^m}^* covers all of S^*.
    const Extension field = ext.residue_field();
    std::set<Elem> ratios;
    for (std::uint64_t idx = 1; idx < field.size(); ++idx) {
        const Elem beta = field.element(idx);
        ratios.insert(field.mul(field.sigma(beta), field.inverse(beta)));
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            const Elem ai = ext.project(a[i]);
            const Elem aj = ext.project(a[j]);
            for (const auto& t : ratios)
                if (field.mul(t, aj) == ai) return false;
        }
    return true;
}

/// Both conditions of the MSRD property.
inline bool has_msrd_property(const Extension& ext, const PointSystem& points,
                              UnitDifferenceCheck method = UnitDifferenceCheck::Auto) {
    if (points.a.size() != points.beta.size() || points.a.empty()) return false;
    for (const auto& block : points.beta)
        if (block.empty() || free_rank_of(ext, block) != static_cast<int>(block.size())) return false;
    return unit_differences_hold(ext, points.a, method);
}

/// Monic annihilator of minimal degree for an ordered list of pairs, built as
/// the product (x - a^{gamma_n}) ... (x - a^{gamma_1}) with
/// gamma = G(a^beta) beta for the running product G.
inline SkewPolynomial annihilator(const Extension& ext, std::span<const EvalPoint> points) {
    SkewPolynomial g = SkewPolynomial::constant(ext.one());
    for (const auto& pt : points) {
        if (!ext.is_unit(pt.beta)) fail(ErrorCode::MsrdPropertyViolated, "evaluation direction is not a unit");
        const Elem gamma = ext.mul(remainder_eval(ext, g, conjugate(ext, pt.a, pt.beta)), pt.beta);
        if (!ext.is_unit(gamma)) fail(ErrorCode::MsrdPropertyViolated, "intermediate remainder evaluation is not a unit");
        g = skew::mul_linear_left(ext, conjugate(ext, pt.a, gamma), g);
    }
    return g;
}

inline SkewPolynomial annihilator(const Extension& ext, const PointSystem& points) {
    const auto flat = points.flatten();
    return annihilator(ext, flat);
}

/// Monic F of degree sum_i rk(u_i) with F_{a_i}(u_{i,j}) = 0, obtained by
/// factoring each block u_i = alpha_i B_i through its Smith form.
inline SkewPolynomial annihilator_of_vectors(const Extension& ext, std::span<const Elem> a, std::span<const Vector> u) {
    if (a.size() != u.size()) fail(ErrorCode::DimensionMismatch, "one vector block per a_i is required");
    if (!unit_differences_hold(ext, a)) fail(ErrorCode::ConditionViolated, "a_i do not have unit conjugate differences");
    const Vector basis = power_basis(ext);
    const BasisChange change(ext, basis);
    std::vector<EvalPoint> points;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (u[i].empty()) continue;
        const auto snf = smith_normal_form(ext.base(), change.represent(u[i]));
        const int rank = rank_and_free_rank(ext.base(), snf).rank;
        for (int k = 0; k < rank; ++k) {
            // alpha_k has power-basis coordinates given by column k of P.
            Elem alpha;
            for (std::size_t row = 0; row < ext.rank(); ++row)
                alpha = ext.add(alpha, ext.mul(snf.P(row, static_cast<std::size_t>(k)), basis[row]));
            points.push_back({a[i], alpha});
        }
    }
    return annihilator(ext, points);
}

/// F_{i,j} of degree n-1 with F_{i,j}(a_u, beta_{u,v}) = [ (u,v) == (i,j) ],
/// returned in block-major order.
inline std::vector<SkewPolynomial> lagrange_basis(const Extension& ext, const PointSystem& points) {
    const auto flat = points.flatten();
    std::vector<SkewPolynomial> out;
    out.reserve(flat.size());
    std::vector<EvalPoint> others;
    for (std::size_t target = 0; target < flat.size(); ++target) {
        others.clear();
        for (std::size_t k = 0; k < flat.size(); ++k)
            if (k != target) others.push_back(flat[k]);
        const SkewPolynomial g = annihilator(ext, others);
        const Elem value = operator_eval(ext, g, flat[target].a, flat[target].beta);
        if (!ext.is_unit(value)) fail(ErrorCode::MsrdPropertyViolated, "Lagrange normalizer is not a unit");
        out.push_back(skew::scale_left(ext, ext.inverse(value), g));
    }
    return out;
}

/// The unique F with deg F < n and F_{a_i}(beta_{i,j}) = values_{i,j}.
inline SkewPolynomial interpolate(const Extension& ext, const std::vector<SkewPolynomial>& basis,
                                  std::span<const Elem> values) {
    if (values.size() != basis.size()) fail(ErrorCode::DimensionMismatch, "one value per point is required");
    SkewPolynomial out;
    for (std::size_t k = 0; k < values.size(); ++k)
        if (!values[k].is_zero()) out = skew::add(ext, out, skew::scale_left(ext, values[k], basis[k]));
    return out;
}

inline SkewPolynomial interpolate(const Extension& ext, const PointSystem& points, std::span<const Elem> values) {
    return interpolate(ext, lagrange_basis(ext, points), values);
}

/// k x n extended Moore matrix, entry (u, (i,j)) = sigma^u(beta_{i,j}) N_u(a_i).
inline Matrix moore_matrix(const Extension& ext, const PointSystem& points, std::size_t k) {
    const auto flat = points.flatten();
    if (k < 1 || k > flat.size()) fail(ErrorCode::BadDimension, "Moore matrix needs 1 <= k <= n");
    Matrix out(k, flat.size());
    for (std::size_t col = 0; col < flat.size(); ++col) {
        const Vector n = norms(ext, flat[col].a, k);
        for (std::size_t u = 0; u < k; ++u)
            out(u, col) = ext.mul(ext.frobenius(flat[col].beta, static_cast<long long>(u)), n[u]);
    }
    return out;
}

}  // namespace lrs
