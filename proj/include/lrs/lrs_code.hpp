#pragma once

#include <numeric>
#include <span>
#include <vector>

#include "lrs/skew_poly.hpp"

namespace lrs {

namespace detail {

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::uint64_t field_order(const Extension& ext) {
    std::uint64_t qm = 1;
    for (std::size_t i = 0; i < ext.rank(); ++i) qm *= ext.residue_size();
    return qm;
}

inline Vector default_beta_block(const Extension& ext, std::size_t ni) {
    Vector out(ni);
    for (std::size_t j = 0; j < ni; ++j) out[j] = ext.xi_power(j);
    return out;
}

inline void check_generation_request(const Extension& ext, const LengthPartition& partition) {
    const std::uint64_t q = ext.residue_size();
    if (partition.blocks() > q - 1)
        fail(ErrorCode::EllTooLarge, "number of blocks " + std::to_string(partition.blocks()) + " exceeds q - 1 = " +
                                         std::to_string(q - 1));
    for (auto ni : partition.sizes())
        if (ni > ext.rank()) fail(ErrorCode::BadDimension, "block length exceeds the extension degree m");
}

inline PointSystem validated(const Extension& ext, PointSystem points) {
    if (!has_msrd_property(ext, points)) fail(ErrorCode::ValidationFailed, "generated points violate the MSRD property");
    return points;
}

}  // namespace detail

/// A primitive element of F_{q^m}, the first one in element-index order.
/// Returned as residue coordinates (each in [0, p)).
inline Elem find_primitive_residue(const Extension& ext) {
    const Extension field = ext.residue_field();
    const std::uint64_t order = detail::field_order(ext) - 1;
    const auto factors = detail::prime_factors(order);
    for (std::uint64_t idx = 1; idx < field.size(); ++idx) {
        const Elem g = field.element(idx);
        if (g.is_zero()) continue;
        bool primitive = field.pow(g, order) == field.one();
        for (auto f : factors) primitive = primitive && field.pow(g, order / f) != field.one();
        if (primitive) return g;
    }
    fail(ErrorCode::ValidationFailed, "no primitive element found");
}

/// a_i = canonical lift of gamma^{i-1} for a primitive gamma of F_{q^m}.
inline PointSystem gen_points_primitive(const Extension& ext, const LengthPartition& partition) {
    detail::check_generation_request(ext, partition);
    const Extension field = ext.residue_field();
    const Elem gamma = find_primitive_residue(ext);
    PointSystem points;
    Elem power = field.one();
    for (std::size_t i = 0; i < partition.blocks(); ++i) {
        points.a.push_back(power);  // residue coordinates are already canonical lifts
        points.beta.push_back(detail::default_beta_block(ext, partition.block(i)));
        power = field.mul(power, gamma);
    }
    return detail::validated(ext, std::move(points));
}

/// a_i = canonical lifts of the first l elements of F_q^*.
/// Two elements of F_q^* are sigma-conjugate iff their ratio t has t^m = 1, so
/// distinct elements are pairwise non-conjugate only when gcd(q - 1, m) = 1.
/// gcd(q, m) = 1 alone is not enough (q = 3, m = 2: 1^xi = -1).
inline PointSystem gen_points_coprime(const Extension& ext, const LengthPartition& partition) {
    const std::uint64_t q = ext.residue_size();
    const auto m = static_cast<std::uint64_t>(ext.rank());
    if (std::gcd(q, m) != 1)
        fail(ErrorCode::NotCoprime, "q = " + std::to_string(q) + " and m = " + std::to_string(m) + " are not coprime");
    if (std::gcd(q - 1, m) != 1)
        fail(ErrorCode::NotCoprime, "q - 1 = " + std::to_string(q - 1) + " and m = " + std::to_string(m) +
                                        " share a factor, so elements of F_q^* are sigma-conjugate; use primitive points");
    detail::check_generation_request(ext, partition);
    const ChainRing fq = ext.base().residue_field();
    PointSystem points;
    for (std::size_t i = 0; i < partition.blocks(); ++i) {
        points.a.push_back(fq.element(i + 1));
        points.beta.push_back(detail::default_beta_block(ext, partition.block(i)));
    }
    return detail::validated(ext, std::move(points));
}

/// The linearized Reed-Solomon code C_k(a, beta) with generator M_k(a, beta).
class LrsCode {
public:
    LrsCode(Extension ext, PointSystem points, std::size_t k)
        : ext_(std::move(ext)), points_(std::move(points)), k_(k) {
        const std::size_t n = points_.length();
        if (k_ < 1 || k_ > n) fail(ErrorCode::BadDimension, "dimension must satisfy 1 <= k <= n");
        if (!has_msrd_property(ext_, points_))
            fail(ErrorCode::MsrdPropertyViolated, "evaluation points violate the MSRD property");
        partition_ = points_.partition();
        flat_ = points_.flatten();
        generator_ = moore_matrix(ext_, points_, k_);
        lagrange_ = lagrange_basis(ext_, points_);
    }

    const Extension& ext() const { return ext_; }
    const PointSystem& points() const { return points_; }
    const std::vector<EvalPoint>& flat_points() const { return flat_; }
    const LengthPartition& partition() const { return partition_; }
    const Matrix& generator() const { return generator_; }
    std::size_t k() const { return k_; }
    std::size_t n() const { return flat_.size(); }
    std::size_t designed_distance() const { return n() - k_ + 1; }
    /// Number of correctable sum-rank errors, floor((n - k) / 2).
    std::size_t correction_radius() const { return (n() - k_) / 2; }
    Vector basis() const { return power_basis(ext_); }
    /// Lagrange basis of the point system, block-major.
    const std::vector<SkewPolynomial>& lagrange() const { return lagrange_; }

private:
    Extension ext_;
    PointSystem points_;
    std::size_t k_;
    LengthPartition partition_;
    std::vector<EvalPoint> flat_;
    Matrix generator_;
    std::vector<SkewPolynomial> lagrange_;
};

inline LrsCode make_code(const Extension& ext, const PointSystem& points, std::size_t k) {
    return LrsCode(ext, points, k);
}

/// c = msg M_k(a, beta).
inline Vector encode(const LrsCode& code, std::span<const Elem> msg) {
    if (msg.size() != code.k()) fail(ErrorCode::DimensionMismatch, "message length must equal k");
    return multiply(code.ext(), msg, code.generator());
}

/// c_{i,j} = F_{a_i}(beta_{i,j}) for F = sum_u msg_u x^u.
inline Vector encode_by_evaluation(const LrsCode& code, std::span<const Elem> msg) {
    if (msg.size() != code.k()) fail(ErrorCode::DimensionMismatch, "message length must equal k");
    const SkewPolynomial f(Vector(msg.begin(), msg.end()));
    Vector out;
    out.reserve(code.n());
    for (const auto& pt : code.flat_points()) out.push_back(operator_eval(code.ext(), f, pt.a, pt.beta));
    return out;
}

/// Brute-force minimum distance; throws MsrdViolated if it misses n - k + 1.
inline int certify_msrd(const LrsCode& code) {
    const int d = min_distance_bruteforce(code.ext(), code.generator(), code.partition());
    if (d != static_cast<int>(code.designed_distance()))
        fail(ErrorCode::MsrdViolated, "minimum distance " + std::to_string(d) + " differs from n - k + 1 = " +
                                          std::to_string(code.designed_distance()));
    return d;
}

}  // namespace lrs
