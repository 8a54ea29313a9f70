#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "lrs/matrix.hpp"

namespace lrs {

/// n = n_1 + ... + n_l.
class LengthPartition {
public:
    LengthPartition() = default;
    explicit LengthPartition(std::vector<std::size_t> blocks) : blocks_(std::move(blocks)) {
        if (blocks_.empty()) fail(ErrorCode::PartitionMismatch, "partition needs at least one block");
        for (auto b : blocks_)
            if (b == 0) fail(ErrorCode::PartitionMismatch, "partition blocks must be positive");
    }

    std::size_t blocks() const { return blocks_.size(); }
    std::size_t block(std::size_t i) const { return blocks_[i]; }
    const std::vector<std::size_t>& sizes() const { return blocks_; }
    std::size_t length() const { return std::accumulate(blocks_.begin(), blocks_.end(), std::size_t{0}); }

    std::size_t offset(std::size_t i) const {
        return std::accumulate(blocks_.begin(), blocks_.begin() + static_cast<std::ptrdiff_t>(i), std::size_t{0});
    }

    template <class T>
    std::span<const T> slice(std::span<const T> v, std::size_t i) const {
        return v.subspan(offset(i), blocks_[i]);
    }

    friend bool operator==(const LengthPartition&, const LengthPartition&) = default;

private:
    std::vector<std::size_t> blocks_;
};

/// Sum over blocks of rk(M_alpha(v^{(i)})).
inline int sum_rank_weight(const Extension& ext, std::span<const Elem> v, const LengthPartition& partition,
                           const BasisChange& basis) {
    if (v.size() != partition.length()) fail(ErrorCode::PartitionMismatch, "vector length differs from partition");
    int total = 0;
    for (std::size_t i = 0; i < partition.blocks(); ++i) {
        const auto block = partition.slice(v, i);
        bool all_zero = true;
        for (const auto& e : block) all_zero = all_zero && e.is_zero();
        if (all_zero) continue;
        total += rank_and_free_rank(ext.base(), basis.represent(block)).rank;
    }
    return total;
}

inline int sum_rank_weight(const Extension& ext, std::span<const Elem> v, const LengthPartition& partition) {
    const Vector basis = power_basis(ext);
    return sum_rank_weight(ext, v, partition, BasisChange(ext, basis));
}

inline int sum_rank_distance(const Extension& ext, std::span<const Elem> u, std::span<const Elem> v,
                             const LengthPartition& partition) {
    if (u.size() != v.size()) fail(ErrorCode::PartitionMismatch, "vectors differ in length");
    Vector diff(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) diff[i] = ext.sub(u[i], v[i]);
    return sum_rank_weight(ext, diff, partition);
}

inline int hamming_weight(std::span<const Elem> v) {
    int w = 0;
    for (const auto& e : v) w += e.is_zero() ? 0 : 1;
    return w;
}

/// |GL_n(R)| = |GL_n(F_q)| * |m|^{n^2}, saturating.
inline std::uint64_t gl_order(const ChainRing& ring, std::size_t n) {
    const std::uint64_t q = ring.residue_size();
    const std::uint64_t ideal = ring.size() / q;
    long double total = 1;
    long double qn = 1;
    for (std::size_t i = 0; i < n; ++i) qn *= static_cast<long double>(q);
    long double qi = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= qn - qi;
        qi *= static_cast<long double>(q);
    }
    for (std::size_t i = 0; i < n * n; ++i) total *= static_cast<long double>(ideal);
    if (total > static_cast<long double>(UINT64_MAX)) return UINT64_MAX;
    return static_cast<std::uint64_t>(total);
}

inline constexpr std::uint64_t kGlEnumerationLimit = 100000;
inline constexpr std::uint64_t kCodewordEnumerationLimit = 1000000;

/// All invertible n x n matrices over R, found by filtering every matrix
/// through the invertibility test.
inline std::vector<Matrix> enumerate_gl(const ChainRing& ring, std::size_t n) {
    if (gl_order(ring, n) > kGlEnumerationLimit)
        fail(ErrorCode::TooLargeToEnumerate, "GL_n(R) exceeds the enumeration guard");
    const std::uint64_t base = ring.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n * n; ++i) total *= base;
    std::vector<Matrix> out;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Matrix a(n, n);
        std::uint64_t rest = idx;
        for (auto& e : a.entries) {
            e = ring.element(rest % base);
            rest /= base;
        }
        if (is_invertible(ring, a)) out.push_back(std::move(a));
    }
    return out;
}

/// min wt_H(v Diag(A_1..A_l)) over invertible A_i, by exhaustive enumeration.
/// Blocks are independent, so the minimum is taken per block.
inline int hamming_min_oracle(const Extension& ext, std::span<const Elem> v, const LengthPartition& partition) {
    if (v.size() != partition.length()) fail(ErrorCode::PartitionMismatch, "vector length differs from partition");
    std::vector<std::vector<Matrix>> gl_cache;
    int total = 0;
    for (std::size_t i = 0; i < partition.blocks(); ++i) {
        const std::size_t ni = partition.block(i);
        if (gl_cache.size() <= ni) gl_cache.resize(ni + 1);
        if (gl_cache[ni].empty()) gl_cache[ni] = enumerate_gl(ext.base(), ni);
        const auto block = partition.slice(v, i);
        int best = std::numeric_limits<int>::max();
        for (const auto& a : gl_cache[ni]) {
            best = std::min(best, hamming_weight(multiply(ext, block, a)));
            if (best == 0) break;
        }
        total += best;
    }
    return total;
}

/// Minimum sum-rank weight over all nonzero m G, m in S^k.
inline int min_distance_bruteforce(const Extension& ext, const Matrix& generator, const LengthPartition& partition) {
    if (generator.cols != partition.length()) fail(ErrorCode::PartitionMismatch, "generator width differs from partition");
    const std::uint64_t size = ext.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < generator.rows; ++i) {
        if (total > kCodewordEnumerationLimit / size) fail(ErrorCode::TooLargeToEnumerate, "|S|^k exceeds the guard");
        total *= size;
    }
    const Vector basis = power_basis(ext);
    const BasisChange change(ext, basis);
    int best = std::numeric_limits<int>::max();
    Vector msg(generator.rows);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (auto& e : msg) {
            e = ext.element(rest % size);
            rest /= size;
        }
        const Vector c = multiply(ext, std::span<const Elem>(msg), generator);
        best = std::min(best, sum_rank_weight(ext, c, partition, change));
    }
    return best;
}

}  // namespace lrs
