#pragma once

#include <span>
#include <vector>

#include "lrs/lrs_code.hpp"

namespace lrs {

enum class DecodeStatus { Success, Failure };

struct DecodeResult {
    DecodeStatus status = DecodeStatus::Failure;
    Vector message;   // S^k, empty on failure
    Vector codeword;  // S^n, empty on failure
    int error_weight = -1;

    bool ok() const { return status == DecodeStatus::Success; }
};

/// Linear system for the key equation (L R)(b_j) = Q(b_j) with L monic of
/// degree t. Unknowns are ordered (L_0..L_{t-1}, Q_0..Q_{t+k-1}).
struct KeySystem {
    Matrix coefficients;
    Vector rhs;
    std::size_t t = 0;
    std::size_t k = 0;
};

/// b_{i,j} = sigma(beta_{i,j}) a_i beta_{i,j}^{-1}, block-major.
inline Vector decoding_points(const LrsCode& code) {
    Vector out;
    for (const auto& pt : code.flat_points()) out.push_back(conjugate(code.ext(), pt.a, pt.beta));
    return out;
}

/// Coefficient of L_i at b_j is the remainder evaluation of x^i R, expanded as
/// sum_u sigma^i(R_u) N_{i+u}(b_j); the coefficient of Q_s is -N_s(b_j).
inline KeySystem build_key_system(const Extension& ext, const SkewPolynomial& received_poly, std::span<const Elem> points,
                                  std::size_t t, std::size_t k) {
    const std::size_t n = points.size();
    const std::size_t unknowns = t + t + k;
    const std::size_t norm_count = t + std::max<std::size_t>(received_poly.coeffs.size(), t + k) + 1;
    KeySystem sys{Matrix(n, unknowns), Vector(n), t, k};
    std::vector<Vector> twisted(t + 1);  // twisted[i][u] = sigma^i(R_u)
    for (std::size_t i = 0; i <= t; ++i)
        for (const auto& ru : received_poly.coeffs) twisted[i].push_back(ext.frobenius(ru, static_cast<long long>(i)));

    for (std::size_t j = 0; j < n; ++j) {
        const Vector nb = norms(ext, points[j], norm_count);
        auto shifted = [&](std::size_t i) {
            Elem acc;
            for (std::size_t u = 0; u < twisted[i].size(); ++u) acc = ext.add(acc, ext.mul(twisted[i][u], nb[i + u]));
            return acc;
        };
        for (std::size_t i = 0; i < t; ++i) sys.coefficients(j, i) = shifted(i);
        for (std::size_t s = 0; s < t + k; ++s) sys.coefficients(j, t + s) = ext.neg(nb[s]);
        sys.rhs[j] = ext.neg(shifted(t));
    }
    return sys;
}

/// Welch-Berlekamp decoding up to floor((n-k)/2) sum-rank errors.
inline DecodeResult wb_decode(const LrsCode& code, std::span<const Elem> received) {
    const Extension& ext = code.ext();
    if (received.size() != code.n()) fail(ErrorCode::DimensionMismatch, "received word length must equal n");
    const std::size_t t = code.correction_radius();
    const std::size_t k = code.k();

    // R(b_j) = r_j beta_j^{-1} is the same as R_{a_i}(beta_{i,j}) = r_{i,j}.
    const SkewPolynomial received_poly = interpolate(ext, code.lagrange(), received);
    const Vector points = decoding_points(code);
    const KeySystem sys = build_key_system(ext, received_poly, points, t, k);

    const auto solution = solve_with(ext, smith_normal_form(ext, sys.coefficients), sys.rhs);
    if (!solution) return {};

    Vector l_coeffs(solution->begin(), solution->begin() + static_cast<std::ptrdiff_t>(t));
    l_coeffs.push_back(ext.one());
    const SkewPolynomial locator(std::move(l_coeffs));
    const SkewPolynomial q(Vector(solution->begin() + static_cast<std::ptrdiff_t>(t), solution->end()));

    const auto [f, rem] = skew::left_divmod(ext, q, locator);
    if (!rem.is_zero() || f.degree() >= static_cast<int>(k)) return {};

    Vector message(k);
    for (std::size_t u = 0; u < k; ++u) message[u] = f[u];
    Vector codeword = encode(code, message);
    Vector error(code.n());
    for (std::size_t i = 0; i < code.n(); ++i) error[i] = ext.sub(received[i], codeword[i]);
    const int weight = sum_rank_weight(ext, error, code.partition());
    if (weight > static_cast<int>(t)) return {};
    return {DecodeStatus::Success, std::move(message), std::move(codeword), weight};
}

/// c Diag(A_1, ..., A_l) for A_i over R of shape n_i x N_i.
inline Vector apply_transfer(const Extension& ext, std::span<const Elem> c, const LengthPartition& partition,
                             std::span<const Matrix> blocks) {
    if (blocks.size() != partition.blocks()) fail(ErrorCode::DimensionMismatch, "one transfer block per code block");
    Vector out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].rows != partition.block(i)) fail(ErrorCode::DimensionMismatch, "transfer block row count mismatch");
        const auto part = multiply(ext, partition.slice(c, i), blocks[i]);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

inline LengthPartition output_partition(std::span<const Matrix> blocks) {
    std::vector<std::size_t> sizes;
    for (const auto& b : blocks) sizes.push_back(b.cols);
    return LengthPartition(std::move(sizes));
}

/// Free rank of Diag(A_1, ..., A_l).
inline int transfer_free_rank(const ChainRing& ring, std::span<const Matrix> blocks) {
    int total = 0;
    for (const auto& b : blocks)
        if (b.rows > 0 && b.cols > 0) total += rank_and_free_rank(ring, b).free_rank;
    return total;
}

/// Columns kept by erasure decoding, per block, in ascending order.
struct ColumnSelection {
    std::vector<std::vector<std::size_t>> columns;
    PointSystem points;  // (a_i, beta_i A'_i) restricted to nonempty blocks
    std::size_t free_rank = 0;
};

/// Greedy per block: accept a column of beta_i A_i whenever the accepted set
/// stays R-linearly independent with a free span.
inline ColumnSelection select_columns(const LrsCode& code, std::span<const Matrix> blocks) {
    const Extension& ext = code.ext();
    const PointSystem& pts = code.points();
    ColumnSelection sel;
    sel.columns.resize(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const Vector images = multiply(ext, std::span<const Elem>(pts.beta[i]), blocks[i]);
        Vector accepted;
        for (std::size_t col = 0; col < images.size(); ++col) {
            accepted.push_back(images[col]);
            if (free_rank_of(ext, accepted) == static_cast<int>(accepted.size())) {
                sel.columns[i].push_back(col);
            } else {
                accepted.pop_back();
            }
        }
        if (!accepted.empty()) {
            sel.points.a.push_back(pts.a[i]);
            sel.points.beta.push_back(std::move(accepted));
        }
        sel.free_rank += sel.columns[i].size();
    }
    return sel;
}

/// Coherent error-and-erasure decoding of y = c A + e: decode the code
/// C_k(a, beta A') on a free set of columns A' and map back to the message.
inline DecodeResult erasure_decode(const LrsCode& code, std::span<const Elem> received, std::span<const Matrix> blocks) {
    const Extension& ext = code.ext();
    const LengthPartition out_partition = output_partition(blocks);
    if (received.size() != out_partition.length()) fail(ErrorCode::DimensionMismatch, "received word length must equal N");
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (i >= code.partition().blocks() || blocks[i].rows != code.partition().block(i))
            fail(ErrorCode::DimensionMismatch, "transfer blocks do not match the code partition");
    if (blocks.size() != code.partition().blocks()) fail(ErrorCode::DimensionMismatch, "one transfer block per code block");

    const ColumnSelection sel = select_columns(code, blocks);
    if (sel.free_rank < code.k())
        fail(ErrorCode::InsufficientFreeRank, "free rank " + std::to_string(sel.free_rank) + " below k = " + std::to_string(code.k()));

    Vector selected;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const std::size_t offset = out_partition.offset(i);
        for (auto col : sel.columns[i]) selected.push_back(received[offset + col]);
    }
    const LrsCode shortened(ext, sel.points, code.k());
    DecodeResult inner = wb_decode(shortened, selected);
    if (!inner.ok()) return {};

    Vector codeword = encode(code, inner.message);
    const Vector sent = apply_transfer(ext, codeword, code.partition(), blocks);
    Vector error(sent.size());
    for (std::size_t j = 0; j < sent.size(); ++j) error[j] = ext.sub(received[j], sent[j]);
    const int weight = sum_rank_weight(ext, error, out_partition);
    return {DecodeStatus::Success, std::move(inner.message), std::move(codeword), weight};
}

}  // namespace lrs
