#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lrs/extension.hpp"

namespace lrs {

/// Dense row-major matrix of ring elements. The ring itself is supplied to
/// each algorithm as a context (ChainRing for R, Extension for S).
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Elem> entries;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    Elem& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Elem& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    static Matrix identity(std::size_t n) {
        Matrix out(n, n);
        for (std::size_t i = 0; i < n; ++i) out(i, i).c[0] = 1;
        return out;
    }

    bool is_zero() const {
        for (const auto& e : entries)
            if (!e.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

using Vector = std::vector<Elem>;

template <class Ring>
Matrix multiply(const Ring& ring, const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    Matrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Elem& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols; ++j) out(i, j) = ring.add(out(i, j), ring.mul(aik, b(k, j)));
        }
    return out;
}

/// Row vector times matrix.
template <class Ring>
Vector multiply(const Ring& ring, std::span<const Elem> v, const Matrix& a) {
    if (v.size() != a.rows) fail(ErrorCode::DimensionMismatch, "vector-matrix shape mismatch");
    Vector out(a.cols);
    for (std::size_t k = 0; k < a.rows; ++k) {
        if (v[k].is_zero()) continue;
        for (std::size_t j = 0; j < a.cols; ++j) out[j] = ring.add(out[j], ring.mul(v[k], a(k, j)));
    }
    return out;
}

/// Matrix times column vector.
template <class Ring>
Vector multiply(const Ring& ring, const Matrix& a, std::span<const Elem> v) {
    if (v.size() != a.cols) fail(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
    Vector out(a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) out[i] = ring.add(out[i], ring.mul(a(i, j), v[j]));
    return out;
}

template <class Ring>
Matrix random_matrix(const Ring& ring, std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix out(rows, cols);
    for (auto& e : out.entries) e = ring.random(rng);
    return out;
}

/// A = P * D * Q with P, Q invertible and D diagonal. The inverses of P and Q
/// are tracked alongside so that solving never needs a second factorization.
struct SnfDecomposition {
    Matrix P;
    Matrix D;
    Matrix Q;
    Matrix P_inv;
    Matrix Q_inv;
    /// v_i such that d_i = p^{v_i}; v_i = r encodes d_i = 0. Length min(rows, cols).
    std::vector<int> valuations;
    std::vector<Elem> diagonal;
};

/// Smith normal form over a chain ring. The pivot at each step is the entry of
/// least valuation in the remaining block (ties: smallest row, then column);
/// it divides everything else, so plain elimination suffices. Diagonal entries
/// are normalized to p^v.
template <class Ring>
SnfDecomposition smith_normal_form(const Ring& ring, const Matrix& a) {
    const std::size_t m = a.rows;
    const std::size_t n = a.cols;
    SnfDecomposition out{Matrix::identity(m), a, Matrix::identity(n), Matrix::identity(m), Matrix::identity(n), {}, {}};
    Matrix& D = out.D;
    Matrix& P = out.P;
    Matrix& Pi = out.P_inv;
    Matrix& Q = out.Q;
    Matrix& Qi = out.Q_inv;

    // Row operations act as D <- E D, P <- P E^{-1}, P_inv <- E P_inv.
    // Column operations act as D <- D F, Q <- F^{-1} Q, Q_inv <- Q_inv F.
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < n; ++c) std::swap(D(i, c), D(j, c));
        for (std::size_t c = 0; c < m; ++c) std::swap(Pi(i, c), Pi(j, c));
        for (std::size_t r = 0; r < m; ++r) std::swap(P(r, i), P(r, j));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < m; ++r) std::swap(D(r, i), D(r, j));
        for (std::size_t r = 0; r < n; ++r) std::swap(Qi(r, i), Qi(r, j));
        for (std::size_t c = 0; c < n; ++c) std::swap(Q(i, c), Q(j, c));
    };
    auto scale_row = [&](std::size_t i, const Elem& u, const Elem& u_inv) {
        for (std::size_t c = 0; c < n; ++c) D(i, c) = ring.mul(D(i, c), u);
        for (std::size_t c = 0; c < m; ++c) Pi(i, c) = ring.mul(Pi(i, c), u);
        for (std::size_t r = 0; r < m; ++r) P(r, i) = ring.mul(P(r, i), u_inv);
    };
    // row_j -= f * row_i
    auto sub_row = [&](std::size_t j, std::size_t i, const Elem& f) {
        for (std::size_t c = 0; c < n; ++c) D(j, c) = ring.sub(D(j, c), ring.mul(f, D(i, c)));
        for (std::size_t c = 0; c < m; ++c) Pi(j, c) = ring.sub(Pi(j, c), ring.mul(f, Pi(i, c)));
        for (std::size_t r = 0; r < m; ++r) P(r, i) = ring.add(P(r, i), ring.mul(f, P(r, j)));
    };
    // col_j -= f * col_i
    auto sub_col = [&](std::size_t j, std::size_t i, const Elem& f) {
        for (std::size_t r = 0; r < m; ++r) D(r, j) = ring.sub(D(r, j), ring.mul(f, D(r, i)));
        for (std::size_t r = 0; r < n; ++r) Qi(r, j) = ring.sub(Qi(r, j), ring.mul(f, Qi(r, i)));
        for (std::size_t c = 0; c < n; ++c) Q(i, c) = ring.add(Q(i, c), ring.mul(f, Q(j, c)));
    };

    const std::size_t rank_bound = std::min(m, n);
    for (std::size_t t = 0; t < rank_bound; ++t) {
        int best = ring.r();
        std::size_t bi = t, bj = t;
        for (std::size_t i = t; i < m && best > 0; ++i)
            for (std::size_t j = t; j < n; ++j) {
                const int v = ring.valuation(D(i, j));
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                    if (v == 0) break;
                }
            }
        if (best == ring.r()) break;  // remaining block is zero
        if (bi != t) swap_rows(bi, t);
        if (bj != t) swap_cols(bj, t);

        // pivot = p^best * w with w a unit; scale w away.
        const Elem w = ring.divide_by_p_power(D(t, t), best);
        const Elem w_inv = ring.inverse(w);
        scale_row(t, w_inv, w);
        D(t, t) = ring.p_power(best);

        for (std::size_t i = t + 1; i < m; ++i) {
            if (D(i, t).is_zero()) continue;
            sub_row(i, t, ring.divide_by_p_power(D(i, t), best));
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            if (D(t, j).is_zero()) continue;
            sub_col(j, t, ring.divide_by_p_power(D(t, j), best));
        }
    }

    out.valuations.resize(rank_bound);
    out.diagonal.resize(rank_bound);
    for (std::size_t i = 0; i < rank_bound; ++i) {
        out.diagonal[i] = D(i, i);
        out.valuations[i] = ring.valuation(D(i, i));
    }
    return out;
}

struct RankInfo {
    int rank = 0;
    int free_rank = 0;
};

template <class Ring>
RankInfo rank_and_free_rank(const Ring& ring, const SnfDecomposition& snf) {
    RankInfo info;
    for (int v : snf.valuations) {
        if (v < ring.r()) ++info.rank;
        if (v == 0) ++info.free_rank;
    }
    return info;
}

template <class Ring>
RankInfo rank_and_free_rank(const Ring& ring, const Matrix& a) {
    return rank_and_free_rank(ring, smith_normal_form(ring, a));
}

/// Canonical solution of A x = b from a precomputed factorization, or nullopt
/// when the system is inconsistent.
template <class Ring>
std::optional<Vector> solve_with(const Ring& ring, const SnfDecomposition& snf, std::span<const Elem> b) {
    const std::size_t m = snf.D.rows;
    const std::size_t n = snf.D.cols;
    if (b.size() != m) fail(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
    const Vector c = multiply(ring, snf.P_inv, b);
    Vector y(n);
    for (std::size_t i = 0; i < m; ++i) {
        const int v = i < snf.valuations.size() ? snf.valuations[i] : ring.r();
        if (v >= ring.r()) {
            if (!c[i].is_zero()) return std::nullopt;
            continue;
        }
        if (ring.valuation(c[i]) < v) return std::nullopt;
        y[i] = ring.divide_by_p_power(c[i], v);
    }
    return multiply(ring, snf.Q_inv, std::span<const Elem>(y));
}

/// Solve A x = b; throws Inconsistent when no solution exists.
template <class Ring>
Vector solve(const Ring& ring, const Matrix& a, std::span<const Elem> b) {
    auto x = solve_with(ring, smith_normal_form(ring, a), b);
    if (!x) fail(ErrorCode::Inconsistent, "linear system has no solution");
    return *std::move(x);
}

template <class Ring>
bool is_invertible(const Ring& ring, const Matrix& a) {
    if (a.rows != a.cols) return false;
    return rank_and_free_rank(ring, a).free_rank == static_cast<int>(a.rows);
}

template <class Ring>
Matrix invert_matrix(const Ring& ring, const Matrix& a) {
    if (a.rows != a.cols) fail(ErrorCode::NotInvertible, "matrix is not square");
    const auto snf = smith_normal_form(ring, a);
    for (int v : snf.valuations)
        if (v != 0) fail(ErrorCode::NotInvertible, "matrix is singular over the ring");
    // A = P Q since D = I.
    return multiply(ring, snf.Q_inv, snf.P_inv);
}

/// Block-diagonal matrix assembled from the given blocks.
inline Matrix block_diagonal(std::span<const Matrix> blocks) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows;
        cols += b.cols;
    }
    Matrix out(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows; ++i)
            for (std::size_t j = 0; j < b.cols; ++j) out(r0 + i, c0 + j) = b(i, j);
        r0 += b.rows;
        c0 += b.cols;
    }
    return out;
}

/// The power basis (1, xi, ..., xi^{m-1}) of S over R.
inline Vector power_basis(const Extension& ext) {
    Vector out(ext.rank());
    for (std::size_t j = 0; j < ext.rank(); ++j) out[j] = ext.xi_power(j);
    return out;
}

/// m x m matrix over R whose row i holds the power-basis coordinates of basis[i].
inline Matrix coordinate_rows(const Extension& ext, std::span<const Elem> elems) {
    Matrix out(elems.size(), ext.rank());
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < ext.rank(); ++j) out(i, j) = ext.coord(elems[i], j);
    return out;
}

/// Precomputed change of basis for the matrix representation map.
class BasisChange {
public:
    BasisChange(const Extension& ext, std::span<const Elem> basis) : ext_(&ext) {
        if (basis.size() != ext.rank()) fail(ErrorCode::NotABasis, "basis must have m elements");
        const Matrix rows = coordinate_rows(ext, basis);
        if (!is_invertible(ext.base(), rows)) fail(ErrorCode::NotABasis, "elements do not form an R-basis of S");
        inverse_ = invert_matrix(ext.base(), rows);
        identity_ = rows == Matrix::identity(ext.rank());
    }

    /// M_alpha(v): m x t matrix over R whose column j holds the coordinates of
    /// v_j in the basis.
    Matrix represent(std::span<const Elem> v) const {
        const Extension& ext = *ext_;
        const std::size_t m = ext.rank();
        Matrix out(m, v.size());
        for (std::size_t j = 0; j < v.size(); ++j) {
            Vector power(m);
            for (std::size_t i = 0; i < m; ++i) power[i] = ext.coord(v[j], i);
            if (identity_) {
                for (std::size_t i = 0; i < m; ++i) out(i, j) = power[i];
                continue;
            }
            const Vector coeffs = multiply(ext.base(), std::span<const Elem>(power), inverse_);
            for (std::size_t i = 0; i < m; ++i) out(i, j) = coeffs[i];
        }
        return out;
    }

private:
    const Extension* ext_;
    Matrix inverse_;
    bool identity_ = false;
};

inline Matrix matrix_representation(const Extension& ext, std::span<const Elem> v, std::span<const Elem> basis) {
    return BasisChange(ext, basis).represent(v);
}

/// Free rank of the R-span of the given elements of S.
inline int free_rank_of(const Extension& ext, std::span<const Elem> elems) {
    if (elems.empty()) return 0;
    Matrix coords(ext.rank(), elems.size());
    for (std::size_t j = 0; j < elems.size(); ++j)
        for (std::size_t i = 0; i < ext.rank(); ++i) coords(i, j) = ext.coord(elems[j], i);
    return rank_and_free_rank(ext.base(), coords).free_rank;
}

}  // namespace lrs
