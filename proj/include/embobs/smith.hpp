#pragma once

#include <vector>

#include "embobs/matrix.hpp"

namespace embobs {

/// Exact Smith normal form U * A * V = D with unimodular U, V and diagonal
/// d_1 | d_2 | ... Deterministic pivoting: smallest nonzero absolute value,
/// ties broken row-major.
struct SmithDecomposition {
    int rows = 0;
    int cols = 0;
    IntMatrix U;            // rows x rows
    IntMatrix V;            // cols x cols
    IntMatrix D;            // rows x cols, diagonal
    std::vector<Int> diag;  // min(rows, cols) entries, zeros trailing
    int rank = 0;           // number of nonzero diagonal entries
};

namespace detail {

inline bool snf_find_pivot(const IntMatrix& D, int t, int& pi, int& pj) {
    bool found = false;
    Int best = 0;
    for (int i = t; i < D.rows(); ++i)
        for (int j = t; j < D.cols(); ++j) {
            const Int& x = D.at(i, j);
            if (x == 0) continue;
            Int ax = abs(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IntMatrix& A) {
    SmithDecomposition s;
    s.rows = A.rows();
    s.cols = A.cols();
    s.U = IntMatrix::identity(A.rows());
    s.V = IntMatrix::identity(A.cols());
    s.D = A;
    IntMatrix& D = s.D;
    int n = std::min(A.rows(), A.cols());

    for (int t = 0; t < n; ++t) {
        int pi = t, pj = t;
        if (!detail::snf_find_pivot(D, t, pi, pj)) break;
        D.swap_rows(t, pi); s.U.swap_rows(t, pi);
        D.swap_cols(t, pj); s.V.swap_cols(t, pj);

        for (;;) {
            // clear column t below the pivot, re-pivoting on any smaller remainder
            bool dirty = false;
            for (int i = t + 1; i < D.rows(); ++i) {
                if (D.at(i, t) == 0) continue;
                Int q = D.at(i, t) / D.at(t, t);
                if (q != 0) { D.add_row(i, t, -q); s.U.add_row(i, t, -q); }
                if (D.at(i, t) != 0) {
                    D.swap_rows(t, i); s.U.swap_rows(t, i);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (int j = t + 1; j < D.cols(); ++j) {
                if (D.at(t, j) == 0) continue;
                Int q = D.at(t, j) / D.at(t, t);
                if (q != 0) { D.add_col(j, t, -q); s.V.add_col(j, t, -q); }
                if (D.at(t, j) != 0) {
                    D.swap_cols(t, j); s.V.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // pivot must divide the remaining block; if not, fold the offender in
            bool fixed = true;
            for (int i = t + 1; i < D.rows() && fixed; ++i)
                for (int j = t + 1; j < D.cols() && fixed; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        D.add_row(t, i, 1); s.U.add_row(t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (D.at(t, t) < 0) { D.negate_row(t); s.U.negate_row(t); }
    }

    for (int t = 0; t < n; ++t) {
        s.diag.push_back(D.at(t, t));
        if (D.at(t, t) != 0) ++s.rank;
    }
    return s;
}

/// Columns of V beyond the rank form an exact basis of ker A.
inline IntMatrix kernel_basis(const SmithDecomposition& s) {
    int k = s.cols - s.rank;
    IntMatrix K(s.cols, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < s.cols; ++i) K.at(i, j) = s.V.at(i, s.rank + j);
    return K;
}

/// Solves A x = b exactly; returns false when no integer solution exists.
inline bool solve_integer(const SmithDecomposition& s, const std::vector<Int>& b,
                          std::vector<Int>& x) {
    std::vector<Int> ub = s.U.apply(b);
    std::vector<Int> y(s.cols);
    for (int i = 0; i < static_cast<int>(ub.size()); ++i) {
        if (i < s.rank) {
            if (ub[i] % s.diag[i] != 0) return false;
            y[i] = ub[i] / s.diag[i];
        } else if (ub[i] != 0) {
            return false;
        }
    }
    x = s.V.apply(y);
    return true;
}

}  // namespace embobs
