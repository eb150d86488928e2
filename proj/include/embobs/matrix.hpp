#pragma once

#include <vector>

#include "embobs/common.hpp"

namespace embobs {

/// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const Int& x : a_) if (x != 0) return false;
        return true;
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
    }
    /// row_i += q * row_j
    void add_row(int i, int j, const Int& q) {
        for (int k = 0; k < cols_; ++k) at(i, k) += q * at(j, k);
    }
    /// col_i += q * col_j
    void add_col(int i, int j, const Int& q) {
        for (int k = 0; k < rows_; ++k) at(k, i) += q * at(k, j);
    }
    void negate_row(int i) {
        for (int k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
    }
    void negate_col(int j) {
        for (int k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw input_error("matrix shape mismatch in product");
        IntMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Int& x = a.at(i, k);
                if (x == 0) continue;
                for (int j = 0; j < b.cols_; ++j)
                    if (b.at(k, j) != 0) c.at(i, j) += x * b.at(k, j);
            }
        return c;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw input_error("matrix/vector shape mismatch");
        std::vector<Int> out(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (at(i, j) != 0) out[i] += at(i, j) * v[j];
        return out;
    }

    IntMatrix reduced_mod2() const {
        IntMatrix m(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = mod2(a_[i]);
        return m;
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    Int determinant() const {
        if (rows_ != cols_) throw input_error("determinant of non-square matrix");
        int n = rows_;
        if (n == 0) return 1;
        IntMatrix m = *this;
        Int prev = 1;
        int sign = 1;
        for (int k = 0; k < n - 1; ++k) {
            if (m.at(k, k) == 0) {
                int piv = -1;
                for (int i = k + 1; i < n; ++i)
                    if (m.at(i, k) != 0) { piv = i; break; }
                if (piv < 0) return 0;
                m.swap_rows(k, piv);
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j)
                    m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            prev = m.at(k, k);
        }
        return sign * m.at(n - 1, n - 1);
    }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> a_;
};

}  // namespace embobs
