#pragma once

#include <optional>
#include <vector>

#include "embobs/deleted_product.hpp"
#include "embobs/smith.hpp"

namespace embobs {

// ---------------------------------------------------------------------------
// Dense F2 linear algebra (for the Z2 coefficient system).
// ---------------------------------------------------------------------------

class F2Matrix {
  public:
    F2Matrix() = default;
    F2Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static F2Matrix from(const IntMatrix& m) {
        F2Matrix f(m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) f.at(i, j) = static_cast<uint8_t>(mod2(m.at(i, j)));
        return f;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    uint8_t& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    uint8_t at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    /// Row-reduce in place; returns the pivot column of each pivot row.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int piv = -1;
            for (int i = r; i < rows_; ++i)
                if (at(i, c)) { piv = i; break; }
            if (piv < 0) continue;
            for (int j = 0; j < cols_; ++j) std::swap(at(r, j), at(piv, j));
            for (int i = 0; i < rows_; ++i)
                if (i != r && at(i, c))
                    for (int j = 0; j < cols_; ++j) at(i, j) ^= at(r, j);
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<uint8_t> a_;
};

using F2Vec = std::vector<uint8_t>;

/// Kernel basis of A over F2, as column vectors.
inline std::vector<F2Vec> f2_kernel_basis(F2Matrix A) {
    int n = A.cols();
    std::vector<int> pivots = A.rref();
    std::vector<int> pivot_row_of(n, -1);
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r) pivot_row_of[pivots[r]] = r;
    std::vector<F2Vec> basis;
    for (int c = 0; c < n; ++c) {
        if (pivot_row_of[c] >= 0) continue;
        F2Vec v(n, 0);
        v[c] = 1;
        for (int pc = 0; pc < n; ++pc)
            if (pivot_row_of[pc] >= 0 && A.at(pivot_row_of[pc], c)) v[pc] = 1;
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves A x = b over F2; empty optional when inconsistent.
inline std::optional<F2Vec> f2_solve(const F2Matrix& A, const F2Vec& b) {
    F2Matrix aug(A.rows(), A.cols() + 1);
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols()) = b[i];
    }
    std::vector<int> pivots = aug.rref();
    F2Vec x(A.cols(), 0);
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r) {
        if (pivots[r] == A.cols()) return std::nullopt;
        x[pivots[r]] = aug.at(r, A.cols());
    }
    return x;
}

// ---------------------------------------------------------------------------
// Homology of a presented quotient complex.
// ---------------------------------------------------------------------------

/// Coordinates of a homology class: free part plus canonical torsion residues.
/// Two cycles are homologous iff their coordinates agree. For the Z2 system the
/// free part holds the F2 coordinate vector and there is no torsion.
struct ClassCoordinates {
    std::vector<Int> free_part;
    std::vector<Int> torsion_residues;

    bool is_zero() const {
        for (const Int& x : free_part) if (x != 0) return false;
        for (const Int& x : torsion_residues) if (x != 0) return false;
        return true;
    }
    friend bool operator==(const ClassCoordinates&, const ClassCoordinates&) = default;
};

/// H_n of the presented complex: rank, torsion, representative basis cycles,
/// and enough transform data to give any cycle canonical class coordinates.
class HomologyGroup {
  public:
    int degree() const { return degree_; }
    System system() const { return system_; }
    long free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }
    const std::vector<TwistedChain>& basis() const { return basis_; }

    friend HomologyGroup homology(const DeletedProductPtr&, const ChainComplexPresentation&, int);
    friend ClassCoordinates class_coordinates(const TwistedChain&, const HomologyGroup&);

  private:
    DeletedProductPtr dp_;
    int degree_ = 0;
    System system_ = System::Z;
    long free_rank_ = 0;
    std::vector<Int> torsion_;
    std::vector<TwistedChain> basis_;

    // integer path
    IntMatrix kernel_;                       // representative chains x kernel rank
    std::optional<SmithDecomposition> kernel_snf_;
    std::optional<SmithDecomposition> image_snf_;  // of the image in kernel coordinates
    std::vector<int> free_positions_;
    std::vector<int> torsion_positions_;

    // F2 path
    std::vector<F2Vec> kernel2_;
    F2Matrix kernel2_mat_;
    F2Matrix image_rows_;           // reduced image basis, rows with pivots
    std::vector<int> image_pivots_;
    std::vector<int> free_positions2_;
};

inline HomologyGroup homology(const DeletedProductPtr& dp, const ChainComplexPresentation& pres,
                              int degree) {
    if (degree < 0) throw input_error("negative homology degree");
    HomologyGroup H;
    H.dp_ = dp;
    H.degree_ = degree;
    H.system_ = pres.system;
    int top = static_cast<int>(pres.boundary.size()) - 1;
    if (degree > top) return H;  // trivial above the top dimension

    const IntMatrix& Bn = pres.boundary[degree];
    int reps_n = pres.rep_counts[degree];
    IntMatrix Bnext = degree + 1 <= top ? pres.boundary[degree + 1] : IntMatrix(reps_n, 0);

    if (pres.system == System::Z2) {
        F2Matrix B2 = F2Matrix::from(Bn);
        if (B2.rows() == 0) B2 = F2Matrix(0, reps_n);
        H.kernel2_ = f2_kernel_basis(B2);
        int k = static_cast<int>(H.kernel2_.size());
        H.kernel2_mat_ = F2Matrix(reps_n, k);
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < reps_n; ++i) H.kernel2_mat_.at(i, j) = H.kernel2_[j][i];
        // image of the next boundary, written in kernel coordinates
        F2Matrix img(k, Bnext.cols());
        for (int c = 0; c < Bnext.cols(); ++c) {
            F2Vec b(reps_n, 0);
            for (int i = 0; i < reps_n; ++i) b[i] = static_cast<uint8_t>(mod2(Bnext.at(i, c)));
            auto w = f2_solve(H.kernel2_mat_, b);
            if (!w) throw input_error("boundary image escapes the cycle space");
            for (int i = 0; i < k; ++i) img.at(i, c) = (*w)[i];
        }
        F2Matrix img_t(Bnext.cols(), k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < Bnext.cols(); ++j) img_t.at(j, i) = img.at(i, j);
        H.image_pivots_ = img_t.rref();
        H.image_rows_ = img_t;
        std::vector<char> is_pivot(k, 0);
        for (int p : H.image_pivots_) is_pivot[p] = 1;
        for (int i = 0; i < k; ++i)
            if (!is_pivot[i]) H.free_positions2_.push_back(i);
        H.free_rank_ = static_cast<long>(H.free_positions2_.size());
        for (int j : H.free_positions2_) {
            TwistedChain cyc(dp, degree, System::Z2);
            for (int i = 0; i < reps_n; ++i)
                if (H.kernel2_[j][i]) cyc.set(dp->reps(degree)[i], 1);
            H.basis_.push_back(std::move(cyc));
        }
        return H;
    }

    SmithDecomposition sn = smith_normal_form(Bn.rows() == 0 ? IntMatrix(0, reps_n) : Bn);
    H.kernel_ = kernel_basis(sn);
    H.kernel_snf_ = smith_normal_form(H.kernel_);
    int k = H.kernel_.cols();

    IntMatrix M(k, Bnext.cols());
    for (int c = 0; c < Bnext.cols(); ++c) {
        std::vector<Int> b(reps_n);
        for (int i = 0; i < reps_n; ++i) b[i] = Bnext.at(i, c);
        std::vector<Int> w;
        if (!solve_integer(*H.kernel_snf_, b, w))
            throw input_error("boundary image escapes the cycle lattice");
        for (int i = 0; i < k; ++i) M.at(i, c) = w[i];
    }
    H.image_snf_ = smith_normal_form(M);
    const SmithDecomposition& sm = *H.image_snf_;
    for (int i = 0; i < sm.rank; ++i)
        if (sm.diag[i] > 1) {
            H.torsion_.push_back(sm.diag[i]);
            H.torsion_positions_.push_back(i);
        }
    for (int i = sm.rank; i < k; ++i) H.free_positions_.push_back(i);
    H.free_rank_ = static_cast<long>(H.free_positions_.size());

    if (!H.free_positions_.empty() || !H.torsion_positions_.empty()) {
        SmithDecomposition su = smith_normal_form(sm.U);
        auto gen_cycle = [&](int pos) {
            std::vector<Int> e(k);
            e[pos] = 1;
            std::vector<Int> w;
            if (!solve_integer(su, e, w)) throw input_error("unimodular solve failed");
            std::vector<Int> z = H.kernel_.apply(w);
            TwistedChain cyc(dp, degree, pres.system);
            for (int i = 0; i < reps_n; ++i)
                if (z[i] != 0) cyc.set(dp->reps(degree)[i], z[i]);
            return cyc;
        };
        for (int pos : H.free_positions_) H.basis_.push_back(gen_cycle(pos));
        for (int pos : H.torsion_positions_) H.basis_.push_back(gen_cycle(pos));
    }
    return H;
}

inline HomologyGroup homology(const DeletedProductPtr& dp, System system, int degree) {
    return homology(dp, chain_complex_presentation(dp, system), degree);
}

/// Canonical class coordinates of a cycle; rejects non-cycles, naming a term of
/// the offending boundary.
inline ClassCoordinates class_coordinates(const TwistedChain& x, const HomologyGroup& H) {
    if (x.degree() != H.degree_ || x.system() != H.system_ ||
        x.dp()->base().id() != H.dp_->base().id())
        throw input_error("cycle does not match the homology group");
    if (x.degree() > 0) {
        TwistedChain b = boundary(x);
        if (!b.is_zero()) {
            const Cell& c = x.dp()->cells(x.degree() - 1)[b.coeffs().begin()->first];
            throw input_error("not a cycle: boundary has nonzero term on " + x.dp()->label(c));
        }
    }
    const auto& dp = *H.dp_;
    const auto& reps = dp.reps(H.degree_);
    int reps_n = static_cast<int>(reps.size());
    ClassCoordinates out;

    if (H.system_ == System::Z2) {
        F2Vec z(reps_n, 0);
        for (int i = 0; i < reps_n; ++i) z[i] = static_cast<uint8_t>(mod2(x.value_at(reps[i])));
        auto w = f2_solve(H.kernel2_mat_, z);
        if (!w) throw input_error("not a cycle");
        F2Vec v = *w;
        for (int r = 0; r < static_cast<int>(H.image_pivots_.size()); ++r)
            if (v[H.image_pivots_[r]])
                for (int j = 0; j < static_cast<int>(v.size()); ++j) v[j] ^= H.image_rows_.at(r, j);
        for (int pos : H.free_positions2_) out.free_part.emplace_back(v[pos]);
        return out;
    }

    std::vector<Int> z(reps_n);
    for (int i = 0; i < reps_n; ++i) z[i] = x.value_at(reps[i]);
    std::vector<Int> w;
    if (!solve_integer(*H.kernel_snf_, z, w)) throw input_error("not a cycle");
    std::vector<Int> u = H.image_snf_->U.apply(w);
    for (int pos : H.free_positions_) out.free_part.push_back(u[pos]);
    for (size_t t = 0; t < H.torsion_positions_.size(); ++t) {
        const Int& d = H.torsion_[t];
        Int r = u[H.torsion_positions_[t]] % d;
        if (r < 0) r += d;
        out.torsion_residues.push_back(r);
    }
    return out;
}

/// Evaluation of a cochain on a chain: sum over orbit representatives of
/// coefficient times cochain value. Well defined (independent of the choice of
/// representatives) exactly when the two systems agree.
inline Int evaluate_pairing(const TwistedCochain& phi, const TwistedChain& x) {
    phi.check_compatible(x);
    Int total = 0;
    for (const auto& [idx, v] : x.coeffs()) total += v * phi.value_at(idx);
    if (phi.system() == System::Z2) total = mod2(total);
    return total;
}

/// Change of coefficients Z -> Z/2 (either twist): same support, reduced values.
inline TwistedChain reduce_mod2(const TwistedChain& x) {
    if (x.system() == System::Z2) throw input_error("chain already has Z2 coefficients");
    TwistedChain out(x.dp(), x.degree(), System::Z2);
    for (const auto& [idx, v] : x.coeffs()) out.set(idx, v);
    return out;
}

}  // namespace embobs
