#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "embobs/complex.hpp"
#include "embobs/matrix.hpp"

namespace embobs {

/// Coefficient system on the quotient of the deleted product by the swap
/// involution: Z (trivial), Zminus (sign action), Z2 (mod 2).
enum class System { Z, Zminus, Z2 };

inline std::string system_name(System s) {
    switch (s) {
        case System::Z: return "Z";
        case System::Zminus: return "Z-";
        case System::Z2: return "Z2";
    }
    return "?";
}

inline System system_from_name(const std::string& s) {
    if (s == "Z") return System::Z;
    if (s == "Z-" || s == "Zminus") return System::Zminus;
    if (s == "Z2" || s == "Z/2") return System::Z2;
    throw input_error("unknown coefficient system: " + s);
}

/// With e = sign (-1)^n: the van Kampen class of degree n lives in Z^e, the Wu
/// class in Z^{-e}.
inline System vk_system(int degree) { return degree % 2 == 0 ? System::Z : System::Zminus; }
inline System wu_system(int degree) { return degree % 2 == 0 ? System::Zminus : System::Z; }

/// A cell (sigma, tau) of the deleted product: an ordered pair of vertex-disjoint
/// simplices, stored by simplex index into the base complex.
struct Cell {
    int sigma = -1;
    int tau = -1;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// The simplicial configuration space of K: all ordered pairs of vertex-disjoint
/// simplices, graded by dim sigma + dim tau, with the free swap involution and
/// a canonical orbit representative per involution orbit (the lexicographically
/// smaller ordering).
class DeletedProductComplex {
  public:
    explicit DeletedProductComplex(SimplicialComplex base) : base_(std::move(base)) {
        const auto& simps = base_.simplices();
        int top = -1;
        std::vector<std::vector<Cell>> bucket;
        for (int i = 0; i < static_cast<int>(simps.size()); ++i) {
            for (int j = 0; j < static_cast<int>(simps.size()); ++j) {
                if (i == j) continue;
                if (!disjoint(simps[i], simps[j])) continue;
                int deg = static_cast<int>(simps[i].size() + simps[j].size()) - 2;
                if (deg > top) {
                    bucket.resize(deg + 1);
                    top = deg;
                }
                bucket[deg].push_back(Cell{i, j});
            }
        }
        cells_ = std::move(bucket);
        index_.resize(cells_.size());
        reps_.resize(cells_.size());
        for (int d = 0; d <= top; ++d) {
            for (int c = 0; c < static_cast<int>(cells_[d].size()); ++c)
                index_[d][cells_[d][c]] = c;
            for (int c = 0; c < static_cast<int>(cells_[d].size()); ++c) {
                const Cell& cell = cells_[d][c];
                if (simps[cell.sigma] < simps[cell.tau]) reps_[d].push_back(c);
            }
        }
    }

    const SimplicialComplex& base() const { return base_; }
    int top_degree() const { return static_cast<int>(cells_.size()) - 1; }

    const std::vector<Cell>& cells(int deg) const {
        static const std::vector<Cell> empty;
        if (deg < 0 || deg > top_degree()) return empty;
        return cells_[deg];
    }

    /// Indices (into cells(deg)) of the orbit representatives, canonical order.
    const std::vector<int>& reps(int deg) const {
        static const std::vector<int> empty;
        if (deg < 0 || deg > top_degree()) return empty;
        return reps_[deg];
    }

    int cell_index(int deg, const Cell& c) const {
        auto it = index_[deg].find(c);
        if (it == index_[deg].end()) return -1;
        return it->second;
    }

    int cell_degree(const Cell& c) const {
        return static_cast<int>(base_.simplex(c.sigma).size() + base_.simplex(c.tau).size()) - 2;
    }

    bool is_rep(const Cell& c) const {
        return base_.simplex(c.sigma) < base_.simplex(c.tau);
    }

    Cell swapped(const Cell& c) const { return Cell{c.tau, c.sigma}; }

    std::string label(const Cell& c) const {
        return "(" + base_.label(base_.simplex(c.sigma)) + "," + base_.label(base_.simplex(c.tau)) + ")";
    }

    static bool disjoint(const Simplex& a, const Simplex& b) {
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return false;
            if (a[i] < b[j]) ++i; else ++j;
        }
        return true;
    }

  private:
    SimplicialComplex base_;
    std::vector<std::vector<Cell>> cells_;
    std::vector<std::map<Cell, int>> index_;
    std::vector<std::vector<int>> reps_;
};

using DeletedProductPtr = std::shared_ptr<const DeletedProductComplex>;

inline DeletedProductPtr deleted_product(const SimplicialComplex& K) {
    return std::make_shared<DeletedProductComplex>(K);
}

/// Sign picked up when a term on the swapped cell (tau, sigma) is rewritten to
/// the cell (sigma, tau): the involution acts on chains by
/// (sigma, tau) -> (-1)^{dim sigma dim tau} (tau, sigma), and the Zminus
/// quotient identifies c with -iota(c).
inline Int swap_factor(System system, int dim_sigma, int dim_tau) {
    if (system == System::Z2) return 1;
    Int s = parity_sign(static_cast<long long>(dim_sigma) * dim_tau);
    if (system == System::Zminus) s = -s;
    return s;
}

/// Chain (or cochain) of the quotient complex in one of the three systems,
/// supported on orbit representatives of a single degree. Z2 coefficients are
/// kept as integers and reduced on write.
class TwistedChain {
  public:
    TwistedChain() = default;
    TwistedChain(DeletedProductPtr dp, int degree, System system)
        : dp_(std::move(dp)), degree_(degree), system_(system) {}

    const DeletedProductPtr& dp() const { return dp_; }
    int degree() const { return degree_; }
    System system() const { return system_; }

    /// Coefficients keyed by cell index within the degree; representatives only.
    const std::map<int, Int>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    /// Adds c times the (possibly non-representative) cell, rewriting through
    /// the involution identification as needed.
    void add_cell(const Cell& cell, const Int& c) {
        if (c == 0) return;
        const auto& base = dp_->base();
        int deg = dp_->cell_degree(cell);
        if (deg != degree_) throw input_error("chain term of degree " + std::to_string(deg) +
                                              " in a degree-" + std::to_string(degree_) + " chain");
        Cell rep = cell;
        Int v = c;
        if (!dp_->is_rep(rep)) {
            int p = static_cast<int>(base.simplex(cell.sigma).size()) - 1;
            int q = static_cast<int>(base.simplex(cell.tau).size()) - 1;
            v *= swap_factor(system_, p, q);
            rep = dp_->swapped(rep);
        }
        int idx = dp_->cell_index(degree_, rep);
        if (idx < 0) throw input_error("cell outside the deleted product");
        set(idx, coeffs_.count(idx) ? coeffs_[idx] + v : v);
    }

    void add_term(const Simplex& sigma, const Simplex& tau, const Int& c) {
        int si = dp_->base().simplex_idx(sigma);
        int ti = dp_->base().simplex_idx(tau);
        if (si < 0 || ti < 0) throw input_error("chain term names a non-simplex");
        add_cell(Cell{si, ti}, c);
    }

    /// Coefficient on an arbitrary ordered cell, via the equivariant extension.
    Int value_on(const Cell& cell) const {
        Cell rep = cell;
        Int factor = 1;
        if (!dp_->is_rep(rep)) {
            const auto& base = dp_->base();
            int p = static_cast<int>(base.simplex(cell.sigma).size()) - 1;
            int q = static_cast<int>(base.simplex(cell.tau).size()) - 1;
            factor = swap_factor(system_, p, q);
            rep = dp_->swapped(rep);
        }
        int idx = dp_->cell_index(degree_, rep);
        if (idx < 0) return 0;
        auto it = coeffs_.find(idx);
        if (it == coeffs_.end()) return 0;
        return factor * it->second;
    }

    Int value_at(int rep_idx) const {
        auto it = coeffs_.find(rep_idx);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    void set(int rep_idx, Int v) {
        if (system_ == System::Z2) v = mod2(v);
        if (v == 0) coeffs_.erase(rep_idx);
        else coeffs_[rep_idx] = std::move(v);
    }

    TwistedChain& operator+=(const TwistedChain& o) {
        check_compatible(o);
        for (const auto& [idx, v] : o.coeffs_) set(idx, value_at(idx) + v);
        return *this;
    }
    friend TwistedChain operator+(TwistedChain a, const TwistedChain& b) { return a += b; }

    TwistedChain operator-() const {
        TwistedChain out(dp_, degree_, system_);
        for (const auto& [idx, v] : coeffs_) out.set(idx, -v);
        return out;
    }
    friend TwistedChain operator-(const TwistedChain& a, const TwistedChain& b) { return a + (-b); }

    TwistedChain scaled(const Int& k) const {
        TwistedChain out(dp_, degree_, system_);
        for (const auto& [idx, v] : coeffs_) out.set(idx, k * v);
        return out;
    }

    friend bool operator==(const TwistedChain& a, const TwistedChain& b) {
        return a.degree_ == b.degree_ && a.system_ == b.system_ && a.coeffs_ == b.coeffs_ &&
               a.dp_->base().id() == b.dp_->base().id();
    }

    void check_compatible(const TwistedChain& o) const {
        if (!dp_ || !o.dp_ || dp_->base().id() != o.dp_->base().id())
            throw input_error("chains live on different deleted products");
        if (degree_ != o.degree_ || system_ != o.system_)
            throw input_error("degree/system mismatch");
    }

  private:
    DeletedProductPtr dp_;
    int degree_ = 0;
    System system_ = System::Z;
    std::map<int, Int> coeffs_;
};

/// Cochains carry the same representative data; they extend to all ordered
/// cells by phi(tau, sigma) = swap_factor * phi(sigma, tau).
using TwistedCochain = TwistedChain;

// ---------------------------------------------------------------------------
// Lifted (non-quotient) chains on all ordered cells, used to state and test the
// equivariance identities before any representative rewriting happens.
// ---------------------------------------------------------------------------

using LiftedChain = std::map<Cell, Int>;

inline void lifted_add(LiftedChain& x, const Cell& c, const Int& v) {
    if (v == 0) return;
    auto it = x.find(c);
    if (it == x.end()) x[c] = v;
    else {
        it->second += v;
        if (it->second == 0) x.erase(it);
    }
}

/// Cellular boundary of the product cell: d(s,t) = (ds, t) + (-1)^{dim s}(s, dt).
inline LiftedChain lifted_boundary_cell(const DeletedProductComplex& dp, const Cell& cell) {
    LiftedChain out;
    const auto& base = dp.base();
    const Simplex& s = base.simplex(cell.sigma);
    const Simplex& t = base.simplex(cell.tau);
    int p = static_cast<int>(s.size()) - 1;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s.size() == 1) break;
        Simplex face = s;
        face.erase(face.begin() + i);
        lifted_add(out, Cell{base.simplex_idx(face), cell.tau}, parity_sign(i));
    }
    for (size_t j = 0; j < t.size(); ++j) {
        if (t.size() == 1) break;
        Simplex face = t;
        face.erase(face.begin() + j);
        lifted_add(out, Cell{cell.sigma, base.simplex_idx(face)}, parity_sign(p + j));
    }
    return out;
}

inline LiftedChain lifted_boundary(const DeletedProductComplex& dp, const LiftedChain& x) {
    LiftedChain out;
    for (const auto& [cell, v] : x)
        for (const auto& [face, s] : lifted_boundary_cell(dp, cell)) lifted_add(out, face, v * s);
    return out;
}

/// iota_* (sigma, tau) = (-1)^{dim sigma dim tau} (tau, sigma).
inline LiftedChain lifted_involution(const DeletedProductComplex& dp, const LiftedChain& x) {
    LiftedChain out;
    const auto& base = dp.base();
    for (const auto& [cell, v] : x) {
        int p = static_cast<int>(base.simplex(cell.sigma).size()) - 1;
        int q = static_cast<int>(base.simplex(cell.tau).size()) - 1;
        lifted_add(out, Cell{cell.tau, cell.sigma}, v * parity_sign(static_cast<long long>(p) * q));
    }
    return out;
}

inline TwistedChain project_to_reps(const DeletedProductPtr& dp, const LiftedChain& x, int degree,
                                    System system) {
    TwistedChain out(dp, degree, system);
    for (const auto& [cell, v] : x) out.add_cell(cell, v);
    return out;
}

/// Boundary in the quotient complex: lift representatives, take the cellular
/// boundary, rewrite back to representatives with the system's swap sign.
inline TwistedChain boundary(const TwistedChain& x) {
    if (x.degree() < 1) throw input_error("boundary of a degree-0 chain");
    const auto& dp = *x.dp();
    TwistedChain out(x.dp(), x.degree() - 1, x.system());
    for (const auto& [idx, v] : x.coeffs()) {
        const Cell& cell = dp.cells(x.degree())[idx];
        for (const auto& [face, s] : lifted_boundary_cell(dp, cell)) out.add_cell(face, v * s);
    }
    return out;
}

/// iota_* followed by rewriting; on representatives this is multiplication by
/// +1 (Z, Z2) or -1 (Zminus).
inline TwistedChain involution_map(const TwistedChain& x) {
    const auto& dp = *x.dp();
    const auto& base = dp.base();
    TwistedChain out(x.dp(), x.degree(), x.system());
    for (const auto& [idx, v] : x.coeffs()) {
        const Cell& cell = dp.cells(x.degree())[idx];
        int p = static_cast<int>(base.simplex(cell.sigma).size()) - 1;
        int q = static_cast<int>(base.simplex(cell.tau).size()) - 1;
        out.add_cell(dp.swapped(cell), v * parity_sign(static_cast<long long>(p) * q));
    }
    return out;
}

/// Graded boundary matrices of the quotient complex, indexed by orbit
/// representatives, ready for Smith normal form. boundary[n] maps degree-n
/// representative chains to degree-(n-1) ones; Z2 entries are reduced.
struct ChainComplexPresentation {
    System system = System::Z;
    std::vector<IntMatrix> boundary;  // boundary[0] has zero rows
    std::vector<int> rep_counts;
};

inline ChainComplexPresentation chain_complex_presentation(const DeletedProductPtr& dp,
                                                           System system) {
    ChainComplexPresentation pres;
    pres.system = system;
    int top = dp->top_degree();
    for (int n = 0; n <= top; ++n) pres.rep_counts.push_back(static_cast<int>(dp->reps(n).size()));
    for (int n = 0; n <= top; ++n) {
        int rows = n == 0 ? 0 : pres.rep_counts[n - 1];
        int cols = pres.rep_counts[n];
        IntMatrix B(rows, cols);
        if (n > 0) {
            std::map<int, int> row_of;  // rep cell index -> row
            for (int r = 0; r < rows; ++r) row_of[dp->reps(n - 1)[r]] = r;
            for (int c = 0; c < cols; ++c) {
                TwistedChain unit(dp, n, system);
                unit.set(dp->reps(n)[c], 1);
                TwistedChain db = boundary(unit);
                for (const auto& [idx, v] : db.coeffs()) B.at(row_of.at(idx), c) = v;
            }
        }
        pres.boundary.push_back(std::move(B));
    }
    return pres;
}

}  // namespace embobs
