#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "embobs/complex.hpp"
#include "embobs/deleted_product.hpp"

namespace embobs {

using Point = std::vector<Rat>;

// ---------------------------------------------------------------------------
// Exact rational linear algebra helpers.
// ---------------------------------------------------------------------------

namespace detail {

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

/// Gaussian elimination on [A | b]; A square.
inline SolveStatus solve_square(std::vector<std::vector<Rat>> A, std::vector<Rat> b,
                                std::vector<Rat>& x) {
    int n = static_cast<int>(A.size());
    std::vector<int> col_of_row(n, -1);
    int rank = 0;
    for (int c = 0; c < n && rank < n; ++c) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (A[r][c] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(A[rank], A[piv]);
        std::swap(b[rank], b[piv]);
        for (int r = 0; r < n; ++r) {
            if (r == rank || A[r][c] == 0) continue;
            Rat f = A[r][c] / A[rank][c];
            for (int k = c; k < n; ++k) A[r][k] -= f * A[rank][k];
            b[r] -= f * b[rank];
        }
        col_of_row[rank] = c;
        ++rank;
    }
    for (int r = rank; r < n; ++r)
        if (b[r] != 0) return SolveStatus::Inconsistent;
    if (rank < n) return SolveStatus::Underdetermined;
    x.assign(n, Rat(0));
    for (int r = 0; r < n; ++r) x[col_of_row[r]] = b[r] / A[r][col_of_row[r]];
    return SolveStatus::Unique;
}

inline int det_sign(std::vector<std::vector<Rat>> A) {
    int n = static_cast<int>(A.size());
    int sign = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (A[r][c] != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != c) { std::swap(A[piv], A[c]); sign = -sign; }
        if (A[c][c] < 0) sign = -sign;
        for (int r = c + 1; r < n; ++r) {
            if (A[r][c] == 0) continue;
            Rat f = A[r][c] / A[c][c];
            for (int k = c; k < n; ++k) A[r][k] -= f * A[c][k];
        }
    }
    return sign;
}

inline int affine_rank(const std::vector<Point>& pts) {
    if (pts.size() <= 1) return 0;
    int d = static_cast<int>(pts[0].size());
    std::vector<std::vector<Rat>> M;
    for (size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rat> row(d);
        for (int k = 0; k < d; ++k) row[k] = pts[i][k] - pts[0][k];
        M.push_back(std::move(row));
    }
    int rank = 0;
    int rows = static_cast<int>(M.size());
    for (int c = 0; c < d && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (M[r][c] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(M[rank], M[piv]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || M[r][c] == 0) continue;
            Rat f = M[r][c] / M[rank][c];
            for (int k = c; k < d; ++k) M[r][k] -= f * M[rank][k];
        }
        ++rank;
    }
    return rank;
}

// -- Fourier-Motzkin feasibility with exact witness extraction ---------------

struct LinConstraint {
    std::vector<Rat> a;  // coefficients
    Rat b;               // bound
    enum Rel { EQ, GE, GT } rel = GE;  // a . x  REL  b
};

/// Decides feasibility of a small rational system and produces a witness.
/// Intended for simplex-intersection queries: a handful of variables only.
class FourierMotzkin {
  public:
    static std::optional<std::vector<Rat>> solve(std::vector<LinConstraint> cons, int nvars) {
        // eliminate equalities by substitution
        struct EqStep { int var; std::vector<Rat> expr; Rat c0; };  // x_var = expr . x + c0
        std::vector<EqStep> eq_steps;
        for (;;) {
            int which = -1, var = -1;
            for (int i = 0; i < static_cast<int>(cons.size()) && which < 0; ++i) {
                if (cons[i].rel != LinConstraint::EQ) continue;
                for (int v = 0; v < nvars; ++v)
                    if (cons[i].a[v] != 0) { which = i; var = v; break; }
                if (which < 0) {
                    if (cons[i].b != 0) return std::nullopt;  // 0 = nonzero
                    cons.erase(cons.begin() + i);
                    --i;
                }
            }
            if (which < 0) break;
            LinConstraint eq = cons[which];
            cons.erase(cons.begin() + which);
            Rat pivot = eq.a[var];
            EqStep step;
            step.var = var;
            step.expr.assign(nvars, Rat(0));
            for (int v = 0; v < nvars; ++v)
                if (v != var) step.expr[v] = -eq.a[v] / pivot;
            step.c0 = eq.b / pivot;
            for (auto& c : cons) {
                if (c.a[var] == 0) continue;
                Rat f = c.a[var];
                c.a[var] = 0;
                for (int v = 0; v < nvars; ++v) c.a[v] += f * step.expr[v];
                c.b -= f * step.c0;
            }
            eq_steps.push_back(std::move(step));
        }

        // Fourier-Motzkin elimination of the remaining variables
        struct FmStep { int var; std::vector<LinConstraint> lowers, uppers; };
        std::vector<FmStep> fm_steps;
        for (int var = nvars - 1; var >= 0; --var) {
            bool used = false;
            for (const auto& c : cons)
                if (c.a[var] != 0) { used = true; break; }
            if (!used) continue;
            FmStep step;
            step.var = var;
            std::vector<LinConstraint> rest;
            for (auto& c : cons) {
                if (c.a[var] > 0) step.lowers.push_back(c);
                else if (c.a[var] < 0) step.uppers.push_back(c);
                else rest.push_back(c);
            }
            for (const auto& lo : step.lowers)
                for (const auto& up : step.uppers) {
                    // lo: a_v x_v >= b - rest  ;  up: gives upper bound
                    LinConstraint comb;
                    comb.a.assign(nvars, Rat(0));
                    Rat alo = lo.a[var], aup = -up.a[var];
                    for (int v = 0; v < nvars; ++v)
                        comb.a[v] = lo.a[v] * aup + up.a[v] * alo;
                    comb.a[var] = 0;
                    comb.b = lo.b * aup + up.b * alo;
                    bool strict = lo.rel == LinConstraint::GT || up.rel == LinConstraint::GT;
                    comb.rel = strict ? LinConstraint::GT : LinConstraint::GE;
                    rest.push_back(std::move(comb));
                }
            cons = std::move(rest);
            fm_steps.push_back(std::move(step));
        }

        for (const auto& c : cons) {
            if (c.rel == LinConstraint::GE && !(Rat(0) >= c.b)) return std::nullopt;
            if (c.rel == LinConstraint::GT && !(Rat(0) > c.b)) return std::nullopt;
        }

        // back-substitute a witness
        std::vector<Rat> x(nvars, Rat(0));
        std::vector<char> known(nvars, 0);
        for (auto it = fm_steps.rbegin(); it != fm_steps.rend(); ++it) {
            auto eval_bound = [&](const LinConstraint& c) {
                Rat rhs = c.b;
                for (int v = 0; v < nvars; ++v)
                    if (v != it->var && c.a[v] != 0) rhs -= c.a[v] * x[v];
                return rhs / c.a[it->var];  // sign of a[var] flips inequality as needed
            };
            bool has_lo = false, has_up = false;
            Rat lo, up;
            for (const auto& c : it->lowers) {
                Rat v = eval_bound(c);
                if (!has_lo || v > lo) { lo = v; has_lo = true; }
            }
            for (const auto& c : it->uppers) {
                Rat v = eval_bound(c);
                if (!has_up || v < up) { up = v; has_up = true; }
            }
            Rat val;
            if (has_lo && has_up) val = lo == up ? lo : (lo + up) / 2;
            else if (has_lo) val = lo + 1;
            else if (has_up) val = up - 1;
            else val = 0;
            x[it->var] = val;
            known[it->var] = 1;
        }
        for (auto it = eq_steps.rbegin(); it != eq_steps.rend(); ++it) {
            Rat val = it->c0;
            for (int v = 0; v < nvars; ++v)
                if (it->expr[v] != 0) val += it->expr[v] * x[v];
            x[it->var] = val;
            known[it->var] = 1;
        }
        return x;
    }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Configurations.
// ---------------------------------------------------------------------------

/// Exact rational vertex coordinates for a complex in R^d. Construction
/// verifies affine general position (every subset of at most d+1 vertices is
/// affinely independent), so downstream intersection predicates never see
/// degenerate flats.
struct RationalConfiguration {
    std::string complex_id;
    int ambient_dim = 0;
    std::vector<Point> coords;  // by vertex index
    std::uint64_t seed = 0;
    int attempt = 0;

    const Point& of(int vertex) const { return coords[vertex]; }
};

inline bool general_position_ok(const std::vector<Point>& coords, int d) {
    int nv = static_cast<int>(coords.size());
    int max_size = std::min(nv, d + 1);
    std::vector<int> pick;
    // enumerate subsets of size 2..d+1 and demand affine independence
    auto rec = [&](auto&& self, int start, int need) -> bool {
        if (need == 0) {
            std::vector<Point> pts;
            for (int i : pick) pts.push_back(coords[i]);
            return detail::affine_rank(pts) == static_cast<int>(pts.size()) - 1;
        }
        for (int i = start; i <= nv - need; ++i) {
            pick.push_back(i);
            if (!self(self, i + 1, need - 1)) { pick.pop_back(); return false; }
            pick.pop_back();
        }
        return true;
    };
    for (int size = 2; size <= max_size; ++size)
        if (!rec(rec, 0, size)) return false;
    return true;
}

inline RationalConfiguration make_configuration(const SimplicialComplex& K, int d,
                                                std::vector<Point> coords,
                                                std::uint64_t seed = 0, int attempt = 0) {
    if (static_cast<int>(coords.size()) != K.vertex_count())
        throw input_error("configuration size does not match the vertex count");
    for (const auto& p : coords)
        if (static_cast<int>(p.size()) != d)
            throw input_error("coordinate arity does not match the ambient dimension");
    if (!general_position_ok(coords, d))
        throw genericity_error("configuration is not in affine general position");
    return RationalConfiguration{K.id(), d, std::move(coords), seed, attempt};
}

/// Seeded random rational coordinates, retried until general position holds.
/// Magnitudes start at 2^16 and double per retry.
inline RationalConfiguration generic_coords(const SimplicialComplex& K, int d, std::uint64_t seed,
                                            int max_retries = 64) {
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Rng rng(mix_seed(seed, attempt));
        Int bound = Int(1) << std::min(16 + attempt, 48);
        long long b = bound.convert_to<long long>();
        std::vector<Point> coords(K.vertex_count(), Point(d));
        for (int v = 0; v < K.vertex_count(); ++v)
            for (int k = 0; k < d; ++k) {
                long long num = rng.range(-b, b);
                long long den = rng.range(1, b);
                coords[v][k] = Rat(Int(num), Int(den));
            }
        if (d > 0 && !general_position_ok(coords, d)) continue;
        return RationalConfiguration{K.id(), d, std::move(coords), seed, attempt};
    }
    throw genericity_error("no generic configuration found within " +
                           std::to_string(max_retries) + " retries");
}

/// Applies a seeded volume-preserving linear map (a product of rational
/// shears, determinant one) to every coordinate.
inline RationalConfiguration sheared(const RationalConfiguration& config, std::uint64_t seed) {
    int d = config.ambient_dim;
    if (d < 2) return config;
    Rng rng(mix_seed(seed, 0xabcd));
    std::vector<std::vector<Rat>> M(d, std::vector<Rat>(d));
    for (int i = 0; i < d; ++i) M[i][i] = 1;
    for (int rep = 0; rep < 3 * d; ++rep) {
        int i = static_cast<int>(rng.range(0, d - 1));
        int j = static_cast<int>(rng.range(0, d - 2));
        if (j >= i) ++j;
        Rat c(Int(rng.range(-8, 8)), Int(rng.range(1, 8)));
        for (int k = 0; k < d; ++k) M[i][k] += c * M[j][k];  // row shear, det stays 1
    }
    RationalConfiguration out = config;
    for (auto& p : out.coords) {
        Point q(d);
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) q[i] += M[i][k] * p[k];
        p = std::move(q);
    }
    if (!general_position_ok(out.coords, d))
        throw genericity_error("shear degenerated the configuration");
    return out;
}

/// Seeded perturbation with tiny magnitudes, for projection-genericity retries.
inline RationalConfiguration perturbed(const RationalConfiguration& config, std::uint64_t seed,
                                       int attempt) {
    Rng rng(mix_seed(seed, 0x7e57 + attempt));
    Int denom = Int(1) << (24 + 2 * attempt);
    RationalConfiguration out = config;
    out.attempt = attempt;
    for (auto& p : out.coords)
        for (auto& c : p) c += Rat(Int(rng.range(-64, 64)), denom * Int(rng.range(1, 64)));
    if (config.ambient_dim > 0 && !general_position_ok(out.coords, config.ambient_dim))
        throw genericity_error("perturbation left general position");
    return out;
}

// ---------------------------------------------------------------------------
// Signed intersections and crossings.
// ---------------------------------------------------------------------------

/// One transverse intersection (or projected crossing) of a pair of disjoint
/// simplices of complementary dimension. Barycentric coordinates are strictly
/// positive; the sign is the orientation determinant of sigma's edge directions
/// followed by tau's, in canonical vertex order.
struct CrossingRecord {
    Simplex sigma, tau;
    std::vector<Rat> bary_sigma, bary_tau;
    Point point;  // where the crossing happens (ambient or projected)
    int sign = 0;
    bool has_over = false;
    bool over = false;  // sigma strictly above tau at the crossing
};

namespace detail {

/// Exact intersection of the affine images: 0 or 1 record for generic data.
inline std::optional<CrossingRecord> intersect_pair(const std::vector<Point>& coords, int d,
                                                    const Simplex& sigma, const Simplex& tau) {
    int p = static_cast<int>(sigma.size()) - 1;
    int q = static_cast<int>(tau.size()) - 1;
    if (p + q != d) throw input_error("intersection pair must have complementary dimensions");
    int n = p + q + 2;
    std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> b(n, Rat(0));
    for (int k = 0; k < d; ++k) {
        for (int i = 0; i <= p; ++i) A[k][i] = coords[sigma[i]][k];
        for (int j = 0; j <= q; ++j) A[k][p + 1 + j] = -coords[tau[j]][k];
    }
    for (int i = 0; i <= p; ++i) A[d][i] = 1;
    for (int j = 0; j <= q; ++j) A[d + 1][p + 1 + j] = 1;
    b[d] = 1;
    b[d + 1] = 1;
    std::vector<Rat> x;
    detail::SolveStatus st = detail::solve_square(A, b, x);
    if (st == detail::SolveStatus::Inconsistent) return std::nullopt;
    if (st == detail::SolveStatus::Underdetermined)
        throw genericity_error("non-transverse simplex pair");
    bool inside = true;
    for (const Rat& v : x) {
        if (v == 0) throw genericity_error("intersection point on a simplex boundary");
        if (v < 0) { inside = false; break; }
    }
    if (!inside) return std::nullopt;

    CrossingRecord rec;
    rec.sigma = sigma;
    rec.tau = tau;
    rec.bary_sigma.assign(x.begin(), x.begin() + p + 1);
    rec.bary_tau.assign(x.begin() + p + 1, x.end());
    rec.point.assign(d, Rat(0));
    for (int k = 0; k < d; ++k)
        for (int i = 0; i <= p; ++i) rec.point[k] += rec.bary_sigma[i] * coords[sigma[i]][k];
    std::vector<std::vector<Rat>> dirs(d, std::vector<Rat>(d));
    for (int c = 0; c < p; ++c)
        for (int k = 0; k < d; ++k) dirs[k][c] = coords[sigma[c + 1]][k] - coords[sigma[0]][k];
    for (int c = 0; c < q; ++c)
        for (int k = 0; k < d; ++k) dirs[k][p + c] = coords[tau[c + 1]][k] - coords[tau[0]][k];
    rec.sign = detail::det_sign(dirs);
    if (rec.sign == 0) throw genericity_error("degenerate direction frame at intersection");
    return rec;
}

inline std::vector<Point> project(const std::vector<Point>& coords, int n) {
    std::vector<Point> out(coords.size(), Point(n));
    for (size_t v = 0; v < coords.size(); ++v)
        for (int k = 0; k < n; ++k) out[v][k] = coords[v][k];
    return out;
}

/// Does the projected image of upsilon pass through x? (Closed containment.)
inline bool projected_simplex_hits(const std::vector<Point>& proj, const Simplex& upsilon,
                                   const Point& x) {
    int n = static_cast<int>(x.size());
    int m = static_cast<int>(upsilon.size());
    std::vector<detail::LinConstraint> cons;
    for (int k = 0; k < n; ++k) {
        detail::LinConstraint c;
        c.a.assign(m, Rat(0));
        for (int i = 0; i < m; ++i) c.a[i] = proj[upsilon[i]][k];
        c.b = x[k];
        c.rel = detail::LinConstraint::EQ;
        cons.push_back(std::move(c));
    }
    detail::LinConstraint sum;
    sum.a.assign(m, Rat(1));
    sum.b = 1;
    sum.rel = detail::LinConstraint::EQ;
    cons.push_back(std::move(sum));
    for (int i = 0; i < m; ++i) {
        detail::LinConstraint ge;
        ge.a.assign(m, Rat(0));
        ge.a[i] = 1;
        ge.b = 0;
        ge.rel = detail::LinConstraint::GE;
        cons.push_back(std::move(ge));
    }
    return detail::FourierMotzkin::solve(std::move(cons), m).has_value();
}

}  // namespace detail

/// All transverse interior intersections of f(sigma) and f(tau) in R^d,
/// dim sigma + dim tau = d. For straight simplices this is zero or one point.
inline std::vector<CrossingRecord> signed_intersections(const RationalConfiguration& config,
                                                        const Simplex& sigma, const Simplex& tau) {
    if (!DeletedProductComplex::disjoint(sigma, tau))
        throw input_error("signed_intersections needs vertex-disjoint simplices");
    std::vector<CrossingRecord> out;
    if (config.ambient_dim == 0) {
        // everything meets at the unique point of R^0; the empty determinant is +1
        CrossingRecord rec;
        rec.sigma = sigma;
        rec.tau = tau;
        rec.bary_sigma.assign(sigma.size(), Rat(1));
        rec.bary_tau.assign(tau.size(), Rat(1));
        rec.sign = 1;
        out.push_back(std::move(rec));
        return out;
    }
    auto rec = detail::intersect_pair(config.coords, config.ambient_dim, sigma, tau);
    if (rec) out.push_back(std::move(*rec));
    return out;
}

struct ValidationResult {
    bool ok = true;
    Simplex sigma, tau;
    Point witness;
    std::string reason;
};

namespace detail {

inline std::optional<Point> shared_pair_overlap(const RationalConfiguration& config,
                                                const Simplex& sigma, const Simplex& tau) {
    // meet-beyond-common-face test for simplices sharing the face rho
    int d = config.ambient_dim;
    Simplex rho;
    std::set_intersection(sigma.begin(), sigma.end(), tau.begin(), tau.end(),
                          std::back_inserter(rho));
    int ns = static_cast<int>(sigma.size()), nt = static_cast<int>(tau.size());
    int m = ns + nt;
    std::vector<detail::LinConstraint> cons;
    for (int k = 0; k < d; ++k) {
        detail::LinConstraint c;
        c.a.assign(m, Rat(0));
        for (int i = 0; i < ns; ++i) c.a[i] = config.coords[sigma[i]][k];
        for (int j = 0; j < nt; ++j) c.a[ns + j] = -config.coords[tau[j]][k];
        c.b = 0;
        c.rel = detail::LinConstraint::EQ;
        cons.push_back(std::move(c));
    }
    for (int side = 0; side < 2; ++side) {
        detail::LinConstraint c;
        c.a.assign(m, Rat(0));
        for (int i = 0; i < (side == 0 ? ns : nt); ++i) c.a[(side == 0 ? 0 : ns) + i] = 1;
        c.b = 1;
        c.rel = detail::LinConstraint::EQ;
        cons.push_back(std::move(c));
    }
    for (int i = 0; i < m; ++i) {
        detail::LinConstraint ge;
        ge.a.assign(m, Rat(0));
        ge.a[i] = 1;
        ge.b = 0;
        ge.rel = detail::LinConstraint::GE;
        cons.push_back(std::move(ge));
    }
    // a common point outside the shared face has positive sigma-weight off rho
    detail::LinConstraint strict;
    strict.a.assign(m, Rat(0));
    for (int i = 0; i < ns; ++i)
        if (!std::binary_search(rho.begin(), rho.end(), sigma[i])) strict.a[i] = 1;
    strict.b = 0;
    strict.rel = detail::LinConstraint::GT;
    cons.push_back(std::move(strict));

    auto sol = detail::FourierMotzkin::solve(std::move(cons), m);
    if (!sol) return std::nullopt;
    Point witness(d, Rat(0));
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < ns; ++i) witness[k] += (*sol)[i] * config.coords[sigma[i]][k];
    return witness;
}

inline ValidationResult validate(const SimplicialComplex& K, const RationalConfiguration& config,
                                 bool almost) {
    if (config.complex_id != K.id()) throw input_error("configuration belongs to another complex");
    int d = config.ambient_dim;
    ValidationResult res;
    for (int i = 0; i < K.simplex_count(); ++i) {
        for (int j = i + 1; j < K.simplex_count(); ++j) {
            const Simplex& s = K.simplex(i);
            const Simplex& t = K.simplex(j);
            if (DeletedProductComplex::disjoint(s, t)) {
                // general position kills pairs of other dimension sums; at the
                // complementary sum the images meet in at most one point
                int sum = static_cast<int>(s.size() + t.size()) - 2;
                if (sum != d) continue;
                std::vector<CrossingRecord> hits;
                if (d == 0) {
                    hits = signed_intersections(config, s, t);
                } else {
                    auto rec = detail::intersect_pair(config.coords, d, s, t);
                    if (rec) hits.push_back(std::move(*rec));
                }
                if (!hits.empty()) {
                    res.ok = false;
                    res.sigma = s;
                    res.tau = t;
                    res.witness = hits[0].point;
                    res.reason = "images of disjoint simplices intersect";
                    return res;
                }
            } else if (!almost) {
                bool contained = std::includes(s.begin(), s.end(), t.begin(), t.end()) ||
                                 std::includes(t.begin(), t.end(), s.begin(), s.end());
                if (contained) continue;
                Simplex uni;
                std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(uni));
                if (static_cast<int>(uni.size()) <= d + 1) continue;  // general position: exact face
                auto witness = shared_pair_overlap(config, s, t);
                if (witness) {
                    res.ok = false;
                    res.sigma = s;
                    res.tau = t;
                    res.witness = *witness;
                    res.reason = "face-sharing simplices meet beyond their common face";
                    return res;
                }
            }
        }
    }
    return res;
}

}  // namespace detail

/// Is the linear extension of the vertex coordinates injective on |K|?
/// Vertex-disjoint simplices must have disjoint images; face-sharing ones must
/// meet exactly in the common face. Exact, no tolerances.
inline ValidationResult validate_embedding(const SimplicialComplex& K,
                                           const RationalConfiguration& config) {
    return detail::validate(K, config, false);
}

/// Almost-embedding check: only vertex-disjoint pairs need disjoint images;
/// anything within a shared star is allowed to self-intersect.
inline ValidationResult validate_almost_embedding(const SimplicialComplex& K,
                                                  const RationalConfiguration& config) {
    return detail::validate(K, config, true);
}

/// Crossings of the projection to the first n = d-1 coordinates, with the
/// over/under flag from the last coordinate. Requires a validated (almost)
/// embedding; throws genericity_error on height ties, boundary crossings or
/// triple points so the caller can retry with a perturbation.
inline std::vector<CrossingRecord> crossing_data(const SimplicialComplex& K,
                                                 const RationalConfiguration& config) {
    int d = config.ambient_dim;
    if (d < 1) throw input_error("crossing_data needs ambient dimension >= 1");
    if (config.complex_id != K.id()) throw input_error("configuration belongs to another complex");
    int n = d - 1;
    std::vector<Point> proj = detail::project(config.coords, n);
    std::vector<CrossingRecord> out;
    for (int i = 0; i < K.simplex_count(); ++i) {
        for (int j = 0; j < K.simplex_count(); ++j) {
            if (i == j) continue;
            const Simplex& s = K.simplex(i);
            const Simplex& t = K.simplex(j);
            if (static_cast<int>(s.size() + t.size()) - 2 != n) continue;
            if (!DeletedProductComplex::disjoint(s, t)) continue;
            std::vector<CrossingRecord> hits;
            if (n == 0) {
                CrossingRecord rec;
                rec.sigma = s;
                rec.tau = t;
                rec.bary_sigma.assign(s.size(), Rat(1));
                rec.bary_tau.assign(t.size(), Rat(1));
                rec.sign = 1;
                hits.push_back(std::move(rec));
            } else {
                auto rec = detail::intersect_pair(proj, n, s, t);
                if (rec) hits.push_back(std::move(*rec));
            }
            for (CrossingRecord& rec : hits) {
                Rat h_sigma = 0, h_tau = 0;
                for (size_t a = 0; a < s.size(); ++a)
                    h_sigma += rec.bary_sigma[a] * config.coords[s[a]][n];
                for (size_t a = 0; a < t.size(); ++a)
                    h_tau += rec.bary_tau[a] * config.coords[t[a]][n];
                if (h_sigma == h_tau)
                    throw genericity_error("height tie at a projected crossing");
                rec.has_over = true;
                rec.over = h_sigma > h_tau;
                if (n >= 1) {
                    for (int u = 0; u < K.simplex_count(); ++u) {
                        if (u == i || u == j) continue;
                        const Simplex& ups = K.simplex(u);
                        if (!DeletedProductComplex::disjoint(ups, s) ||
                            !DeletedProductComplex::disjoint(ups, t))
                            continue;
                        if (detail::projected_simplex_hits(proj, ups, rec.point))
                            throw genericity_error("triple point in the projection");
                    }
                }
                out.push_back(std::move(rec));
            }
        }
    }
    return out;
}

}  // namespace embobs
