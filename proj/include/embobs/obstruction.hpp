#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "embobs/geometry.hpp"
#include "embobs/group.hpp"
#include "embobs/homology.hpp"

namespace embobs {

/// A represented obstruction class: a van Kampen cochain (from a generic map to
/// R^n) or a Wu cochain (from an (almost) embedding into R^{n+1}), together
/// with its coefficient system and the seed that reproduces it.
struct ObstructionClass {
    std::string kind;  // "vk" or "wu"
    int degree = 0;
    System system = System::Z;
    TwistedCochain cochain;
    std::uint64_t seed = 0;
    std::string provenance;
};

/// Cochain value of the generic-map representative on one ordered cell: the
/// sum of intersection signs of the two simplex images.
inline Int raw_vk_value(const RationalConfiguration& config, const Simplex& sigma,
                        const Simplex& tau) {
    Int total = 0;
    for (const auto& rec : signed_intersections(config, sigma, tau)) total += rec.sign;
    return total;
}

/// Degree-n van Kampen cochain of a generic configuration in R^n, stored on
/// orbit representatives and extended equivariantly in the Z^eps system.
inline ObstructionClass vk_cochain(const DeletedProductPtr& dp, int degree,
                                   const RationalConfiguration& config) {
    const SimplicialComplex& K = dp->base();
    if (config.complex_id != K.id()) throw input_error("configuration belongs to another complex");
    if (config.ambient_dim != degree)
        throw input_error("vk cochain of degree n needs a configuration in R^n");
    ObstructionClass out;
    out.kind = "vk";
    out.degree = degree;
    out.system = vk_system(degree);
    out.seed = config.seed;
    out.provenance = "generic map, seed " + std::to_string(config.seed);
    TwistedCochain phi(dp, degree, out.system);
    for (int rep_idx : dp->reps(degree)) {
        const Cell& cell = dp->cells(degree)[rep_idx];
        Int v = raw_vk_value(config, K.simplex(cell.sigma), K.simplex(cell.tau));
        if (v != 0) phi.set(rep_idx, v);
    }
    out.cochain = std::move(phi);
    return out;
}

/// Retries fresh seeds until a configuration is generic for every
/// complementary-dimension pair.
inline ObstructionClass vk_cochain_generic(const DeletedProductPtr& dp, int degree,
                                           std::uint64_t seed, int max_retries = 64) {
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        try {
            RationalConfiguration config =
                generic_coords(dp->base(), degree, mix_seed(seed, attempt), max_retries);
            ObstructionClass out = vk_cochain(dp, degree, config);
            out.seed = seed;
            return out;
        } catch (const genericity_error&) {
            continue;
        }
    }
    throw genericity_error("no generic van Kampen representative within the retry budget");
}

/// Wu cochain value on one ordered cell from projected crossing data: signed
/// count of crossings with sigma on top minus those with sigma below. This is
/// the refinement that remembers heights; forgetting them (adding the two
/// counts) recovers the mod-2 van Kampen value on every cell.
inline Int raw_wu_value(const std::vector<CrossingRecord>& crossings, const Simplex& sigma,
                        const Simplex& tau) {
    Int total = 0;
    for (const auto& rec : crossings) {
        if (rec.sigma != sigma || rec.tau != tau) continue;
        total += rec.over ? Int(rec.sign) : Int(-rec.sign);
    }
    return total;
}

/// Wu cochain of an embedding (or almost embedding) into R^{n+1}, in the
/// Z^{-eps} system of degree n. Projection genericity failures are retried by
/// perturbing the coordinates, revalidating each time.
inline ObstructionClass wu_cochain(const DeletedProductPtr& dp,
                                   const RationalConfiguration& config, bool almost = false,
                                   int max_retries = 16) {
    const SimplicialComplex& K = dp->base();
    int degree = config.ambient_dim - 1;
    if (degree < 0) throw input_error("wu cochain needs ambient dimension >= 1");
    ValidationResult val =
        almost ? validate_almost_embedding(K, config) : validate_embedding(K, config);
    if (!val.ok)
        throw input_error("configuration is not an " + std::string(almost ? "almost " : "") +
                          "embedding: " + val.reason + " on " + K.label(val.sigma) + " vs " +
                          K.label(val.tau));

    RationalConfiguration work = config;
    std::vector<CrossingRecord> crossings;
    for (int attempt = 0;; ++attempt) {
        try {
            crossings = crossing_data(K, work);
            break;
        } catch (const genericity_error& e) {
            if (attempt + 1 >= max_retries)
                throw genericity_error(std::string("projection genericity retries exhausted: ") +
                                       e.what());
            for (;;) {
                try {
                    work = perturbed(config, config.seed, attempt + 1);
                } catch (const genericity_error&) {
                    ++attempt;
                    if (attempt + 1 >= max_retries)
                        throw genericity_error("projection genericity retries exhausted");
                    continue;
                }
                break;
            }
            ValidationResult re =
                almost ? validate_almost_embedding(K, work) : validate_embedding(K, work);
            if (!re.ok) continue;  // perturbation broke validity; try the next one
        }
    }

    ObstructionClass out;
    out.kind = "wu";
    out.degree = degree;
    out.system = wu_system(degree);
    out.seed = config.seed;
    out.provenance = "embedding, seed " + std::to_string(config.seed);
    TwistedCochain phi(dp, degree, out.system);
    for (int rep_idx : dp->reps(degree)) {
        const Cell& cell = dp->cells(degree)[rep_idx];
        Int v = raw_wu_value(crossings, K.simplex(cell.sigma), K.simplex(cell.tau));
        if (v != 0) phi.set(rep_idx, v);
    }
    out.cochain = std::move(phi);
    return out;
}

/// Vertex-sum residuals of the second evaluation-cycle condition: for each
/// degree-n simplex sigma, the sum of the chain's coefficients on the ordered
/// cells (sigma, v) over all vertices v, after representative rewriting.
inline std::vector<std::pair<int, Int>> vertex_sum_residuals(const DeletedProductPtr& dp,
                                                             const TwistedChain& phi) {
    const SimplicialComplex& K = dp->base();
    std::vector<std::pair<int, Int>> out;
    for (int si : K.simplices_of_dim(phi.degree())) {
        const Simplex& s = K.simplex(si);
        Int sum = 0;
        for (int v = 0; v < K.vertex_count(); ++v) {
            if (std::binary_search(s.begin(), s.end(), v)) continue;
            sum += phi.value_on(Cell{si, K.simplex_idx({v})});
        }
        out.emplace_back(si, sum);
    }
    return out;
}

/// Report of the two evaluation-cycle conditions: an odd pairing with the mod-2
/// van Kampen class, and vanishing vertex sums over every n-cell. The integer
/// pairing value depends on the representative convention; the mod-2 value does
/// not, and two independent seeds must agree on it.
struct EvaluationCycleReport {
    int degree = 0;
    Int condition1_integer;
    int condition1_mod2 = 0;
    std::vector<std::pair<std::string, Int>> residuals;  // per n-simplex, canonical order
    bool residuals_zero = true;
    bool pass = false;
    std::uint64_t seed = 0;
};

inline EvaluationCycleReport check_evaluation_cycle(const DeletedProductPtr& dp,
                                                    const TwistedChain& phi, int degree,
                                                    std::uint64_t seed = 20240915) {
    if (phi.degree() != degree) throw input_error("cycle has the wrong degree");
    if (phi.system() != wu_system(degree))
        throw input_error("evaluation cycles carry Z^{-eps} coefficients; expected system " +
                          system_name(wu_system(degree)));
    if (degree > 0 && !boundary(phi).is_zero()) throw input_error("input chain is not a cycle");

    EvaluationCycleReport rep;
    rep.degree = degree;
    rep.seed = seed;

    ObstructionClass vk_a = vk_cochain_generic(dp, degree, mix_seed(seed, 101));
    ObstructionClass vk_b = vk_cochain_generic(dp, degree, mix_seed(seed, 202));
    TwistedChain phi2 = reduce_mod2(phi);
    Int eval_a = evaluate_pairing(reduce_mod2(vk_a.cochain), phi2);
    Int eval_b = evaluate_pairing(reduce_mod2(vk_b.cochain), phi2);
    if (eval_a != eval_b)
        throw genericity_error("two generic seeds disagree on the mod-2 evaluation");
    rep.condition1_mod2 = static_cast<int>(eval_a);
    rep.condition1_integer = 0;
    for (const auto& [idx, v] : phi.coeffs())
        rep.condition1_integer += v * vk_a.cochain.value_at(idx);

    const SimplicialComplex& K = dp->base();
    for (const auto& [si, sum] : vertex_sum_residuals(dp, phi)) {
        rep.residuals.emplace_back(K.label(K.simplex(si)), sum);
        if (sum != 0) rep.residuals_zero = false;
    }
    rep.pass = rep.condition1_mod2 != 0 && rep.residuals_zero;
    return rep;
}

/// Machine-checkable witness that (K, action) is an equivariant
/// (degree+1)-obstructor: an evaluation cycle and a nonempty subset A of the
/// squares subgroup whose translates sum to zero at the stated level.
struct ObstructorCertificate {
    std::string complex_id;
    int degree = 0;
    std::vector<std::string> subset_labels;
    std::vector<int> subset_elements;
    std::string level;  // "chain" or "homology"
    EvaluationCycleReport evaluation;
    std::string statement;
    std::string transcript_hash;
};

struct ObstructorNotFound {
    std::string reason;
    std::optional<EvaluationCycleReport> evaluation;
};

using ObstructorSearchResult = std::variant<ObstructorCertificate, ObstructorNotFound>;

namespace detail {

inline std::string certificate_transcript(const GroupAction& action, const TwistedChain& phi,
                                          const std::vector<std::string>& labels, int degree,
                                          const std::string& level) {
    std::string blob = action.complex().id() + "|deg" + std::to_string(degree) + "|" + level + "|";
    for (const auto& l : labels) blob += l + ",";
    blob += "|";
    for (const auto& [idx, v] : phi.coeffs()) blob += std::to_string(idx) + ":" + v.str() + ";";
    return blob;
}

}  // namespace detail

/// Searches nonempty subsets A of S(H), smallest first and label-lexicographic
/// within a size, for sum_{h in A} h_* Phi = 0 — first at chain level (literal
/// zero after rewriting), then at homology level (zero class coordinates).
inline ObstructorSearchResult check_equivariant_obstructor(const DeletedProductPtr& dp,
                                                           const GroupAction& action,
                                                           const TwistedChain& phi, int degree,
                                                           int subgroup_cap = 20,
                                                           std::uint64_t seed = 20240915) {
    EvaluationCycleReport eval = check_evaluation_cycle(dp, phi, degree, seed);
    if (!eval.pass)
        return ObstructorNotFound{"the cycle fails the evaluation-cycle conditions", eval};

    SquaresSubgroup S = squares_subgroup(action);
    if (static_cast<int>(S.elements.size()) > subgroup_cap)
        throw input_error("squares subgroup of order " + std::to_string(S.elements.size()) +
                          " exceeds the brute-force cap " + std::to_string(subgroup_cap));
    std::vector<int> members = S.elements;
    std::sort(members.begin(), members.end(),
              [&](int a, int b) { return action.label(a) < action.label(b); });
    int m = static_cast<int>(members.size());

    std::vector<TwistedChain> translated;
    translated.reserve(m);
    for (int e : members) translated.push_back(induced_chain_map(action, e, phi));

    std::optional<HomologyGroup> H;
    auto make_certificate = [&](const std::vector<int>& pick, const std::string& level) {
        ObstructorCertificate cert;
        cert.complex_id = action.complex().id();
        cert.degree = degree;
        for (int i : pick) {
            cert.subset_labels.push_back(action.label(members[i]));
            cert.subset_elements.push_back(members[i]);
        }
        cert.level = level;
        cert.evaluation = eval;
        cert.statement = "equivariant " + std::to_string(degree + 1) +
                         "-obstructor: the complex admits no equivariant embedding into R^" +
                         std::to_string(degree + 1);
        cert.transcript_hash = hash_hex(fnv1a(
            detail::certificate_transcript(action, phi, cert.subset_labels, degree, level)));
        return cert;
    };

    for (const std::string& level : {std::string("chain"), std::string("homology")}) {
        if (level == "homology") H = homology(dp, wu_system(degree), degree);
        std::vector<int> pick;
        auto search = [&](auto&& self, int start, int need) -> std::optional<std::vector<int>> {
            if (need == 0) {
                TwistedChain sum(dp, degree, phi.system());
                for (int i : pick) sum += translated[i];
                bool zero = level == "chain" ? sum.is_zero()
                                             : class_coordinates(sum, *H).is_zero();
                if (zero) return pick;
                return std::nullopt;
            }
            for (int i = start; i <= m - need; ++i) {
                pick.push_back(i);
                auto hit = self(self, i + 1, need - 1);
                if (hit) return hit;
                pick.pop_back();
            }
            return std::nullopt;
        };
        for (int size = 1; size <= m; ++size) {
            auto hit = search(search, 0, size);
            if (hit) return make_certificate(*hit, level);
        }
    }
    return ObstructorNotFound{"no nonempty subset of the squares subgroup annihilates the cycle",
                              eval};
}

/// Replays a certificate from scratch.
inline bool verify_certificate(const ObstructorCertificate& cert, const DeletedProductPtr& dp,
                               const GroupAction& action, const TwistedChain& phi) {
    if (cert.complex_id != action.complex().id()) return false;
    EvaluationCycleReport eval = check_evaluation_cycle(dp, phi, cert.degree);
    if (!eval.pass) return false;
    SquaresSubgroup S = squares_subgroup(action);
    if (cert.subset_elements.empty()) return false;
    TwistedChain sum(dp, cert.degree, phi.system());
    for (int e : cert.subset_elements) {
        if (!S.contains(e)) return false;
        sum += induced_chain_map(action, e, phi);
    }
    if (cert.level == "chain") return sum.is_zero();
    HomologyGroup H = homology(dp, wu_system(cert.degree), cert.degree);
    return class_coordinates(sum, H).is_zero();
}

// ---------------------------------------------------------------------------
// Linking numbers of two-component spatial fixtures.
// ---------------------------------------------------------------------------

namespace detail {

struct OrientedCycle {
    std::vector<int> vertices;            // traversal order
    std::map<int, Int> edge_coeffs;       // simplex index -> +-1
};

inline std::vector<std::vector<int>> connected_components(const SimplicialComplex& K) {
    int nv = K.vertex_count();
    std::vector<int> comp(nv, -1);
    std::vector<std::vector<int>> adj(nv);
    for (int si : K.simplices_of_dim(1)) {
        const Simplex& e = K.simplex(si);
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::vector<std::vector<int>> comps;
    for (int v = 0; v < nv; ++v) {
        if (comp[v] >= 0) continue;
        std::vector<int> stack{v}, members;
        comp[v] = static_cast<int>(comps.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (int w : adj[u])
                if (comp[w] < 0) { comp[w] = comp[v]; stack.push_back(w); }
        }
        std::sort(members.begin(), members.end());
        comps.push_back(std::move(members));
    }
    return comps;
}

/// Walks a cycle component starting from its least vertex, toward the smaller
/// neighbour, and records the fundamental 1-cycle with canonical-orientation
/// coefficients.
inline OrientedCycle orient_cycle(const SimplicialComplex& K, const std::vector<int>& members) {
    std::map<int, std::vector<int>> adj;
    for (int si : K.simplices_of_dim(1)) {
        const Simplex& e = K.simplex(si);
        if (std::binary_search(members.begin(), members.end(), e[0])) {
            adj[e[0]].push_back(e[1]);
            adj[e[1]].push_back(e[0]);
        }
    }
    for (int v : members) {
        if (adj[v].size() != 2)
            throw input_error("component is not a closed cycle at vertex " +
                              K.vertex_ids()[v]);
        std::sort(adj[v].begin(), adj[v].end());
    }
    OrientedCycle cyc;
    int start = members.front();
    int prev = -1, cur = start;
    do {
        cyc.vertices.push_back(cur);
        int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        if (prev < 0) next = adj[cur][0];  // deterministic initial direction
        Simplex e{std::min(cur, next), std::max(cur, next)};
        cyc.edge_coeffs[K.simplex_idx(e)] = cur < next ? 1 : -1;
        prev = cur;
        cur = next;
    } while (cur != start);
    return cyc;
}

}  // namespace detail

struct LinkingResult {
    Int value;                 // the linking number (sign is orientation-convention bound)
    Int wu_evaluation;         // pairing of the Wu cochain with the product 2-cycle
    TwistedChain product_cycle;
};

/// Linking number of two disjoint triangulated circles embedded in R^3: the Wu
/// cochain evaluated on the fundamental 2-cycle of the product torus. Each
/// unordered crossing contributes twice (once over, once under, with matched
/// sign), so the evaluation is twice the classical diagram count.
inline LinkingResult linking_number(const DeletedProductPtr& dp,
                                    const RationalConfiguration& config) {
    const SimplicialComplex& K = dp->base();
    if (config.ambient_dim != 3) throw input_error("linking numbers need ambient dimension 3");
    if (K.dim() != 1) throw input_error("linking fixture must be a graph");
    auto comps = detail::connected_components(K);
    if (comps.size() != 2) throw input_error("linking fixture needs exactly two components");
    detail::OrientedCycle z1 = detail::orient_cycle(K, comps[0]);
    detail::OrientedCycle z2 = detail::orient_cycle(K, comps[1]);

    ObstructionClass wu = wu_cochain(dp, config, /*almost=*/false);

    TwistedChain product(dp, 2, wu_system(2));
    for (const auto& [e1, c1] : z1.edge_coeffs)
        for (const auto& [e2, c2] : z2.edge_coeffs) product.add_cell(Cell{e1, e2}, c1 * c2);
    if (!boundary(product).is_zero()) throw input_error("product of cycles failed to be a cycle");

    LinkingResult res{Int(0), Int(0), product};
    res.wu_evaluation = evaluate_pairing(wu.cochain, product);
    if (mod2(res.wu_evaluation) != 0)
        throw genericity_error("Wu evaluation on a product cycle must be even");
    res.value = res.wu_evaluation / 2;
    return res;
}

}  // namespace embobs
