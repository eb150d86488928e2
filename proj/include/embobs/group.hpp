#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <string>
#include <vector>

#include "embobs/complex.hpp"
#include "embobs/deleted_product.hpp"

namespace embobs {

using Permutation = std::vector<int>;  // vertex index -> vertex index

inline Permutation compose(const Permutation& f, const Permutation& g) {
    Permutation h(f.size());
    for (size_t v = 0; v < f.size(); ++v) h[v] = f[g[v]];
    return h;
}

/// Parity of the permutation that re-sorts the image of an increasing vertex
/// list; this is the orientation sign of a simplicial automorphism on a simplex.
inline int image_sign(const Permutation& g, const Simplex& s, Simplex& image_out) {
    image_out.clear();
    for (int v : s) image_out.push_back(g[v]);
    int sign = 1;
    for (size_t i = 1; i < image_out.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (image_out[j] > image_out[i]) sign = -sign;
    std::sort(image_out.begin(), image_out.end());
    return sign;
}

/// Finite group of simplicial automorphisms of a complex, enumerated from
/// generating vertex permutations. Elements carry shortest-word labels over the
/// generator names (breadth-first, ties broken lexicographically).
class GroupAction {
  public:
    const SimplicialComplex& complex() const { return complex_; }
    int order() const { return static_cast<int>(elements_.size()); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const Permutation& element(int i) const { return elements_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& generator_names() const { return gen_names_; }

    int index_of(const Permutation& p) const {
        auto it = elem_index_.find(p);
        return it == elem_index_.end() ? -1 : it->second;
    }
    int index_of_label(const std::string& l) const {
        for (int i = 0; i < order(); ++i)
            if (labels_[i] == l) return i;
        return -1;
    }

    int multiply(int i, int j) const { return mult_[i][j]; }
    int inverse(int i) const { return inv_[i]; }
    int identity() const { return 0; }

    friend GroupAction build_action(const SimplicialComplex&, const std::vector<Permutation>&,
                                    const std::vector<std::string>&, int);

  private:
    SimplicialComplex complex_;
    std::vector<Permutation> elements_;
    std::vector<std::string> labels_;
    std::vector<std::string> gen_names_;
    std::map<Permutation, int> elem_index_;
    std::vector<std::vector<int>> mult_;
    std::vector<int> inv_;
};

inline GroupAction build_action(const SimplicialComplex& K, const std::vector<Permutation>& gens,
                                const std::vector<std::string>& names = {},
                                int closure_cap = 10000) {
    GroupAction G;
    G.complex_ = K;
    int nv = K.vertex_count();
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        const Permutation& g = gens[gi];
        if (static_cast<int>(g.size()) != nv) throw input_error("generator is not a vertex permutation");
        std::vector<char> seen(nv, 0);
        for (int v : g) {
            if (v < 0 || v >= nv || seen[v]) throw input_error("generator is not a vertex permutation");
            seen[v] = 1;
        }
        G.gen_names_.push_back(gi < names.size() ? names[gi] : "g" + std::to_string(gi));
    }

    Permutation id(nv);
    for (int v = 0; v < nv; ++v) id[v] = v;
    G.elements_.push_back(id);
    G.labels_.push_back("e");
    G.elem_index_[id] = 0;

    // breadth-first closure; layer-by-layer with labels sorted so ties go to the
    // lexicographically smallest word
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        std::vector<std::pair<std::string, Permutation>> next;
        for (int ei : frontier)
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                Permutation cand = compose(G.elements_[ei], gens[gi]);
                std::string word =
                    G.labels_[ei] == "e" ? G.gen_names_[gi] : G.labels_[ei] + "*" + G.gen_names_[gi];
                next.emplace_back(word, cand);
            }
        std::sort(next.begin(), next.end());
        std::vector<int> new_frontier;
        for (auto& [word, perm] : next) {
            if (G.elem_index_.count(perm)) continue;
            if (static_cast<int>(G.elements_.size()) >= closure_cap)
                throw input_error("group closure exceeds the cap of " + std::to_string(closure_cap));
            int idx = static_cast<int>(G.elements_.size());
            G.elem_index_[perm] = idx;
            G.elements_.push_back(perm);
            G.labels_.push_back(word);
            new_frontier.push_back(idx);
        }
        frontier = std::move(new_frontier);
    }

    // every element must act simplicially
    for (int ei = 0; ei < G.order(); ++ei) {
        Simplex image;
        for (const auto& s : K.simplices()) {
            image_sign(G.elements_[ei], s, image);
            if (!K.has_simplex(image))
                throw input_error("non-simplicial action: element " + G.labels_[ei] +
                                  " maps " + K.label(s) + " outside the complex");
        }
    }

    int n = G.order();
    G.mult_.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int k = G.index_of(compose(G.elements_[i], G.elements_[j]));
            if (k < 0) throw input_error("closure is not multiplication-closed");
            G.mult_[i][j] = k;
        }
    G.inv_.assign(n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (G.mult_[i][j] == 0) G.inv_[i] = j;
    return G;
}

/// The subgroup generated by all squares g^2, g in H. Elements are listed in
/// parent-index order (identity first).
struct SquaresSubgroup {
    std::vector<int> elements;  // indices into the parent action

    bool contains(int e) const {
        return std::find(elements.begin(), elements.end(), e) != elements.end();
    }
};

inline SquaresSubgroup squares_subgroup(const GroupAction& G) {
    std::vector<char> in(G.order(), 0);
    std::vector<int> gens;
    for (int g = 0; g < G.order(); ++g) {
        int s = G.multiply(g, g);
        if (!in[s]) { in[s] = 1; gens.push_back(s); }
    }
    // close under multiplication (finite, so inverses come for free)
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> members;
        for (int i = 0; i < G.order(); ++i)
            if (in[i]) members.push_back(i);
        for (int a : members)
            for (int b : members)
                if (!in[G.multiply(a, b)]) { in[G.multiply(a, b)] = 1; grew = true; }
    }
    SquaresSubgroup S;
    for (int i = 0; i < G.order(); ++i)
        if (in[i]) S.elements.push_back(i);
    return S;
}

/// Extends an action over cone(K), fixing the apex.
inline GroupAction extend_action_cone(const GroupAction& G, const ConeResult& cone_data) {
    if (cone_data.inclusion.source_id != G.complex().id())
        throw input_error("cone was not built from the action's complex");
    const SimplicialComplex& C = cone_data.complex;
    int apex = C.vertex_index(cone_data.apex);
    std::vector<Permutation> gens;
    std::vector<std::string> names = G.generator_names();
    for (const auto& name : names) {
        int gi = G.index_of_label(name);
        if (gi < 0) throw input_error("generator element missing from closure");
        Permutation ext(C.vertex_count());
        ext[apex] = apex;
        for (int v = 0; v < G.complex().vertex_count(); ++v)
            ext[cone_data.inclusion.image[v]] = cone_data.inclusion.image[G.element(gi)[v]];
        gens.push_back(ext);
    }
    return build_action(C, gens, names);
}

/// Extends an action over K * J, permuting the K-block and fixing J (or the
/// J-block, fixing K, when side_left is false).
inline GroupAction extend_action_join(const GroupAction& G, const JoinResult& join_data,
                                      bool side_left = true) {
    const VertexMap& inc = side_left ? join_data.left_inclusion : join_data.right_inclusion;
    const VertexMap& other = side_left ? join_data.right_inclusion : join_data.left_inclusion;
    if (inc.source_id != G.complex().id())
        throw input_error("join was not built from the action's complex");
    const SimplicialComplex& C = join_data.complex;
    std::vector<Permutation> gens;
    std::vector<std::string> names = G.generator_names();
    for (const auto& name : names) {
        int gi = G.index_of_label(name);
        Permutation ext(C.vertex_count());
        for (int w : other.image) ext[w] = w;
        for (int v = 0; v < G.complex().vertex_count(); ++v)
            ext[inc.image[v]] = inc.image[G.element(gi)[v]];
        gens.push_back(ext);
    }
    return build_action(C, gens, names);
}

/// Product action on K * J from actions on the two factors.
inline GroupAction product_action_join(const GroupAction& GK, const GroupAction& GJ,
                                       const JoinResult& join_data) {
    GroupAction L = extend_action_join(GK, join_data, true);
    GroupAction R = extend_action_join(GJ, join_data, false);
    std::vector<Permutation> gens;
    std::vector<std::string> names;
    for (const auto& name : GK.generator_names()) {
        gens.push_back(L.element(L.index_of_label(name)));
        names.push_back("k." + name);
    }
    for (const auto& name : GJ.generator_names()) {
        gens.push_back(R.element(R.index_of_label(name)));
        names.push_back("j." + name);
    }
    return build_action(join_data.complex, gens, names);
}

/// Induced signed chain map of a group element on twisted chains of the deleted
/// product: (sigma, tau) -> (g sigma, g tau) with the product of the two
/// re-sorting parities, rewritten to orbit representatives.
inline TwistedChain induced_chain_map(const GroupAction& G, int element, const TwistedChain& x) {
    if (x.dp()->base().id() != G.complex().id())
        throw input_error("chain does not live on the action's complex");
    const Permutation& g = G.element(element);
    const auto& dp = *x.dp();
    const auto& base = dp.base();
    TwistedChain out(x.dp(), x.degree(), x.system());
    Simplex gs, gt;
    for (const auto& [idx, v] : x.coeffs()) {
        const Cell& cell = dp.cells(x.degree())[idx];
        int sign_s = image_sign(g, base.simplex(cell.sigma), gs);
        int sign_t = image_sign(g, base.simplex(cell.tau), gt);
        int si = base.simplex_idx(gs), ti = base.simplex_idx(gt);
        if (si < 0 || ti < 0) throw input_error("automorphism image escapes the complex");
        out.add_cell(Cell{si, ti}, v * sign_s * sign_t);
    }
    return out;
}

/// Pullback cochain phi . g_*; pairs with chains the way Wu classes pull back
/// along automorphisms.
inline TwistedCochain pullback_cochain(const GroupAction& G, int element, const TwistedCochain& phi) {
    const auto& dp = *phi.dp();
    const auto& base = dp.base();
    const Permutation& g = G.element(element);
    TwistedCochain out(phi.dp(), phi.degree(), phi.system());
    Simplex gs, gt;
    for (int rep_idx : dp.reps(phi.degree())) {
        const Cell& cell = dp.cells(phi.degree())[rep_idx];
        int sign_s = image_sign(g, base.simplex(cell.sigma), gs);
        int sign_t = image_sign(g, base.simplex(cell.tau), gt);
        Cell image{base.simplex_idx(gs), base.simplex_idx(gt)};
        Int v = phi.value_on(image) * sign_s * sign_t;
        if (v != 0) out.set(rep_idx, v);
    }
    return out;
}

}  // namespace embobs
