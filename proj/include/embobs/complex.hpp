#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "embobs/common.hpp"

namespace embobs {

using VertexId = std::string;
using Simplex = std::vector<int>;  // vertex indices, strictly increasing

/// Finite abstract simplicial complex. Vertices carry a fixed canonical order
/// (the construction order); a simplex is stored as its increasing index list
/// and its orientation is by definition that ordering. All boundary and
/// involution signs elsewhere in the library derive from this one convention.
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    const std::vector<VertexId>& vertex_ids() const { return vertex_ids_; }
    int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }

    int vertex_index(const VertexId& v) const {
        auto it = vertex_index_.find(v);
        if (it == vertex_index_.end()) throw input_error("unknown vertex id: " + v);
        return it->second;
    }
    bool has_vertex(const VertexId& v) const { return vertex_index_.count(v) != 0; }

    /// All simplices in canonical order: by dimension, then lexicographically.
    const std::vector<Simplex>& simplices() const { return simplices_; }
    int simplex_count() const { return static_cast<int>(simplices_.size()); }

    const Simplex& simplex(int idx) const { return simplices_[idx]; }

    int simplex_idx(const Simplex& s) const {
        auto it = simplex_index_.find(s);
        return it == simplex_index_.end() ? -1 : it->second;
    }
    bool has_simplex(const Simplex& s) const { return simplex_index_.count(s) != 0; }

    /// Indices of the d-simplices, in canonical order.
    const std::vector<int>& simplices_of_dim(int d) const {
        static const std::vector<int> empty;
        if (d < 0 || d > dim_) return empty;
        return by_dim_[d];
    }

    int dim() const { return dim_; }

    std::string label(const Simplex& s) const {
        std::string out = "{";
        for (size_t i = 0; i < s.size(); ++i) {
            if (i) out += ",";
            out += vertex_ids_[s[i]];
        }
        return out + "}";
    }

    /// Stable identity for cross-checking that chains/actions/configurations
    /// refer to the same complex.
    const std::string& id() const { return id_; }

    friend SimplicialComplex build_complex(const std::vector<VertexId>&,
                                           const std::vector<std::vector<VertexId>>&);

  private:
    void finalize() {
        std::sort(simplices_.begin(), simplices_.end(),
                  [](const Simplex& a, const Simplex& b) {
                      if (a.size() != b.size()) return a.size() < b.size();
                      return a < b;
                  });
        dim_ = -1;
        for (int i = 0; i < static_cast<int>(simplices_.size()); ++i) {
            simplex_index_[simplices_[i]] = i;
            dim_ = std::max(dim_, static_cast<int>(simplices_[i].size()) - 1);
        }
        by_dim_.assign(dim_ + 1, {});
        for (int i = 0; i < static_cast<int>(simplices_.size()); ++i)
            by_dim_[simplices_[i].size() - 1].push_back(i);
        std::string blob;
        for (const auto& v : vertex_ids_) blob += v + ";";
        blob += "|";
        for (const auto& s : simplices_) {
            for (int v : s) blob += std::to_string(v) + ",";
            blob += ";";
        }
        id_ = hash_hex(fnv1a(blob));
    }

    std::vector<VertexId> vertex_ids_;
    std::map<VertexId, int> vertex_index_;
    std::vector<Simplex> simplices_;
    std::map<Simplex, int> simplex_index_;
    std::vector<std::vector<int>> by_dim_;
    int dim_ = -1;
    std::string id_;
};

/// Vertex assignment between complexes; images of simplices must be simplices.
struct VertexMap {
    std::string source_id;
    std::string target_id;
    std::vector<int> image;  // source vertex index -> target vertex index

    Simplex apply(const Simplex& s) const {
        Simplex out;
        out.reserve(s.size());
        for (int v : s) out.push_back(image[v]);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
};

inline void check_vertex_map(const VertexMap& m, const SimplicialComplex& src,
                             const SimplicialComplex& dst) {
    if (m.source_id != src.id() || m.target_id != dst.id())
        throw input_error("vertex map does not connect the given complexes");
    for (const auto& s : src.simplices())
        if (!dst.has_simplex(m.apply(s)))
            throw input_error("vertex map is not simplicial on " + src.label(s));
}

/// Face closure of the given facets over the given vertex order.
inline SimplicialComplex build_complex(const std::vector<VertexId>& vertices,
                                       const std::vector<std::vector<VertexId>>& facets) {
    SimplicialComplex K;
    for (const auto& v : vertices) {
        if (K.vertex_index_.count(v)) throw input_error("duplicate vertex id: " + v);
        K.vertex_index_[v] = static_cast<int>(K.vertex_ids_.size());
        K.vertex_ids_.push_back(v);
    }
    std::set<Simplex> closed;
    for (const auto& facet : facets) {
        if (facet.empty()) throw input_error("empty facet");
        Simplex f;
        for (const auto& v : facet) f.push_back(K.vertex_index(v));
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.size() > 25) throw input_error("facet too large");
        // every nonempty subset of a facet is a simplex
        for (unsigned mask = 1; mask < (1u << f.size()); ++mask) {
            Simplex s;
            for (size_t i = 0; i < f.size(); ++i)
                if (mask & (1u << i)) s.push_back(f[i]);
            closed.insert(s);
        }
    }
    K.simplices_.assign(closed.begin(), closed.end());
    K.finalize();
    return K;
}

inline VertexId fresh_vertex_id(const SimplicialComplex& K, VertexId base) {
    while (K.has_vertex(base)) base += "'";
    return base;
}

struct ConeResult {
    SimplicialComplex complex;
    VertexId apex;
    VertexMap inclusion;  // base complex -> cone
};

/// Cone over K with one fresh apex vertex. The apex is placed *first* in the
/// canonical vertex order, so that the oriented boundary of a coned simplex is
///   d(c * s) = s - c * (d s).
inline ConeResult cone(const SimplicialComplex& K) {
    VertexId apex = fresh_vertex_id(K, "c");
    std::vector<VertexId> verts;
    verts.push_back(apex);
    for (const auto& v : K.vertex_ids()) verts.push_back(v);
    std::vector<std::vector<VertexId>> facets;
    facets.push_back({apex});
    for (const auto& s : K.simplices()) {
        std::vector<VertexId> f;
        f.push_back(apex);
        for (int v : s) f.push_back(K.vertex_ids()[v]);
        facets.push_back(f);
    }
    ConeResult res;
    res.complex = build_complex(verts, facets);
    res.apex = apex;
    res.inclusion.source_id = K.id();
    res.inclusion.target_id = res.complex.id();
    for (const auto& v : K.vertex_ids())
        res.inclusion.image.push_back(res.complex.vertex_index(v));
    return res;
}

struct JoinResult {
    SimplicialComplex complex;
    VertexMap left_inclusion;
    VertexMap right_inclusion;
    int left_vertex_count = 0;  // K-block vertices come first
};

/// Join K * J. The canonical vertex order puts the whole K-block before the
/// J-block, so the orientation of s * s' is the concatenation orientation and
/// the join sign formulas can be read off literally. Colliding J-side vertex
/// ids are disjointified with trailing apostrophes.
inline JoinResult join(const SimplicialComplex& K, const SimplicialComplex& J) {
    std::vector<VertexId> verts = K.vertex_ids();
    std::set<VertexId> used(verts.begin(), verts.end());
    std::vector<VertexId> j_names;
    for (const auto& v : J.vertex_ids()) {
        VertexId w = v;
        while (used.count(w)) w += "'";
        used.insert(w);
        j_names.push_back(w);
        verts.push_back(w);
    }
    std::vector<std::vector<VertexId>> facets;
    auto left_name = [&](int i) { return K.vertex_ids()[i]; };
    auto right_name = [&](int i) { return j_names[i]; };
    for (const auto& s : K.simplices()) {
        std::vector<VertexId> f;
        for (int v : s) f.push_back(left_name(v));
        facets.push_back(f);
        for (const auto& t : J.simplices()) {
            std::vector<VertexId> g = f;
            for (int v : t) g.push_back(right_name(v));
            facets.push_back(g);
        }
    }
    for (const auto& t : J.simplices()) {
        std::vector<VertexId> f;
        for (int v : t) f.push_back(right_name(v));
        facets.push_back(f);
    }
    JoinResult res;
    res.complex = build_complex(verts, facets);
    res.left_vertex_count = K.vertex_count();
    res.left_inclusion.source_id = K.id();
    res.left_inclusion.target_id = res.complex.id();
    for (const auto& v : K.vertex_ids())
        res.left_inclusion.image.push_back(res.complex.vertex_index(v));
    res.right_inclusion.source_id = J.id();
    res.right_inclusion.target_id = res.complex.id();
    for (const auto& w : j_names)
        res.right_inclusion.image.push_back(res.complex.vertex_index(w));
    return res;
}

enum class StandardComplex { n_points, sphere_join, complete_graph, complete_bipartite, cycle, two_cycles };

inline SimplicialComplex n_points(int n, const std::string& prefix = "p") {
    if (n < 1) throw input_error("n_points needs n >= 1");
    std::vector<VertexId> verts;
    std::vector<std::vector<VertexId>> facets;
    for (int i = 0; i < n; ++i) {
        verts.push_back(prefix + std::to_string(i));
        facets.push_back({verts.back()});
    }
    return build_complex(verts, facets);
}

inline SimplicialComplex complete_graph(int n) {
    if (n < 2) throw input_error("complete_graph needs n >= 2");
    std::vector<VertexId> verts;
    for (int i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i));
    std::vector<std::vector<VertexId>> facets;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) facets.push_back({verts[i], verts[j]});
    return build_complex(verts, facets);
}

inline SimplicialComplex complete_bipartite(int p, int q) {
    if (p < 1 || q < 1) throw input_error("complete_bipartite needs p,q >= 1");
    std::vector<VertexId> verts;
    for (int i = 0; i < p; ++i) verts.push_back("u" + std::to_string(i));
    for (int j = 0; j < q; ++j) verts.push_back("w" + std::to_string(j));
    std::vector<std::vector<VertexId>> facets;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) facets.push_back({verts[i], verts[p + j]});
    return build_complex(verts, facets);
}

inline SimplicialComplex cycle_graph(int k, const std::string& prefix = "v") {
    if (k < 3) throw input_error("cycle needs k >= 3");
    std::vector<VertexId> verts;
    for (int i = 0; i < k; ++i) verts.push_back(prefix + std::to_string(i));
    std::vector<std::vector<VertexId>> facets;
    for (int i = 0; i < k; ++i) facets.push_back({verts[i], verts[(i + 1) % k]});
    return build_complex(verts, facets);
}

inline SimplicialComplex two_cycles(int k) {
    if (k < 3) throw input_error("two_cycles needs k >= 3");
    std::vector<VertexId> verts;
    std::vector<std::vector<VertexId>> facets;
    for (const std::string& prefix : {std::string("a"), std::string("b")}) {
        std::vector<VertexId> ring;
        for (int i = 0; i < k; ++i) {
            ring.push_back(prefix + std::to_string(i));
            verts.push_back(ring.back());
        }
        for (int i = 0; i < k; ++i) facets.push_back({ring[i], ring[(i + 1) % k]});
    }
    return build_complex(verts, facets);
}

/// m-sphere triangulated as the (m+1)-fold join of vertex pairs, together with
/// one disjoint point (the classical minimal obstructor fixture).
inline SimplicialComplex sphere_join(int m) {
    if (m < 0) throw input_error("sphere_join needs m >= 0");
    SimplicialComplex sphere = n_points(2, "s0_");
    for (int i = 1; i <= m; ++i) {
        JoinResult jr = join(sphere, n_points(2, "s" + std::to_string(i) + "_"));
        sphere = jr.complex;
    }
    std::vector<VertexId> verts = sphere.vertex_ids();
    verts.push_back("pt");
    std::vector<std::vector<VertexId>> facets;
    for (const auto& s : sphere.simplices()) {
        std::vector<VertexId> f;
        for (int v : s) f.push_back(sphere.vertex_ids()[v]);
        facets.push_back(f);
    }
    facets.push_back({"pt"});
    return build_complex(verts, facets);
}

inline SimplicialComplex standard(StandardComplex name, int a = 0, int b = 0) {
    switch (name) {
        case StandardComplex::n_points: return n_points(a);
        case StandardComplex::sphere_join: return sphere_join(a);
        case StandardComplex::complete_graph: return complete_graph(a);
        case StandardComplex::complete_bipartite: return complete_bipartite(a, b);
        case StandardComplex::cycle: return cycle_graph(a);
        case StandardComplex::two_cycles: return two_cycles(a);
    }
    throw input_error("unknown standard complex");
}

}  // namespace embobs
