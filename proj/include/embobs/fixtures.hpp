#pragma once

#include <string>
#include <vector>

#include "embobs/complex.hpp"
#include "embobs/deleted_product.hpp"
#include "embobs/geometry.hpp"
#include "embobs/group.hpp"

namespace embobs {
namespace fixtures {

/// Five points with one of them (A) distinguished; the Z/4 fixture's complex.
inline SimplicialComplex five_points() {
    return build_complex({"A", "1", "2", "3", "4"}, {{"A"}, {"1"}, {"2"}, {"3"}, {"4"}});
}

/// Z/4 = <h> cyclically permuting 1 -> 2 -> 3 -> 4 and fixing A.
inline GroupAction five_points_z4(const SimplicialComplex& K) {
    Permutation h(5);
    h[K.vertex_index("A")] = K.vertex_index("A");
    h[K.vertex_index("1")] = K.vertex_index("2");
    h[K.vertex_index("2")] = K.vertex_index("3");
    h[K.vertex_index("3")] = K.vertex_index("4");
    h[K.vertex_index("4")] = K.vertex_index("1");
    return build_action(K, {h}, {"h"});
}

/// The evaluation 0-cycle (A,1) + (1,3) + (3,A) in Z^- coefficients.
inline TwistedChain five_points_phi(const DeletedProductPtr& dp) {
    const SimplicialComplex& K = dp->base();
    TwistedChain phi(dp, 0, System::Zminus);
    auto v = [&](const char* name) { return Simplex{K.vertex_index(name)}; };
    phi.add_term(v("A"), v("1"), 1);
    phi.add_term(v("1"), v("3"), 1);
    phi.add_term(v("3"), v("A"), 1);
    return phi;
}

inline SimplicialComplex triangle_boundary() {
    return build_complex({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

inline SimplicialComplex k5() { return complete_graph(5); }
inline SimplicialComplex k33() { return complete_bipartite(3, 3); }
inline SimplicialComplex square_cycle() { return cycle_graph(4); }

/// The 1-skeleton of the cube: vertices are bit strings, edges flip one bit.
inline SimplicialComplex cube_graph() {
    std::vector<VertexId> verts;
    for (int m = 0; m < 8; ++m) {
        std::string name(3, '0');
        for (int b = 0; b < 3; ++b)
            if (m & (1 << b)) name[b] = '1';
        verts.push_back(name);
    }
    std::vector<std::vector<VertexId>> facets;
    for (int m = 0; m < 8; ++m)
        for (int b = 0; b < 3; ++b)
            if (!(m & (1 << b))) facets.push_back({verts[m], verts[m | (1 << b)]});
    return build_complex(verts, facets);
}

struct CoordFixture {
    SimplicialComplex complex;
    RationalConfiguration config;
};

namespace detail {

inline CoordFixture coords_fixture(SimplicialComplex K, int d,
                                   const std::vector<std::pair<std::string, std::vector<Rat>>>& pts) {
    std::vector<Point> coords(K.vertex_count());
    for (const auto& [name, p] : pts) coords[K.vertex_index(name)] = p;
    RationalConfiguration config = make_configuration(K, d, std::move(coords));
    return CoordFixture{std::move(K), std::move(config)};
}

}  // namespace detail

/// Hopf link: two squares, the second threading the first once. Projection to
/// the first two coordinates has exactly two inter-component crossings, one
/// over and one under.
inline CoordFixture hopf_link() {
    SimplicialComplex K = two_cycles(4);
    return detail::coords_fixture(std::move(K), 3,
        {{"a0", {Rat(1), Rat(0), Rat(1, 101)}},
         {"a1", {Rat(0), Rat(1), Rat(-1, 103)}},
         {"a2", {Rat(-1), Rat(0), Rat(1, 107)}},
         {"a3", {Rat(0), Rat(-1), Rat(-1, 109)}},
         {"b0", {Rat(2), Rat(1, 113), Rat(0)}},
         {"b1", {Rat(1), Rat(-1, 127), Rat(1)}},
         {"b2", {Rat(1, 131), Rat(1, 137), Rat(0)}},
         {"b3", {Rat(1), Rat(1, 139), Rat(-1)}}});
}

/// Two separated squares; projections are disjoint.
inline CoordFixture unlink() {
    SimplicialComplex K = two_cycles(4);
    return detail::coords_fixture(std::move(K), 3,
        {{"a0", {Rat(1), Rat(0), Rat(1, 101)}},
         {"a1", {Rat(0), Rat(1), Rat(-1, 103)}},
         {"a2", {Rat(-1), Rat(0), Rat(1, 107)}},
         {"a3", {Rat(0), Rat(-1), Rat(-1, 109)}},
         {"b0", {Rat(12), Rat(1, 113), Rat(0)}},
         {"b1", {Rat(11), Rat(-1, 127), Rat(1)}},
         {"b2", {Rat(10) + Rat(1, 131), Rat(1, 137), Rat(0)}},
         {"b3", {Rat(11), Rat(1, 139), Rat(-1)}}});
}

/// (2,4)-torus link: a square plus an octagon winding twice through it.
inline CoordFixture torus24_link() {
    std::vector<VertexId> verts;
    std::vector<std::vector<VertexId>> facets;
    for (int i = 0; i < 4; ++i) verts.push_back("a" + std::to_string(i));
    for (int i = 0; i < 8; ++i) verts.push_back("b" + std::to_string(i));
    for (int i = 0; i < 4; ++i) facets.push_back({verts[i], verts[(i + 1) % 4]});
    for (int i = 0; i < 8; ++i) facets.push_back({verts[4 + i], verts[4 + (i + 1) % 8]});
    SimplicialComplex K = build_complex(verts, facets);
    return detail::coords_fixture(std::move(K), 3,
        {{"a0", {Rat(1), Rat(0), Rat(1, 101)}},
         {"a1", {Rat(0), Rat(1), Rat(-1, 103)}},
         {"a2", {Rat(-1), Rat(0), Rat(1, 107)}},
         {"a3", {Rat(0), Rat(-1), Rat(-1, 109)}},
         // the octagon visits the xz half-plane circle twice, radii 1 and 5/4,
         // with distinct tiny y offsets so the loops stay disjoint
         {"b0", {Rat(2), Rat(1, 113), Rat(0)}},
         {"b1", {Rat(1), Rat(-1, 127), Rat(1)}},
         {"b2", {Rat(0), Rat(1, 131), Rat(0)}},
         {"b3", {Rat(1), Rat(-1, 137), Rat(-1)}},
         {"b4", {Rat(9, 4), Rat(1, 139), Rat(0)}},
         {"b5", {Rat(1), Rat(-1, 149), Rat(5, 4)}},
         {"b6", {Rat(-1, 4), Rat(1, 151), Rat(0)}},
         {"b7", {Rat(1), Rat(-1, 157), Rat(-5, 4)}}});
}

/// Two disjoint edges in R^3 whose projections cross once with the first edge
/// on top.
inline CoordFixture two_edges() {
    SimplicialComplex K = build_complex({"s1", "s2", "t1", "t2"}, {{"s1", "s2"}, {"t1", "t2"}});
    return detail::coords_fixture(std::move(K), 3,
        {{"s1", {Rat(-1), Rat(1, 101), Rat(1)}},
         {"s2", {Rat(1), Rat(1, 103), Rat(9, 10)}},
         {"t1", {Rat(1, 107), Rat(-1), Rat(0)}},
         {"t2", {Rat(1, 109), Rat(1), Rat(1, 111)}}});
}

}  // namespace fixtures
}  // namespace embobs
