// Temporary compile/behavior probe used during bring-up; superseded by the
// Catch2 suites.
#include <iostream>

#include "embobs/constructions.hpp"
#include "embobs/fixtures.hpp"

using namespace embobs;

int main() {
    SimplicialComplex K = fixtures::five_points();
    DeletedProductPtr dp = deleted_product(K);
    GroupAction G = fixtures::five_points_z4(K);
    TwistedChain phi = fixtures::five_points_phi(dp);

    auto result = check_equivariant_obstructor(dp, G, phi, 0);
    if (auto* cert = std::get_if<ObstructorCertificate>(&result)) {
        std::cout << "certificate: level=" << cert->level << " A={";
        for (const auto& l : cert->subset_labels) std::cout << l << ",";
        std::cout << "}\n";
    }

    // cone: 5 points -> star
    ConeResult cr = cone(K);
    DeletedProductPtr dpc = deleted_product(cr.complex);
    TwistedChain phi_cone = cone_cycle(phi, cr, dpc);
    std::cout << "cone cycle terms: " << phi_cone.coeffs().size() << " degree " << phi_cone.degree()
              << "\n";
    GroupAction Gc = extend_action_cone(G, cr);
    TwistedChain sum = phi_cone + induced_chain_map(Gc, Gc.index_of_label("h*h"), phi_cone);
    std::cout << "cone transport zero: " << sum.is_zero() << "\n";
    auto cone_res = vertex_sum_residuals(dpc, phi_cone);
    bool resid_ok = true;
    for (auto& [si, r] : cone_res) resid_ok = resid_ok && r == 0;
    std::cout << "cone residuals zero: " << resid_ok << "\n";
    auto star_eval = check_evaluation_cycle(dpc, phi_cone, 1);
    std::cout << "star evaluation cycle pass: " << star_eval.pass
              << " (mod2=" << star_eval.condition1_mod2 << ")\n";

    // join of the two 5-point fixtures
    SimplicialComplex K2 = fixtures::five_points();
    JoinResult jr = join(K, K2);
    std::cout << "join55: " << jr.complex.vertex_count() << " vertices, "
              << jr.complex.simplices_of_dim(1).size() << " edges\n";
    DeletedProductPtr dpj = deleted_product(jr.complex);
    DeletedProductPtr dp2 = deleted_product(K2);
    TwistedChain phi2 = fixtures::five_points_phi(dp2);
    TwistedChain joined = join_cycle(phi, phi2, jr, dpj);
    std::cout << "join cycle terms: " << joined.coeffs().size() << " degree " << joined.degree()
              << "\n";
    auto jeval = check_evaluation_cycle(dpj, joined, 2);
    std::cout << "join eval pass: " << jeval.pass << " mod2: " << jeval.condition1_mod2 << "\n";
    GroupAction Gj = product_action_join(G, fixtures::five_points_z4(K2), jr);
    std::cout << "product action order: " << Gj.order() << "\n";
    auto jres = check_equivariant_obstructor(dpj, Gj, joined, 2);
    if (auto* cert = std::get_if<ObstructorCertificate>(&jres)) {
        std::cout << "join certificate: level=" << cert->level << " A={";
        for (const auto& l : cert->subset_labels) std::cout << l << ",";
        std::cout << "}\n";
    } else {
        std::cout << "join certificate NOT FOUND: " << std::get<ObstructorNotFound>(jres).reason
                  << "\n";
    }

    // links
    for (auto [name, fix] : {std::pair<const char*, fixtures::CoordFixture>{"hopf", fixtures::hopf_link()},
                             {"unlink", fixtures::unlink()},
                             {"torus24", fixtures::torus24_link()}}) {
        auto dph = deleted_product(fix.complex);
        auto val = validate_embedding(fix.complex, fix.config);
        if (!val.ok) {
            std::cout << name << " validation FAILED: " << val.reason << " "
                      << fix.complex.label(val.sigma) << " vs " << fix.complex.label(val.tau) << "\n";
            continue;
        }
        auto link = linking_number(dph, fix.config);
        std::cout << name << " lk: " << link.value << "\n";
    }

    // figure-1 two-edge fixture
    auto fig = fixtures::two_edges();
    auto dpf = deleted_product(fig.complex);
    ObstructionClass wu = wu_cochain(dpf, fig.config);
    ObstructionClass vk = vk_cochain(dpf, 2, make_configuration(fig.complex, 2,
        [&] {  // drop the last coordinate of the embedding
            std::vector<Point> c;
            for (auto& p : fig.config.coords) c.push_back({p[0], p[1]});
            return c;
        }()));
    const auto& km = fig.complex;
    Cell st{km.simplex_idx({km.vertex_index("s1"), km.vertex_index("s2")}),
            km.simplex_idx({km.vertex_index("t1"), km.vertex_index("t2")})};
    Cell ts = dpf->swapped(st);
    std::cout << "vk(st)=" << vk.cochain.value_on(st) << " vk(ts)=" << vk.cochain.value_on(ts)
              << " wu(st)=" << wu.cochain.value_on(st) << " wu(ts)=" << wu.cochain.value_on(ts)
              << "\n";

    // planarity obstructions mod 2
    for (auto [name, Kg] : {std::pair<const char*, SimplicialComplex>{"K5", fixtures::k5()},
                            {"K33", fixtures::k33()},
                            {"C4", fixtures::square_cycle()},
                            {"cube", fixtures::cube_graph()}}) {
        auto dpg = deleted_product(Kg);
        HomologyGroup H2 = homology(dpg, System::Z2, 2);
        ObstructionClass vkg = vk_cochain_generic(dpg, 2, 7);
        TwistedCochain vk2 = reduce_mod2(vkg.cochain);
        bool odd = false;
        for (const auto& z : H2.basis())
            if (evaluate_pairing(vk2, z) != 0) odd = true;
        std::cout << name << ": H2 dim " << H2.free_rank() << ", vk odd on basis: " << odd << "\n";
    }

    // homology of the triangle-boundary quotient
    auto dpt = deleted_product(fixtures::triangle_boundary());
    HomologyGroup h1 = homology(dpt, System::Z, 1);
    std::cout << "triangle H1(Z): rank " << h1.free_rank() << " torsion " << h1.torsion().size()
              << "\n";
    HomologyGroup h0m = homology(deleted_product(K), System::Zminus, 0);
    std::cout << "5pts H0(Z-): rank " << h0m.free_rank() << "\n";
    return 0;
}
