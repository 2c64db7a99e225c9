#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gfr/oracle.hpp>

#include "helpers.hpp"

using namespace gfr;
using namespace gfr_test;

TEST_CASE("gamma graph is empty on the plane and on trivial torus graphs") {
    {
        EmbeddedGraph g = plane_triangle();
        RegionDecomposition rd = compute_regions(g);
        GammaGraph gg = gamma_graph(g, rd);
        CHECK(gg.vertices.empty());
        CHECK(gg.edges.empty());
        CHECK(gg.first_gamma == -1);
        CHECK(gg.last_gamma == -1);
    }
    {
        EmbeddedGraph g = torus_triangle();
        RegionDecomposition rd = compute_regions(g);
        GammaGraph gg = gamma_graph(g, rd);
        CHECK(gg.vertices.empty());
        CHECK(gg.edges.empty());
    }
}

TEST_CASE("gamma graph of the torus handle cycle") {
    EmbeddedGraph g = torus_cycle();
    RegionDecomposition rd = compute_regions(g);
    GammaGraph gg = gamma_graph(g, rd);
    CHECK(gg.vertices.size() == 2);
    // gamma runs inside the annulus: S-piece is non-trivial, so first and
    // last come from the clockwise rule at S and T
    CHECK(gg.first_gamma >= 0);
    CHECK(gg.last_gamma >= 0);
    CHECK(gg.has_vertex(gg.first_gamma));
    CHECK(gg.has_vertex(gg.last_gamma));
    // the mu portal crossing with non-trivial regions on both sides is a
    // point component joining the two annulus walks
    bool mu_edge = false;
    for (const GammaEdge& e : gg.edges)
        if (e.curve == 1) {
            mu_edge = true;
            CHECK(e.walk_a != e.walk_b);
            CHECK(e.t_start == e.t_end);
        }
    CHECK(mu_edge);
    // lambda_1 is uncrossed and lies in the annulus: contributes no edge
    for (const GammaEdge& e : gg.edges) CHECK(e.curve != 2);
}

TEST_CASE("proposition holds on the sample instances") {
    for (const EmbeddedGraph& g :
         {plane_path(), plane_triangle(), torus_triangle(), torus_cycle()}) {
        RegionDecomposition rd = compute_regions(g);
        GammaGraph gg = gamma_graph(g, rd);
        PropositionReport rep = check_proposition(g, rd, gg);
        CHECK(rep.pass);
        CHECK(rep.ntbw_count <= 2 * g.genus());
        CHECK(rep.nontrivial_regions <= g.genus());
        CHECK(rep.ntbw_count - rep.nontrivial_regions <= g.genus());
    }
    // torus annulus: N = 2, k = 1, N - k = 1 <= g = 1
    EmbeddedGraph tc = torus_cycle();
    RegionDecomposition rd = compute_regions(tc);
    PropositionReport rep = check_proposition(tc, rd, gamma_graph(tc, rd));
    CHECK(rep.ntbw_count == 2);
    CHECK(rep.nontrivial_regions == 1);
}

TEST_CASE("basis intersection numbers") {
    EmbeddedGraph g = torus_cycle();
    // #(mu_1, mu_1) = 0 by the coincidence convention
    CHECK(intersection_number(g, Cycle::basis(1), Cycle::basis(1)) == 0);
    // #(mu_1, lambda_1) = +-1 with antisymmetry
    long long mula = intersection_number(g, Cycle::basis(1), Cycle::basis(2));
    CHECK((mula == 1 || mula == -1));
    CHECK(intersection_number(g, Cycle::basis(2), Cycle::basis(1)) == -mula);
    // reversed copies flip the sign
    CHECK(intersection_number(g, Cycle::basis(3), Cycle::basis(2)) == -mula);
    CHECK(intersection_number(g, Cycle::basis(3), Cycle::basis(4)) == mula);
}

TEST_CASE("disjoint basis curves pair to zero on genus 2") {
    Surface s = standard_surface(2);
    std::vector<Node> nodes = {{Pt(0, 2)}, {Pt(4, 2)}};
    std::vector<EdgeSpec> es = {{{0, 1}, straight_chain(Pt(0, 2), Pt(4, 2))}};
    Polyline gamma = polyline({Pt(0, 2), Pt(2, 3), Pt(4, 2)});
    EmbeddedGraph g = EmbeddedGraph::build(s, nodes, es, gamma, 0, 1);
    // mu_1 vs lambda_2 and mu_1 vs mu_2 vanish
    CHECK(intersection_number(g, Cycle::basis(1), Cycle::basis(4)) == 0);
    CHECK(intersection_number(g, Cycle::basis(1), Cycle::basis(2)) == 0);
    FormReport fr = check_form_properties(g, compute_regions(g), 60);
    CHECK(fr.pass);
    CHECK(fr.rank == 4);
}

TEST_CASE("form properties on genus 1..3 standard surfaces") {
    for (int gen : {1, 2, 3}) {
        Surface s = standard_surface(gen);
        std::vector<Node> nodes = {{Pt(0, 2)}, {Pt(2, 3)}};
        std::vector<EdgeSpec> es = {{{0, 1}, straight_chain(Pt(0, 2), Pt(2, 3))}};
        Polyline gamma = polyline({Pt(0, 2), Pt(1, Rat(7, 3)), Pt(2, 3)});
        EmbeddedGraph g = EmbeddedGraph::build(s, nodes, es, gamma, 0, 1);
        FormReport fr = check_form_properties(g, compute_regions(g), 100);
        CHECK(fr.pass);
        CHECK(fr.rank == 2 * gen);
    }
}

TEST_CASE("walk-basis pairing matches homology counters") {
    EmbeddedGraph g = torus_cycle();
    for (size_t w = 0; w < g.walks.size(); ++w) {
        Cycle cw = Cycle::border_walk(static_cast<int>(w));
        CHECK(intersection_number(g, cw, Cycle::basis(1)) == g.walks[w].homology[0]);
        CHECK(intersection_number(g, cw, Cycle::basis(2)) == g.walks[w].homology[1]);
    }
}

TEST_CASE("region boundary sums pair to zero with every basis curve") {
    EmbeddedGraph g = torus_cycle();
    RegionDecomposition rd = compute_regions(g);
    for (const Region& r : rd.regions) {
        Cycle boundary;
        for (int w : r.walks) boundary.add(Cycle::border_walk(w));
        for (int j = 1; j <= 2 * g.genus(); ++j)
            CHECK(intersection_number(g, boundary, Cycle::basis(j)) == 0);
    }
}

TEST_CASE("walk-walk intersection on edge-disjoint cycles") {
    EmbeddedGraph g = plane_triangle();
    // the inner and outer triangle walks share all edges: SharedArc
    CHECK_THROWS_WITH_AS(
        intersection_number(g, Cycle::border_walk(0), Cycle::border_walk(1)),
        doctest::Contains("SharedArc"), gfr_error);
    // a walk against itself coincides: zero
    CHECK(intersection_number(g, Cycle::border_walk(0), Cycle::border_walk(0)) == 0);
}

TEST_CASE("capping identity on the torus annulus walks") {
    EmbeddedGraph g = torus_cycle();
    RegionDecomposition rd = compute_regions(g);
    for (size_t w = 0; w < g.walks.size(); ++w) {
        if (!g.walks[w].nonzero_homology()) continue;
        CappingReport rep = check_capping_identity(g, static_cast<int>(w));
        CHECK(rep.pass);
        CHECK(rep.m != 0);
    }
    // null-homologous walk raises NoDualCurve
    EmbeddedGraph tt = torus_triangle();
    CHECK_THROWS_WITH_AS(check_capping_identity(tt, 0), doctest::Contains("NoDualCurve"),
                         gfr_error);
}

TEST_CASE("gamma-star connectivity on the annulus") {
    EmbeddedGraph g = torus_cycle();
    RegionDecomposition rd = compute_regions(g);
    GammaGraph gg = gamma_graph(g, rd);
    GammaStarReport rep = check_gamma_star(g, rd, gg);
    CHECK(rep.pass);
    CHECK(!rep.vacuous);
    CHECK(rep.regions_checked == 1);

    EmbeddedGraph tri = plane_triangle();
    RegionDecomposition rd2 = compute_regions(tri);
    GammaStarReport rep2 = check_gamma_star(tri, rd2, gamma_graph(tri, rd2));
    CHECK(rep2.pass);
    CHECK(rep2.vacuous);
}

TEST_CASE("ntbw equivalence report") {
    for (const EmbeddedGraph& g : {plane_triangle(), torus_triangle(), torus_cycle()}) {
        RegionDecomposition rd = compute_regions(g);
        NtbwEquivalenceReport rep = ntbw_equivalence_report(g, rd);
        CHECK(rep.walks == static_cast<int>(g.walks.size()));
        CHECK(rep.disagree == 0);
    }
}
