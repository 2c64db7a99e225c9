#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gfr/agent.hpp>
#include <gfr/oracle.hpp>

#include "helpers.hpp"

using namespace gfr;
using namespace gfr_test;

namespace {

// Locate the crossing slot of (curve, t) on an edge, test-side.
CrossRef find_crossing(const EmbeddedGraph& g, int curve, const Rat& t) {
    for (size_t e = 0; e < g.edges.size(); ++e)
        for (size_t s = 0; s < g.edges[e].crossings.size(); ++s) {
            const Crossing& c = g.edges[e].crossings[s];
            if (c.curve == curve && c.t == t) return CrossRef{static_cast<int>(e), static_cast<int>(s)};
        }
    return CrossRef{};
}

}  // namespace

TEST_CASE("msfr delivers on plane instances (slow face routing)") {
    for (EmbeddedGraph g : {plane_path(), plane_triangle()}) {
        RouteResult r = msfr_route(g);
        CHECK(r.outcome == RouteOutcome::Delivered);
        CHECK(r.locality_violations == 0);
        CHECK(r.peak_memory_bits > 0);
    }
}

TEST_CASE("msfr on the torus handle cycle stops at the first NTBW") {
    EmbeddedGraph g = torus_cycle();
    AgentRuntime rt(g, default_step_budget(g));
    MsfrStop s = msfr_from_source(g, rt);
    // gamma from node0 to node1 lies in the annulus; T is on every walk of
    // this small instance only via node visits -- the start walk contains T?
    // node1 = c is on both walks, so the first traversal finds it.
    CHECK(s.reached_destination);
}

TEST_CASE("msfr component following and reversibility") {
    // the trap instance has walks not containing T, so component legs run
    // endpoint to endpoint
    EmbeddedGraph g = trap_instance();
    RegionDecomposition rd = compute_regions(g);
    GammaGraph gg = gamma_graph(g, rd);
    const GammaEdge* mu_edge = nullptr;
    for (const GammaEdge& e : gg.edges)
        if (e.curve == 1) mu_edge = &e;
    REQUIRE(mu_edge != nullptr);

    AgentRuntime rt(g, default_step_budget(g));
    CrossRef entry = find_crossing(g, mu_edge->curve, mu_edge->t_start);
    REQUIRE(entry.valid());
    // park the agent at one endpoint of the crossing edge
    rt.place_at(g.edges[static_cast<size_t>(entry.edge)].u);
    MsfrStop stop = msfr_leg(g, rt, mu_edge->curve, entry);
    REQUIRE(!stop.reached_destination);
    CHECK(stop.walk_key == g.walks[static_cast<size_t>(mu_edge->walk_b)].key);
    CHECK(stop.triple.curve == 1);
    CHECK(stop.triple.t_from == mu_edge->t_start);
    CHECK(stop.triple.t_to == mu_edge->t_end);

    // reverse returns to the other endpoint walk at the reversed entry t
    MsfrStop back = reverse_msfr(g, rt, stop.triple, stop.arrival_cursor);
    REQUIRE(!back.reached_destination);
    CHECK(back.walk_key == g.walks[static_cast<size_t>(mu_edge->walk_a)].key);
    CHECK(back.triple.t_to == g.curves.at(3).reverse_t(mu_edge->t_start));
}

TEST_CASE("classic fr loops on the trap while gfr delivers") {
    EmbeddedGraph g = trap_instance();
    RouteResult fr = classic_fr(g);
    CHECK(fr.outcome == RouteOutcome::FailedLoopDetected);
    RouteResult gr = gfr_route(g);
    CHECK(gr.outcome == RouteOutcome::Delivered);
    CHECK(gr.ntbw_visits >= 2);
    CHECK(gr.triples_recorded <= 4);
    CHECK(gr.locality_violations == 0);
}

TEST_CASE("gfr trace equals msfr trace on genus zero") {
    for (EmbeddedGraph g : {plane_path(), plane_triangle()}) {
        RouteResult a = gfr_route(g);
        RouteResult b = msfr_route(g);
        CHECK(a.outcome == RouteOutcome::Delivered);
        REQUIRE(a.trace.size() == b.trace.size());
        for (size_t i = 0; i < a.trace.size(); ++i) {
            CHECK(a.trace[i].edge == b.trace[i].edge);
            CHECK(a.trace[i].node == b.trace[i].node);
        }
        CHECK(a.triples_recorded == 0);
        CHECK(a.ntbw_visits == 0);
    }
}

TEST_CASE("classic fr delivers on the plane") {
    for (EmbeddedGraph g : {plane_path(), plane_triangle()}) {
        RouteResult r = classic_fr(g);
        CHECK(r.outcome == RouteOutcome::Delivered);
    }
}

TEST_CASE("gfr delivers on torus instances and respects the Gamma bound") {
    EmbeddedGraph g = torus_cycle();
    RouteResult r = gfr_route(g);
    CHECK(r.outcome == RouteOutcome::Delivered);
    CHECK(r.ntbw_visits <= 2 * g.genus() + 2);
    CHECK(r.triples_recorded <= 4 * g.genus());
    CHECK(r.locality_violations == 0);
}

TEST_CASE("gfr on a torus instance that needs the handle hop") {
    // spur tips on opposite sides of the non-contractible cycle: S outside,
    // T inside the strip; gamma goes over the top through the gap, so the
    // gamma leg stops at the outer walk and the search must use mu_1
    Surface s = standard_surface(1);
    std::vector<Node> nodes = {{Pt(1, -2)},           // 0 a
                               {Pt(3, -2)},           // 1 c
                               {Pt(2, Rat(-12, 5))},  // 2 m
                               {Pt(0, -1)},           // 3 S tip
                               {Pt(2, Rat(-3, 2))}};  // 4 T tip (inside strip)
    std::vector<EdgeSpec> es = {
        {{0, 1}, portal_chain(s, Pt(1, -2), 0, Dir(Rat(0), Rat(-1)), Pt(3, -2))},
        {{1, 2}, straight_chain(Pt(3, -2), Pt(2, Rat(-12, 5)))},
        {{2, 0}, straight_chain(Pt(2, Rat(-12, 5)), Pt(1, -2))},
        {{0, 3}, straight_chain(Pt(1, -2), Pt(0, -1))},
        {{2, 4}, straight_chain(Pt(2, Rat(-12, 5)), Pt(2, Rat(-3, 2)))}};
    // gamma: from S around the left, over the circles, down through the
    // identification gap into the strip
    Polyline gamma = polyline({Pt(0, -1), Pt(-1, 1), Pt(2, Rat(6, 5)), Pt(2, Rat(-3, 2))});
    EmbeddedGraph g = EmbeddedGraph::build(s, nodes, es, gamma, 3, 4);

    RegionDecomposition rd = compute_regions(g);
    GammaGraph gg = gamma_graph(g, rd);
    CHECK(gg.vertices.size() == 2);

    RouteResult r = gfr_route(g);
    CHECK(r.outcome == RouteOutcome::Delivered);
    CHECK(r.ntbw_visits >= 1);
    CHECK(r.locality_violations == 0);
    // the visited NTBW sequence is made of oracle NTBWs
    for (const std::string& key : r.ntbw_keys) {
        bool is_ntbw = false;
        for (int w : gg.vertices) is_ntbw = is_ntbw || g.walks[static_cast<size_t>(w)].key == key;
        CHECK(is_ntbw);
    }

    // classic fr also happens to deliver here (gamma's last crossing leads
    // straight in); the trap instance in the instance kit defeats it
    RouteResult fr = classic_fr(g);
    CHECK((fr.outcome == RouteOutcome::Delivered ||
           fr.outcome == RouteOutcome::FailedLoopDetected));
}

TEST_CASE("memory accounting ceiling") {
    EmbeddedGraph g = torus_cycle();
    RouteResult r = gfr_route(g);
    // C * (g+1) * log2(n*d + 2) with C = 32
    double bound = 32.0 * (g.genus() + 1) *
                   std::log2(static_cast<double>(g.node_count()) * g.crossing_bound + 2);
    CHECK(static_cast<double>(r.peak_memory_bits) <= bound);
}

TEST_CASE("step budget failure is reported, not thrown") {
    EmbeddedGraph g = plane_triangle();
    RouteResult r = gfr_route(g, 1);
    CHECK(r.outcome == RouteOutcome::FailedBudgetExceeded);
}

TEST_CASE("trace log is non-empty, sequential and phase-tagged") {
    EmbeddedGraph g = torus_cycle();
    RouteResult r = gfr_route(g);
    REQUIRE(!r.trace.empty());
    for (size_t i = 0; i < r.trace.size(); ++i) {
        CHECK(r.trace[i].step == static_cast<long long>(i + 1));
        CHECK(r.trace[i].node >= 0);
    }
    CHECK(r.trace.size() == static_cast<size_t>(r.traversal_count));
}

TEST_CASE("classic fr reports budget exhaustion as an outcome") {
    EmbeddedGraph g = trap_instance();
    RouteResult r = classic_fr(g, 3);
    CHECK(r.outcome == RouteOutcome::FailedBudgetExceeded);
}
