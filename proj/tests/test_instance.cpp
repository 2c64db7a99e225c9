#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gfr/instance.hpp>
#include <gfr/oracle.hpp>

using namespace gfr;

TEST_CASE("save/load round-trips byte-identically") {
    InstanceFile a = fr_trap();
    std::string text = save_text(a);
    InstanceFile b = load_text(text);
    CHECK(save_text(b) == text);

    InstanceFile c = random_instance(1, 10, 42);
    std::string tc = save_text(c);
    CHECK(save_text(load_text(tc)) == tc);
}

TEST_CASE("parse errors carry line positions; version mismatch is its own error") {
    CHECK_THROWS_WITH_AS(load_text("gfr-instance 2\n"), doctest::Contains("VersionMismatch"),
                         gfr_error);
    CHECK_THROWS_WITH_AS(load_text("nonsense\n"), doctest::Contains("ParseError"), gfr_error);
    CHECK_THROWS_WITH_AS(load_text("gfr-instance 1\ngenus 0\nnode 0 1/1 zz\n"),
                         doctest::Contains("line 3"), gfr_error);
    CHECK_THROWS_WITH_AS(load_text("gfr-instance 1\ngenus 0\nnode 0 0/1 0/1\nnode 1 1/1 1/1\n"),
                         doctest::Contains("missing route"), gfr_error);
}

TEST_CASE("random instances are deterministic in (g, n, seed)") {
    InstanceFile a = random_instance(1, 16, 7);
    InstanceFile b = random_instance(1, 16, 7);
    CHECK(save_text(a) == save_text(b));
    InstanceFile c = random_instance(1, 16, 8);
    CHECK(save_text(a) != save_text(c));
}

TEST_CASE("generated instances validate and satisfy the oracle bounds") {
    for (int genus : {0, 1, 2}) {
        for (uint64_t seed : {1ull, 2ull}) {
            InstanceFile inst = random_instance(genus, 12, seed);
            EmbeddedGraph g = inst.build();
            CHECK(g.genus() == genus);
            CHECK(g.node_count() == 12);
            RegionDecomposition rd = compute_regions(g);
            GammaGraph gg = gamma_graph(g, rd);
            PropositionReport rep = check_proposition(g, rd, gg);
            CHECK(rep.pass);
        }
    }
}

TEST_CASE("minimal instance: two nodes one edge") {
    InstanceFile inst = random_instance(0, 2, 3);
    EmbeddedGraph g = inst.build();
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() >= 1);
    RouteResult r = gfr_route(g);
    CHECK(r.outcome == RouteOutcome::Delivered);
}

TEST_CASE("fr_trap defeats classic face routing but not the general search") {
    InstanceFile inst = fr_trap();
    EmbeddedGraph g = inst.build();  // validates
    RouteResult fr = classic_fr(g);
    CHECK(fr.outcome == RouteOutcome::FailedLoopDetected);
    RouteResult gr = gfr_route(g);
    CHECK(gr.outcome == RouteOutcome::Delivered);
}

TEST_CASE("fig2-like genus-4 instance") {
    InstanceFile inst = fig2_instance();
    EmbeddedGraph g = inst.build();
    CHECK(g.genus() == 4);
    RegionDecomposition rd = compute_regions(g);
    GammaGraph gg = gamma_graph(g, rd);
    CHECK(static_cast<int>(gg.vertices.size()) <= 8);
    CHECK(gg.vertices.size() >= 2);
    RouteResult r = gfr_route(g);
    CHECK(r.outcome == RouteOutcome::Delivered);
    CHECK(r.ntbw_visits >= 2);
    // visited NTBW sequence stays within the oracle's vertex set
    for (const std::string& key : r.ntbw_keys) {
        bool known = false;
        for (int w : gg.vertices)
            known = known || g.walks[static_cast<size_t>(w)].key == key;
        CHECK(known);
    }
}

TEST_CASE("handle edges give some generated torus instances non-trivial walks") {
    int with_ntbw = 0;
    for (uint64_t seed = 1; seed <= 6; ++seed) {
        InstanceFile inst = random_instance(1, 14, seed);
        EmbeddedGraph g = inst.build();
        RegionDecomposition rd = compute_regions(g);
        if (!gamma_graph(g, rd).vertices.empty()) ++with_ntbw;
    }
    CHECK(with_ntbw >= 3);
}
