// Acceptance suite: builds a deterministic corpus across genus 0..4 and
// node counts 5..200 and checks every criterion end to end, printing one
// line per criterion.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gfr/agent.hpp>
#include <gfr/instance.hpp>
#include <gfr/oracle.hpp>
#include <gfr/svg.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <set>
#include <vector>

using namespace gfr;

namespace {

struct CorpusEntry {
    int genus;
    int n;
    uint64_t seed;
    InstanceFile file;
    std::unique_ptr<EmbeddedGraph> graph;
    std::unique_ptr<RegionDecomposition> regions;
    std::unique_ptr<GammaGraph> gamma;
    RouteResult route;
};

struct Corpus {
    std::vector<CorpusEntry> entries;
    double build_and_route_seconds = 0;
};

Corpus& corpus() {
    static Corpus c = [] {
        Corpus out;
        auto t0 = std::chrono::steady_clock::now();
        std::vector<int> sizes = {5, 8, 12, 18, 25, 34, 45, 60, 80, 105};
        for (int g = 0; g <= 4; ++g) {
            for (int n : sizes)
                for (uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull, 6ull, 7ull, 8ull, 9ull, 10ull}) {
                    CorpusEntry e;
                    e.genus = g;
                    e.n = n;
                    e.seed = seed + 100ull * static_cast<uint64_t>(g) + static_cast<uint64_t>(n);
                    e.file = random_instance(g, n, e.seed);
                    out.entries.push_back(std::move(e));
                }
            for (int n : {140, 200}) {
                CorpusEntry e;
                e.genus = g;
                e.n = n;
                e.seed = 900ull + static_cast<uint64_t>(g) + static_cast<uint64_t>(n);
                e.file = random_instance(g, n, e.seed);
                out.entries.push_back(std::move(e));
            }
        }
        for (CorpusEntry& e : out.entries) {
            e.graph = std::make_unique<EmbeddedGraph>(e.file.build());
            e.route = gfr_route(*e.graph, -1, false);
            e.regions = std::make_unique<RegionDecomposition>(compute_regions(*e.graph));
            e.gamma = std::make_unique<GammaGraph>(gamma_graph(*e.graph, *e.regions));
        }
        auto t1 = std::chrono::steady_clock::now();
        out.build_and_route_seconds = std::chrono::duration<double>(t1 - t0).count();
        return out;
    }();
    return c;
}

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("CRITERION %d: %s - %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
}

}  // namespace

TEST_CASE("criterion 1: delivery on the whole corpus within the time budget") {
    Corpus& c = corpus();
    int delivered = 0;
    for (const CorpusEntry& e : c.entries)
        if (e.route.outcome == RouteOutcome::Delivered) ++delivered;
    bool size_ok = c.entries.size() >= 500;
    bool all = delivered == static_cast<int>(c.entries.size());
    bool time_ok = c.build_and_route_seconds < 300.0;
    char buf[200];
    std::snprintf(buf, sizeof buf, "%d/%zu delivered, corpus built+routed+checked in %.1f s",
                  delivered, c.entries.size(), c.build_and_route_seconds);
    report(1, size_ok && all && time_ok, buf);
    CHECK(size_ok);
    CHECK(all);
    CHECK(time_ok);
}

TEST_CASE("criterion 2: |Gamma| <= 2g and the counting bounds, no exceptions") {
    Corpus& c = corpus();
    int violations = 0;
    for (const CorpusEntry& e : c.entries) {
        PropositionReport rep = check_proposition(*e.graph, *e.regions, *e.gamma);
        int N = rep.ntbw_count, k = rep.nontrivial_regions, g = e.genus;
        if (N > 2 * g || N - k > g || k > g) ++violations;
    }
    report(2, violations == 0,
           "instances=" + std::to_string(c.entries.size()) +
               " violations=" + std::to_string(violations));
    CHECK(violations == 0);
}

TEST_CASE("criterion 3: proposition path and gfr visits form a Gamma walk") {
    Corpus& c = corpus();
    int path_fail = 0, walk_fail = 0, triple_fail = 0, with_ntbw = 0;
    for (const CorpusEntry& e : c.entries) {
        const GammaGraph& gg = *e.gamma;
        if (gg.first_gamma >= 0) {
            ++with_ntbw;
            if (gg.last_gamma < 0 || !gg.connected(gg.first_gamma, gg.last_gamma, false))
                ++path_fail;
        }
        // visited sequence: consecutive distinct stops must be Gamma-adjacent
        std::vector<int> walk_ids;
        for (const std::string& key : e.route.ntbw_keys) {
            int found = -1;
            for (int w : gg.vertices)
                if (e.graph->walks[static_cast<size_t>(w)].key == key) found = w;
            if (found < 0) { ++walk_fail; break; }
            walk_ids.push_back(found);
        }
        for (size_t i = 0; i + 1 < walk_ids.size(); ++i) {
            int a = walk_ids[i], b = walk_ids[i + 1];
            if (a == b) continue;  // stationary
            bool adjacent = false;
            for (const GammaEdge& ge : gg.edges)
                adjacent = adjacent || (ge.walk_a == a && ge.walk_b == b) ||
                           (ge.walk_a == b && ge.walk_b == a);
            if (!adjacent) { ++walk_fail; break; }
        }
        // every retained triple names an oracle component's endpoints
        const EmbeddedGraph& g = *e.graph;
        for (size_t i = 1; i < e.route.triples.size(); ++i) {  // 0 is the source leg
            const Triple& tr = e.route.triples[i];
            int fwd = tr.curve <= 2 * g.genus() ? tr.curve : tr.curve - 2 * g.genus();
            Rat t_start = tr.t_from, t_end = tr.t_to;
            if (tr.curve != fwd) {
                t_start = g.curves.at(fwd).reverse_t(tr.t_to);
                t_end = g.curves.at(fwd).reverse_t(tr.t_from);
            }
            bool found = false;
            for (const GammaEdge& ge : gg.edges)
                found = found ||
                        (ge.curve == fwd && ge.t_start == t_start && ge.t_end == t_end);
            if (!found) { ++triple_fail; break; }
        }
    }
    report(3, path_fail == 0 && walk_fail == 0 && triple_fail == 0,
           "instances with NTBWs=" + std::to_string(with_ntbw) + " path failures=" +
               std::to_string(path_fail) + " walk failures=" + std::to_string(walk_fail) +
               " triple mismatches=" + std::to_string(triple_fail));
    CHECK(path_fail == 0);
    CHECK(walk_fail == 0);
    CHECK(triple_fail == 0);
}

TEST_CASE("criterion 4: msfr follows every oracle component and reverses exactly") {
    Corpus& c = corpus();
    long long components = 0, mismatches = 0, reached_t = 0;
    for (const CorpusEntry& e : c.entries) {
        const EmbeddedGraph& g = *e.graph;
        for (const GammaEdge& ge : e.gamma->edges) {
            ++components;
            // locate the start crossing
            CrossRef entry;
            for (size_t ed = 0; ed < g.edges.size() && !entry.valid(); ++ed)
                for (size_t sl = 0; sl < g.edges[ed].crossings.size(); ++sl) {
                    const Crossing& cr = g.edges[ed].crossings[sl];
                    if (cr.curve == ge.curve && cr.t == ge.t_start) {
                        entry = CrossRef{static_cast<int>(ed), static_cast<int>(sl)};
                        break;
                    }
                }
            if (!entry.valid()) { ++mismatches; continue; }
            AgentRuntime rt(g, default_step_budget(g), false);
            rt.place_at(g.edges[static_cast<size_t>(entry.edge)].u);
            MsfrStop stop = msfr_leg(g, rt, ge.curve, entry);
            if (stop.reached_destination) { ++reached_t; continue; }
            if (stop.walk_key != g.walks[static_cast<size_t>(ge.walk_b)].key ||
                stop.triple.t_to != ge.t_end) {
                ++mismatches;
                continue;
            }
            MsfrStop back = reverse_msfr(g, rt, stop.triple, stop.arrival_cursor);
            if (back.reached_destination) { ++reached_t; continue; }
            Rat want_t = ge.curve == 0 ? Rat(1) - ge.t_start
                                       : g.curves.at(g.curves.reversed_index(ge.curve))
                                             .reverse_t(ge.t_start);
            if (back.walk_key != g.walks[static_cast<size_t>(ge.walk_a)].key ||
                back.triple.t_to != want_t)
                ++mismatches;
        }
    }
    report(4, mismatches == 0,
           "components=" + std::to_string(components) + " mismatches=" +
               std::to_string(mismatches) + " cut short by T=" + std::to_string(reached_t));
    CHECK(mismatches == 0);
}

TEST_CASE("criterion 5: traversal and memory stay under the documented bounds") {
    Corpus& c = corpus();
    int over_steps = 0, over_bits = 0, over_triples = 0, locality_bad = 0;
    double max_ratio = 0;
    for (const CorpusEntry& e : c.entries) {
        long long budget = default_step_budget(*e.graph);
        if (e.route.traversal_count > budget) ++over_steps;
        if (e.route.triples_recorded > 4 * e.genus) ++over_triples;
        if (e.route.locality_violations != 0) ++locality_bad;
        double denom = static_cast<double>(e.genus + 1) * (e.genus + 1) * e.n * e.n * 16.0 * 16.0;
        max_ratio = std::max(max_ratio, static_cast<double>(e.route.traversal_count) / denom);
        double bits_bound = kMemoryBoundC * (e.genus + 1) *
                            std::log2(static_cast<double>(e.n) * e.graph->crossing_bound + 2.0);
        if (static_cast<double>(e.route.peak_memory_bits) > bits_bound) ++over_bits;
    }
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "max traversals/((g+1)^2 n^2 d^2)=%.6f <= 64; memory C=%.0f; over=%d/%d",
                  max_ratio, kMemoryBoundC, over_steps, over_bits);
    report(5, over_steps == 0 && over_bits == 0 && over_triples == 0 && locality_bad == 0 &&
                  max_ratio <= 64.0,
           buf);
    CHECK(over_steps == 0);
    CHECK(over_bits == 0);
    CHECK(over_triples == 0);
    CHECK(locality_bad == 0);
    CHECK(max_ratio <= 64.0);
}

TEST_CASE("criterion 6: classic FR loops on the trap, gfr delivers") {
    InstanceFile trap = fr_trap();
    EmbeddedGraph g = trap.build();
    RouteResult fr = classic_fr(g);
    RouteResult gr = gfr_route(g);
    bool pass = fr.outcome == RouteOutcome::FailedLoopDetected &&
                gr.outcome == RouteOutcome::Delivered;
    report(6, pass,
           std::string("fr=") + route_outcome_name(fr.outcome) + " gfr=" +
               route_outcome_name(gr.outcome));
    CHECK(fr.outcome == RouteOutcome::FailedLoopDetected);
    CHECK(gr.outcome == RouteOutcome::Delivered);
}

TEST_CASE("criterion 7: genus-0 degeneration on 100 planar instances") {
    int checked = 0, trace_mismatch = 0, fr_fail = 0;
    for (uint64_t seed = 1; checked < 100; ++seed) {
        int n = 5 + static_cast<int>(seed % 20);
        InstanceFile inst;
        try {
            inst = random_instance(0, n, 5000 + seed);
        } catch (const gfr_error&) {
            continue;
        }
        EmbeddedGraph g = inst.build();
        RouteResult a = gfr_route(g);
        RouteResult b = msfr_route(g);
        RouteResult f = classic_fr(g);
        ++checked;
        bool same = a.outcome == RouteOutcome::Delivered &&
                    b.outcome == RouteOutcome::Delivered &&
                    a.trace.size() == b.trace.size();
        if (same)
            for (size_t i = 0; i < a.trace.size(); ++i)
                same = same && a.trace[i].edge == b.trace[i].edge;
        if (!same) ++trace_mismatch;
        if (f.outcome != RouteOutcome::Delivered) ++fr_fail;
    }
    report(7, trace_mismatch == 0 && fr_fail == 0,
           "planar instances=" + std::to_string(checked) + " trace mismatches=" +
               std::to_string(trace_mismatch) + " fr failures=" + std::to_string(fr_fail));
    CHECK(checked == 100);
    CHECK(trace_mismatch == 0);
    CHECK(fr_fail == 0);
}

TEST_CASE("criterion 8: intersection form rank, bilinearity, homology, capping") {
    bool pass = true;
    std::string detail;
    for (int gen : {1, 2, 3}) {
        InstanceFile inst = random_instance(gen, 10, 77 + static_cast<uint64_t>(gen));
        EmbeddedGraph g = inst.build();
        RegionDecomposition rd = compute_regions(g);
        FormReport fr = check_form_properties(g, rd, 100, 99);
        if (!fr.pass || fr.rank != 2 * gen) {
            pass = false;
            detail += " g=" + std::to_string(gen) + ":" + fr.detail;
        }
    }
    // 50 sampled non-null cycles for the capping identity
    int sampled = 0, capping_fail = 0;
    for (uint64_t seed = 1; sampled < 50 && seed < 400; ++seed) {
        int gen = 1 + static_cast<int>(seed % 3);
        InstanceFile inst;
        try {
            inst = random_instance(gen, 8 + static_cast<int>(seed % 10), 7000 + seed);
        } catch (const gfr_error&) {
            continue;
        }
        EmbeddedGraph g = inst.build();
        for (size_t w = 0; w < g.walks.size() && sampled < 50; ++w) {
            if (!g.walks[w].nonzero_homology()) continue;
            ++sampled;
            CappingReport cr = check_capping_identity(g, static_cast<int>(w));
            if (!cr.pass) ++capping_fail;
        }
    }
    pass = pass && sampled >= 50 && capping_fail == 0;
    report(8, pass,
           "ranks ok for g=1,2,3; capping cycles=" + std::to_string(sampled) + " failures=" +
               std::to_string(capping_fail) + detail);
    CHECK(pass);
}

TEST_CASE("criterion 9: Gamma* connects all boundary pairs of every region") {
    Corpus& c = corpus();
    int fails = 0, regions_checked = 0;
    for (const CorpusEntry& e : c.entries) {
        GammaStarReport rep = check_gamma_star(*e.graph, *e.regions, *e.gamma);
        regions_checked += rep.regions_checked;
        if (!rep.pass) ++fails;
    }
    report(9, fails == 0,
           "multi-boundary regions=" + std::to_string(regions_checked) + " failures=" +
               std::to_string(fails));
    CHECK(fails == 0);
}

TEST_CASE("criterion 10: byte-identical round trips and deterministic runs") {
    Corpus& c = corpus();
    int rt_fail = 0;
    for (size_t i = 0; i < c.entries.size(); i += 7) {
        const CorpusEntry& e = c.entries[i];
        std::string text = save_text(e.file);
        if (save_text(load_text(text)) != text) ++rt_fail;
    }
    // identical generation and identical traces
    InstanceFile a = random_instance(2, 20, 4242), b = random_instance(2, 20, 4242);
    bool gen_same = save_text(a) == save_text(b);
    EmbeddedGraph g1 = a.build(), g2 = b.build();
    RouteResult r1 = gfr_route(g1), r2 = gfr_route(g2);
    bool trace_same = r1.trace.size() == r2.trace.size() &&
                      r1.traversal_count == r2.traversal_count &&
                      r1.peak_memory_bits == r2.peak_memory_bits;
    if (trace_same)
        for (size_t i = 0; i < r1.trace.size(); ++i)
            trace_same = trace_same && r1.trace[i].edge == r2.trace[i].edge;
    // rendering and reports are byte-stable too
    RegionDecomposition rd1 = compute_regions(g1), rd2 = compute_regions(g2);
    bool svg_same = render_svg(g1, rd1) == render_svg(g2, rd2);
    report(10, rt_fail == 0 && gen_same && trace_same && svg_same,
           "round-trip failures=" + std::to_string(rt_fail) + " regen=" +
               (gen_same ? "same" : "differs") + " trace=" + (trace_same ? "same" : "differs") +
               " svg=" + (svg_same ? "same" : "differs"));
    CHECK(rt_fail == 0);
    CHECK(gen_same);
    CHECK(trace_same);
    CHECK(svg_same);
}
