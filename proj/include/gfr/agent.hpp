// The locality-enforced agent runtime: modified slow face routing along a
// reference curve, its reversal, the generalized face-routing search over
// the virtual multigraph of non-trivial border walks, and classic face
// routing for comparison.
//
// The agent moves node to node through AgentRuntime, which asserts that
// every query touches only the current node's neighborhood, counts every
// directed-edge traversal against the step budget, and accounts the
// transported memory in bits.  Global constants (genus, the reference
// curve table, gamma's geometry) are instance data the model hands every
// node, so reading them is not a locality violation.

#ifndef GFR_AGENT_HPP
#define GFR_AGENT_HPP

#include <gfr/embedding.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gfr {

enum class Phase { Msfr, Dfs, Reverse };

inline const char* phase_name(Phase p) {
    switch (p) {
        case Phase::Msfr: return "MSFR";
        case Phase::Dfs: return "DFS";
        case Phase::Reverse: return "REVERSE";
    }
    return "?";
}

struct TraceStep {
    long long step = 0;
    DirEdge edge = -1;
    int node = -1;  // node reached by this traversal
    Phase phase = Phase::Msfr;
    std::vector<int> counters;
};

// Transported-memory accounting.  t-values are charged at their crossing
// rank on the curve, not at their rational bit length.
struct MemoryMeter {
    int genus = 0;
    int d_bound = 16;
    int edge_count = 0;
    int max_curve_crossings = 0;  // X
    int triples = 0;
    long long peak_bits = 0;

    static constexpr int kRegisterCount = 6;

    static int ceil_log2(long long v) {
        int b = 0;
        long long p = 1;
        while (p < v) { p <<= 1; ++b; }
        return b;
    }
    long long current_bits() const {
        long long idx_bits = ceil_log2(4LL * genus + 1 + 1);
        long long rank_bits = ceil_log2(static_cast<long long>(max_curve_crossings) + 1);
        long long counter_bits = ceil_log2(2LL * d_bound * edge_count + 1);
        long long triple_bits = idx_bits + 2 * rank_bits;
        long long reg_bits =
            kRegisterCount * (idx_bits + 2 * ceil_log2(2LL * d_bound * edge_count + 2));
        return triples * triple_bits + 2LL * genus * counter_bits + reg_bits;
    }
    void set_triples(int n) {
        triples = n;
        peak_bits = std::max(peak_bits, current_bits());
    }
};

struct Triple {
    int curve = 0;  // index in L (reversed basis curves carry their own index)
    Rat t_from;     // t where the leg was launched
    Rat t_to;       // t where the leg stopped
};

class AgentRuntime {
public:
    AgentRuntime(const EmbeddedGraph& g, long long budget, bool collect_trace = true)
        : g_(g), budget_(budget), collect_trace_(collect_trace) {
        meter.genus = g.genus();
        meter.d_bound = g.crossing_bound;
        meter.edge_count = g.edge_count();
        meter.max_curve_crossings = g.max_crossings_on_a_curve();
        meter.set_triples(0);
    }

    MemoryMeter meter;
    Phase phase = Phase::Msfr;
    std::vector<int> live_counters;

    int current() const { return cur_; }
    void place_at(int node) { cur_ = node; }
    long long traversals() const { return steps_; }
    const std::vector<TraceStep>& trace() const { return trace_; }
    long long out_of_neighborhood_queries() const { return bad_queries_; }
    long long queries() const { return queries_; }

    // Clockwise edge ends at the current node.
    const std::vector<EdgeEnd>& local_rotation() {
        note_query(cur_);
        return g_.rotation[static_cast<size_t>(cur_)];
    }
    const Pt& local_pos() {
        note_query(cur_);
        return g_.nodes[static_cast<size_t>(cur_)].pos;
    }
    // Edge data readable while standing at one of its endpoints.
    const Edge& incident_edge(int edge) {
        const Edge& e = g_.edges[static_cast<size_t>(edge)];
        ++queries_;
        if (e.u != cur_ && e.v != cur_) ++bad_queries_;
        return e;
    }
    Pt end_dir_at_current(const EdgeEnd& ee) {
        note_query(cur_);
        return g_.end_dir(ee);
    }

    // Move along a directed edge whose tail is the current node; mid-edge
    // departures resume on the far side of a crossing of an incident edge.
    void move(DirEdge d, bool from_mid = false) {
        if (from_mid ? (g_.tail(d) != cur_ && g_.head(d) != cur_) : (g_.tail(d) != cur_))
            ++bad_queries_;
        if (++steps_ > budget_) throw gfr_error(Errc::StepBudgetExceeded, "step budget");
        cur_ = g_.head(d);
        if (collect_trace_) {
            TraceStep ts;
            ts.step = steps_;
            ts.edge = d;
            ts.node = cur_;
            ts.phase = phase;
            ts.counters = live_counters;
            trace_.push_back(std::move(ts));
        }
    }

    // The next edge clockwise from the incoming edge, from local data only.
    DirEdge right_hand_next_local(DirEdge incoming) {
        const std::vector<EdgeEnd>& rot = local_rotation();
        EdgeEnd back{de_edge(incoming), !de_forward(incoming)};
        for (size_t i = 0; i < rot.size(); ++i)
            if (rot[i] == back) {
                const EdgeEnd& nxt = rot[(i + 1) % rot.size()];
                return de_make(nxt.edge, nxt.at_u);
            }
        throw gfr_error(Errc::InvalidInstance, "incoming end not found at node");
    }

private:
    void note_query(int node) {
        ++queries_;
        if (node != cur_) ++bad_queries_;
    }

    const EmbeddedGraph& g_;
    long long budget_;
    bool collect_trace_;
    long long steps_ = 0;
    long long queries_ = 0;
    long long bad_queries_ = 0;
    int cur_ = -1;
    std::vector<TraceStep> trace_;
};

// Position on the current border walk: a directed edge, and for mid-edge
// entries the chain position of the entry crossing.
struct WalkCursor {
    DirEdge d = -1;
    bool mid = false;
    ChainPos pos;  // meaningful when mid
};

struct CrossRef {
    int edge = -1;
    int slot = -1;
    bool valid() const { return edge >= 0; }
};

namespace agent_detail {

// Crossing entries of a directed edge in traversal order, grouped so that
// entries at one geometric point keep ascending curve index.
template <typename Fn>
void scan_edge_crossings(const Edge& e, bool forward, const ChainPos* from_excl,
                         const ChainPos* to_incl, Fn&& fn) {
    const auto& cs = e.crossings;
    auto in_window = [&](const ChainPos& p) {
        if (forward) {
            if (from_excl && !(*from_excl < p)) return false;
            if (to_incl && (*to_incl < p)) return false;
        } else {
            if (from_excl && !(p < *from_excl)) return false;
            if (to_incl && (p < *to_incl)) return false;
        }
        return true;
    };
    if (forward) {
        for (size_t i = 0; i < cs.size(); ++i)
            if (in_window(cs[i].pos)) fn(static_cast<int>(i));
    } else {
        // walk groups of equal position from the back, emitting each group
        // in ascending index order
        size_t i = cs.size();
        while (i > 0) {
            size_t j = i;
            while (j > 0 && cs[j - 1].pos == cs[i - 1].pos) --j;
            for (size_t k = j; k < i; ++k)
                if (in_window(cs[k].pos)) fn(static_cast<int>(k));
            i = j;
        }
    }
}

}  // namespace agent_detail

// One full cycle of the current border walk starting at `cur`.  on_cross is
// invoked for every crossing entry in walk order; on_node for every node
// arrival and may stop the scan (destination found).  Returns true when the
// scan was aborted by on_node.
template <typename OnEdge, typename OnCross, typename OnNode>
bool walk_once(AgentRuntime& rt, const WalkCursor& cur, OnEdge&& on_edge, OnCross&& on_cross,
               OnNode&& on_node) {
    DirEdge d = cur.d;
    bool first = true;
    while (true) {
        on_edge(d);
        const Edge& e = rt.incident_edge(de_edge(d));
        bool fwd = de_forward(d);
        const ChainPos* from = first && cur.mid ? &cur.pos : nullptr;
        agent_detail::scan_edge_crossings(e, fwd, from, nullptr,
                                          [&](int slot) { on_cross(d, slot); });
        rt.move(d, first && cur.mid);
        if (on_node(rt.current())) return true;
        DirEdge nxt = rt.right_hand_next_local(d);
        if (nxt == cur.d) {
            if (cur.mid) {
                const Edge& e2 = rt.incident_edge(de_edge(nxt));
                agent_detail::scan_edge_crossings(e2, de_forward(nxt), nullptr, &cur.pos,
                                                  [&](int slot) { on_cross(nxt, slot); });
            }
            return false;
        }
        d = nxt;
        first = false;
    }
}

// Walk along the current walk (from cursor) to just before the target
// crossing, moving the agent physically; returns the cursor standing at the
// target crossing on its edge.
inline WalkCursor walk_to_crossing(AgentRuntime& rt, const WalkCursor& cur, DirEdge target_d,
                                   const ChainPos& target_pos) {
    DirEdge d = cur.d;
    bool first = true;
    while (d != target_d) {
        rt.move(d, first && cur.mid);
        first = false;
        d = rt.right_hand_next_local(d);
        if (d == cur.d && d != target_d)
            throw gfr_error(Errc::InvalidInstance, "target crossing left the walk");
    }
    WalkCursor out;
    out.d = target_d;
    out.mid = true;
    out.pos = target_pos;
    return out;
}

struct MsfrStop {
    bool reached_destination = false;
    Pt stop_point;  // arrival crossing locus (source position for a
                    // zero-hop start)
    // stop data when a non-trivial walk was reached
    Triple triple;
    CrossRef arrival;        // entry crossing of the stop walk (invalid for a
                             // zero-hop start-at-source stop)
    WalkCursor arrival_cursor;
    std::string walk_key;    // canonical key, assembled while traversing
    std::vector<int> counters;
};

namespace agent_detail {

struct LegState {
    int curve;        // index in L, or CurveTable::kReversedGamma
    int public_curve; // index recorded in triples (gamma legs record 0)
    Rat t_leg_start;
    Rat t0;
    WalkCursor cursor;
    bool have_entry = false;
    CrossRef entry;
};

inline Rat crossing_t(const EmbeddedGraph&, const Crossing& c, int curve) {
    if (curve == CurveTable::kReversedGamma) return Rat(1) - c.t;
    return c.t;
}
inline int crossing_sign(const Crossing& c, bool edge_forward, int curve) {
    int s = c.sign * (edge_forward ? 1 : -1);
    return curve == CurveTable::kReversedGamma ? -s : s;
}
inline bool crossing_matches_curve(const Crossing& c, int curve) {
    if (curve == CurveTable::kReversedGamma) return c.curve == 0;
    return c.curve == curve;
}

}  // namespace agent_detail

// Modified slow face routing along one curve of L.  Starting data is either
// a node start (the walk determined by the first exit edge clockwise from
// the curve at the source) or an entry crossing; the walk is traversed once
// accumulating the homology counters and hunting the next-greater crossing
// in the shifted ordering, stopping at the first walk with a nonzero
// counter or at the destination.
inline MsfrStop msfr_run(const EmbeddedGraph& g, AgentRuntime& rt,
                         agent_detail::LegState leg, int destination) {
    using namespace agent_detail;
    int gen = g.genus();
    MsfrStop out;
    while (true) {
        std::vector<int> sums(static_cast<size_t>(2 * gen), 0);
        bool have_cand = false;
        Rat cand_shift;
        DirEdge cand_d = -1;
        int cand_slot = -1;
        std::vector<DirEdge> key_seq;
        rt.live_counters.assign(static_cast<size_t>(2 * gen), 0);
        bool aborted = walk_once(
            rt, leg.cursor, [&](DirEdge d) { key_seq.push_back(d); },
            [&](DirEdge d, int slot) {
                const Crossing& c =
                    g.edges[static_cast<size_t>(de_edge(d))].crossings[static_cast<size_t>(slot)];
                if (c.curve >= 1 && c.curve <= 2 * gen) {
                    sums[static_cast<size_t>(c.curve - 1)] +=
                        crossing_sign(c, de_forward(d), c.curve);
                    rt.live_counters = sums;
                }
                if (crossing_matches_curve(c, leg.curve)) {
                    Rat t = crossing_t(g, c, leg.curve);
                    if (t == leg.t0 && leg.have_entry) return;  // the entry itself
                    Rat shift = (t - leg.t0).mod1();
                    if (shift.is_zero()) return;  // the shift origin
                    if (!have_cand || shift < cand_shift) {
                        have_cand = true;
                        cand_shift = shift;
                        cand_d = d;
                        cand_slot = slot;
                    }
                }
            },
            [&](int node) { return node == destination; });
        if (aborted) {
            out.reached_destination = true;
            return out;
        }
        bool nonzero = false;
        for (int v : sums) nonzero = nonzero || v != 0;
        if (nonzero) {
            out.triple.curve = leg.public_curve;
            out.triple.t_from = leg.t_leg_start;
            out.triple.t_to = leg.t0;
            out.arrival = leg.entry;
            if (leg.have_entry)
                out.stop_point = g.edges[static_cast<size_t>(leg.entry.edge)]
                                     .crossings[static_cast<size_t>(leg.entry.slot)]
                                     .point;
            else
                out.stop_point = g.curves.at(0).poly.pts.front();
            out.arrival_cursor = leg.cursor;
            out.walk_key = detail::least_rotation_key(key_seq);
            out.counters = sums;
            return out;
        }
        if (!have_cand)
            throw gfr_error(Errc::NoFurtherCrossing,
                            "trivial walk without a further crossing");
        const Crossing& cand = g.edges[static_cast<size_t>(de_edge(cand_d))]
                                   .crossings[static_cast<size_t>(cand_slot)];
        WalkCursor at = walk_to_crossing(rt, leg.cursor, cand_d, cand.pos);
        // switch to the adjacent border walk across this edge
        leg.cursor.d = de_reverse(at.d);
        leg.cursor.mid = true;
        leg.cursor.pos = cand.pos;
        leg.t0 = crossing_t(g, cand, leg.curve);
        leg.have_entry = true;
        leg.entry = CrossRef{de_edge(cand_d), cand_slot};
    }
}

// The start rule at a curve endpoint: the walk determined by the first exit
// edge clockwise from the curve's departure direction.
inline WalkCursor source_start_cursor(const EmbeddedGraph&, AgentRuntime& rt, const Pt& dir) {
    const std::vector<EdgeEnd>& rot = rt.local_rotation();
    if (rot.empty()) throw gfr_error(Errc::InvalidInstance, "source has no edges");
    size_t best = 0;
    for (size_t i = 1; i < rot.size(); ++i)
        if (ccw_from_base_less(dir, rt.end_dir_at_current(rot[best]),
                               rt.end_dir_at_current(rot[i])))
            best = i;
    WalkCursor c;
    c.d = de_make(rot[best].edge, rot[best].at_u);
    c.mid = false;
    return c;
}

// Leg state for a launch at a known crossing: the first walk traversed is
// the one bounding the region the curve enters moving forward.
inline agent_detail::LegState leg_at_crossing(const EmbeddedGraph& g, int curve,
                                              const CrossRef& entry) {
    using namespace agent_detail;
    const Crossing& c =
        g.edges[static_cast<size_t>(entry.edge)].crossings[static_cast<size_t>(entry.slot)];
    LegState leg;
    leg.curve = curve;
    leg.public_curve = curve == CurveTable::kReversedGamma ? 0 : curve;
    leg.t0 = crossing_t(g, c, curve);
    leg.t_leg_start = leg.t0;
    leg.have_entry = true;
    leg.entry = entry;
    // the curve enters the left side of the directed version with crossing
    // sign -1
    int s_fwd = crossing_sign(c, true, curve);
    leg.cursor.d = de_make(entry.edge, s_fwd == -1);
    leg.cursor.mid = true;
    leg.cursor.pos = c.pos;
    return leg;
}

enum class RouteOutcome { Delivered, Unreachable, FailedLoopDetected, FailedBudgetExceeded };

inline const char* route_outcome_name(RouteOutcome o) {
    switch (o) {
        case RouteOutcome::Delivered: return "Delivered";
        case RouteOutcome::Unreachable: return "Unreachable";
        case RouteOutcome::FailedLoopDetected: return "Failed(LoopDetected)";
        case RouteOutcome::FailedBudgetExceeded: return "Failed(BudgetExceeded)";
    }
    return "?";
}

struct RouteResult {
    RouteOutcome outcome = RouteOutcome::Unreachable;
    long long traversal_count = 0;
    long long peak_memory_bits = 0;
    int ntbw_visits = 0;      // distinct non-trivial walks met
    int triples_recorded = 0; // markers kept by the search
    std::vector<std::string> ntbw_keys;  // visit log, in stop order
    std::vector<Triple> triples;         // the retained markers
    std::vector<Pt> stop_points;         // triple locations, for rendering
    std::vector<TraceStep> trace;
    long long locality_violations = 0;
    std::string note;
};

// Documented transported-memory ceiling: peak bits <= C (g+1) log2(n d + 2).
inline constexpr double kMemoryBoundC = 32.0;

inline long long default_step_budget(const EmbeddedGraph& g) {
    long long gg = g.genus() + 1;
    long long nn = g.node_count() + 1;
    long long dd = g.crossing_bound;
    return 64LL * gg * gg * nn * nn * dd * dd;
}

// MSFR along gamma from the source node (step 1 of the search).
inline MsfrStop msfr_from_source(const EmbeddedGraph& g, AgentRuntime& rt) {
    const Polyline& gp = g.curves.at(0).poly;
    rt.place_at(g.src);
    if (g.src == g.dst) {
        MsfrStop s;
        s.reached_destination = true;
        return s;
    }
    agent_detail::LegState leg;
    leg.curve = 0;
    leg.public_curve = 0;
    leg.t0 = Rat(0);
    leg.t_leg_start = Rat(0);
    leg.have_entry = false;
    leg.cursor = source_start_cursor(g, rt, gp.pts[1] - gp.pts[0]);
    return msfr_run(g, rt, leg, g.dst);
}

// Public single-leg MSFR from a known crossing (test and search surface).
inline MsfrStop msfr_leg(const EmbeddedGraph& g, AgentRuntime& rt, int curve,
                         const CrossRef& entry) {
    return msfr_run(g, rt, leg_at_crossing(g, curve, entry), g.dst);
}

// Reverse MSFR for a recorded triple: run on the oppositely oriented curve
// from the reversed arrival t-value.  The entry crossing is located on the
// walk the agent currently stands on by one scan.
inline MsfrStop reverse_msfr(const EmbeddedGraph& g, AgentRuntime& rt, const Triple& tr,
                             const WalkCursor& here) {
    int rev = g.curves.reversed_index(tr.curve);
    // the reversed parametrization of the arrival point
    Rat want = rev == CurveTable::kReversedGamma ? Rat(1) - tr.t_to
                                                 : g.curves.at(rev).reverse_t(tr.t_to);
    // locate the crossing of the reversed curve at the reversed t on the
    // current walk, then travel to it
    CrossRef found;
    DirEdge found_d = -1;
    Phase saved = rt.phase;
    rt.phase = Phase::Reverse;
    walk_once(
        rt, here, [](DirEdge) {},
        [&](DirEdge d, int slot) {
            const Crossing& c =
                g.edges[static_cast<size_t>(de_edge(d))].crossings[static_cast<size_t>(slot)];
            if (!found.valid() && agent_detail::crossing_matches_curve(c, rev) &&
                agent_detail::crossing_t(g, c, rev) == want) {
                found = CrossRef{de_edge(d), slot};
                found_d = d;
            }
        },
        [&](int) { return false; });
    if (!found.valid())
        throw gfr_error(Errc::InvalidInstance, "reverse entry crossing not on this walk");
    const Crossing& fc =
        g.edges[static_cast<size_t>(found.edge)].crossings[static_cast<size_t>(found.slot)];
    WalkCursor start;
    start.d = here.d;
    start.mid = false;
    walk_to_crossing(rt, start, found_d, fc.pos);
    MsfrStop out = msfr_leg(g, rt, rev, found);
    rt.phase = saved;
    return out;
}

namespace agent_detail {

struct SearchState {
    std::vector<Triple> markers;  // first-arrival triples of visited walks
    DirEdge root_edge = -1;       // S -> first-clockwise-from-gamma
    int ntbw_visits = 0;
    std::vector<std::string> visit_keys;
    std::vector<Pt> visit_points;
};

// Scan the walk at `cur` once and decide whether it was visited before:
// a crossing matches a recorded triple, or the walk contains the root's
// defining directed edge.
inline bool walk_already_visited(const EmbeddedGraph& g, AgentRuntime& rt, const WalkCursor& cur,
                                 const SearchState& st) {
    bool hit = false;
    walk_once(
        rt, cur, [&](DirEdge d) { hit = hit || d == st.root_edge; },
        [&](DirEdge d, int slot) {
            if (hit) return;
            const Crossing& c =
                g.edges[static_cast<size_t>(de_edge(d))].crossings[static_cast<size_t>(slot)];
            for (const Triple& m : st.markers)
                if (c.curve == m.curve && (c.t == m.t_from || c.t == m.t_to)) {
                    hit = true;
                    return;
                }
        },
        [&](int) { return false; });
    return hit;
}

struct Venture {
    int curve = 0;
    CrossRef ref;
    DirEdge at = -1;
};

// Venture n (0-based) at the walk under `origin`: the n-th crossing entry
// met walking once from the origin, over every curve of L.
inline std::optional<Venture> nth_venture(const EmbeddedGraph& g, AgentRuntime& rt,
                                          const WalkCursor& origin, int n) {
    std::optional<Venture> out;
    int seen = 0;
    walk_once(
        rt, origin, [](DirEdge) {},
        [&](DirEdge d, int slot) {
            if (out) return;
            const Crossing& c =
                g.edges[static_cast<size_t>(de_edge(d))].crossings[static_cast<size_t>(slot)];
            if (seen++ == n) out = Venture{c.curve, CrossRef{de_edge(d), slot}, d};
        },
        [&](int) { return false; });
    return out;
}

// Move the agent along its current walk until it stands at the origin
// cursor's edge start (the canonical re-enumeration point).
inline void walk_back_to_origin(const EmbeddedGraph& g, AgentRuntime& rt, const WalkCursor& from,
                                const WalkCursor& origin) {
    (void)g;
    DirEdge d = from.d;
    int guard = 0;
    while (d != origin.d) {
        rt.move(d);
        d = rt.right_hand_next_local(d);
        if (++guard > 4 * 1000000) throw gfr_error(Errc::InvalidInstance, "origin not on walk");
    }
}

inline bool gfr_dfs(const EmbeddedGraph& g, AgentRuntime& rt, SearchState& st,
                    const WalkCursor& origin, const std::string& frame_key,
                    MemoryMeter& meter) {
    int n_done = 0;
    WalkCursor here = origin;
    while (true) {
        rt.phase = Phase::Dfs;
        walk_back_to_origin(g, rt, here, origin);
        std::optional<Venture> v = nth_venture(g, rt, origin, n_done);
        if (!v) return false;  // ventures exhausted; caller backtracks
        ++n_done;
        const Crossing& vc =
            g.edges[static_cast<size_t>(v->ref.edge)].crossings[static_cast<size_t>(v->ref.slot)];
        WalkCursor from;
        from.d = origin.d;
        from.mid = false;
        walk_to_crossing(rt, from, v->at, vc.pos);
        meter.set_triples(static_cast<int>(st.markers.size()) + 1);  // transient leg
        MsfrStop stop = msfr_leg(g, rt, v->curve, v->ref);
        if (stop.reached_destination) return true;
        ++st.ntbw_visits;
        st.visit_keys.push_back(stop.walk_key);
        st.visit_points.push_back(stop.stop_point);
        if (stop.walk_key == frame_key) {
            // the leg came back to this very walk; no reverse needed
            here = stop.arrival_cursor;
            meter.set_triples(static_cast<int>(st.markers.size()));
            continue;
        }
        if (walk_already_visited(g, rt, stop.arrival_cursor, st)) {
            rt.phase = Phase::Reverse;
            MsfrStop back = reverse_msfr(g, rt, stop.triple, stop.arrival_cursor);
            if (back.reached_destination) return true;
            ++st.ntbw_visits;
            st.visit_keys.push_back(back.walk_key);
            st.visit_points.push_back(back.stop_point);
            here = back.arrival_cursor;
            meter.set_triples(static_cast<int>(st.markers.size()));
            continue;
        }
        Triple child = stop.triple;
        st.markers.push_back(child);
        meter.set_triples(static_cast<int>(st.markers.size()));
        if (gfr_dfs(g, rt, st, stop.arrival_cursor, stop.walk_key, meter)) return true;
        // child exhausted: reverse the tree edge back to this walk
        rt.phase = Phase::Reverse;
        MsfrStop back = reverse_msfr(g, rt, child, stop.arrival_cursor);
        if (back.reached_destination) return true;
        ++st.ntbw_visits;
        st.visit_keys.push_back(back.walk_key);
        st.visit_points.push_back(back.stop_point);
        here = back.arrival_cursor;
    }
}

}  // namespace agent_detail

// Generalized face routing: MSFR along gamma from S, then a depth-first
// search of the virtual multigraph of non-trivial border walks, carrying
// the triple list and backtracking by reverse MSFR.
inline RouteResult gfr_route(const EmbeddedGraph& g, long long budget = -1, bool trace = true) {
    if (budget < 0) budget = default_step_budget(g);
    AgentRuntime rt(g, budget, trace);
    RouteResult res;
    try {
        rt.phase = Phase::Msfr;
        rt.place_at(g.src);
        agent_detail::SearchState st;
        MsfrStop first;
        if (g.src == g.dst) {
            first.reached_destination = true;
        } else {
            const Polyline& gp = g.curves.at(0).poly;
            agent_detail::LegState leg;
            leg.curve = 0;
            leg.public_curve = 0;
            leg.t0 = Rat(0);
            leg.t_leg_start = Rat(0);
            leg.have_entry = false;
            leg.cursor = source_start_cursor(g, rt, gp.pts[1] - gp.pts[0]);
            st.root_edge = leg.cursor.d;
            first = msfr_run(g, rt, leg, g.dst);
        }
        if (first.reached_destination) {
            res.outcome = RouteOutcome::Delivered;
        } else {
            st.ntbw_visits = 1;
            st.visit_keys.push_back(first.walk_key);
            st.visit_points.push_back(first.stop_point);
            st.markers.push_back(first.triple);
            rt.meter.set_triples(1);
            bool delivered = agent_detail::gfr_dfs(g, rt, st, first.arrival_cursor,
                                                   first.walk_key, rt.meter);
            res.outcome = delivered ? RouteOutcome::Delivered : RouteOutcome::Unreachable;
            {
                std::vector<std::string> uniq = st.visit_keys;
                std::sort(uniq.begin(), uniq.end());
                uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
                res.ntbw_visits = static_cast<int>(uniq.size());
            }
            res.triples_recorded = static_cast<int>(st.markers.size());
            res.triples = st.markers;
            res.ntbw_keys = st.visit_keys;
            res.stop_points = st.visit_points;
        }
    } catch (const gfr_error& e) {
        if (e.code() != Errc::StepBudgetExceeded) throw;
        res.outcome = RouteOutcome::FailedBudgetExceeded;
        res.note = e.what();
    }
    res.traversal_count = rt.traversals();
    res.peak_memory_bits = rt.meter.peak_bits;
    res.trace = rt.trace();
    res.locality_violations = rt.out_of_neighborhood_queries();
    return res;
}

// Slow face routing along gamma only (complete on the plane).
inline RouteResult msfr_route(const EmbeddedGraph& g, long long budget = -1, bool trace = true) {
    if (budget < 0) budget = default_step_budget(g);
    AgentRuntime rt(g, budget, trace);
    RouteResult res;
    try {
        MsfrStop s = msfr_from_source(g, rt);
        if (s.reached_destination) res.outcome = RouteOutcome::Delivered;
        else {
            res.outcome = RouteOutcome::Unreachable;
            res.ntbw_visits = 1;
            res.ntbw_keys.push_back(s.walk_key);
            res.note = "stopped at a non-trivial border walk";
        }
    } catch (const gfr_error& e) {
        if (e.code() != Errc::StepBudgetExceeded) throw;
        res.outcome = RouteOutcome::FailedBudgetExceeded;
    }
    res.traversal_count = rt.traversals();
    res.peak_memory_bits = rt.meter.peak_bits;
    res.trace = rt.trace();
    res.locality_violations = rt.out_of_neighborhood_queries();
    return res;
}

// Classic face routing: chase the next-greater gamma crossing with no
// homology bookkeeping.  The harness flags a repeated (walk-entry, t) state
// as a loop; on positive genus delivery is not guaranteed.
inline RouteResult classic_fr(const EmbeddedGraph& g, long long budget = -1, bool trace = true) {
    if (budget < 0) budget = default_step_budget(g);
    AgentRuntime rt(g, budget, trace);
    RouteResult res;
    try {
        rt.place_at(g.src);
        if (g.src == g.dst) {
            res.outcome = RouteOutcome::Delivered;
        } else {
            const Polyline& gp = g.curves.at(0).poly;
            WalkCursor cur = source_start_cursor(g, rt, gp.pts[1] - gp.pts[0]);
            Rat t0(0);
            bool have_entry = false;
            std::vector<std::pair<DirEdge, std::string>> seen;  // (entry edge, t)
            while (true) {
                bool have_cand = false;
                Rat cand_shift;
                DirEdge cand_d = -1;
                int cand_slot = -1;
                bool aborted = walk_once(
                    rt, cur, [](DirEdge) {},
                    [&](DirEdge d, int slot) {
                        const Crossing& c = g.edges[static_cast<size_t>(de_edge(d))]
                                                .crossings[static_cast<size_t>(slot)];
                        if (c.curve != 0) return;
                        if (have_entry && c.t == t0) return;
                        Rat shift = (c.t - t0).mod1();
                        if (shift.is_zero()) return;
                        if (!have_cand || shift < cand_shift) {
                            have_cand = true;
                            cand_shift = shift;
                            cand_d = d;
                            cand_slot = slot;
                        }
                    },
                    [&](int node) { return node == g.dst; });
                if (aborted) {
                    res.outcome = RouteOutcome::Delivered;
                    break;
                }
                if (!have_cand) {
                    res.outcome = RouteOutcome::FailedLoopDetected;
                    res.note = "no further crossing on this walk";
                    break;
                }
                const Crossing& cand = g.edges[static_cast<size_t>(de_edge(cand_d))]
                                           .crossings[static_cast<size_t>(cand_slot)];
                std::pair<DirEdge, std::string> state{cand_d, cand.t.str()};
                bool repeat = false;
                for (const auto& s : seen) repeat = repeat || s == state;
                if (repeat) {
                    res.outcome = RouteOutcome::FailedLoopDetected;
                    res.note = "face-progress state repeated";
                    break;
                }
                seen.push_back(state);
                WalkCursor at = walk_to_crossing(rt, cur, cand_d, cand.pos);
                cur.d = de_reverse(at.d);
                cur.mid = true;
                cur.pos = cand.pos;
                t0 = cand.t;
                have_entry = true;
            }
        }
    } catch (const gfr_error& e) {
        if (e.code() != Errc::StepBudgetExceeded) throw;
        res.outcome = RouteOutcome::FailedBudgetExceeded;
    }
    res.traversal_count = rt.traversals();
    res.peak_memory_bits = rt.meter.peak_bits;
    res.trace = rt.trace();
    res.locality_violations = rt.out_of_neighborhood_queries();
    return res;
}

struct MeterReport {
    long long traversal_count = 0;
    long long peak_memory_bits = 0;
    int ntbw_visits = 0;
    int triples_recorded = 0;
    bool delivered = false;
};

inline MeterReport meter_report(const RouteResult& r) {
    return MeterReport{r.traversal_count, r.peak_memory_bits, r.ntbw_visits, r.triples_recorded,
                       r.outcome == RouteOutcome::Delivered};
}

}  // namespace gfr

#endif  // GFR_AGENT_HPP
