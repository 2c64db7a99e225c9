// The embedded graph G on the surface: exact edge geometry (polyline
// pieces joined through handle portals), validation of embeddedness and
// general position, crossing annotations against every reference curve,
// the rotation system, and border-walk structure.

#ifndef GFR_EMBEDDING_HPP
#define GFR_EMBEDDING_HPP

#include <gfr/errors.hpp>
#include <gfr/geometry.hpp>
#include <gfr/surface.hpp>

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gfr {

struct Portal {
    int disk = -1;  // disk the edge passes into, traveling u -> v
    Dir dir;        // boundary locus on that circle
};

struct EdgeChain {
    std::vector<Polyline> pieces;  // portals.size() + 1 pieces
    std::vector<Portal> portals;
};

// Position along a chain in u->v order; portals sort after their piece.
struct ChainPos {
    int piece = 0;
    int seg = 0;  // INT_MAX marks the portal ending this piece
    Rat u;

    static ChainPos portal(int piece) { return ChainPos{piece, INT_MAX, Rat(0)}; }
    friend bool operator<(const ChainPos& a, const ChainPos& b) {
        if (a.piece != b.piece) return a.piece < b.piece;
        if (a.seg != b.seg) return a.seg < b.seg;
        return a.u < b.u;
    }
    friend bool operator==(const ChainPos& a, const ChainPos& b) {
        return a.piece == b.piece && a.seg == b.seg && a.u == b.u;
    }
};

struct Crossing {
    int curve = 0;  // index into the curve table, 0..4g
    Rat t;          // t-value on that curve
    int sign = 0;   // +1 when the edge, traveled u->v, passes right->left of the curve
    ChainPos pos;
    Pt point;  // planar witness (first-disk locus for mu crossings)
};

struct Edge {
    int u = 0, v = 0;
    EdgeChain chain;
    std::vector<Crossing> crossings;  // sorted by pos
};

struct Node {
    Pt pos;
};

// Directed edge id: 2*edge for u->v, 2*edge+1 for v->u.
using DirEdge = int;
inline int de_edge(DirEdge d) { return d >> 1; }
inline bool de_forward(DirEdge d) { return (d & 1) == 0; }
inline DirEdge de_make(int edge, bool forward) { return 2 * edge + (forward ? 0 : 1); }
inline DirEdge de_reverse(DirEdge d) { return d ^ 1; }

struct EdgeEnd {
    int edge = 0;
    bool at_u = true;  // end incident to edge's u
    friend bool operator==(const EdgeEnd& a, const EdgeEnd& b) {
        return a.edge == b.edge && a.at_u == b.at_u;
    }
};

struct BorderWalk {
    std::vector<DirEdge> edges;  // cyclic right-hand-rule orbit
    std::string key;             // lexicographically least rotation of the id sequence
    std::vector<int> homology;   // crossing-sign sums against mu_1..mu_g, lambda_1..lambda_g
    bool nonzero_homology() const {
        for (int h : homology)
            if (h != 0) return true;
        return false;
    }
};

class EmbeddedGraph {
public:
    Surface surface;
    CurveTable curves;  // gamma + basis + reversals
    std::vector<Node> nodes;
    std::vector<Edge> edges;
    int src = -1, dst = -1;  // S and T node ids
    int crossing_bound = 16; // d

    // derived
    std::vector<std::vector<EdgeEnd>> rotation;  // per node, clockwise order
    std::vector<BorderWalk> walks;
    std::vector<int> walk_of;      // per DirEdge
    std::vector<int> pos_in_walk;  // per DirEdge
    std::vector<std::vector<std::pair<int, int>>> curve_crossings;
        // per curve index 0..2g: (edge, crossing slot) sorted by t
    std::vector<Pt> curve_meet_points;  // gamma x lambda and gamma self-crossings

    int genus() const { return surface.genus(); }
    int node_count() const { return static_cast<int>(nodes.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    int head(DirEdge d) const { return de_forward(d) ? edges[de_edge(d)].v : edges[de_edge(d)].u; }
    int tail(DirEdge d) const { return de_forward(d) ? edges[de_edge(d)].u : edges[de_edge(d)].v; }

    // Departure direction of an edge end.
    Pt end_dir(const EdgeEnd& ee) const {
        const EdgeChain& ch = edges[ee.edge].chain;
        if (ee.at_u) {
            const Polyline& p = ch.pieces.front();
            return p.pts[1] - p.pts[0];
        }
        const Polyline& p = ch.pieces.back();
        return p.pts[p.pts.size() - 2] - p.pts[p.pts.size() - 1];
    }
    DirEdge end_to_diredge(const EdgeEnd& ee) const { return de_make(ee.edge, ee.at_u); }
    EdgeEnd incoming_end(DirEdge d) const { return EdgeEnd{de_edge(d), !de_forward(d)}; }

    // The next edge clockwise from the incoming edge at head(d).
    DirEdge right_hand_next(DirEdge d) const {
        int w = head(d);
        EdgeEnd back{de_edge(d), !de_forward(d)};
        const std::vector<EdgeEnd>& rot = rotation[w];
        for (size_t i = 0; i < rot.size(); ++i)
            if (rot[i] == back) return end_to_diredge(rot[(i + 1) % rot.size()]);
        throw gfr_error(Errc::InvalidInstance, "edge end missing from rotation");
    }

    const BorderWalk& trace_border_walk(DirEdge start) const { return walks[walk_of[start]]; }

    const BorderWalk& adjacent_border_walk(const BorderWalk& w, int edge) const {
        for (DirEdge d : w.edges)
            if (de_edge(d) == edge) return walks[walk_of[de_reverse(d)]];
        throw gfr_error(Errc::EdgeNotOnWalk, "edge " + std::to_string(edge));
    }

    // Crossing-sign sums of a closed directed walk against the forward basis.
    std::vector<int> walk_homology(const std::vector<DirEdge>& seq) const {
        int g = genus();
        std::vector<int> h(static_cast<size_t>(2 * g), 0);
        for (DirEdge d : seq) {
            int sgn = de_forward(d) ? 1 : -1;
            for (const Crossing& c : edges[de_edge(d)].crossings)
                if (c.curve >= 1 && c.curve <= 2 * g)
                    h[static_cast<size_t>(c.curve - 1)] += sgn * c.sign;
        }
        return h;
    }

    // Largest number of graph crossings on any single reference curve,
    // used by the transported-memory accounting.
    int max_crossings_on_a_curve() const {
        size_t best = 0;
        for (const auto& v : curve_crossings) best = std::max(best, v.size());
        return static_cast<int>(best);
    }

    static EmbeddedGraph build(Surface surface, std::vector<Node> nodes,
                               std::vector<std::pair<std::pair<int, int>, EdgeChain>> edge_specs,
                               Polyline gamma, int src, int dst, int crossing_bound = 16);

private:
    void compute_rotation();
    void compute_walks();
};

namespace detail {

// Conservative double bounding box for pruning; exact predicates confirm.
struct BBox {
    double x0, y0, x1, y1;
    static BBox of_seg(const Seg& s) {
        double ax = s.a.x.to_double(), ay = s.a.y.to_double();
        double bx = s.b.x.to_double(), by = s.b.y.to_double();
        BBox b{std::min(ax, bx), std::min(ay, by), std::max(ax, bx), std::max(ay, by)};
        const double eps = 1e-9;
        double pad = eps * (1.0 + std::max(std::abs(b.x0) + std::abs(b.x1),
                                           std::abs(b.y0) + std::abs(b.y1)));
        b.x0 -= pad; b.y0 -= pad; b.x1 += pad; b.y1 += pad;
        return b;
    }
    bool overlaps(const BBox& o) const {
        return x0 <= o.x1 && o.x0 <= x1 && y0 <= o.y1 && o.y0 <= y1;
    }
};

struct SegRec {
    Seg seg;
    int edge;   // owning edge, or -1 for curves
    int piece;
    int index;  // segment index within the piece / polyline
    BBox box;
};

inline std::string least_rotation_key(const std::vector<DirEdge>& seq) {
    size_t n = seq.size();
    size_t best = 0;
    for (size_t cand = 1; cand < n; ++cand) {
        for (size_t k = 0; k < n; ++k) {
            int a = seq[(best + k) % n], b = seq[(cand + k) % n];
            if (a != b) {
                if (b < a) best = cand;
                break;
            }
        }
    }
    std::string key;
    for (size_t k = 0; k < n; ++k) {
        key += std::to_string(seq[(best + k) % n]);
        key += ',';
    }
    return key;
}

}  // namespace detail

inline EmbeddedGraph EmbeddedGraph::build(
    Surface surface_in, std::vector<Node> nodes_in,
    std::vector<std::pair<std::pair<int, int>, EdgeChain>> edge_specs, Polyline gamma, int src,
    int dst, int crossing_bound) {
    EmbeddedGraph g;
    g.surface = std::move(surface_in);
    g.nodes = std::move(nodes_in);
    g.src = src;
    g.dst = dst;
    g.crossing_bound = crossing_bound;
    int n = g.node_count();
    int gen = g.genus();
    if (src < 0 || src >= n || dst < 0 || dst >= n)
        throw gfr_error(Errc::InvalidInstance, "route endpoints out of range");
    if (gamma.pts.size() < 2 || gamma.pts.front() != g.nodes[src].pos ||
        gamma.pts.back() != g.nodes[dst].pos)
        throw gfr_error(Errc::InvalidInstance, "gamma must join S to T");
    g.curves = reference_curves(g.surface, gamma);

    // nodes: distinct, strictly outside disks, off every curve except the
    // gamma endpoints
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j)
            if (g.nodes[i].pos == g.nodes[j].pos)
                throw gfr_error(Errc::NotGeneralPosition, "coincident nodes");
        if (g.surface.point_in_some_disk(g.nodes[i].pos))
            throw gfr_error(Errc::NotGeneralPosition, "node meets a disk");
        for (const Polyline& lam : g.surface.lambda_arcs())
            for (size_t k = 0; k < lam.seg_count(); ++k)
                if (collinear_point_on(lam.seg(k), g.nodes[i].pos))
                    throw gfr_error(Errc::NotGeneralPosition, "node on a basis curve");
        for (size_t k = 0; k < gamma.seg_count(); ++k) {
            Seg sgk = gamma.seg(k);
            if (!collinear_point_on(sgk, g.nodes[i].pos)) continue;
            bool ok = (i == src && k == 0 && g.nodes[i].pos == sgk.a) ||
                      (i == dst && k == gamma.seg_count() - 1 && g.nodes[i].pos == sgk.b);
            if (!ok) throw gfr_error(Errc::NotGeneralPosition, "node on gamma");
        }
    }

    // gamma general position: off all disks; proper crossings with lambdas;
    // transversal self-crossings only
    for (size_t k = 0; k < gamma.seg_count(); ++k) {
        Seg sg = gamma.seg(k);
        if (sg.a == sg.b) throw gfr_error(Errc::NotGeneralPosition, "degenerate gamma segment");
        for (int d = 0; d < g.surface.disk_count(); ++d)
            if (seg_meets_disk(sg, g.surface.disk(d)))
                throw gfr_error(Errc::CurveCollision, "gamma meets a disk");
    }
    auto check_poly_vs_poly = [&](const Polyline& a, const Polyline& b, bool same,
                                  std::vector<Pt>* meets) {
        for (size_t i = 0; i < a.seg_count(); ++i)
            for (size_t j = same ? i + 1 : 0; j < b.seg_count(); ++j) {
                Rat u, v;
                SegContact ct = seg_contact(a.seg(i), b.seg(j), &u, &v);
                if (ct == SegContact::None) continue;
                if (ct == SegContact::Proper) {
                    if (meets) meets->push_back(a.seg(i).at(u));
                    continue;
                }
                if (same && j == i + 1 && ct == SegContact::Touch) continue;  // shared vertex
                throw gfr_error(Errc::NotGeneralPosition, "curves touch non-transversally");
            }
    };
    check_poly_vs_poly(gamma, gamma, true, &g.curve_meet_points);
    for (const Polyline& lam : g.surface.lambda_arcs())
        check_poly_vs_poly(gamma, lam, false, &g.curve_meet_points);

    // structural chain checks
    g.edges.reserve(edge_specs.size());
    for (auto& [uv, chain] : edge_specs) {
        Edge e;
        e.u = uv.first;
        e.v = uv.second;
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw gfr_error(Errc::InvalidInstance, "edge endpoint out of range");
        if (chain.pieces.size() != chain.portals.size() + 1)
            throw gfr_error(Errc::InvalidInstance, "chain must have one more piece than portals");
        for (const Polyline& p : chain.pieces) {
            if (p.pts.size() < 2)
                throw gfr_error(Errc::InvalidInstance, "chain piece needs a segment");
            for (size_t k = 0; k + 1 < p.pts.size(); ++k)
                if (p.pts[k] == p.pts[k + 1])
                    throw gfr_error(Errc::NotGeneralPosition, "degenerate chain segment");
        }
        if (chain.pieces.front().pts.front() != g.nodes[e.u].pos)
            throw gfr_error(Errc::InvalidInstance, "chain does not start at u");
        if (chain.pieces.back().pts.back() != g.nodes[e.v].pos)
            throw gfr_error(Errc::InvalidInstance, "chain does not end at v");
        for (size_t k = 0; k < chain.portals.size(); ++k) {
            const Portal& po = chain.portals[k];
            if (po.disk < 0 || po.disk >= g.surface.disk_count())
                throw gfr_error(Errc::InvalidInstance, "portal disk out of range");
            if (!po.dir.unit())
                throw gfr_error(Errc::InvalidInstance, "portal direction not unit");
            Pt enter = g.surface.disk(po.disk).point_at(po.dir);
            auto [pd, pdir] = g.surface.identify(po.disk, po.dir);
            Pt exit = g.surface.disk(pd).point_at(pdir);
            if (chain.pieces[k].pts.back() != enter)
                throw gfr_error(Errc::InvalidInstance, "piece does not meet its portal");
            if (chain.pieces[k + 1].pts.front() != exit)
                throw gfr_error(Errc::InvalidInstance,
                                "piece does not continue at the identified point");
        }
        e.chain = std::move(chain);
        g.edges.push_back(std::move(e));
    }

    // geometric validation per edge: disks, portals, self-simplicity
    for (size_t ei = 0; ei < g.edges.size(); ++ei) {
        const Edge& e = g.edges[ei];
        const EdgeChain& ch = e.chain;
        for (size_t pi = 0; pi < ch.pieces.size(); ++pi) {
            const Polyline& p = ch.pieces[pi];
            for (size_t si = 0; si < p.seg_count(); ++si) {
                Seg sg = p.seg(si);
                bool ends_at_portal = pi < ch.portals.size() && si == p.seg_count() - 1;
                bool starts_at_portal = pi > 0 && si == 0;
                for (int d = 0; d < g.surface.disk_count(); ++d) {
                    const Circle& c = g.surface.disk(d);
                    bool own_exit = ends_at_portal && ch.portals[pi].disk == d;
                    bool own_entry =
                        starts_at_portal &&
                        g.surface.partner_disk(ch.portals[pi - 1].disk) == d;
                    if (own_exit || own_entry) {
                        if (seg_meets_open_disk(sg, c))
                            throw gfr_error(Errc::NotGeneralPosition, "edge dips into a disk");
                        // approaching from outside (exit) or departing outward
                        // (entry): the off-circle endpoint is radially out
                        const Pt& on = own_exit ? sg.b : sg.a;
                        const Pt& off = own_exit ? sg.a : sg.b;
                        if (dot(off - on, on - c.center).sign() <= 0)
                            throw gfr_error(Errc::NotGeneralPosition,
                                            "edge tangent at a portal");
                    } else if (seg_meets_disk(sg, c)) {
                        throw gfr_error(Errc::NotGeneralPosition, "edge meets a disk");
                    }
                }
                // interior of segments must avoid all nodes
                for (int ni = 0; ni < n; ++ni) {
                    const Pt& np = g.nodes[ni].pos;
                    if (!collinear_point_on(sg, np)) continue;
                    bool is_chain_end = (pi == 0 && si == 0 && np == sg.a && ni == e.u) ||
                                       (pi == ch.pieces.size() - 1 && si == p.seg_count() - 1 &&
                                        np == sg.b && ni == e.v);
                    if (!is_chain_end)
                        throw gfr_error(Errc::NotGeneralPosition, "edge passes through a node");
                }
            }
        }
        // self-simplicity across the whole chain
        std::vector<detail::SegRec> recs;
        for (size_t pi = 0; pi < ch.pieces.size(); ++pi)
            for (size_t si = 0; si < ch.pieces[pi].seg_count(); ++si)
                recs.push_back({ch.pieces[pi].seg(si), static_cast<int>(ei),
                                static_cast<int>(pi), static_cast<int>(si),
                                detail::BBox::of_seg(ch.pieces[pi].seg(si))});
        for (size_t a = 0; a < recs.size(); ++a)
            for (size_t b = a + 1; b < recs.size(); ++b) {
                bool adjacent = recs[a].piece == recs[b].piece && recs[b].index == recs[a].index + 1;
                bool loop_closure = e.u == e.v && a == 0 && b + 1 == recs.size();
                if (!recs[a].box.overlaps(recs[b].box)) continue;
                SegContact ct = seg_contact(recs[a].seg, recs[b].seg);
                if (ct == SegContact::None) continue;
                if ((adjacent || loop_closure) && ct == SegContact::Touch) continue;
                throw gfr_error(Errc::NotGeneralPosition, "edge chain self-intersects");
            }
    }

    // pairwise edge-edge tests with grid pruning
    {
        std::vector<detail::SegRec> all;
        for (size_t ei = 0; ei < g.edges.size(); ++ei) {
            const EdgeChain& ch = g.edges[ei].chain;
            for (size_t pi = 0; pi < ch.pieces.size(); ++pi)
                for (size_t si = 0; si < ch.pieces[pi].seg_count(); ++si)
                    all.push_back({ch.pieces[pi].seg(si), static_cast<int>(ei),
                                   static_cast<int>(pi), static_cast<int>(si),
                                   detail::BBox::of_seg(ch.pieces[pi].seg(si))});
        }
        const double cell = 1.0;
        std::map<std::pair<long, long>, std::vector<size_t>> grid;
        auto cells_of = [&](const detail::BBox& b, auto&& fn) {
            for (long cx = static_cast<long>(std::floor(b.x0 / cell));
                 cx <= static_cast<long>(std::floor(b.x1 / cell)); ++cx)
                for (long cy = static_cast<long>(std::floor(b.y0 / cell));
                     cy <= static_cast<long>(std::floor(b.y1 / cell)); ++cy)
                    fn(cx, cy);
        };
        for (size_t i = 0; i < all.size(); ++i)
            cells_of(all[i].box, [&](long cx, long cy) { grid[{cx, cy}].push_back(i); });
        std::vector<std::pair<size_t, size_t>> cand;
        for (auto& [key, vec] : grid)
            for (size_t a = 0; a < vec.size(); ++a)
                for (size_t b = a + 1; b < vec.size(); ++b)
                    if (all[vec[a]].edge != all[vec[b]].edge)
                        cand.emplace_back(std::min(vec[a], vec[b]), std::max(vec[a], vec[b]));
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        for (auto [a, b] : cand) {
            if (!all[a].box.overlaps(all[b].box)) continue;
            SegContact ct = seg_contact(all[a].seg, all[b].seg);
            if (ct == SegContact::None) continue;
            if (ct == SegContact::Touch) {
                const Edge& ea = g.edges[static_cast<size_t>(all[a].edge)];
                const Edge& eb = g.edges[static_cast<size_t>(all[b].edge)];
                bool ok = false;
                for (int na : {ea.u, ea.v})
                    for (int nb : {eb.u, eb.v})
                        if (na == nb && collinear_point_on(all[a].seg, g.nodes[na].pos) &&
                            collinear_point_on(all[b].seg, g.nodes[na].pos))
                            ok = true;
                if (ok) continue;
            }
            throw gfr_error(Errc::EdgeCrossing,
                            "edges " + std::to_string(all[a].edge) + " and " +
                                std::to_string(all[b].edge));
        }
    }

    // distinct portal loci across the graph (disks are disjoint, so plain
    // point equality decides)
    {
        std::vector<Pt> pts;
        for (const Edge& e : g.edges)
            for (const Portal& po : e.chain.portals) {
                auto [pd, pdir] = g.surface.identify(po.disk, po.dir);
                for (const Pt& p : {g.surface.disk(po.disk).point_at(po.dir),
                                    g.surface.disk(pd).point_at(pdir)}) {
                    for (const Pt& q : pts)
                        if (q == p)
                            throw gfr_error(Errc::EdgeCrossing,
                                            "portal locus shared by two passes");
                    pts.push_back(p);
                }
            }
    }

    // crossing annotations against gamma, lambda arcs, and mu circles
    int num_curves = g.curves.size();
    std::vector<std::vector<Rat>> seen_t(static_cast<size_t>(num_curves));
    for (size_t ei = 0; ei < g.edges.size(); ++ei) {
        Edge& e = g.edges[ei];
        std::vector<std::pair<int, int>> per_curve_count(static_cast<size_t>(2 * gen + 1));
        auto count_one = [&](int curve) {
            per_curve_count[static_cast<size_t>(curve)].second++;
            if (per_curve_count[static_cast<size_t>(curve)].second > crossing_bound)
                throw gfr_error(Errc::TooManyCrossings,
                                "edge " + std::to_string(ei) + " vs curve " +
                                    std::to_string(curve));
        };
        for (size_t pi = 0; pi < e.chain.pieces.size(); ++pi) {
            const Polyline& p = e.chain.pieces[pi];
            for (size_t si = 0; si < p.seg_count(); ++si) {
                Seg sg = p.seg(si);
                for (int ci = 0; ci <= 2 * gen; ++ci) {
                    const RefCurve& rc = g.curves.at(ci);
                    if (rc.kind == CurveKind::Mu) continue;
                    for (size_t k = 0; k < rc.poly.seg_count(); ++k) {
                        Rat u, v;
                        SegContact ct = seg_contact(sg, rc.poly.seg(k), &u, &v);
                        if (ct == SegContact::None) continue;
                        if (ct == SegContact::Touch && ci == 0) {
                            // edges incident to S or T meet gamma at its endpoints
                            Seg cs = rc.poly.seg(k);
                            bool at_terminal = false;
                            for (const Pt* tp : {&rc.poly.pts.front(), &rc.poly.pts.back()})
                                if (collinear_point_on(sg, *tp) && collinear_point_on(cs, *tp))
                                    at_terminal = true;
                            if (at_terminal) continue;
                        }
                        if (ct != SegContact::Proper)
                            throw gfr_error(Errc::NotGeneralPosition,
                                            "edge touches a reference curve");
                        Pt x = sg.at(u);
                        for (const Pt& mp : g.curve_meet_points)
                            if (mp == x)
                                throw gfr_error(Errc::NotGeneralPosition,
                                                "edge crossing at a curve intersection");
                        Crossing c;
                        c.curve = ci;
                        c.t = rc.t_on_segment(g.curves.cum_l1[static_cast<size_t>(ci)], k, v);
                        c.sign = orient(rc.poly.pts[k], rc.poly.pts[k + 1], sg.a) < 0 ? 1 : -1;
                        c.pos = ChainPos{static_cast<int>(pi), static_cast<int>(si), u};
                        c.point = x;
                        e.crossings.push_back(c);
                        count_one(ci);
                    }
                }
            }
            if (pi < e.chain.portals.size()) {
                const Portal& po = e.chain.portals[pi];
                int pair = po.disk / 2;
                Dir first_dir =
                    po.disk % 2 == 0 ? po.dir : g.surface.identify(po.disk, po.dir).second;
                Crossing c;
                c.curve = 1 + pair;
                c.t = mu_t_value(g.surface, pair, first_dir);
                c.sign = po.disk % 2 == 0 ? 1 : -1;
                c.pos = ChainPos::portal(static_cast<int>(pi));
                c.point = g.surface.disk(2 * pair).point_at(first_dir);
                e.crossings.push_back(c);
                count_one(c.curve);
            }
        }
        std::sort(e.crossings.begin(), e.crossings.end(),
                  [](const Crossing& a, const Crossing& b) { return a.pos < b.pos; });
        // reversed-curve copies
        std::vector<Crossing> with_rev;
        for (const Crossing& c : e.crossings) {
            with_rev.push_back(c);
            if (c.curve == 0) continue;
            Crossing r = c;
            r.curve = g.curves.reversed_index(c.curve);
            r.t = g.curves.at(r.curve).reverse_t(c.t);
            r.sign = -c.sign;
            with_rev.push_back(r);
        }
        e.crossings = std::move(with_rev);
        for (const Crossing& c : e.crossings)
            if (c.curve <= 2 * gen)
                for (const Rat& t0 : seen_t[static_cast<size_t>(c.curve)])
                    if (t0 == c.t)
                        throw gfr_error(Errc::NotGeneralPosition,
                                        "two crossings at one curve point");
        for (const Crossing& c : e.crossings)
            if (c.curve <= 2 * gen) seen_t[static_cast<size_t>(c.curve)].push_back(c.t);
    }

    // global per-curve crossing index, sorted by t
    g.curve_crossings.assign(static_cast<size_t>(2 * gen + 1), {});
    for (size_t ei = 0; ei < g.edges.size(); ++ei)
        for (size_t k = 0; k < g.edges[ei].crossings.size(); ++k) {
            const Crossing& c = g.edges[ei].crossings[k];
            if (c.curve <= 2 * gen)
                g.curve_crossings[static_cast<size_t>(c.curve)].emplace_back(
                    static_cast<int>(ei), static_cast<int>(k));
        }
    for (auto& vec : g.curve_crossings)
        std::sort(vec.begin(), vec.end(), [&](const auto& a, const auto& b) {
            return g.edges[static_cast<size_t>(a.first)].crossings[static_cast<size_t>(a.second)].t <
                   g.edges[static_cast<size_t>(b.first)].crossings[static_cast<size_t>(b.second)].t;
        });

    // connectivity
    {
        std::vector<int> uf(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) uf[static_cast<size_t>(i)] = i;
        auto find = [&](int x) {
            while (uf[static_cast<size_t>(x)] != x) {
                uf[static_cast<size_t>(x)] = uf[static_cast<size_t>(uf[static_cast<size_t>(x)])];
                x = uf[static_cast<size_t>(x)];
            }
            return x;
        };
        for (const Edge& e : g.edges) uf[static_cast<size_t>(find(e.u))] = find(e.v);
        for (int i = 1; i < n; ++i)
            if (find(i) != find(0)) throw gfr_error(Errc::Disconnected, "graph is not connected");
    }

    g.compute_rotation();
    g.compute_walks();
    return g;
}

inline void EmbeddedGraph::compute_rotation() {
    rotation.assign(nodes.size(), {});
    for (size_t ei = 0; ei < edges.size(); ++ei) {
        rotation[static_cast<size_t>(edges[ei].u)].push_back(EdgeEnd{static_cast<int>(ei), true});
        rotation[static_cast<size_t>(edges[ei].v)].push_back(EdgeEnd{static_cast<int>(ei), false});
    }
    for (auto& rot : rotation) {
        std::sort(rot.begin(), rot.end(), [&](const EdgeEnd& a, const EdgeEnd& b) {
            return ccw_less(end_dir(a), end_dir(b));
        });
        std::reverse(rot.begin(), rot.end());  // clockwise
        for (size_t i = 0; i + 1 < rot.size(); ++i)
            if (!ccw_less(end_dir(rot[i]), end_dir(rot[i + 1])) &&
                !ccw_less(end_dir(rot[i + 1]), end_dir(rot[i])))
                throw gfr_error(Errc::EdgeCrossing, "two edge ends depart equally");
    }
}

inline void EmbeddedGraph::compute_walks() {
    size_t m = 2 * edges.size();
    walk_of.assign(m, -1);
    pos_in_walk.assign(m, -1);
    walks.clear();
    for (DirEdge d0 = 0; d0 < static_cast<DirEdge>(m); ++d0) {
        if (walk_of[static_cast<size_t>(d0)] != -1) continue;
        BorderWalk w;
        DirEdge d = d0;
        do {
            walk_of[static_cast<size_t>(d)] = static_cast<int>(walks.size());
            pos_in_walk[static_cast<size_t>(d)] = static_cast<int>(w.edges.size());
            w.edges.push_back(d);
            d = right_hand_next(d);
        } while (d != d0);
        w.key = detail::least_rotation_key(w.edges);
        w.homology = walk_homology(w.edges);
        walks.push_back(std::move(w));
    }
}

}  // namespace gfr

#endif  // GFR_EMBEDDING_HPP
