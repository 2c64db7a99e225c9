// Regions of the surface complement of G, computed globally from the exact
// overlay arrangement of the graph, the basis curves, and gamma.  Faces of
// the planar arrangement are merged across every non-graph boundary (basis
// curves, gamma) and across the circle identifications; the classes are the
// regions of the surface.  This is oracle/validator machinery: the routing
// agent never sees it.

#ifndef GFR_REGIONS_HPP
#define GFR_REGIONS_HPP

#include <gfr/embedding.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace gfr {

struct Region {
    std::vector<int> walks;  // border walks bounding this region
    bool trivial = true;     // exactly one boundary walk
};

// Geometry of one boundary cycle of a face, for rendering.
struct RenderPiece {
    bool is_arc = false;
    Pt a, b;      // endpoints (as drawn, in cycle order)
    Pt center;    // arc data
    Rat radius;
    bool ccw = false;
};
struct RenderCycle {
    int region = -1;  // -1: disk interior, not part of the surface
    std::vector<RenderPiece> pieces;
};

struct RegionDecomposition {
    std::vector<Region> regions;
    int unbounded_region = -1;
    std::vector<RenderCycle> render_cycles;
    std::vector<int> region_of_walk;  // per walk id
    // Per curve 0..2g: region of each inter-crossing piece, aligned with
    // EmbeddedGraph::curve_crossings[c].  Closed curves: piece i runs from
    // crossing i to crossing i+1 (cyclically); size == max(crossings, 1).
    // Gamma: piece i runs from crossing i-1 to crossing i with piece 0
    // starting at S; size == crossings + 1.
    std::vector<std::vector<int>> curve_pieces;

    bool walk_is_ntbw(int walk) const {
        return !regions[static_cast<size_t>(region_of_walk[static_cast<size_t>(walk)])].trivial;
    }
    std::vector<int> tiled_region_ids() const {
        std::vector<int> out;
        for (size_t i = 0; i < regions.size(); ++i)
            if (regions[i].trivial) out.push_back(static_cast<int>(i));
        return out;
    }
};

namespace detail {

struct ArrVertex {
    Pt p;
};

struct ArrHalf {
    int origin = -1;
    int target = -1;
    Pt dir;           // direction at origin (tangent for arcs)
    int twin = -1;
    int face = -1;
    // provenance
    bool is_graph = false;
    bool is_arc = false;
    int graph_edge = -1;
    bool along_chain = false;  // aligned with the edge's u->v travel
    int arc_disk = -1;
    bool arc_ccw = false;      // runs counterclockwise around its circle
    int arc_id = -1;
};

class VertexSet {
public:
    int intern(const Pt& p) {
        auto it = index_.find(key(p));
        if (it != index_.end()) return it->second;
        int id = static_cast<int>(verts_.size());
        verts_.push_back({p});
        index_.emplace(key(p), id);
        return id;
    }
    const std::vector<ArrVertex>& verts() const { return verts_; }

private:
    static std::pair<std::string, std::string> key(const Pt& p) {
        return {p.x.str(), p.y.str()};
    }
    std::map<std::pair<std::string, std::string>, int> index_;
    std::vector<ArrVertex> verts_;
};

}  // namespace detail

inline RegionDecomposition compute_regions(const EmbeddedGraph& g) {
    using detail::ArrHalf;
    const Surface& surf = g.surface;
    int gen = g.genus();

    // --- strand segments: graph pieces, lambda arcs, gamma ---
    struct Strand {
        const Polyline* poly;
        bool is_graph;
        int edge;
        int piece;
        int curve;  // 0 gamma, g+1..2g lambda, -1 graph
    };
    std::vector<Strand> strands;
    for (size_t ei = 0; ei < g.edges.size(); ++ei)
        for (size_t pi = 0; pi < g.edges[ei].chain.pieces.size(); ++pi)
            strands.push_back({&g.edges[ei].chain.pieces[pi], true, static_cast<int>(ei),
                               static_cast<int>(pi), -1});
    strands.push_back({&g.curves.at(0).poly, false, -1, -1, 0});
    for (int i = 0; i < gen; ++i)
        strands.push_back({&surf.lambda_arcs()[static_cast<size_t>(i)], false, -1, -1,
                           1 + gen + i});

    struct SegKey {
        int strand;
        int seg;
    };
    std::vector<SegKey> segkeys;
    std::vector<Seg> segs;
    std::vector<detail::BBox> boxes;
    for (size_t si = 0; si < strands.size(); ++si)
        for (size_t k = 0; k < strands[si].poly->seg_count(); ++k) {
            segkeys.push_back({static_cast<int>(si), static_cast<int>(k)});
            segs.push_back(strands[si].poly->seg(k));
            boxes.push_back(detail::BBox::of_seg(segs.back()));
        }

    // proper intersections split segments; all other contacts are existing
    // endpoints (validation guarantees this)
    std::vector<std::vector<Rat>> splits(segs.size());
    {
        const double cell = 1.0;
        std::map<std::pair<long, long>, std::vector<size_t>> grid;
        for (size_t i = 0; i < segs.size(); ++i) {
            const detail::BBox& b = boxes[i];
            for (long cx = static_cast<long>(std::floor(b.x0 / cell));
                 cx <= static_cast<long>(std::floor(b.x1 / cell)); ++cx)
                for (long cy = static_cast<long>(std::floor(b.y0 / cell));
                     cy <= static_cast<long>(std::floor(b.y1 / cell)); ++cy)
                    grid[{cx, cy}].push_back(i);
        }
        std::vector<std::pair<size_t, size_t>> cand;
        for (auto& [kc, vec] : grid)
            for (size_t a = 0; a < vec.size(); ++a)
                for (size_t b = a + 1; b < vec.size(); ++b)
                    cand.emplace_back(std::min(vec[a], vec[b]), std::max(vec[a], vec[b]));
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        for (auto [a, b] : cand) {
            if (segkeys[a].strand == segkeys[b].strand && segkeys[a].seg == segkeys[b].seg)
                continue;
            if (!boxes[a].overlaps(boxes[b])) continue;
            Rat u, v;
            if (seg_contact(segs[a], segs[b], &u, &v) == SegContact::Proper) {
                splits[a].push_back(u);
                splits[b].push_back(v);
            }
        }
    }

    detail::VertexSet vs;
    std::vector<ArrHalf> halves;
    auto add_pair = [&](int a, int b, const Pt& dir_ab, const Pt& dir_ba) {
        ArrHalf h1, h2;
        h1.origin = a; h1.target = b; h1.dir = dir_ab;
        h2.origin = b; h2.target = a; h2.dir = dir_ba;
        h1.twin = static_cast<int>(halves.size()) + 1;
        h2.twin = static_cast<int>(halves.size());
        halves.push_back(h1);
        halves.push_back(h2);
        return std::pair<int, int>(h2.twin, h1.twin);
    };

    // fragment halves per strand segment, in order along the segment
    std::vector<std::vector<int>> seg_frag_halves(segs.size());  // forward halves
    for (size_t i = 0; i < segs.size(); ++i) {
        std::vector<Rat> cuts = splits[i];
        cuts.push_back(Rat(0));
        cuts.push_back(Rat(1));
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        const Strand& st = strands[static_cast<size_t>(segkeys[i].strand)];
        for (size_t k = 0; k + 1 < cuts.size(); ++k) {
            Pt pa = segs[i].at(cuts[k]);
            Pt pb = segs[i].at(cuts[k + 1]);
            int va = vs.intern(pa), vb = vs.intern(pb);
            auto [hf, hb] = add_pair(va, vb, pb - pa, pa - pb);
            halves[static_cast<size_t>(hf)].is_graph = st.is_graph;
            halves[static_cast<size_t>(hb)].is_graph = st.is_graph;
            if (st.is_graph) {
                halves[static_cast<size_t>(hf)].graph_edge = st.edge;
                halves[static_cast<size_t>(hb)].graph_edge = st.edge;
                halves[static_cast<size_t>(hf)].along_chain = true;
            }
            seg_frag_halves[i].push_back(hf);
        }
    }

    // circle marks: lambda attachment plus every portal manifestation
    std::vector<std::vector<Dir>> marks(static_cast<size_t>(surf.disk_count()));
    for (int d = 0; d < surf.disk_count(); ++d) marks[static_cast<size_t>(d)].push_back(surf.attach(d));
    for (const Edge& e : g.edges)
        for (const Portal& po : e.chain.portals) {
            marks[static_cast<size_t>(po.disk)].push_back(po.dir);
            auto [pd, pdir] = surf.identify(po.disk, po.dir);
            marks[static_cast<size_t>(pd)].push_back(pdir);
        }
    struct ArcRec {
        int disk;
        Dir from, to;  // ccw
        int ccw_half;
        int cw_half;
    };
    std::vector<ArcRec> arcs;
    for (int d = 0; d < surf.disk_count(); ++d) {
        auto& ms = marks[static_cast<size_t>(d)];
        std::sort(ms.begin(), ms.end(), [](const Dir& a, const Dir& b) {
            return l1_circle_pos(a) < l1_circle_pos(b);
        });
        ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
        const Circle& c = surf.disk(d);
        for (size_t k = 0; k < ms.size(); ++k) {
            const Dir& a = ms[k];
            const Dir& b = ms[(k + 1) % ms.size()];
            Pt pa = c.point_at(a), pb = c.point_at(b);
            int va = vs.intern(pa), vb = vs.intern(pb);
            Pt ta = c.ccw_tangent(pa);
            Pt tb_back = c.ccw_tangent(pb);
            auto [hf, hb] = add_pair(va, vb, ta, Pt(Rat(0) - tb_back.x, Rat(0) - tb_back.y));
            halves[static_cast<size_t>(hf)].is_arc = true;
            halves[static_cast<size_t>(hf)].arc_disk = d;
            halves[static_cast<size_t>(hf)].arc_ccw = true;
            halves[static_cast<size_t>(hf)].arc_id = static_cast<int>(arcs.size());
            halves[static_cast<size_t>(hb)].is_arc = true;
            halves[static_cast<size_t>(hb)].arc_disk = d;
            halves[static_cast<size_t>(hb)].arc_id = static_cast<int>(arcs.size());
            arcs.push_back({d, a, b, hf, hb});
        }
    }

    // rotation at arrangement vertices and face orbits (region on the left)
    size_t nv = vs.verts().size();
    std::vector<std::vector<int>> out(nv);
    for (size_t h = 0; h < halves.size(); ++h)
        out[static_cast<size_t>(halves[h].origin)].push_back(static_cast<int>(h));
    for (auto& lst : out) {
        std::sort(lst.begin(), lst.end(), [&](int a, int b) {
            return ccw_less(halves[static_cast<size_t>(a)].dir, halves[static_cast<size_t>(b)].dir);
        });
        std::reverse(lst.begin(), lst.end());  // clockwise
    }
    std::vector<int> slot(halves.size(), -1);
    for (auto& lst : out)
        for (size_t i = 0; i < lst.size(); ++i) slot[static_cast<size_t>(lst[i])] = static_cast<int>(i);
    auto face_next = [&](int h) {
        int tw = halves[static_cast<size_t>(h)].twin;
        const auto& lst = out[static_cast<size_t>(halves[static_cast<size_t>(tw)].origin)];
        int i = slot[static_cast<size_t>(tw)];
        return lst[(static_cast<size_t>(i) + 1) % lst.size()];
    };
    int nfaces = 0;
    std::vector<std::vector<int>> orbit_halves;
    for (size_t h0 = 0; h0 < halves.size(); ++h0) {
        if (halves[h0].face != -1) continue;
        int f = nfaces++;
        orbit_halves.emplace_back();
        int h = static_cast<int>(h0);
        do {
            halves[static_cast<size_t>(h)].face = f;
            orbit_halves.back().push_back(h);
            h = face_next(h);
        } while (h != static_cast<int>(h0));
    }

    // Each orbit is one boundary cycle of a face, not a whole face: faces
    // with islands own several cycles.  Classify cycle orientation by the
    // exact winding of the tangent direction (the pseudo-angle deltas
    // telescope to +-8, one full turn), then merge every clockwise (hole)
    // cycle with the face found by a vertical clear ray from its top point.
    auto mod8 = [](Rat x) {
        Rat eight(8);
        while (x.sign() < 0) x += eight;
        while (x >= eight) x -= eight;
        return x;
    };
    auto pseudo_angle = [](const Pt& v) {
        int xs = v.x.sign(), ys = v.y.sign();
        Rat ax = xs < 0 ? -v.x : v.x, ay = ys < 0 ? -v.y : v.y;
        if (xs > 0 && ys >= 0) return Rat(2) * ay / (ax + ay);
        if (xs <= 0 && ys > 0) return Rat(2) + Rat(2) * ax / (ax + ay);
        if (xs < 0 && ys <= 0) return Rat(4) + Rat(2) * ay / (ax + ay);
        return Rat(6) + Rat(2) * ax / (ax + ay);
    };
    auto arrival_tangent = [&](int h) {
        const ArrHalf& tw = halves[static_cast<size_t>(halves[static_cast<size_t>(h)].twin)];
        return Pt(Rat(0) - tw.dir.x, Rat(0) - tw.dir.y);
    };
    std::vector<bool> orbit_is_hole(static_cast<size_t>(nfaces), false);
    for (int f = 0; f < nfaces; ++f) {
        const std::vector<int>& cyc = orbit_halves[static_cast<size_t>(f)];
        Rat total(0);
        for (size_t i = 0; i < cyc.size(); ++i) {
            int h = cyc[i];
            int hn = cyc[(i + 1) % cyc.size()];
            const ArrHalf& hh = halves[static_cast<size_t>(h)];
            // sweep along the fragment itself (arcs rotate the tangent)
            if (hh.is_arc) {
                Rat d = mod8(pseudo_angle(arrival_tangent(h)) - pseudo_angle(hh.dir));
                if (hh.arc_ccw) total += d.is_zero() ? Rat(8) : d;
                else total += d.is_zero() ? Rat(-8) : d - Rat(8);
            }
            // turn at the vertex between h and hn
            Pt a = arrival_tangent(h);
            Pt d2 = halves[static_cast<size_t>(hn)].dir;
            Rat cr = cross(a, d2);
            if (cr.sign() > 0) {
                total += mod8(pseudo_angle(d2) - pseudo_angle(a));
            } else if (cr.sign() < 0) {
                total += mod8(pseudo_angle(d2) - pseudo_angle(a)) - Rat(8);
            } else {
                if (dot(a, d2).sign() < 0) total -= Rat(4);  // U-turn around a tip
                // straight-through contributes nothing
            }
        }
        if (total == Rat(8)) orbit_is_hole[static_cast<size_t>(f)] = false;
        else if (total == Rat(-8)) orbit_is_hole[static_cast<size_t>(f)] = true;
        else throw gfr_error(Errc::InvalidInstance, "boundary cycle winding is not one turn");
    }

    // disk interiors are not part of the surface; nothing below queries
    // their faces, but every circle must enclose exactly one empty face
    for (const ArcRec& a1 : arcs)
        for (const ArcRec& a2 : arcs)
            if (a1.disk == a2.disk &&
                halves[static_cast<size_t>(a1.ccw_half)].face !=
                    halves[static_cast<size_t>(a2.ccw_half)].face)
                throw gfr_error(Errc::InvalidInstance, "disk interior is not empty");

    // union faces across passable boundaries; one extra slot stands for the
    // face at infinity
    int inf_face = nfaces;
    std::vector<int> uf(static_cast<size_t>(nfaces) + 1);
    for (int i = 0; i <= nfaces; ++i) uf[static_cast<size_t>(i)] = i;
    std::function<int(int)> find = [&](int x) {
        while (uf[static_cast<size_t>(x)] != x) {
            uf[static_cast<size_t>(x)] = uf[static_cast<size_t>(uf[static_cast<size_t>(x)])];
            x = uf[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) { uf[static_cast<size_t>(find(a))] = find(b); };

    // merge every hole cycle with the face containing its component: shoot
    // an exact clear ray upward from the cycle's top point; the nearest
    // proper hit's near side bounds the containing face, no hit means the
    // face at infinity
    {
        Rat ymax(0);
        bool have_y = false;
        auto bump = [&](const Rat& y) {
            if (!have_y || y > ymax) { ymax = y; have_y = true; }
        };
        for (const detail::ArrVertex& v : vs.verts()) bump(v.p.y);
        for (int d = 0; d < surf.disk_count(); ++d)
            bump(surf.disk(d).center.y + surf.disk(d).radius);
        if (!have_y) bump(Rat(0));
        for (int f = 0; f < nfaces; ++f) {
            if (!orbit_is_hole[static_cast<size_t>(f)]) continue;
            // top point of the cycle: vertices plus arc tops
            bool have_p = false;
            Pt p;
            auto consider = [&](const Pt& q) {
                if (!have_p || q.y > p.y || (q.y == p.y && q.x < p.x)) { p = q; have_p = true; }
            };
            for (int h : orbit_halves[static_cast<size_t>(f)]) {
                consider(vs.verts()[static_cast<size_t>(halves[static_cast<size_t>(h)].origin)].p);
                const ArrHalf& hh = halves[static_cast<size_t>(h)];
                if (hh.is_arc) {
                    const ArcRec& ar = arcs[static_cast<size_t>(hh.arc_id)];
                    const Circle& c = surf.disk(ar.disk);
                    Rat pf = l1_circle_pos(ar.from), pt = l1_circle_pos(ar.to);
                    Rat pn = Rat(2);  // north
                    bool contains;
                    if (pf == pt) contains = true;  // full circle
                    else if (pf < pt) contains = pf < pn && pn < pt;
                    else contains = pn > pf || pn < pt;
                    if (contains) consider(Pt(c.center.x, c.center.y + c.radius));
                }
            }
            // find a clear ray to high above
            Seg ray;
            bool ray_ok = false;
            for (int k = 0; k < 301 && !ray_ok; ++k) {
                int off = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
                Pt z(p.x + Rat(off, 13), ymax + Rat(2) + Rat(std::abs(off), 7));
                Seg cand(p, z);
                ray_ok = true;
                for (int d = 0; d < surf.disk_count() && ray_ok; ++d) {
                    const Circle& c = surf.disk(d);
                    if (c.on_circle(p)) {
                        if (dot(z - p, p - c.center).sign() <= 0) ray_ok = false;
                    } else if (seg_meets_disk(cand, c)) {
                        ray_ok = false;
                    }
                }
                for (size_t vi = 0; vi < vs.verts().size() && ray_ok; ++vi) {
                    const Pt& q = vs.verts()[vi].p;
                    if (q == p) continue;
                    if (collinear_point_on(cand, q)) ray_ok = false;
                }
                if (ray_ok) ray = cand;
            }
            if (!ray_ok)
                throw gfr_error(Errc::InvalidInstance, "no clear ray for face repair");
            // nearest proper hit among straight fragments
            bool hit = false;
            Rat best_u;
            int best_half = -1;
            Pt best_q;
            for (size_t h = 0; h < halves.size(); h += 2) {
                const ArrHalf& hf = halves[h];
                if (hf.is_arc) continue;
                Seg fr(vs.verts()[static_cast<size_t>(hf.origin)].p,
                       vs.verts()[static_cast<size_t>(hf.target)].p);
                Rat u, v;
                if (seg_contact(ray, fr, &u, &v) != SegContact::Proper) continue;
                if (!hit || u < best_u) {
                    hit = true;
                    best_u = u;
                    best_half = static_cast<int>(h);
                    best_q = ray.at(u);
                }
            }
            if (!hit) {
                unite(f, inf_face);
            } else {
                const ArrHalf& hf = halves[static_cast<size_t>(best_half)];
                int side_face = cross(hf.dir, p - best_q).sign() > 0
                                    ? hf.face
                                    : halves[static_cast<size_t>(hf.twin)].face;
                unite(f, side_face);
            }
        }
    }

    for (size_t h = 0; h < halves.size(); h += 2) {
        const ArrHalf& hf = halves[h];
        if (hf.is_graph || hf.is_arc) continue;
        unite(hf.face, halves[static_cast<size_t>(hf.twin)].face);
    }
    // identification: exterior faces of corresponding arcs
    for (const ArcRec& ar : arcs) {
        if (ar.disk % 2 != 0) continue;
        auto [pd, pfrom] = surf.identify(ar.disk, ar.to);
        auto [pd2, pto] = surf.identify(ar.disk, ar.from);
        (void)pd2;
        bool found = false;
        for (const ArcRec& br : arcs) {
            if (br.disk != pd || !(br.from == pfrom) || !(br.to == pto)) continue;
            unite(halves[static_cast<size_t>(ar.cw_half)].face,
                  halves[static_cast<size_t>(br.cw_half)].face);
            found = true;
            break;
        }
        if (!found)
            throw gfr_error(Errc::InvalidInstance, "identified arc missing from arrangement");
    }

    // region ids over live classes
    std::map<int, int> class_to_region;
    RegionDecomposition out_rd;
    auto region_of_face = [&](int f) {
        int c = find(f);
        auto it = class_to_region.find(c);
        if (it != class_to_region.end()) return it->second;
        int id = static_cast<int>(out_rd.regions.size());
        out_rd.regions.push_back({});
        class_to_region.emplace(c, id);
        return id;
    };

    // left region of each directed graph edge, via its chain fragments
    std::vector<int> left_region(2 * g.edges.size(), -1);
    {
        // map (edge, piece, seg index) -> global segment slot
        std::map<std::pair<int, std::pair<int, int>>, size_t> slot_of;
        for (size_t i = 0; i < segkeys.size(); ++i) {
            const Strand& st = strands[static_cast<size_t>(segkeys[i].strand)];
            if (!st.is_graph) continue;
            slot_of[{st.edge, {st.piece, segkeys[i].seg}}] = i;
        }
        for (size_t ei = 0; ei < g.edges.size(); ++ei) {
            int lf = -1, rf = -1;
            for (size_t pi = 0; pi < g.edges[ei].chain.pieces.size(); ++pi) {
                for (size_t sk = 0; sk < g.edges[ei].chain.pieces[pi].seg_count(); ++sk) {
                    size_t gslot = slot_of.at({static_cast<int>(ei),
                                               {static_cast<int>(pi), static_cast<int>(sk)}});
                    for (int hf : seg_frag_halves[gslot]) {
                        int fl = region_of_face(halves[static_cast<size_t>(hf)].face);
                        int fr = region_of_face(
                            halves[static_cast<size_t>(halves[static_cast<size_t>(hf)].twin)].face);
                        if (lf == -1) { lf = fl; rf = fr; }
                        if (fl != lf || fr != rf)
                            throw gfr_error(Errc::InvalidInstance,
                                            "inconsistent region along an edge");
                    }
                }
            }
            left_region[2 * ei] = lf;
            left_region[2 * ei + 1] = rf;
        }
    }

    // walks -> regions
    out_rd.region_of_walk.assign(g.walks.size(), -1);
    for (size_t wi = 0; wi < g.walks.size(); ++wi) {
        int reg = -1;
        for (DirEdge d : g.walks[wi].edges) {
            int r = left_region[static_cast<size_t>(d)];
            if (reg == -1) reg = r;
            if (r != reg)
                throw gfr_error(Errc::InvalidInstance, "walk borders two regions");
        }
        out_rd.region_of_walk[wi] = reg;
        out_rd.regions[static_cast<size_t>(reg)].walks.push_back(static_cast<int>(wi));
    }
    for (Region& r : out_rd.regions) {
        std::sort(r.walks.begin(), r.walks.end());
        r.trivial = r.walks.size() <= 1;
    }

    // region of every inter-crossing piece of every curve in 0..2g
    out_rd.curve_pieces.assign(static_cast<size_t>(2 * gen + 1), {});
    // polyline curves: fragments in strand order with their region
    for (const Strand& st : strands) {
        if (st.is_graph) continue;
        int ci = st.curve;
        const RefCurve& rc = g.curves.at(ci);
        const auto& crossings = g.curve_crossings[static_cast<size_t>(ci)];
        std::vector<int>& pieces = out_rd.curve_pieces[static_cast<size_t>(ci)];
        // gather fragment regions with their starting t, in curve order
        std::vector<std::pair<Rat, int>> frag_regions;
        for (size_t i = 0; i < segkeys.size(); ++i) {
            const Strand& so = strands[static_cast<size_t>(segkeys[i].strand)];
            if (so.poly != st.poly || so.curve != ci) continue;
            std::vector<Rat> cuts = splits[i];
            cuts.push_back(Rat(0));
            cuts.push_back(Rat(1));
            std::sort(cuts.begin(), cuts.end());
            cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
            for (size_t k = 0; k + 1 < cuts.size(); ++k) {
                Rat tmid_param = (cuts[k] + cuts[k + 1]) / Rat(2);
                Rat tval = rc.t_on_segment(g.curves.cum_l1[static_cast<size_t>(ci)],
                                           static_cast<size_t>(segkeys[i].seg), tmid_param);
                int hf = seg_frag_halves[i][k];
                frag_regions.emplace_back(tval, region_of_face(halves[static_cast<size_t>(hf)].face));
            }
        }
        std::sort(frag_regions.begin(), frag_regions.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        size_t piece_count =
            crossings.empty() ? 1 : (rc.closed ? crossings.size() : crossings.size() + 1);
        pieces.assign(piece_count, -1);
        auto crossing_t = [&](size_t k) {
            const auto& [e, s] = crossings[k];
            return g.edges[static_cast<size_t>(e)].crossings[static_cast<size_t>(s)].t;
        };
        for (const auto& [t, reg] : frag_regions) {
            size_t idx;
            if (crossings.empty()) {
                idx = 0;
            } else if (rc.closed) {
                // piece i covers (t_i, t_{i+1}) cyclically
                idx = crossings.size() - 1;  // wrap piece by default
                for (size_t k = 0; k + 1 < crossings.size(); ++k)
                    if (crossing_t(k) < t && t < crossing_t(k + 1)) { idx = k; break; }
                if (t < crossing_t(0) || t > crossing_t(crossings.size() - 1))
                    idx = crossings.size() - 1;
            } else {
                idx = crossings.size();
                for (size_t k = 0; k < crossings.size(); ++k)
                    if (t < crossing_t(k)) { idx = k; break; }
            }
            if (pieces[idx] == -1) pieces[idx] = reg;
            else if (pieces[idx] != reg)
                throw gfr_error(Errc::InvalidInstance, "curve piece spans two regions");
        }
        for (int& reg : pieces)
            if (reg == -1)
                throw gfr_error(Errc::InvalidInstance, "curve piece has no fragment");
    }
    // mu curves: arcs of the pair's first circle with t intervals
    for (int pi = 0; pi < gen; ++pi) {
        int ci = 1 + pi;
        const auto& crossings = g.curve_crossings[static_cast<size_t>(ci)];
        std::vector<int>& pieces = out_rd.curve_pieces[static_cast<size_t>(ci)];
        size_t piece_count = crossings.empty() ? 1 : crossings.size();
        pieces.assign(piece_count, -1);
        auto crossing_t = [&](size_t k) {
            const auto& [e, s] = crossings[k];
            return g.edges[static_cast<size_t>(e)].crossings[static_cast<size_t>(s)].t;
        };
        for (const ArcRec& ar : arcs) {
            if (ar.disk != 2 * pi) continue;
            // midpoint t of the arc (from -> to ccw)
            Rat tf = mu_t_value(surf, pi, ar.from);
            Rat tt = mu_t_value(surf, pi, ar.to);
            Rat span = (tt - tf).mod1();
            if (span.is_zero()) span = Rat(1);  // single-mark full circle
            Rat tmid = (tf + span / Rat(2)).mod1();
            int reg = region_of_face(halves[static_cast<size_t>(ar.cw_half)].face);
            size_t idx = 0;
            if (!crossings.empty()) {
                idx = crossings.size() - 1;
                for (size_t k = 0; k + 1 < crossings.size(); ++k)
                    if (crossing_t(k) < tmid && tmid < crossing_t(k + 1)) { idx = k; break; }
                if (tmid < crossing_t(0) || tmid > crossing_t(crossings.size() - 1))
                    idx = crossings.size() - 1;
            }
            if (pieces[idx] == -1) pieces[idx] = reg;
            else if (pieces[idx] != reg)
                throw gfr_error(Errc::InvalidInstance, "mu piece spans two regions");
        }
        for (int& reg : pieces)
            if (reg == -1)
                throw gfr_error(Errc::InvalidInstance, "mu piece has no arc");
    }

    // render geometry: one cycle per orbit, tagged with its final region
    out_rd.unbounded_region = region_of_face(inf_face);
    for (int f = 0; f < nfaces; ++f) {
        RenderCycle rc;
        bool interior = true;
        for (int h : orbit_halves[static_cast<size_t>(f)]) {
            const ArrHalf& hh = halves[static_cast<size_t>(h)];
            interior = interior && hh.is_arc && hh.arc_ccw;
            RenderPiece piece;
            piece.a = vs.verts()[static_cast<size_t>(hh.origin)].p;
            piece.b = vs.verts()[static_cast<size_t>(hh.target)].p;
            if (hh.is_arc) {
                piece.is_arc = true;
                const Circle& c = surf.disk(hh.arc_disk);
                piece.center = c.center;
                piece.radius = c.radius;
                piece.ccw = hh.arc_ccw;
            }
            rc.pieces.push_back(piece);
        }
        rc.region = interior ? -1 : region_of_face(f);
        out_rd.render_cycles.push_back(std::move(rc));
    }

    return out_rd;
}

}  // namespace gfr

#endif  // GFR_REGIONS_HPP
