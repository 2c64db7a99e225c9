// Instance generation and the canonical file format.
//
// Files are UTF-8 text, one record per line, every number an exact
// rational "p/q" in lowest terms with positive denominator.  Saving is
// canonical, so save(load(file)) reproduces the file byte for byte.
// Grammar (in order):
//
//   gfr-instance 1
//   genus <g>
//   pair <i> <cx> <cy> <r> <cx2> <cy2>
//   lambda <i> <x> <y> <x> <y> ...
//   node <id> <x> <y>
//   edge <id> <u> <v>
//   piece <x> <y> <x> <y> ...          (chain lines follow their edge)
//   portal <disk> <cos> <sin>          (exact unit direction on the circle)
//   route <S> <T>
//   gamma <x> <y> <x> <y> ...
//   seed <text>                        (optional provenance note)

#ifndef GFR_INSTANCE_HPP
#define GFR_INSTANCE_HPP

#include <gfr/agent.hpp>
#include <gfr/embedding.hpp>
#include <gfr/surface.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gfr {

struct InstanceFile {
    int format_version = 1;
    int genus = 0;
    std::vector<PairSpec> pairs;
    std::vector<Polyline> lambdas;
    std::vector<Pt> nodes;
    struct EdgeRec {
        int u = 0, v = 0;
        EdgeChain chain;
    };
    std::vector<EdgeRec> edges;
    int src = 0, dst = 0;
    Polyline gamma;
    std::string seed_note;

    Surface build_surface() const { return Surface::build(pairs, lambdas); }

    EmbeddedGraph build(int crossing_bound = 16) const {
        std::vector<Node> ns;
        for (const Pt& p : nodes) ns.push_back({p});
        std::vector<std::pair<std::pair<int, int>, EdgeChain>> es;
        for (const EdgeRec& e : edges) es.push_back({{e.u, e.v}, e.chain});
        return EmbeddedGraph::build(build_surface(), std::move(ns), std::move(es), gamma, src,
                                    dst, crossing_bound);
    }
};

// ---------------------------------------------------------------------------
// persistence

namespace detail {

inline void write_poly(std::ostream& os, const Polyline& p) {
    for (size_t i = 0; i < p.pts.size(); ++i)
        os << (i ? " " : "") << p.pts[i].x.str() << " " << p.pts[i].y.str();
}

struct LineParser {
    std::istringstream ss;
    int line_no;
    explicit LineParser(const std::string& line, int no) : ss(line), line_no(no) {}
    std::string word(const char* what) {
        std::string w;
        if (!(ss >> w))
            throw gfr_error(Errc::ParseError,
                            "line " + std::to_string(line_no) + ": missing " + what);
        return w;
    }
    Rat rat(const char* what) {
        std::string w = word(what);
        try {
            return Rat::parse(w);
        } catch (const std::exception&) {
            throw gfr_error(Errc::ParseError, "line " + std::to_string(line_no) +
                                                  ": bad rational '" + w + "' for " + what);
        }
    }
    int num(const char* what) {
        std::string w = word(what);
        try {
            return std::stoi(w);
        } catch (const std::exception&) {
            throw gfr_error(Errc::ParseError, "line " + std::to_string(line_no) +
                                                  ": bad integer '" + w + "' for " + what);
        }
    }
    bool more() {
        ss >> std::ws;
        return ss.peek() != EOF;
    }
};

inline Polyline parse_poly(LineParser& lp) {
    Polyline p;
    while (lp.more()) {
        Rat x = lp.rat("x");
        Rat y = lp.rat("y");
        p.pts.emplace_back(std::move(x), std::move(y));
    }
    if (p.pts.size() < 2)
        throw gfr_error(Errc::ParseError,
                        "line " + std::to_string(lp.line_no) + ": polyline needs two points");
    return p;
}

}  // namespace detail

inline std::string save_text(const InstanceFile& inst) {
    std::ostringstream os;
    os << "gfr-instance " << inst.format_version << "\n";
    os << "genus " << inst.genus << "\n";
    for (size_t i = 0; i < inst.pairs.size(); ++i) {
        const PairSpec& ps = inst.pairs[i];
        os << "pair " << i << " " << ps.center1.x.str() << " " << ps.center1.y.str() << " "
           << ps.radius1.str() << " " << ps.center2.x.str() << " " << ps.center2.y.str() << "\n";
    }
    for (size_t i = 0; i < inst.lambdas.size(); ++i) {
        os << "lambda " << i << " ";
        detail::write_poly(os, inst.lambdas[i]);
        os << "\n";
    }
    for (size_t i = 0; i < inst.nodes.size(); ++i)
        os << "node " << i << " " << inst.nodes[i].x.str() << " " << inst.nodes[i].y.str() << "\n";
    for (size_t i = 0; i < inst.edges.size(); ++i) {
        const InstanceFile::EdgeRec& e = inst.edges[i];
        os << "edge " << i << " " << e.u << " " << e.v << "\n";
        for (size_t pi = 0; pi < e.chain.pieces.size(); ++pi) {
            os << "piece ";
            detail::write_poly(os, e.chain.pieces[pi]);
            os << "\n";
            if (pi < e.chain.portals.size()) {
                const Portal& po = e.chain.portals[pi];
                os << "portal " << po.disk << " " << po.dir.c.str() << " " << po.dir.s.str()
                   << "\n";
            }
        }
    }
    os << "route " << inst.src << " " << inst.dst << "\n";
    os << "gamma ";
    detail::write_poly(os, inst.gamma);
    os << "\n";
    if (!inst.seed_note.empty()) os << "seed " << inst.seed_note << "\n";
    return os.str();
}

inline InstanceFile load_text(const std::string& text) {
    InstanceFile inst;
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    bool have_header = false, have_route = false, have_gamma = false;
    InstanceFile::EdgeRec* open_edge = nullptr;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        detail::LineParser lp(line, line_no);
        std::string kw = lp.word("keyword");
        if (!have_header) {
            if (kw != "gfr-instance")
                throw gfr_error(Errc::ParseError, "line 1: expected gfr-instance header");
            int v = lp.num("version");
            if (v != 1)
                throw gfr_error(Errc::VersionMismatch,
                                "unsupported format version " + std::to_string(v));
            have_header = true;
            continue;
        }
        if (kw == "genus") {
            inst.genus = lp.num("genus");
        } else if (kw == "pair") {
            int idx = lp.num("pair index");
            if (idx != static_cast<int>(inst.pairs.size()))
                throw gfr_error(Errc::ParseError,
                                "line " + std::to_string(line_no) + ": pair out of order");
            PairSpec ps;
            ps.center1.x = lp.rat("cx");
            ps.center1.y = lp.rat("cy");
            ps.radius1 = lp.rat("r");
            ps.radius2 = ps.radius1;
            ps.center2.x = lp.rat("cx2");
            ps.center2.y = lp.rat("cy2");
            inst.pairs.push_back(ps);
        } else if (kw == "lambda") {
            int idx = lp.num("lambda index");
            if (idx != static_cast<int>(inst.lambdas.size()))
                throw gfr_error(Errc::ParseError,
                                "line " + std::to_string(line_no) + ": lambda out of order");
            inst.lambdas.push_back(detail::parse_poly(lp));
        } else if (kw == "node") {
            int idx = lp.num("node id");
            if (idx != static_cast<int>(inst.nodes.size()))
                throw gfr_error(Errc::ParseError,
                                "line " + std::to_string(line_no) + ": node out of order");
            Rat x = lp.rat("x");
            Rat y = lp.rat("y");
            inst.nodes.emplace_back(std::move(x), std::move(y));
        } else if (kw == "edge") {
            int idx = lp.num("edge id");
            if (idx != static_cast<int>(inst.edges.size()))
                throw gfr_error(Errc::ParseError,
                                "line " + std::to_string(line_no) + ": edge out of order");
            InstanceFile::EdgeRec e;
            e.u = lp.num("u");
            e.v = lp.num("v");
            inst.edges.push_back(e);
            open_edge = &inst.edges.back();
        } else if (kw == "piece") {
            if (!open_edge)
                throw gfr_error(Errc::ParseError,
                                "line " + std::to_string(line_no) + ": piece outside an edge");
            open_edge->chain.pieces.push_back(detail::parse_poly(lp));
        } else if (kw == "portal") {
            if (!open_edge || open_edge->chain.pieces.empty())
                throw gfr_error(Errc::ParseError,
                                "line " + std::to_string(line_no) + ": portal needs a piece");
            Portal po;
            po.disk = lp.num("disk");
            po.dir.c = lp.rat("cos");
            po.dir.s = lp.rat("sin");
            if (!po.dir.unit())
                throw gfr_error(Errc::ParseError, "line " + std::to_string(line_no) +
                                                      ": portal direction is not unit");
            open_edge->chain.portals.push_back(po);
        } else if (kw == "route") {
            inst.src = lp.num("S");
            inst.dst = lp.num("T");
            have_route = true;
            open_edge = nullptr;
        } else if (kw == "gamma") {
            inst.gamma = detail::parse_poly(lp);
            have_gamma = true;
            open_edge = nullptr;
        } else if (kw == "seed") {
            std::string rest, w;
            while (lp.more()) {
                w = lp.word("note");
                rest += rest.empty() ? w : " " + w;
            }
            inst.seed_note = rest;
        } else {
            throw gfr_error(Errc::ParseError,
                            "line " + std::to_string(line_no) + ": unknown keyword " + kw);
        }
    }
    if (!have_header) throw gfr_error(Errc::ParseError, "empty file");
    if (!have_route || !have_gamma)
        throw gfr_error(Errc::ParseError, "missing route or gamma section");
    if (static_cast<int>(inst.pairs.size()) != inst.genus)
        throw gfr_error(Errc::ParseError, "pair count does not match genus");
    return inst;
}

inline void save(const InstanceFile& inst, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw gfr_error(Errc::ParseError, "cannot open " + path + " for writing");
    f << save_text(inst);
}

inline InstanceFile load(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw gfr_error(Errc::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return load_text(buf.str());
}

// ---------------------------------------------------------------------------
// generators

namespace detail {

// splitmix64: deterministic across platforms
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }
    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }
};

inline InstanceFile surface_part(int genus) {
    InstanceFile inst;
    inst.genus = genus;
    for (int i = 1; i <= genus; ++i) {
        PairSpec ps;
        ps.center1 = Pt(Rat(4 * i - 3), Rat(0));
        ps.radius1 = Rat(1, 2);
        ps.radius2 = Rat(1, 2);
        ps.center2 = Pt(Rat(4 * i - 1), Rat(0));
        inst.pairs.push_back(ps);
        Polyline lam;
        lam.pts = {Pt(Rat(8 * i - 5, 2), Rat(0)), Pt(Rat(8 * i - 3, 2), Rat(0))};
        inst.lambdas.push_back(lam);
    }
    return inst;
}

}  // namespace detail

// Deterministic connected instance on the standard surface: grid nodes, a
// geometric spanning tree of straight edges, extra chords, and handle
// edges that create non-separating cycles.  Pure function of (g, n, seed).
inline InstanceFile random_instance(int genus, int n, uint64_t seed) {
    if (n < 2) throw gfr_error(Errc::GenerationExhausted, "need at least two nodes");
    const long long kGrid = 1 << 16;
    for (uint64_t attempt = 0; attempt < 24; ++attempt) {
        detail::Rng rng(seed * 1000003ull + attempt * 7919ull + 1);
        InstanceFile inst = detail::surface_part(genus);
        Surface surf = inst.build_surface();
        // node placement on the rational grid, clear of disks and the axis
        long long x_lo = -2 * kGrid, x_hi = (4 * genus + 2) * kGrid;
        if (genus == 0) x_hi = 4 * kGrid;
        long long y_lo = -3 * kGrid, y_hi = 3 * kGrid;
        std::vector<Pt> pts;
        int tries = 0;
        while (static_cast<int>(pts.size()) < n && tries++ < 40 * n) {
            Pt p(Rat(rng.range(x_lo, x_hi), kGrid), Rat(rng.range(y_lo, y_hi), kGrid));
            if (p.y.is_zero()) continue;  // keep off the lambda axis
            bool bad = surf.point_in_some_disk(p);
            for (const Pt& q : pts) bad = bad || q == p;
            // keep a little clearance from the disks so portal approaches fit
            for (int d = 0; d < surf.disk_count() && !bad; ++d) {
                Rat rr = surf.disk(d).radius * Rat(11, 10);
                if (sq_dist(surf.disk(d).center, p) <= rr * rr) bad = true;
            }
            if (!bad) pts.push_back(p);
        }
        if (static_cast<int>(pts.size()) < n) continue;
        inst.nodes = pts;

        // straight segment validity against disks, nodes, and used segments
        std::vector<Seg> used;
        auto seg_ok = [&](const Seg& s, int su, int sv) {
            if (s.a == s.b) return false;
            for (int d = 0; d < surf.disk_count(); ++d)
                if (seg_meets_disk(s, surf.disk(d))) return false;
            for (size_t i = 0; i < pts.size(); ++i) {
                if (static_cast<int>(i) == su || static_cast<int>(i) == sv) continue;
                if (collinear_point_on(s, pts[i])) return false;
            }
            for (const Seg& t : used) {
                SegContact ct = seg_contact(s, t);
                if (ct == SegContact::None) continue;
                if (ct != SegContact::Touch) return false;
                // touch allowed only at a shared node endpoint
                bool ok = false;
                for (const Pt* sp : {&s.a, &s.b})
                    for (const Pt* tp : {&t.a, &t.b})
                        if (*sp == *tp && collinear_point_on(s, *sp) && collinear_point_on(t, *sp))
                            ok = true;
                if (!ok) return false;
            }
            return true;
        };

        std::vector<std::pair<std::pair<int, int>, EdgeChain>> chains;
        auto add_straight = [&](int u, int v) {
            Seg s(pts[static_cast<size_t>(u)], pts[static_cast<size_t>(v)]);
            if (!seg_ok(s, u, v)) return false;
            EdgeChain ch;
            Polyline p;
            p.pts = {s.a, s.b};
            ch.pieces.push_back(p);
            chains.push_back({{u, v}, ch});
            used.push_back(s);
            return true;
        };

        // geometric spanning tree, nearest-candidate first
        std::vector<bool> in_tree(static_cast<size_t>(n), false);
        in_tree[0] = true;
        int joined = 1;
        int stall = 0;
        while (joined < n && stall < 8 * n) {
            int v = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
            if (in_tree[static_cast<size_t>(v)]) { ++stall; continue; }
            // nearest tree nodes first
            std::vector<std::pair<Rat, int>> cand;
            for (int u = 0; u < n; ++u)
                if (in_tree[static_cast<size_t>(u)])
                    cand.emplace_back(l1_len(pts[static_cast<size_t>(u)], pts[static_cast<size_t>(v)]), u);
            std::sort(cand.begin(), cand.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            bool done = false;
            for (size_t k = 0; k < cand.size() && k < 6 && !done; ++k)
                done = add_straight(cand[k].second, v);
            if (done) {
                in_tree[static_cast<size_t>(v)] = true;
                ++joined;
                stall = 0;
            } else {
                ++stall;
            }
        }
        if (joined < n) continue;

        // extra chords
        int extras = n / 4 + static_cast<int>(rng.below(2));
        for (int k = 0; k < extras; ++k) {
            int u = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
            std::vector<std::pair<Rat, int>> cand;
            for (int v = 0; v < n; ++v)
                if (v != u)
                    cand.emplace_back(l1_len(pts[static_cast<size_t>(u)], pts[static_cast<size_t>(v)]), v);
            std::sort(cand.begin(), cand.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (size_t i = 1; i < cand.size() && i < 5; ++i)
                if (add_straight(u, cand[i].second)) break;
        }

        // handle edges: a portal pass per handle when geometry allows,
        // creating a non-separating cycle with the tree path
        for (int h = 0; h < genus; ++h) {
            if (rng.below(8) == 0 && genus > 1) continue;  // leave some handles untouched
            bool placed = false;
            for (int t = 0; t < 24 && !placed; ++t) {
                // rational direction via the half-angle tangent
                Rat half(rng.range(-40, 40), 1 + static_cast<long long>(rng.below(12)));
                Dir dir = Dir::from_half_tangent(half);
                int disk = 2 * h + static_cast<int>(rng.below(2));
                Pt enter = surf.disk(disk).point_at(dir);
                auto [pd, pdir] = surf.identify(disk, dir);
                Pt exit = surf.disk(pd).point_at(pdir);
                // nearest nodes with a clean radial-ish approach
                auto approach = [&](const Pt& on, int avoid_disk) {
                    std::vector<std::pair<Rat, int>> cand;
                    for (int u = 0; u < n; ++u)
                        cand.emplace_back(l1_len(pts[static_cast<size_t>(u)], on), u);
                    std::sort(cand.begin(), cand.end(),
                              [](const auto& a, const auto& b) { return a.first < b.first; });
                    (void)avoid_disk;
                    return cand;
                };
                auto ok_terminal = [&](const Seg& s, int su, int on_disk) {
                    if (s.a == s.b) return false;
                    // segment from node to the circle point: outside all
                    // disks except the terminal touch
                    for (int d = 0; d < surf.disk_count(); ++d) {
                        const Circle& c = surf.disk(d);
                        if (d == on_disk) {
                            if (seg_meets_open_disk(s, c)) return false;
                            if (dot(s.a - s.b, s.b - c.center).sign() <= 0) return false;
                        } else if (seg_meets_disk(s, c)) {
                            return false;
                        }
                    }
                    for (size_t i = 0; i < pts.size(); ++i) {
                        if (static_cast<int>(i) == su) continue;
                        if (collinear_point_on(s, pts[i])) return false;
                    }
                    for (const Seg& t : used) {
                        SegContact ct = seg_contact(s, t);
                        if (ct == SegContact::None) continue;
                        if (ct != SegContact::Touch) return false;
                        bool okp = false;
                        for (const Pt* tp : {&t.a, &t.b})
                            if (*tp == s.a) okp = true;
                        if (!okp) return false;
                    }
                    return true;
                };
                auto ca = approach(enter, disk);
                auto cb = approach(exit, pd);
                for (size_t i = 0; i < ca.size() && i < 4 && !placed; ++i)
                    for (size_t j = 0; j < cb.size() && j < 4 && !placed; ++j) {
                        int u = ca[i].second, v = cb[j].second;
                        if (u == v) continue;
                        Seg s1(pts[static_cast<size_t>(u)], enter);
                        Seg s2(exit, pts[static_cast<size_t>(v)]);
                        Seg s2r(pts[static_cast<size_t>(v)], exit);
                        if (!ok_terminal(s1, u, disk) || !ok_terminal(s2r, v, pd)) continue;
                        if (seg_contact(s1, s2) != SegContact::None) continue;
                        EdgeChain ch;
                        Polyline p1, p2;
                        p1.pts = {s1.a, s1.b};
                        p2.pts = {s2.a, s2.b};
                        ch.pieces = {p1, p2};
                        ch.portals = {Portal{disk, dir}};
                        chains.push_back({{u, v}, ch});
                        used.push_back(s1);
                        used.push_back(s2);
                        placed = true;
                    }
            }
        }

        for (auto& [uv, ch] : chains)
            inst.edges.push_back(InstanceFile::EdgeRec{uv.first, uv.second, ch});

        // route endpoints and the connecting curve, re-bent while it sits in
        // general position
        for (int rt = 0; rt < 12; ++rt) {
            int s_id = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
            int t_id = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
            if (s_id == t_id) continue;
            inst.src = s_id;
            inst.dst = t_id;
            Polyline base;
            try {
                base = connecting_curve(surf, pts[static_cast<size_t>(s_id)],
                                        pts[static_cast<size_t>(t_id)]);
            } catch (const gfr_error&) {
                continue;
            }
            for (int bend = 0; bend < 6; ++bend) {
                Polyline gamma = base;
                if (bend > 0) {
                    // deterministic mid-vertex nudge to restore generality
                    size_t mid = gamma.pts.size() / 2;
                    Pt a = gamma.pts[mid - 1], b = gamma.pts[mid];
                    Pt m((a.x + b.x) / Rat(2), (a.y + b.y) / Rat(2) + Rat(bend, 64));
                    gamma.pts.insert(gamma.pts.begin() + static_cast<long>(mid), m);
                }
                inst.gamma = gamma;
                try {
                    inst.build();
                    std::ostringstream note;
                    note << "g=" << genus << " n=" << n << " seed=" << seed;
                    inst.seed_note = note.str();
                    return inst;
                } catch (const gfr_error&) {
                    continue;
                }
            }
        }
    }
    throw gfr_error(Errc::GenerationExhausted,
                    "no valid instance for these parameters; change the seed");
}

inline InstanceFile standard_instance_shell(int genus) { return detail::surface_part(genus); }

// The torus trap: classic face routing repeats a face-progress state while
// the generalized search delivers through the handle.
inline InstanceFile fr_trap(int genus = 1) {
    if (genus < 1) throw gfr_error(Errc::InvalidInstance, "the trap needs a handle");
    InstanceFile inst = detail::surface_part(genus);
    inst.nodes = {Pt(0, -1),
                  Pt(1, -2),
                  Pt(3, -2),
                  Pt(2, Rat(-12, 5)),
                  Pt(Rat(17, 10), Rat(-13, 10)),
                  Pt(Rat(23, 10), Rat(-13, 10)),
                  Pt(Rat(23, 10), Rat(-17, 10)),
                  Pt(Rat(17, 10), Rat(-17, 10)),
                  Pt(2, Rat(-29, 20))};
    Surface surf = inst.build_surface();
    auto straight = [&](int u, int v) {
        EdgeChain ch;
        Polyline p;
        p.pts = {inst.nodes[static_cast<size_t>(u)], inst.nodes[static_cast<size_t>(v)]};
        ch.pieces.push_back(p);
        inst.edges.push_back(InstanceFile::EdgeRec{u, v, ch});
    };
    {
        EdgeChain ch;
        Dir down(Rat(0), Rat(-1));
        Polyline p1, p2;
        p1.pts = {inst.nodes[1], surf.disk(0).point_at(down)};
        auto [pd, pdir] = surf.identify(0, down);
        p2.pts = {surf.disk(pd).point_at(pdir), inst.nodes[2]};
        ch.pieces = {p1, p2};
        ch.portals = {Portal{0, down}};
        inst.edges.push_back(InstanceFile::EdgeRec{1, 2, ch});
    }
    straight(2, 3);
    straight(3, 1);
    straight(1, 0);
    straight(3, 7);
    straight(7, 4);
    straight(4, 5);
    straight(5, 6);
    straight(6, 7);
    straight(4, 8);
    inst.src = 0;
    inst.dst = 8;
    inst.gamma.pts = {inst.nodes[0],          Pt(Rat(9, 10), Rat(-5, 2)),
                      Pt(Rat(1, 2), Rat(-6, 5)), Pt(Rat(13, 10), Rat(-13, 5)),
                      Pt(Rat(9, 2), Rat(-14, 5)), Pt(Rat(9, 2), Rat(6, 5)),
                      Pt(2, Rat(6, 5)),       inst.nodes[8]};
    inst.seed_note = "fr-trap";
    return inst;
}

// A genus-4 showcase: rooms around the first three handles bridged in a
// row, the destination tucked inside the second ring, and gamma threading
// the rings, so the search must hop non-trivial walks before the final
// stretch.
inline InstanceFile fig2_instance() {
    InstanceFile inst = detail::surface_part(4);
    auto square = [&](int cx) {
        std::vector<Pt> c = {Pt(Rat(10 * cx - 7, 10), Rat(-4, 5)),
                             Pt(Rat(10 * cx + 7, 10), Rat(-4, 5)),
                             Pt(Rat(10 * cx + 7, 10), Rat(4, 5)),
                             Pt(Rat(10 * cx - 7, 10), Rat(4, 5))};
        return c;
    };
    // nodes: squares around disks at x = 1, 5, 9 plus S and T
    std::vector<Pt> p1 = square(1), p2 = square(5), p3 = square(9);
    inst.nodes.insert(inst.nodes.end(), p1.begin(), p1.end());      // 0..3
    inst.nodes.insert(inst.nodes.end(), p2.begin(), p2.end());      // 4..7
    inst.nodes.insert(inst.nodes.end(), p3.begin(), p3.end());      // 8..11
    inst.nodes.push_back(Pt(Rat(-6, 5), Rat(-1)));                  // 12 S
    inst.nodes.push_back(Pt(5, Rat(-13, 20)));                      // 13 T
    auto straight = [&](int u, int v) {
        EdgeChain ch;
        Polyline p;
        p.pts = {inst.nodes[static_cast<size_t>(u)], inst.nodes[static_cast<size_t>(v)]};
        ch.pieces.push_back(p);
        inst.edges.push_back(InstanceFile::EdgeRec{u, v, ch});
    };
    for (int s = 0; s < 3; ++s) {
        int b = 4 * s;
        straight(b + 0, b + 1);
        straight(b + 1, b + 2);
        straight(b + 2, b + 3);
        straight(b + 3, b + 0);
    }
    straight(1, 4);    // bridge ring1 -> ring2 along y = -4/5
    straight(5, 8);    // bridge ring2 -> ring3
    straight(0, 12);   // S spur
    straight(4, 13);   // T spur into ring2
    inst.src = 12;
    inst.dst = 13;
    inst.gamma.pts = {inst.nodes[12],        Pt(0, Rat(-13, 20)), Pt(1, Rat(-13, 20)),
                      Pt(Rat(11, 5), Rat(-13, 20)), Pt(Rat(21, 5), Rat(-13, 20)),
                      inst.nodes[13]};
    inst.seed_note = "fig2-like genus 4";
    return inst;
}

}  // namespace gfr

#endif  // GFR_INSTANCE_HPP
