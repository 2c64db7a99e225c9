// The genus-g surface in its planar representation: the plane minus 2g
// disks whose boundary circles are identified in pairs, plus the canonical
// homology basis (mu_i = identified circle pair i, lambda_i = connector
// arc i, closed through the identification).
//
// All curve parametrizations use taxicab arclength so that t-values of
// rational points are rational; ordering along a curve and the reversal
// law t_rev = (1 - t) mod 1 hold exactly.

#ifndef GFR_SURFACE_HPP
#define GFR_SURFACE_HPP

#include <gfr/errors.hpp>
#include <gfr/geometry.hpp>

#include <algorithm>
#include <utility>
#include <vector>

namespace gfr {

struct DiskPair {
    Circle first, second;
    Dir attach_first, attach_second;  // lambda endpoints on the two circles
};

struct PairSpec {
    Pt center1;
    Rat radius1;
    Pt center2;
    Rat radius2;
};

// A point of the surface: either interior to the punctured plane or a
// boundary locus on an identified circle.
struct SurfacePoint {
    bool on_boundary = false;
    Pt position;   // interior case
    int disk = -1; // boundary case: global disk id (pair p -> disks 2p, 2p+1)
    Dir locus;

    static SurfacePoint interior(Pt p) {
        SurfacePoint sp;
        sp.position = std::move(p);
        return sp;
    }
    static SurfacePoint boundary(int disk_id, Dir d) {
        SurfacePoint sp;
        sp.on_boundary = true;
        sp.disk = disk_id;
        sp.locus = std::move(d);
        return sp;
    }
};

class Surface {
public:
    Surface() = default;

    int genus() const { return static_cast<int>(pairs_.size()); }
    const std::vector<DiskPair>& pairs() const { return pairs_; }
    const std::vector<Polyline>& lambda_arcs() const { return lambdas_; }

    int disk_count() const { return 2 * genus(); }
    const Circle& disk(int disk_id) const {
        return disk_id % 2 == 0 ? pairs_[disk_id / 2].first : pairs_[disk_id / 2].second;
    }
    const Dir& attach(int disk_id) const {
        return disk_id % 2 == 0 ? pairs_[disk_id / 2].attach_first
                                : pairs_[disk_id / 2].attach_second;
    }
    int partner_disk(int disk_id) const { return disk_id ^ 1; }

    // The orientation-reversing circle identification: theta |-> theta0 +
    // theta0' - theta, expressed on unit directions as u |-> a * a' * conj(u).
    // It is an involution and maps the lambda attachment to the lambda
    // attachment.
    std::pair<int, Dir> identify(int disk_id, const Dir& u) const {
        const DiskPair& dp = pairs_[disk_id / 2];
        Dir image = dp.attach_first * dp.attach_second * u.conj();
        return {partner_disk(disk_id), image};
    }

    bool point_in_some_disk(const Pt& p, bool closed = true) const {
        for (const DiskPair& dp : pairs_) {
            Rat r2a = dp.first.radius * dp.first.radius;
            Rat r2b = dp.second.radius * dp.second.radius;
            Rat da = sq_dist(dp.first.center, p), db = sq_dist(dp.second.center, p);
            if (closed ? (da <= r2a || db <= r2b) : (da < r2a || db < r2b)) return true;
        }
        return false;
    }

    static Surface build(const std::vector<PairSpec>& specs,
                         const std::vector<Polyline>& lambda_arcs);

private:
    std::vector<DiskPair> pairs_;
    std::vector<Polyline> lambdas_;
};

inline Surface Surface::build(const std::vector<PairSpec>& specs,
                              const std::vector<Polyline>& lambda_arcs) {
    if (specs.size() != lambda_arcs.size())
        throw gfr_error(Errc::DetachedLambda, "one lambda arc required per disk pair");
    Surface s;
    for (const PairSpec& ps : specs) {
        if (ps.radius1 != ps.radius2)
            throw gfr_error(Errc::MismatchedRadii, "pair radii differ");
        if (ps.radius1.sign() <= 0)
            throw gfr_error(Errc::MismatchedRadii, "radius must be positive");
        DiskPair dp;
        dp.first = Circle(ps.center1, ps.radius1);
        dp.second = Circle(ps.center2, ps.radius2);
        s.pairs_.push_back(dp);
    }
    // pairwise disjoint closed disks
    int n = 2 * static_cast<int>(s.pairs_.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Circle& a = s.disk(i);
            const Circle& b = s.disk(j);
            Rat rr = a.radius + b.radius;
            if (sq_dist(a.center, b.center) <= rr * rr)
                throw gfr_error(Errc::OverlappingDisks,
                                "disks " + std::to_string(i) + " and " + std::to_string(j));
        }
    // lambda arcs: endpoints exactly on their pair's circles, leaving with
    // strictly positive radial speed, otherwise clear of every disk and of
    // each other
    for (size_t i = 0; i < lambda_arcs.size(); ++i) {
        const Polyline& arc = lambda_arcs[i];
        if (arc.pts.size() < 2)
            throw gfr_error(Errc::DetachedLambda, "lambda arc needs at least one segment");
        DiskPair& dp = s.pairs_[i];
        if (!dp.first.on_circle(arc.pts.front()))
            throw gfr_error(Errc::DetachedLambda, "lambda " + std::to_string(i) +
                                                      " start not on first circle");
        if (!dp.second.on_circle(arc.pts.back()))
            throw gfr_error(Errc::DetachedLambda, "lambda " + std::to_string(i) +
                                                      " end not on second circle");
        dp.attach_first = dp.first.dir_of(arc.pts.front());
        dp.attach_second = dp.second.dir_of(arc.pts.back());
        for (size_t k = 0; k + 1 < arc.pts.size(); ++k)
            if (arc.pts[k] == arc.pts[k + 1])
                throw gfr_error(Errc::CurveCollision, "degenerate lambda segment");
        // departure / arrival must be strictly outward radial
        Pt d0 = arc.pts[1] - arc.pts[0];
        if (dot(d0, arc.pts[0] - dp.first.center).sign() <= 0)
            throw gfr_error(Errc::CurveCollision, "lambda tangent or inward at first circle");
        Pt d1 = arc.pts[arc.pts.size() - 2] - arc.pts.back();
        if (dot(d1, arc.pts.back() - dp.second.center).sign() <= 0)
            throw gfr_error(Errc::CurveCollision, "lambda tangent or inward at second circle");
        for (size_t k = 0; k < arc.seg_count(); ++k) {
            Seg sg = arc.seg(k);
            for (int d = 0; d < n; ++d) {
                const Circle& c = s.disk(d);
                bool own_start = (d == static_cast<int>(2 * i) && k == 0);
                bool own_end = (d == static_cast<int>(2 * i + 1) && k == arc.seg_count() - 1);
                if (own_start || own_end) {
                    if (seg_meets_open_disk(sg, c))
                        throw gfr_error(Errc::CurveCollision, "lambda enters its disk");
                } else if (seg_meets_disk(sg, c)) {
                    throw gfr_error(Errc::CurveCollision, "lambda meets a disk");
                }
            }
        }
        // simplicity of the arc itself
        for (size_t k = 0; k < arc.seg_count(); ++k)
            for (size_t m = k + 2; m < arc.seg_count(); ++m)
                if (seg_contact(arc.seg(k), arc.seg(m)) != SegContact::None)
                    throw gfr_error(Errc::CurveCollision, "lambda self-intersects");
    }
    for (size_t i = 0; i < lambda_arcs.size(); ++i)
        for (size_t j = i + 1; j < lambda_arcs.size(); ++j)
            for (size_t k = 0; k < lambda_arcs[i].seg_count(); ++k)
                for (size_t m = 0; m < lambda_arcs[j].seg_count(); ++m)
                    if (seg_contact(lambda_arcs[i].seg(k), lambda_arcs[j].seg(m)) !=
                        SegContact::None)
                        throw gfr_error(Errc::CurveCollision, "lambda arcs intersect");
    s.lambdas_ = lambda_arcs;
    return s;
}

// The canonical surface layout: pair i occupies disks centered (4i-3, 0)
// and (4i-1, 0) with radius 1/2, joined by the straight lambda connector.
inline Surface standard_surface(int genus) {
    std::vector<PairSpec> specs;
    std::vector<Polyline> lambdas;
    for (int i = 1; i <= genus; ++i) {
        PairSpec ps;
        ps.center1 = Pt(Rat(4 * i - 3), Rat(0));
        ps.radius1 = Rat(1, 2);
        ps.center2 = Pt(Rat(4 * i - 1), Rat(0));
        ps.radius2 = Rat(1, 2);
        specs.push_back(ps);
        Polyline lam;
        lam.pts.push_back(Pt(Rat(8 * i - 5, 2), Rat(0)));
        lam.pts.push_back(Pt(Rat(8 * i - 3, 2), Rat(0)));
        lambdas.push_back(lam);
    }
    return Surface::build(specs, lambdas);
}

enum class CurveKind { Gamma, Mu, Lambda };

// One element of the reference family L: gamma, a basis curve, or a
// reversed basis curve.  Index layout for genus g:
//   0            gamma
//   1 .. g       mu_1 .. mu_g
//   g+1 .. 2g    lambda_1 .. lambda_g
//   2g+1 .. 3g   -mu_1 .. -mu_g
//   3g+1 .. 4g   -lambda_1 .. -lambda_g
struct RefCurve {
    int index = 0;
    CurveKind kind = CurveKind::Gamma;
    bool reversed = false;
    int pair_index = -1;  // mu curves
    Polyline poly;        // gamma / lambda geometry (forward orientation)
    Rat total_l1;
    bool closed = false;

    // t-value of the point on polyline segment `seg` with parameter `u`
    // (forward orientation inputs; reversal applied afterwards).
    Rat t_on_segment(const std::vector<Rat>& cum, size_t seg, const Rat& u) const {
        Seg s(poly.pts[seg], poly.pts[seg + 1]);
        Rat t = (cum[seg] + l1_len(s.a, s.at(u))) / total_l1;
        return reversed ? reverse_t(t) : t;
    }

    Rat reverse_t(const Rat& t) const {
        Rat r = Rat(1) - t;
        return closed ? r.mod1() : r;
    }
};

struct CurveTable {
    std::vector<RefCurve> curves;          // indices 0..4g
    std::vector<std::vector<Rat>> cum_l1;  // cumulative taxicab length per polyline curve

    int genus = 0;
    const RefCurve& at(int idx) const { return curves[static_cast<size_t>(idx)]; }
    int size() const { return static_cast<int>(curves.size()); }

    // index of the oppositely oriented curve; gamma uses the internal
    // sentinel kReversedGamma (not part of L).
    static constexpr int kReversedGamma = -2;
    int reversed_index(int idx) const {
        if (idx == 0) return kReversedGamma;
        if (idx == kReversedGamma) return 0;
        return idx <= 2 * genus ? idx + 2 * genus : idx - 2 * genus;
    }
};

// Point of a polyline curve at parameter t (taxicab arclength fraction);
// exact inverse of t_on_segment.
inline Pt polyline_point_at(const RefCurve& rc, const std::vector<Rat>& cum, Rat t) {
    if (rc.reversed) t = rc.reverse_t(t);
    Rat target = t * rc.total_l1;
    for (size_t k = 0; k + 1 < cum.size(); ++k) {
        if (target > cum[k + 1]) continue;
        Seg s(rc.poly.pts[k], rc.poly.pts[k + 1]);
        Rat seg_len = cum[k + 1] - cum[k];
        Rat u = seg_len.is_zero() ? Rat(0) : (target - cum[k]) / seg_len;
        return s.at(u);
    }
    return rc.poly.pts.back();
}

// Taxicab position of direction u around mu_i, measured ccw from the first
// circle's lambda attachment, normalized to [0, 1).
inline Rat mu_t_value(const Surface& surf, int pair, const Dir& u) {
    const DiskPair& dp = surf.pairs()[pair];
    Rat pos = l1_circle_pos(u) - l1_circle_pos(dp.attach_first);
    return (pos / Rat(8)).mod1();
}

// Inverse of mu_t_value; exact on directions that came from rational points.
inline Dir mu_dir_at(const Surface& surf, int pair, const Rat& t) {
    const DiskPair& dp = surf.pairs()[pair];
    Rat pos = (t + l1_circle_pos(dp.attach_first) / Rat(8)).mod1() * Rat(8);
    // quadrant boundaries at taxicab positions 0, 2, 4, 6 starting east
    int quad = 0;
    Rat two(2);
    while (quad < 3 && pos >= two) { pos -= two; ++quad; }
    // Within a quadrant, pos = |c - c0| + |s - s0| from the quadrant's start
    // point; solve with c^2 + s^2 = 1.  disc = 2 - (pos-1)^2 = (|c|+|s|)^2.
    Rat v = pos - Rat(1);
    Rat disc = Rat(2) - v * v;
    Rat root;
    if (!Rat::sqrt_exact(disc, root))
        throw gfr_error(Errc::NotGeneralPosition, "mu position is not a rational point");
    // Quadrant 0 (E->N): c = (-v + root)/2, s = v + c.
    Rat c = (root - v) / Rat(2);
    Rat sRat = v + c;
    switch (quad) {
        case 0: return Dir(c, sRat);
        case 1: return Dir(-sRat, c);
        case 2: return Dir(-c, -sRat);
        default: return Dir(sRat, -c);
    }
}

inline CurveTable reference_curves(const Surface& surf, const Polyline& gamma) {
    CurveTable tab;
    int g = surf.genus();
    tab.genus = g;
    auto add = [&tab](RefCurve rc) {
        rc.index = tab.size();
        tab.curves.push_back(std::move(rc));
    };
    RefCurve gc;
    gc.kind = CurveKind::Gamma;
    gc.poly = gamma;
    gc.total_l1 = gamma.l1_total();
    gc.closed = false;
    add(gc);
    for (int rev = 0; rev < 2; ++rev) {
        for (int i = 0; i < g; ++i) {
            RefCurve mu;
            mu.kind = CurveKind::Mu;
            mu.pair_index = i;
            mu.reversed = rev == 1;
            mu.total_l1 = Rat(8) * surf.pairs()[i].first.radius;
            mu.closed = true;
            add(mu);
        }
        for (int i = 0; i < g; ++i) {
            RefCurve la;
            la.kind = CurveKind::Lambda;
            la.pair_index = i;
            la.reversed = rev == 1;
            la.poly = surf.lambda_arcs()[i];
            la.total_l1 = la.poly.l1_total();
            la.closed = true;
            add(la);
        }
    }
    tab.cum_l1.resize(tab.curves.size());
    for (size_t i = 0; i < tab.curves.size(); ++i) {
        const RefCurve& rc = tab.curves[i];
        if (rc.kind == CurveKind::Mu) continue;
        Rat acc(0);
        std::vector<Rat> cum;
        cum.push_back(acc);
        for (size_t k = 0; k < rc.poly.seg_count(); ++k) {
            acc += l1_len(rc.poly.pts[k], rc.poly.pts[k + 1]);
            cum.push_back(acc);
        }
        tab.cum_l1[i] = std::move(cum);
    }
    return tab;
}

// Strict counterclockwise convex hull (collinear middle points dropped).
inline std::vector<Pt> convex_hull(std::vector<Pt> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Pt> h;
    for (int pass = 0; pass < 2; ++pass) {
        size_t base = h.size();
        for (const Pt& p : pts) {
            while (h.size() >= base + 2 && orient(h[h.size() - 2], h.back(), p) <= 0)
                h.pop_back();
            h.push_back(p);
        }
        h.pop_back();
        std::reverse(pts.begin(), pts.end());
    }
    return h;
}

namespace detail {

// Waypoints (square corners only) routing a around the clearance square K
// to b, circulating counterclockwise or clockwise.
inline std::vector<Pt> square_detour(const std::vector<Pt>& corners_ccw, const Pt& a,
                                     const Pt& b, bool want_ccw) {
    auto tangent_corner = [&](const Pt& p, bool ccw_next) {
        std::vector<Pt> pts = corners_ccw;
        pts.push_back(p);
        std::vector<Pt> h = convex_hull(pts);
        size_t ip = 0;
        while (ip < h.size() && h[ip] != p) ++ip;
        size_t j = ccw_next ? (ip + 1) % h.size() : (ip + h.size() - 1) % h.size();
        return h[j];
    };
    Pt start = tangent_corner(a, want_ccw);
    Pt stop = tangent_corner(b, !want_ccw);
    size_t is = 0, ie = 0;
    for (size_t i = 0; i < corners_ccw.size(); ++i) {
        if (corners_ccw[i] == start) is = i;
        if (corners_ccw[i] == stop) ie = i;
    }
    std::vector<Pt> out;
    size_t n = corners_ccw.size();
    size_t i = is;
    while (true) {
        out.push_back(corners_ccw[i]);
        if (i == ie) break;
        i = want_ccw ? (i + 1) % n : (i + n - 1) % n;
    }
    return out;
}

}  // namespace detail

// Any PL curve in the punctured plane from S to T: the straight segment if
// no disk obstructs, otherwise exact tangent detours around a clearance
// square of inradius 21/20 of the disk radius.
inline Polyline connecting_curve(const Surface& surf, const Pt& S, const Pt& T) {
    Polyline path;
    path.pts = {S, T};
    const Rat kClear(21, 20);
    for (int round = 0; round < 64; ++round) {
        bool changed = false;
        for (size_t k = 0; k < path.seg_count() && !changed; ++k) {
            Seg sg = path.seg(k);
            if (sg.a == sg.b) {
                path.pts.erase(path.pts.begin() + static_cast<long>(k) + 1);
                changed = true;
                break;
            }
            for (int d = 0; d < surf.disk_count(); ++d) {
                const Circle& c = surf.disk(d);
                if (!seg_meets_disk(sg, c)) continue;
                Rat h = c.radius * kClear;
                auto linf = [&](const Pt& p) {
                    Rat dx = p.x - c.center.x, dy = p.y - c.center.y;
                    if (dx.sign() < 0) dx = -dx;
                    if (dy.sign() < 0) dy = -dy;
                    return dx < dy ? dy : dx;
                };
                // endpoints inside the clearance square take a radial hop out
                bool pushed = false;
                for (int endi = 0; endi < 2; ++endi) {
                    const Pt& p = endi == 0 ? sg.a : sg.b;
                    Rat m = linf(p);
                    if (m > h) continue;
                    Rat scale = h * Rat(6, 5) / m;
                    Pt w = Pt(c.center.x + (p.x - c.center.x) * scale,
                              c.center.y + (p.y - c.center.y) * scale);
                    path.pts.insert(path.pts.begin() + static_cast<long>(k) + (endi == 0 ? 1 : 1),
                                    w);
                    pushed = true;
                    break;
                }
                if (pushed) { changed = true; break; }
                std::vector<Pt> corners = {
                    Pt(c.center.x + h, c.center.y + h), Pt(c.center.x - h, c.center.y + h),
                    Pt(c.center.x - h, c.center.y - h), Pt(c.center.x + h, c.center.y - h)};
                bool ccw = orient(sg.a, sg.b, c.center) <= 0;
                std::vector<Pt> way = detail::square_detour(corners, sg.a, sg.b, ccw);
                path.pts.insert(path.pts.begin() + static_cast<long>(k) + 1, way.begin(),
                                way.end());
                changed = true;
                break;
            }
        }
        if (!changed) {
            // drop exact duplicates introduced by tangency corner cases
            for (size_t k = 0; k + 1 < path.pts.size();) {
                if (path.pts[k] == path.pts[k + 1])
                    path.pts.erase(path.pts.begin() + static_cast<long>(k) + 1);
                else
                    ++k;
            }
            return path;
        }
    }
    throw gfr_error(Errc::GenerationExhausted, "connecting curve detour did not converge");
}

}  // namespace gfr

#endif  // GFR_SURFACE_HPP
