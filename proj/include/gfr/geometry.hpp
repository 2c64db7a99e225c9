// Exact planar primitives: points, segments, circles, and the circular
// ordering of directions.  All predicates are decided over rationals; the
// only lengths used anywhere are taxicab lengths, which stay rational.

#ifndef GFR_GEOMETRY_HPP
#define GFR_GEOMETRY_HPP

#include <gfr/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gfr {

struct Pt {
    Rat x, y;

    Pt() = default;
    Pt(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}
    Pt(long long px, long long py) : x(px), y(py) {}

    friend Pt operator+(const Pt& a, const Pt& b) { return Pt(a.x + b.x, a.y + b.y); }
    friend Pt operator-(const Pt& a, const Pt& b) { return Pt(a.x - b.x, a.y - b.y); }
    friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Pt& a, const Pt& b) { return !(a == b); }

    Pt scaled(const Rat& s) const { return Pt(x * s, y * s); }
    std::string str() const { return x.str() + " " + y.str(); }
};

inline bool lex_less(const Pt& a, const Pt& b) {
    int c = Rat::cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return Rat::cmp(a.y, b.y) < 0;
}

inline Rat cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Pt& a, const Pt& b) { return a.x * b.x + a.y * b.y; }

// Sign of the signed area of (a, b, c): +1 when c lies left of a->b.
inline int orient(const Pt& a, const Pt& b, const Pt& c) {
    return cross(b - a, c - a).sign();
}

inline Rat sq_dist(const Pt& a, const Pt& b) {
    Pt d = b - a;
    return d.x * d.x + d.y * d.y;
}

inline Rat l1_len(const Pt& a, const Pt& b) {
    Rat dx = b.x - a.x, dy = b.y - a.y;
    if (dx.sign() < 0) dx = -dx;
    if (dy.sign() < 0) dy = -dy;
    return dx + dy;
}

struct Seg {
    Pt a, b;
    Seg() = default;
    Seg(Pt pa, Pt pb) : a(std::move(pa)), b(std::move(pb)) {}
    Pt dir() const { return b - a; }
    Pt at(const Rat& t) const { return Pt(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t); }
};

inline bool collinear_point_on(const Seg& s, const Pt& p) {
    if (orient(s.a, s.b, p) != 0) return false;
    Rat lo, hi;
    if (s.a.x != s.b.x) {
        lo = p.x - s.a.x; hi = p.x - s.b.x;
    } else {
        lo = p.y - s.a.y; hi = p.y - s.b.y;
    }
    return lo.sign() * hi.sign() <= 0;
}

enum class SegContact {
    None,
    Proper,      // interiors cross transversally
    Touch,       // meet in exactly one point, not interior-interior
    Overlap,     // collinear with a shared sub-segment of positive length
};

// Classifies the contact of two segments; `proper_s`/`proper_t` receive the
// crossing parameters when the contact is Proper.
inline SegContact seg_contact(const Seg& s, const Seg& t, Rat* proper_s = nullptr,
                              Rat* proper_t = nullptr) {
    Pt r = s.dir(), q = t.dir();
    Rat denom = cross(r, q);
    Rat acbx = cross(t.a - s.a, q);
    if (denom.is_zero()) {
        if (!cross(t.a - s.a, r).is_zero()) return SegContact::None;
        // collinear: project onto the dominant axis
        auto key = [&](const Pt& p) { return r.x.is_zero() ? p.y : p.x; };
        Rat s0 = key(s.a), s1 = key(s.b), t0 = key(t.a), t1 = key(t.b);
        if (s0 > s1) std::swap(s0, s1);
        if (t0 > t1) std::swap(t0, t1);
        Rat lo = s0 > t0 ? s0 : t0;
        Rat hi = s1 < t1 ? s1 : t1;
        int c = Rat::cmp(lo, hi);
        if (c > 0) return SegContact::None;
        return c == 0 ? SegContact::Touch : SegContact::Overlap;
    }
    Rat u = acbx / denom;                      // parameter along s
    Rat v = cross(t.a - s.a, r) / denom;       // parameter along t
    Rat zero(0), one(1);
    if (u < zero || u > one || v < zero || v > one) return SegContact::None;
    bool interior_u = u > zero && u < one;
    bool interior_v = v > zero && v < one;
    if (interior_u && interior_v) {
        if (proper_s) *proper_s = u;
        if (proper_t) *proper_t = v;
        return SegContact::Proper;
    }
    return SegContact::Touch;
}

// Unit direction with exact rational coordinates (c^2 + s^2 = 1).
struct Dir {
    Rat c, s;

    Dir() : c(1), s(0) {}
    Dir(Rat dc, Rat ds) : c(std::move(dc)), s(std::move(ds)) {}

    bool unit() const { return c * c + s * s == Rat(1); }
    Dir conj() const { return Dir(c, -s); }
    // Complex multiplication: rotation composition.
    friend Dir operator*(const Dir& a, const Dir& b) {
        return Dir(a.c * b.c - a.s * b.s, a.c * b.s + a.s * b.c);
    }
    friend bool operator==(const Dir& a, const Dir& b) { return a.c == b.c && a.s == b.s; }
    friend bool operator!=(const Dir& a, const Dir& b) { return !(a == b); }

    // From the half-angle tangent u: (cos, sin) = ((1-u^2)/(1+u^2), 2u/(1+u^2)).
    static Dir from_half_tangent(const Rat& u) {
        Rat u2 = u * u;
        Rat d = Rat(1) + u2;
        return Dir((Rat(1) - u2) / d, (Rat(2) * u) / d);
    }
};

// Taxicab arc position of a unit direction, measured counterclockwise from
// (1, 0); ranges over [0, 8) on the unit circle.
inline Rat l1_circle_pos(const Dir& d) {
    int cs = d.c.sign(), ss = d.s.sign();
    if (cs > 0 && ss >= 0) return (Rat(1) - d.c) + d.s;          // [E, N)
    if (cs <= 0 && ss > 0) return Rat(2) - d.c + (Rat(1) - d.s); // [N, W)
    if (cs < 0 && ss <= 0) return Rat(4) + (d.c + Rat(1)) - d.s; // [W, S)
    return Rat(6) + d.c + (d.s + Rat(1));                        // [S, E)
}

// Strict counterclockwise-from-positive-x ordering of nonzero vectors.
inline int dir_half(const Pt& v) {
    if (v.y.sign() > 0 || (v.y.is_zero() && v.x.sign() > 0)) return 0;
    return 1;
}

inline bool ccw_less(const Pt& a, const Pt& b) {
    int ha = dir_half(a), hb = dir_half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b).sign() > 0;
}

// Position of v in the counterclockwise sweep starting just after `base`;
// returns a comparable key triple (never needed numerically, only ordering).
inline bool ccw_from_base_less(const Pt& base, const Pt& u, const Pt& v) {
    // angle(u) and angle(v) measured ccw from base in (0, 2pi); collinear
    // with base sorts last (angle 2pi treated as 0 is excluded by callers).
    auto klass = [&](const Pt& w) {
        Rat cr = cross(base, w);
        Rat dt = dot(base, w);
        if (cr.is_zero()) return dt.sign() > 0 ? 0 : 2;
        return cr.sign() > 0 ? 1 : 3;
    };
    int ku = klass(u), kv = klass(v);
    if (ku != kv) return ku < kv;
    if (ku == 0 || ku == 2) return false;  // equal angles
    return cross(u, v).sign() > 0;
}

struct Circle {
    Pt center;
    Rat radius;

    Circle() = default;
    Circle(Pt c, Rat r) : center(std::move(c)), radius(std::move(r)) {}

    Pt point_at(const Dir& d) const {
        return Pt(center.x + radius * d.c, center.y + radius * d.s);
    }
    bool on_circle(const Pt& p) const { return sq_dist(center, p) == radius * radius; }
    bool strictly_inside(const Pt& p) const { return sq_dist(center, p) < radius * radius; }
    Dir dir_of(const Pt& p) const {
        return Dir((p.x - center.x) / radius, (p.y - center.y) / radius);
    }
    // Counterclockwise tangent at a boundary point.
    Pt ccw_tangent(const Pt& p) const { return Pt(center.y - p.y, p.x - center.x); }
};

// Squared distance from p to the closed segment s.
inline Rat sq_dist_point_seg(const Pt& p, const Seg& s) {
    Pt d = s.dir();
    Rat len2 = dot(d, d);
    if (len2.is_zero()) return sq_dist(p, s.a);
    Rat t = dot(p - s.a, d) / len2;
    if (t.sign() < 0) t = Rat(0);
    if (t > Rat(1)) t = Rat(1);
    return sq_dist(p, s.at(t));
}

// Whether the closed segment meets the closed disk.
inline bool seg_meets_disk(const Seg& s, const Circle& c) {
    return sq_dist_point_seg(c.center, s) <= c.radius * c.radius;
}

// Whether the closed segment meets the open disk (interior).
inline bool seg_meets_open_disk(const Seg& s, const Circle& c) {
    return sq_dist_point_seg(c.center, s) < c.radius * c.radius;
}

// A polyline with rational vertices.
struct Polyline {
    std::vector<Pt> pts;

    size_t seg_count() const { return pts.empty() ? 0 : pts.size() - 1; }
    Seg seg(size_t i) const { return Seg(pts[i], pts[i + 1]); }
    Rat l1_total() const {
        Rat t(0);
        for (size_t i = 0; i + 1 < pts.size(); ++i) t += l1_len(pts[i], pts[i + 1]);
        return t;
    }
};

}  // namespace gfr

#endif  // GFR_GEOMETRY_HPP
