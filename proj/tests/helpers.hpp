// Shared instance builders for the test suites.

#ifndef GFR_TEST_HELPERS_HPP
#define GFR_TEST_HELPERS_HPP

#include <gfr/embedding.hpp>
#include <gfr/surface.hpp>

#include <utility>
#include <vector>

namespace gfr_test {

using namespace gfr;

inline EdgeChain straight_chain(const Pt& a, const Pt& b) {
    EdgeChain ch;
    Polyline p;
    p.pts = {a, b};
    ch.pieces.push_back(p);
    return ch;
}

inline EdgeChain poly_chain(std::vector<Pt> pts) {
    EdgeChain ch;
    Polyline p;
    p.pts = std::move(pts);
    ch.pieces.push_back(p);
    return ch;
}

// Chain passing through handle `pair` of the surface: piece a -> entry
// point on the pair's first-or-second disk at direction d, identified
// continuation -> b.
inline EdgeChain portal_chain(const Surface& s, const Pt& a, int disk, const Dir& d,
                              const Pt& b) {
    EdgeChain ch;
    Polyline p1, p2;
    p1.pts = {a, s.disk(disk).point_at(d)};
    auto [pd, pdir] = s.identify(disk, d);
    p2.pts = {s.disk(pd).point_at(pdir), b};
    ch.pieces = {p1, p2};
    ch.portals = {Portal{disk, d}};
    return ch;
}

inline Polyline polyline(std::vector<Pt> pts) {
    Polyline p;
    p.pts = std::move(pts);
    return p;
}

using EdgeSpec = std::pair<std::pair<int, int>, EdgeChain>;

// g=0, two nodes, one straight edge; gamma bent slightly off the edge.
inline EmbeddedGraph plane_path() {
    Surface s = standard_surface(0);
    std::vector<Node> nodes = {{Pt(0, 0)}, {Pt(5, 0)}};
    std::vector<EdgeSpec> es = {{{0, 1}, straight_chain(Pt(0, 0), Pt(5, 0))}};
    Polyline gamma = polyline({Pt(0, 0), Pt(Rat(5, 2), Rat(1, 4)), Pt(5, 0)});
    return EmbeddedGraph::build(s, nodes, es, gamma, 0, 1);
}

// Planar triangle, S and T two of its corners.
inline EmbeddedGraph plane_triangle() {
    Surface s = standard_surface(0);
    std::vector<Node> nodes = {{Pt(0, 0)}, {Pt(4, 0)}, {Pt(2, 3)}};
    std::vector<EdgeSpec> es = {{{0, 1}, straight_chain(Pt(0, 0), Pt(4, 0))},
                                {{1, 2}, straight_chain(Pt(4, 0), Pt(2, 3))},
                                {{2, 0}, straight_chain(Pt(2, 3), Pt(0, 0))}};
    Polyline gamma = polyline({Pt(0, 0), Pt(2, -1), Pt(4, 0)});
    return EmbeddedGraph::build(s, nodes, es, gamma, 0, 1);
}

// Torus with a contractible triangle away from the handle.
inline EmbeddedGraph torus_triangle() {
    Surface s = standard_surface(1);
    std::vector<Node> nodes = {{Pt(0, 2)}, {Pt(4, 2)}, {Pt(2, 4)}};
    std::vector<EdgeSpec> es = {{{0, 1}, straight_chain(Pt(0, 2), Pt(4, 2))},
                                {{1, 2}, straight_chain(Pt(4, 2), Pt(2, 4))},
                                {{2, 0}, straight_chain(Pt(2, 4), Pt(0, 2))}};
    Polyline gamma = polyline({Pt(0, 2), Pt(2, Rat(3, 2)), Pt(4, 2)});
    return EmbeddedGraph::build(s, nodes, es, gamma, 0, 1);
}

// Torus with one non-contractible 3-cycle through the handle:
// a=(1,-2) -- portal through disk A bottom -- c=(3,-2) -- m=(2,-5/2) -- a.
inline EmbeddedGraph torus_cycle(int src = 0, int dst = 1) {
    Surface s = standard_surface(1);
    std::vector<Node> nodes = {{Pt(1, -2)}, {Pt(3, -2)}, {Pt(2, Rat(-5, 2))}};
    std::vector<EdgeSpec> es = {
        {{0, 1}, portal_chain(s, Pt(1, -2), 0, Dir(Rat(0), Rat(-1)), Pt(3, -2))},
        {{1, 2}, straight_chain(Pt(3, -2), Pt(2, Rat(-5, 2)))},
        {{2, 0}, straight_chain(Pt(2, Rat(-5, 2)), Pt(1, -2))}};
    Polyline gamma = polyline({nodes[static_cast<size_t>(src)].pos, Pt(2, Rat(-9, 5)),
                               nodes[static_cast<size_t>(dst)].pos});
    return EmbeddedGraph::build(s, nodes, es, gamma, src, dst);
}

// Torus instance defeating classic face routing: a handle-through cycle,
// an S spur that gamma crosses twice, and the destination walled into a
// contractible room inside the strip, entered by gamma through the
// identification gap.  Classic FR cycles on the spur crossings; the search
// over the virtual multigraph reaches the room via mu_1.
inline EmbeddedGraph trap_instance() {
    Surface s = standard_surface(1);
    std::vector<Node> nodes = {
        {Pt(0, -1)},                         // 0 S
        {Pt(1, -2)},                         // 1 a
        {Pt(3, -2)},                         // 2 c
        {Pt(2, Rat(-12, 5))},                // 3 m
        {Pt(Rat(17, 10), Rat(-13, 10))},     // 4 q1
        {Pt(Rat(23, 10), Rat(-13, 10))},     // 5 q2
        {Pt(Rat(23, 10), Rat(-17, 10))},     // 6 q3
        {Pt(Rat(17, 10), Rat(-17, 10))},     // 7 q4
        {Pt(2, Rat(-29, 20))},               // 8 T
    };
    auto np = [&](int i) { return nodes[static_cast<size_t>(i)].pos; };
    std::vector<EdgeSpec> es = {
        {{1, 2}, portal_chain(s, np(1), 0, Dir(Rat(0), Rat(-1)), np(2))},  // handle edge
        {{2, 3}, straight_chain(np(2), np(3))},
        {{3, 1}, straight_chain(np(3), np(1))},
        {{1, 0}, straight_chain(np(1), np(0))},  // S spur
        {{3, 7}, straight_chain(np(3), np(7))},  // bridge into the room wall
        {{7, 4}, straight_chain(np(7), np(4))},
        {{4, 5}, straight_chain(np(4), np(5))},
        {{5, 6}, straight_chain(np(5), np(6))},
        {{6, 7}, straight_chain(np(6), np(7))},
        {{4, 8}, straight_chain(np(4), np(8))},  // T spur inside the room
    };
    Polyline gamma = polyline({np(0), Pt(Rat(9, 10), Rat(-5, 2)), Pt(Rat(1, 2), Rat(-6, 5)),
                               Pt(Rat(13, 10), Rat(-13, 5)), Pt(Rat(9, 2), Rat(-14, 5)),
                               Pt(Rat(9, 2), Rat(6, 5)), Pt(2, Rat(6, 5)), np(8)});
    return EmbeddedGraph::build(s, nodes, es, gamma, 0, 8);
}

}  // namespace gfr_test

#endif
