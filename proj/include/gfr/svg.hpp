// SVG rendering of an instance: the punctured plane, paired disks, the
// basis curves, the graph, gamma, the shaded tiled region, and optionally
// an agent trace with numbered stop stars.  Output bytes are deterministic
// for a given instance and options.

#ifndef GFR_SVG_HPP
#define GFR_SVG_HPP

#include <gfr/agent.hpp>
#include <gfr/regions.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace gfr {

namespace svg_detail {

inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

inline const char* pair_color(int pair) {
    static const char* colors[] = {"#e78ac3", "#8da0cb", "#66c2a5", "#fc8d62",
                                   "#a6d854", "#ffd92f", "#b3b3b3", "#e5c494"};
    return colors[pair % 8];
}

struct Mapper {
    double x0, y0, scale, height;
    double X(const Pt& p) const { return (p.x.to_double() - x0) * scale; }
    double Y(const Pt& p) const { return height - (p.y.to_double() - y0) * scale; }
};

inline std::string cycle_path(const RenderCycle& rc, const Mapper& m) {
    std::string d;
    for (size_t i = 0; i < rc.pieces.size(); ++i) {
        const RenderPiece& pc = rc.pieces[i];
        if (i == 0)
            d += "M " + fmt(m.X(pc.a)) + " " + fmt(m.Y(pc.a)) + " ";
        if (pc.is_arc) {
            double r = pc.radius.to_double() * m.scale;
            // y axis is flipped, so counterclockwise becomes sweep 1
            const char* sweep = pc.ccw ? "0" : "1";
            if (pc.a == pc.b) {
                // full circle: two half arcs
                Pt opposite(pc.center.x * Rat(2) - pc.a.x, pc.center.y * Rat(2) - pc.a.y);
                d += "A " + fmt(r) + " " + fmt(r) + " 0 1 " + sweep + " " +
                     fmt(m.X(opposite)) + " " + fmt(m.Y(opposite)) + " ";
                d += "A " + fmt(r) + " " + fmt(r) + " 0 1 " + sweep + " " + fmt(m.X(pc.a)) +
                     " " + fmt(m.Y(pc.a)) + " ";
            } else {
                d += "A " + fmt(r) + " " + fmt(r) + " 0 0 " + sweep + " " + fmt(m.X(pc.b)) +
                     " " + fmt(m.Y(pc.b)) + " ";
            }
        } else {
            d += "L " + fmt(m.X(pc.b)) + " " + fmt(m.Y(pc.b)) + " ";
        }
    }
    d += "Z";
    return d;
}

}  // namespace svg_detail

struct RenderOptions {
    bool shade_tiled_region = true;
    bool draw_trace = false;
    double pixels_per_unit = 60.0;
};

inline std::string render_svg(const EmbeddedGraph& g, const RegionDecomposition& rd,
                              const RouteResult* route = nullptr,
                              RenderOptions opt = RenderOptions{}) {
    using namespace svg_detail;
    const Surface& surf = g.surface;
    // bounds
    double xmin = 1e30, xmax = -1e30, ymin = 1e30, ymax = -1e30;
    auto grow = [&](double x, double y) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    };
    for (const Node& nd : g.nodes) grow(nd.pos.x.to_double(), nd.pos.y.to_double());
    for (const Pt& p : g.curves.at(0).poly.pts) grow(p.x.to_double(), p.y.to_double());
    for (int d = 0; d < surf.disk_count(); ++d) {
        const Circle& c = surf.disk(d);
        double r = c.radius.to_double();
        grow(c.center.x.to_double() - r, c.center.y.to_double() - r);
        grow(c.center.x.to_double() + r, c.center.y.to_double() + r);
    }
    if (xmin > xmax) { xmin = ymin = -1; xmax = ymax = 1; }
    double margin = 0.8;
    xmin -= margin; ymin -= margin; xmax += margin; ymax += margin;
    Mapper m{xmin, ymin, opt.pixels_per_unit, (ymax - ymin) * opt.pixels_per_unit};
    double W = (xmax - xmin) * opt.pixels_per_unit, H = m.height;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(W) + "\" height=\"" +
           fmt(H) + "\" viewBox=\"0 0 " + fmt(W) + " " + fmt(H) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // shaded tiled region: every trivial region's boundary cycles, evenodd;
    // the unbounded region needs the viewport rectangle as its outer cycle
    if (opt.shade_tiled_region) {
        for (size_t r = 0; r < rd.regions.size(); ++r) {
            if (!rd.regions[r].trivial) continue;
            std::string d;
            if (static_cast<int>(r) == rd.unbounded_region)
                d += "M 0 0 L " + fmt(W) + " 0 L " + fmt(W) + " " + fmt(H) + " L 0 " + fmt(H) +
                     " Z ";
            for (const RenderCycle& rc : rd.render_cycles)
                if (rc.region == static_cast<int>(r)) d += cycle_path(rc, m) + " ";
            out += "<path d=\"" + d + "\" fill=\"#e0e0e0\" fill-rule=\"evenodd\" stroke=\"none\"/>\n";
        }
    }

    // disks and their mu boundaries, paired by color; lambda connectors
    for (int pi = 0; pi < g.genus(); ++pi) {
        for (int side = 0; side < 2; ++side) {
            const Circle& c = surf.disk(2 * pi + side);
            out += "<circle cx=\"" + fmt(m.X(c.center)) + "\" cy=\"" + fmt(m.Y(c.center)) +
                   "\" r=\"" + fmt(c.radius.to_double() * opt.pixels_per_unit) + "\" fill=\"" +
                   pair_color(pi) + "\" fill-opacity=\"0.45\" stroke=\"" + pair_color(pi) +
                   "\" stroke-width=\"2\"/>\n";
        }
        const Polyline& lam = surf.lambda_arcs()[static_cast<size_t>(pi)];
        std::string pts;
        for (const Pt& p : lam.pts) pts += fmt(m.X(p)) + "," + fmt(m.Y(p)) + " ";
        out += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + pair_color(pi) +
               "\" stroke-width=\"1.5\"/>\n";
    }

    // graph edges
    for (const Edge& e : g.edges)
        for (const Polyline& piece : e.chain.pieces) {
            std::string pts;
            for (const Pt& p : piece.pts) pts += fmt(m.X(p)) + "," + fmt(m.Y(p)) + " ";
            out += "<polyline points=\"" + pts +
                   "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"1.6\"/>\n";
        }

    // gamma, dotted
    {
        std::string pts;
        for (const Pt& p : g.curves.at(0).poly.pts) pts += fmt(m.X(p)) + "," + fmt(m.Y(p)) + " ";
        out += "<polyline points=\"" + pts +
               "\" fill=\"none\" stroke=\"#1f4f9f\" stroke-width=\"1.4\" "
               "stroke-dasharray=\"5,4\"/>\n";
    }

    // nodes, with S and T marked
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        const Pt& p = g.nodes[i].pos;
        bool terminal = static_cast<int>(i) == g.src || static_cast<int>(i) == g.dst;
        out += "<circle cx=\"" + fmt(m.X(p)) + "\" cy=\"" + fmt(m.Y(p)) + "\" r=\"" +
               (terminal ? std::string("4.5") : std::string("2.6")) + "\" fill=\"" +
               (terminal ? "#c03030" : "#222222") + "\"/>\n";
    }
    {
        const Pt& sp = g.nodes[static_cast<size_t>(g.src)].pos;
        const Pt& tp = g.nodes[static_cast<size_t>(g.dst)].pos;
        out += "<text x=\"" + fmt(m.X(sp) + 6) + "\" y=\"" + fmt(m.Y(sp) - 6) +
               "\" font-size=\"14\" fill=\"#c03030\">S</text>\n";
        out += "<text x=\"" + fmt(m.X(tp) + 6) + "\" y=\"" + fmt(m.Y(tp) - 6) +
               "\" font-size=\"14\" fill=\"#c03030\">T</text>\n";
    }

    // agent trace overlay with numbered stop stars
    if (opt.draw_trace && route) {
        std::string pts;
        pts += fmt(m.X(g.nodes[static_cast<size_t>(g.src)].pos)) + "," +
               fmt(m.Y(g.nodes[static_cast<size_t>(g.src)].pos)) + " ";
        for (const TraceStep& ts : route->trace) {
            const Pt& p = g.nodes[static_cast<size_t>(ts.node)].pos;
            pts += fmt(m.X(p)) + "," + fmt(m.Y(p)) + " ";
        }
        out += "<polyline points=\"" + pts +
               "\" fill=\"none\" stroke=\"#d06000\" stroke-width=\"0.9\" opacity=\"0.8\"/>\n";
        for (size_t i = 0; i < route->stop_points.size(); ++i) {
            double x = m.X(route->stop_points[i]), y = m.Y(route->stop_points[i]);
            out += "<path d=\"M " + fmt(x) + " " + fmt(y - 7) + " L " + fmt(x + 2) + " " +
                   fmt(y - 2) + " L " + fmt(x + 7) + " " + fmt(y - 2) + " L " + fmt(x + 3) + " " +
                   fmt(y + 1) + " L " + fmt(x + 5) + " " + fmt(y + 6) + " L " + fmt(x) + " " +
                   fmt(y + 3) + " L " + fmt(x - 5) + " " + fmt(y + 6) + " L " + fmt(x - 3) + " " +
                   fmt(y + 1) + " L " + fmt(x - 7) + " " + fmt(y - 2) + " L " + fmt(x - 2) + " " +
                   fmt(y - 2) + " Z\" fill=\"#e0b000\" stroke=\"#806000\"/>\n";
            out += "<text x=\"" + fmt(x + 8) + "\" y=\"" + fmt(y + 4) +
                   "\" font-size=\"12\" fill=\"#806000\">" + std::to_string(i + 1) + "</text>\n";
        }
    }

    out += "</svg>\n";
    return out;
}

}  // namespace gfr

#endif  // GFR_SVG_HPP
