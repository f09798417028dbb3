#include "riesz/svg.hpp"

#include <cstdio>
#include <sstream>

namespace riesz {

namespace {

struct Mapper {
    double scale, ox, oy;
    double X(double x) const { return (x - ox) * scale; }
    double Y(double y) const { return 800.0 - (y - oy) * scale; }  // flip y
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void polyline(std::ostringstream& out, const Mapper& map, const std::vector<Vec2>& pts,
              const char* style, bool close) {
    if (pts.empty()) return;
    out << "  <path d=\"";
    for (std::size_t i = 0; i < pts.size(); ++i)
        out << (i == 0 ? "M" : "L") << num(map.X(pts[i].x)) << ' ' << num(map.Y(pts[i].y));
    if (close) out << "Z";
    out << "\" style=\"" << style << "\"/>\n";
}

}  // namespace

std::string trajectory_svg(const Body& body, const UnfoldedRegion& uf,
                           const std::vector<Vec2>& path, const ExtremalBall& minmax,
                           const std::vector<ExtremalBall>& maxmin) {
    Vec2 lo, hi;
    body.bounding_box(lo, hi);
    const double w = hi.x - lo.x, h = hi.y - lo.y;
    const double pad = 0.1 * std::max(w, h);
    Mapper map{800.0 / std::max(w + 2 * pad, h + 2 * pad), lo.x - pad, lo.y - pad};

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    for (const Loop& loop : body.loops()) {
        const char* style = loop.orientation == 1 ? "fill:none;stroke:#222;stroke-width:2"
                                                  : "fill:none;stroke:#888;stroke-width:2";
        if (loop.kind == LoopKind::Circle) {
            out << "  <circle cx=\"" << num(map.X(loop.center.x)) << "\" cy=\""
                << num(map.Y(loop.center.y)) << "\" r=\"" << num(loop.radius * map.scale)
                << "\" style=\"" << style << "\"/>\n";
        } else {
            polyline(out, map, loop.vertices, style, true);
        }
    }
    polyline(out, map, uf.polygon, "fill:rgba(80,140,220,0.25);stroke:#4a78c8;stroke-width:1",
             true);
    polyline(out, map, path, "fill:none;stroke:#c83c3c;stroke-width:1.5", false);
    for (const Vec2& p : path)
        out << "  <circle cx=\"" << num(map.X(p.x)) << "\" cy=\"" << num(map.Y(p.y))
            << "\" r=\"2\" style=\"fill:#c83c3c\"/>\n";
    out << "  <circle cx=\"" << num(map.X(minmax.center.x)) << "\" cy=\""
        << num(map.Y(minmax.center.y))
        << "\" r=\"5\" style=\"fill:none;stroke:#2a7d2a;stroke-width:2\"/>\n";
    for (const ExtremalBall& b : maxmin)
        out << "  <rect x=\"" << num(map.X(b.center.x) - 4) << "\" y=\""
            << num(map.Y(b.center.y) - 4)
            << "\" width=\"8\" height=\"8\" style=\"fill:none;stroke:#7d2a7d;stroke-width:2\"/>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace riesz
