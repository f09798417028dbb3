#include "riesz/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace riesz {

namespace {

constexpr double kTiny = 1e-300;

double clamp01(double t) { return t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t); }

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
    const Vec2 e = b - a;
    const double len2 = e.norm2();
    if (len2 <= kTiny) return dist(p, a);
    const double t = clamp01((p - a).dot(e) / len2);
    return dist(p, a + t * e);
}

Vec2 rotate(const Vec2& v, double phi) {
    const double c = std::cos(phi), s = std::sin(phi);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

bool point_in_polygon(const std::vector<Vec2>& poly, const Vec2& p) {
    // Even-odd crossing count with the horizontal ray x -> +inf.
    bool inside = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2& a = poly[j];
        const Vec2& b = poly[i];
        if ((b.y > p.y) != (a.y > p.y)) {
            const double xc = b.x + (p.y - b.y) * (a.x - b.x) / (a.y - b.y);
            if (p.x < xc) inside = !inside;
        }
    }
    return inside;
}

bool loop_contains(const Loop& loop, const Vec2& p) {
    if (loop.kind == LoopKind::Circle) return dist(p, loop.center) < loop.radius;
    return point_in_polygon(loop.vertices, p);
}

std::vector<Vec2> circle_to_polygon(const Loop& loop, int segments) {
    std::vector<Vec2> out;
    out.reserve(segments);
    for (int k = 0; k < segments; ++k) {
        const double th = 2.0 * M_PI * k / segments;
        out.push_back(loop.center + loop.radius * dir(th));
    }
    return out;
}

bool segments_properly_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    const double d1 = (b - a).cross(c - a);
    const double d2 = (b - a).cross(d - a);
    const double d3 = (d - c).cross(a - c);
    const double d4 = (d - c).cross(b - c);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

}  // namespace

double Vec2::norm() const { return std::hypot(x, y); }

Vec2 Vec2::normalized() const {
    const double n = norm();
    if (n <= kTiny) throw GeometryError("cannot normalize zero vector");
    return {x / n, y / n};
}

double dist(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

Vec2 dir(double theta) { return {std::cos(theta), std::sin(theta)}; }

Loop Loop::polygon(std::vector<Vec2> vertices, int orientation) {
    Loop l;
    l.kind = LoopKind::Polygon;
    l.vertices = std::move(vertices);
    l.orientation = orientation;
    return l;
}

Loop Loop::circle(Vec2 center, double radius, int orientation) {
    Loop l;
    l.kind = LoopKind::Circle;
    l.center = center;
    l.radius = radius;
    l.orientation = orientation;
    return l;
}

double polygon_signed_area(const std::vector<Vec2>& poly) {
    double acc = 0.0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) acc += poly[j].cross(poly[i]);
    return 0.5 * acc;
}

Vec2 polygon_centroid(const std::vector<Vec2>& poly) {
    double a = 0.0, cx = 0.0, cy = 0.0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const double w = poly[j].cross(poly[i]);
        a += w;
        cx += (poly[j].x + poly[i].x) * w;
        cy += (poly[j].y + poly[i].y) * w;
    }
    if (std::abs(a) <= kTiny) throw GeometryError("degenerate polygon in centroid");
    return {cx / (3.0 * a), cy / (3.0 * a)};
}

bool polygon_is_simple(const std::vector<Vec2>& poly) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            // Skip adjacent edges (they share a vertex).
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
            if (segments_properly_intersect(poly[i], poly[(i + 1) % n], poly[j], poly[(j + 1) % n]))
                return false;
        }
    }
    return true;
}

std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& poly, const Vec2& n, double c) {
    std::vector<Vec2> out;
    const std::size_t m = poly.size();
    if (m == 0) return out;
    out.reserve(m + 4);
    for (std::size_t i = 0; i < m; ++i) {
        const Vec2& p = poly[i];
        const Vec2& q = poly[(i + 1) % m];
        const double dp = p.dot(n) - c;
        const double dq = q.dot(n) - c;
        if (dp <= 0.0) out.push_back(p);
        if ((dp < 0.0 && dq > 0.0) || (dp > 0.0 && dq < 0.0)) {
            const double t = dp / (dp - dq);
            out.push_back(p + t * (q - p));
        }
    }
    return out;
}

std::vector<std::array<Vec2, 3>> triangulate(const std::vector<Vec2>& poly) {
    std::vector<std::array<Vec2, 3>> tris;
    std::vector<Vec2> v = poly;
    if (v.size() < 3) return tris;
    const double scale2 = std::abs(polygon_signed_area(v));

    // Centroid fan for convex input (keeps triangles local, which makes
    // bounding-box culling effective), ear clipping otherwise.
    bool convex = true;
    for (std::size_t i = 0; i < v.size() && convex; ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % v.size()];
        const Vec2& c = v[(i + 2) % v.size()];
        if ((b - a).cross(c - b) < -1e-12 * scale2) convex = false;
    }
    if (convex) {
        const Vec2 c = polygon_centroid(v);
        for (std::size_t i = 0; i < v.size(); ++i)
            tris.push_back({c, v[i], v[(i + 1) % v.size()]});
        return tris;
    }

    int guard = static_cast<int>(v.size() * v.size()) + 16;
    while (v.size() > 3) {
        if (--guard < 0) throw GeometryError("ear clipping failed (non-simple polygon?)");
        bool clipped = false;
        const std::size_t n = v.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2& a = v[(i + n - 1) % n];
            const Vec2& b = v[i];
            const Vec2& c = v[(i + 1) % n];
            const double turn = (b - a).cross(c - b);
            if (turn < 0.0) continue;  // reflex corner
            if (turn <= 1e-14 * scale2) {
                // Collinear corner: drop it, zero-area ear.
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
                clipped = true;
                break;
            }
            bool ear = true;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == (i + n - 1) % n || k == i || k == (i + 1) % n) continue;
                const Vec2& p = v[k];
                if ((b - a).cross(p - a) >= 0 && (c - b).cross(p - b) >= 0 &&
                    (a - c).cross(p - c) >= 0) {
                    ear = false;
                    break;
                }
            }
            if (!ear) continue;
            tris.push_back({a, b, c});
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
            clipped = true;
            break;
        }
        if (!clipped) throw GeometryError("ear clipping stuck (degenerate polygon)");
    }
    tris.push_back({v[0], v[1], v[2]});
    return tris;
}

double clipped_area_in_triangle(const std::vector<Vec2>& poly, const std::array<Vec2, 3>& tri) {
    std::vector<Vec2> cur = poly;
    for (int i = 0; i < 3 && !cur.empty(); ++i) {
        const Vec2& a = tri[i];
        const Vec2& b = tri[(i + 1) % 3];
        const Vec2 n = -((b - a).perp());
        cur = clip_halfplane(cur, n, a.dot(n));
    }
    return cur.empty() ? 0.0 : polygon_signed_area(cur);
}

Vec2 project_to_convex(const std::vector<Vec2>& poly, const Vec2& x) {
    const std::size_t n = poly.size();
    if (n == 0) throw GeometryError("projection onto empty polygon");
    if (n == 1) return poly[0];
    if (n == 2) {
        const Vec2 e = poly[1] - poly[0];
        const double len2 = e.norm2();
        if (len2 <= kTiny) return poly[0];
        return poly[0] + clamp01((x - poly[0]).dot(e) / len2) * e;
    }
    bool inside = true;
    for (std::size_t i = 0; i < n && inside; ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % n];
        if ((b - a).cross(x - a) < 0.0) inside = false;
    }
    if (inside) return x;
    double best = std::numeric_limits<double>::infinity();
    Vec2 bp = poly[0];
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % n];
        const Vec2 e = b - a;
        const double len2 = e.norm2();
        const Vec2 cand = len2 <= kTiny ? a : a + clamp01((x - a).dot(e) / len2) * e;
        const double d = dist(cand, x);
        if (d < best) {
            best = d;
            bp = cand;
        }
    }
    return bp;
}

double convex_signed_distance(const std::vector<Vec2>& poly, const Vec2& x) {
    const std::size_t n = poly.size();
    if (n < 3) return dist(project_to_convex(poly, x), x);
    double worst = -std::numeric_limits<double>::infinity();
    bool inside = true;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % n];
        const Vec2 e = b - a;
        const double len = e.norm();
        if (len <= kTiny) continue;
        const double d = -(e.cross(x - a)) / len;  // positive outside
        worst = std::max(worst, d);
        if (d > 0.0) inside = false;
    }
    if (inside) return worst;
    return dist(project_to_convex(poly, x), x);
}

Body Body::make(std::vector<Loop> loops, int dimension) {
    if (dimension != 2) throw GeometryError("only planar bodies (dimension 2) are supported");
    if (loops.empty()) throw GeometryError("body needs at least one loop");

    for (Loop& loop : loops) {
        if (loop.orientation != 1 && loop.orientation != -1)
            throw GeometryError("loop orientation must be +1 or -1");
        if (loop.kind == LoopKind::Circle) {
            if (!(loop.radius > 0.0) || !std::isfinite(loop.radius) ||
                !std::isfinite(loop.center.x) || !std::isfinite(loop.center.y))
                throw GeometryError("circle loop needs finite center and positive radius");
            continue;
        }
        if (loop.vertices.size() < 3) throw GeometryError("polygon loop needs >= 3 vertices");
        for (const Vec2& p : loop.vertices)
            if (!std::isfinite(p.x) || !std::isfinite(p.y))
                throw GeometryError("polygon vertex is not finite");
        const double a = polygon_signed_area(loop.vertices);
        if (std::abs(a) <= kTiny) throw GeometryError("polygon loop has zero area");
        if (a < 0.0) std::reverse(loop.vertices.begin(), loop.vertices.end());
        if (!polygon_is_simple(loop.vertices))
            throw GeometryError("polygon loop is self-intersecting");
    }

    Body body;
    body.loops_ = std::move(loops);
    body.dimension_ = dimension;

    double area = 0.0, cx = 0.0, cy = 0.0;
    for (const Loop& loop : body.loops_) {
        double a;
        Vec2 c;
        if (loop.kind == LoopKind::Circle) {
            a = M_PI * loop.radius * loop.radius;
            c = loop.center;
        } else {
            a = polygon_signed_area(loop.vertices);  // positive, loops are CCW
            c = polygon_centroid(loop.vertices);
        }
        area += loop.orientation * a;
        cx += loop.orientation * a * c.x;
        cy += loop.orientation * a * c.y;
    }
    if (!(area > 1e-30)) throw GeometryError("body has empty interior (zero total area)");
    body.area_ = area;
    body.centroid_ = {cx / area, cy / area};

    // Exact max pairwise boundary distance over vertex/circle descriptors.
    double diam = 0.0;
    const auto& ls = body.loops_;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        for (std::size_t j = i; j < ls.size(); ++j) {
            const Loop& p = ls[i];
            const Loop& q = ls[j];
            if (p.kind == LoopKind::Circle && q.kind == LoopKind::Circle) {
                const double d = dist(p.center, q.center) + p.radius + q.radius;
                diam = std::max(diam, i == j ? 2.0 * p.radius : d);
            } else if (p.kind == LoopKind::Circle || q.kind == LoopKind::Circle) {
                const Loop& circ = p.kind == LoopKind::Circle ? p : q;
                const Loop& poly = p.kind == LoopKind::Circle ? q : p;
                for (const Vec2& v : poly.vertices)
                    diam = std::max(diam, dist(v, circ.center) + circ.radius);
            } else {
                for (const Vec2& u : p.vertices)
                    for (const Vec2& v : q.vertices) diam = std::max(diam, dist(u, v));
            }
        }
    }
    body.diameter_ = diam;
    if (!(diam > 0.0)) throw GeometryError("body has zero diameter");
    return body;
}

Body Body::make_disk(Vec2 center, double radius) {
    return make({Loop::circle(center, radius)});
}

Body Body::make_polygon(std::vector<Vec2> vertices) {
    return make({Loop::polygon(std::move(vertices))});
}

Body Body::make_rectangle(Vec2 lo, Vec2 hi) {
    return make_polygon({{lo.x, lo.y}, {hi.x, lo.y}, {hi.x, hi.y}, {lo.x, hi.y}});
}

void Body::bounding_box(Vec2& lo, Vec2& hi) const {
    lo = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    hi = {-lo.x, -lo.y};
    for (const Loop& loop : loops_) {
        if (loop.kind == LoopKind::Circle) {
            lo.x = std::min(lo.x, loop.center.x - loop.radius);
            lo.y = std::min(lo.y, loop.center.y - loop.radius);
            hi.x = std::max(hi.x, loop.center.x + loop.radius);
            hi.y = std::max(hi.y, loop.center.y + loop.radius);
        } else {
            for (const Vec2& p : loop.vertices) {
                lo.x = std::min(lo.x, p.x);
                lo.y = std::min(lo.y, p.y);
                hi.x = std::max(hi.x, p.x);
                hi.y = std::max(hi.y, p.y);
            }
        }
    }
}

double distance_to_boundary(const Body& body, const Vec2& x) {
    double best = std::numeric_limits<double>::infinity();
    for (const Loop& loop : body.loops()) {
        if (loop.kind == LoopKind::Circle) {
            best = std::min(best, std::abs(dist(x, loop.center) - loop.radius));
        } else {
            const std::size_t n = loop.vertices.size();
            for (std::size_t i = 0, j = n - 1; i < n; j = i++)
                best = std::min(best, point_segment_distance(x, loop.vertices[j], loop.vertices[i]));
        }
    }
    return best;
}

PointClass classify_point(const Body& body, const Vec2& x, double tol) {
    if (!(tol > 0.0)) throw GeometryError("classify_point needs tol > 0");
    if (distance_to_boundary(body, x) <= tol) return PointClass::Boundary;
    int winding = 0;
    for (const Loop& loop : body.loops())
        if (loop_contains(loop, x)) winding += loop.orientation;
    return winding > 0 ? PointClass::Interior : PointClass::Exterior;
}

PointClass classify_point(const Body& body, const Vec2& x) {
    return classify_point(body, x, body.boundary_tol());
}

bool point_inside(const Body& body, const Vec2& x) {
    int winding = 0;
    for (const Loop& loop : body.loops())
        if (loop_contains(loop, x)) winding += loop.orientation;
    return winding > 0;
}

double support_value(const Body& body, const Vec2& v) {
    double best = -std::numeric_limits<double>::infinity();
    for (const Loop& loop : body.loops()) {
        if (loop.orientation != 1) continue;  // holes never extend the support
        if (loop.kind == LoopKind::Circle) {
            best = std::max(best, loop.center.dot(v) + loop.radius * v.norm());
        } else {
            for (const Vec2& p : loop.vertices) best = std::max(best, p.dot(v));
        }
    }
    return best;
}

namespace {

struct CrossingHit {
    double t;
    int sign;
};

// Returns false when the ray configuration is degenerate (vertex hit,
// tangency, collinear overlap) and a retry with a rotated direction is needed.
bool collect_crossings(const Body& body, const Vec2& x, const Vec2& v,
                       std::vector<CrossingHit>& hits) {
    hits.clear();
    const double diam = body.diameter();
    const double t_min = 1e-13 * diam;
    for (const Loop& loop : body.loops()) {
        if (loop.kind == LoopKind::Circle) {
            const Vec2 w = x - loop.center;
            const double b2 = v.dot(w);
            const double c0 = w.norm2() - loop.radius * loop.radius;
            const double disc = b2 * b2 - c0;
            const double graze = 1e-12 * loop.radius;
            if (disc <= graze * graze) {
                if (disc > -graze * graze) return false;  // tangent ray
                continue;
            }
            const double sq = std::sqrt(disc);
            for (const double t : {-b2 - sq, -b2 + sq}) {
                if (t <= t_min) {
                    if (t > -t_min) return false;  // origin effectively on this circle
                    continue;
                }
                const Vec2 n = (x + t * v - loop.center) * (1.0 / loop.radius);
                hits.push_back({t, loop.orientation * (v.dot(n) > 0.0 ? 1 : -1)});
            }
        } else {
            const std::size_t n = loop.vertices.size();
            for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
                const Vec2& a = loop.vertices[j];
                const Vec2& b = loop.vertices[i];
                const Vec2 e = b - a;
                const double denom = v.cross(e);
                const double elen = e.norm();
                if (std::abs(denom) <= 1e-15 * elen) {
                    // Parallel; degenerate only if the ray lies on the edge line.
                    if (std::abs((a - x).cross(v)) <= 1e-12 * (dist(a, x) + elen)) return false;
                    continue;
                }
                const double t = (a - x).cross(e) / denom;
                const double s = (a - x).cross(v) / denom;
                if (s < -1e-12 || s > 1.0 + 1e-12) continue;
                if (s < 1e-12 || s > 1.0 - 1e-12) return false;  // vertex hit
                if (t <= t_min) {
                    if (t > -t_min) throw GeometryError("ray origin lies on the boundary");
                    continue;
                }
                const Vec2 nrm = Vec2{e.y, -e.x} * (1.0 / elen);  // outward for CCW loops
                hits.push_back({t, loop.orientation * (v.dot(nrm) > 0.0 ? 1 : -1)});
            }
        }
    }
    return true;
}

}  // namespace

RayCrossings ray_crossings(const Body& body, const Vec2& x, const Vec2& v) {
    const Vec2 v0 = v.normalized();
    std::vector<CrossingHit> hits;
    double rot = 0.0;
    bool ok = false;
    for (int attempt = 0; attempt < 8; ++attempt) {
        rot = attempt * 1.3e-11;  // total budget < 1e-10 rad
        if (collect_crossings(body, x, rotate(v0, rot), hits)) {
            ok = true;
            break;
        }
    }
    if (!ok)
        throw GeometryError("ray grazing persisted through the micro-rotation budget");

    std::sort(hits.begin(), hits.end(), [](const CrossingHit& a, const CrossingHit& b) {
        return a.t < b.t;
    });

    RayCrossings rc;
    rc.applied_rotation = rot;
    rc.entries.reserve(hits.size());
    int net = 0;
    for (const CrossingHit& h : hits) {
        rc.entries.push_back({h.t, h.sign});
        net += h.sign;
    }
    for (auto it = rc.entries.rbegin(); it != rc.entries.rend(); ++it) {
        if (it->sign == 1) {
            rc.rho_sup = it->t;
            break;
        }
    }
    // net = +1 exactly when the origin is interior (total outward flux).
    rc.rho_inf = (net == 1 && !rc.entries.empty()) ? rc.entries.front().t : 0.0;
    return rc;
}

std::vector<RayCrossings> radial_profile(const Body& body, const Vec2& x, int n_dirs) {
    if (n_dirs < 16) throw GeometryError("radial_profile needs n_dirs >= 16");
    std::vector<RayCrossings> out;
    out.reserve(n_dirs);
    for (int k = 0; k < n_dirs; ++k)
        out.push_back(ray_crossings(body, x, dir(2.0 * M_PI * k / n_dirs)));
    return out;
}

namespace {

void poly_bbox(const std::vector<Vec2>& poly, Vec2& lo, Vec2& hi) {
    lo = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    hi = -lo;
    for (const Vec2& p : poly) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
}

}  // namespace

CapTester::CapTester(const Body& body, int circle_segments) {
    body_area_ = body.area();
    if (body.loops().size() == 1 && body.loops()[0].kind == LoopKind::Circle &&
        body.loops()[0].orientation == 1) {
        single_disk_ = true;
        disk_center_ = body.loops()[0].center;
        disk_radius_ = body.loops()[0].radius;
        return;
    }
    for (const Loop& loop : body.loops()) {
        WorkingLoop wl;
        wl.orientation = loop.orientation;
        wl.vertices = loop.kind == LoopKind::Circle ? circle_to_polygon(loop, circle_segments)
                                                    : loop.vertices;
        wl.triangles = triangulate(wl.vertices);
        for (const auto& tri : wl.triangles) {
            Vec2 lo{std::min({tri[0].x, tri[1].x, tri[2].x}), std::min({tri[0].y, tri[1].y, tri[2].y})};
            Vec2 hi{std::max({tri[0].x, tri[1].x, tri[2].x}), std::max({tri[0].y, tri[1].y, tri[2].y})};
            wl.tri_lo.push_back(lo);
            wl.tri_hi.push_back(hi);
        }
        loops_.push_back(std::move(wl));
    }
}

bool CapTester::contained(const Vec2& v, double b, double tol) const {
    if (single_disk_) {
        // Reflecting a disk cap at or past the center plane keeps it inside.
        return b >= disk_center_.dot(v) - 1e-12 * disk_radius_;
    }
    // Clip each loop to the cap halfplane {p . v > b} and reflect.
    std::vector<std::pair<std::vector<Vec2>, int>> reflected;
    double refl_area = 0.0;
    for (const WorkingLoop& wl : loops_) {
        std::vector<Vec2> cap = clip_halfplane(wl.vertices, -v, -b);
        if (cap.size() < 3) continue;
        const double a = polygon_signed_area(cap);
        if (std::abs(a) <= 1e-18 * body_area_) continue;
        for (Vec2& p : cap) p = p + 2.0 * (b - p.dot(v)) * v;
        std::reverse(cap.begin(), cap.end());  // reflection flips orientation
        refl_area += wl.orientation * polygon_signed_area(cap);
        reflected.emplace_back(std::move(cap), wl.orientation);
    }
    if (reflected.empty()) return true;  // empty cap

    double overlap = 0.0;
    for (const auto& [rpoly, rsign] : reflected) {
        Vec2 rlo, rhi;
        poly_bbox(rpoly, rlo, rhi);
        for (const WorkingLoop& wl : loops_) {
            double a = 0.0;
            for (std::size_t t = 0; t < wl.triangles.size(); ++t) {
                if (wl.tri_hi[t].x < rlo.x || wl.tri_lo[t].x > rhi.x ||
                    wl.tri_hi[t].y < rlo.y || wl.tri_lo[t].y > rhi.y)
                    continue;
                a += clipped_area_in_triangle(rpoly, wl.triangles[t]);
            }
            overlap += rsign * wl.orientation * a;
        }
    }
    return refl_area - overlap <= tol * body_area_;
}

bool cap_reflection_contained(const Body& body, const CapSpec& cap, double tol) {
    const Vec2 v = cap.v.normalized();
    return CapTester(body).contained(v, cap.b, tol);
}

}  // namespace riesz
