#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace riesz {

struct GeometryError : std::runtime_error {
    explicit GeometryError(const std::string& msg) : std::runtime_error(msg) {}
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(const Vec2& r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(const Vec2& r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    friend constexpr Vec2 operator*(double s, const Vec2& v) { return {v.x * s, v.y * s}; }
    constexpr double dot(const Vec2& r) const { return x * r.x + y * r.y; }
    constexpr double cross(const Vec2& r) const { return x * r.y - y * r.x; }
    double norm() const;
    double norm2() const { return x * x + y * y; }
    Vec2 normalized() const;
    /// Rotation by +90 degrees.
    constexpr Vec2 perp() const { return {-y, x}; }
};

double dist(const Vec2& a, const Vec2& b);

/// Unit direction at angle theta.
Vec2 dir(double theta);

enum class LoopKind { Polygon, Circle };

/// One oriented boundary loop. Polygon vertices are stored counter-clockwise;
/// the region sign is carried by `orientation` (+1 adds the enclosed region,
/// -1 subtracts it).
struct Loop {
    LoopKind kind = LoopKind::Polygon;
    std::vector<Vec2> vertices;  // polygon only, CCW
    Vec2 center;                 // circle only
    double radius = 0.0;         // circle only
    int orientation = 1;         // +1 | -1

    static Loop polygon(std::vector<Vec2> vertices, int orientation = 1);
    static Loop circle(Vec2 center, double radius, int orientation = 1);
};

/// Immutable planar body: union of +1 loop interiors minus -1 loop interiors.
/// Validates on construction (simple loops, >= 3 vertices, positive total
/// area) and caches area, centroid and diameter.
class Body {
public:
    static Body make(std::vector<Loop> loops, int dimension = 2);

    static Body make_disk(Vec2 center, double radius);
    static Body make_polygon(std::vector<Vec2> vertices);
    /// Axis-aligned rectangle [x0,x1] x [y0,y1].
    static Body make_rectangle(Vec2 lo, Vec2 hi);

    const std::vector<Loop>& loops() const { return loops_; }
    int dimension() const { return dimension_; }

    double area() const { return area_; }
    Vec2 centroid() const { return centroid_; }
    double diameter() const { return diameter_; }

    /// Default boundary tolerance, 1e-9 * diameter.
    double boundary_tol() const { return 1e-9 * diameter_; }

    void bounding_box(Vec2& lo, Vec2& hi) const;

private:
    Body() = default;
    std::vector<Loop> loops_;
    int dimension_ = 2;
    double area_ = 0.0;
    Vec2 centroid_;
    double diameter_ = 0.0;
};

enum class PointClass { Interior, Boundary, Exterior };

PointClass classify_point(const Body& body, const Vec2& x, double tol);
/// classify_point with the body's default boundary tolerance.
PointClass classify_point(const Body& body, const Vec2& x);

/// Winding-only membership test (no boundary band); cheap building block for
/// grid and Monte-Carlo integrators.
bool point_inside(const Body& body, const Vec2& x);

/// Distance from x to the boundary of the body (all loops).
double distance_to_boundary(const Body& body, const Vec2& x);

struct RayEntry {
    double t = 0.0;  // distance along the ray, > 0
    int sign = 0;    // +1 if the ray exits the body here, -1 if it enters
};

/// Signed transversal crossings of the half line {x + t v, t > 0} with the
/// body boundary. sign follows the inside-to-outside convention: +1 where the
/// ray leaves the body, -1 where it re-enters.
struct RayCrossings {
    std::vector<RayEntry> entries;  // sorted by t ascending
    double rho_sup = 0.0;           // sup{a > 0 : x + a v in body}, 0 if none
    double rho_inf = 0.0;           // inf{a > 0 : x + a v in closure of complement}
    double applied_rotation = 0.0;  // micro-rotation used to escape vertex/tangent hits
};

RayCrossings ray_crossings(const Body& body, const Vec2& x, const Vec2& v);

/// M_v = sup over the body of x . v (exact over vertices and circle extremes).
double support_value(const Body& body, const Vec2& v);

struct CapSpec {
    Vec2 v;         // unit direction
    double b = 0.0; // halfplane offset; the cap is {x . v > b}
};

/// True iff the reflection of the cap {x . v > b} across {x . v = b} lies in
/// the body up to a relative area tolerance: area(reflected \ body) <=
/// tol * area(body). Polygon loops are handled by exact clipping; a body that
/// is a single disk is handled analytically; other circle loops are
/// approximated by fine inscribed polygons.
bool cap_reflection_contained(const Body& body, const CapSpec& cap, double tol = 1e-9);

/// Reusable cap-reflection tester: polygonizes and triangulates the body once
/// so that repeated containment queries (unfolded-region scans) stay cheap.
class CapTester {
public:
    explicit CapTester(const Body& body, int circle_segments = 512);
    bool contained(const Vec2& v, double b, double tol) const;

private:
    struct WorkingLoop {
        std::vector<Vec2> vertices;  // CCW
        int orientation;
        std::vector<std::array<Vec2, 3>> triangles;
    };
    std::vector<WorkingLoop> loops_;
    double body_area_ = 0.0;
    bool single_disk_ = false;
    Vec2 disk_center_;
    double disk_radius_ = 0.0;
};

/// One RayCrossings per direction (cos(2 pi k / n), sin(2 pi k / n)).
std::vector<RayCrossings> radial_profile(const Body& body, const Vec2& x, int n_dirs);

// --- polygon helpers (shared by caps, unfolded regions, oracles) ---

double polygon_signed_area(const std::vector<Vec2>& poly);
Vec2 polygon_centroid(const std::vector<Vec2>& poly);
bool polygon_is_simple(const std::vector<Vec2>& poly);

/// Clip a closed polygon against the halfplane {p : p . n <= c}
/// (Sutherland-Hodgman). Winding inside the halfplane is preserved, so signed
/// areas of clipped non-convex subjects remain correct.
std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& poly, const Vec2& n, double c);

/// Ear-clipping triangulation of a simple CCW polygon.
std::vector<std::array<Vec2, 3>> triangulate(const std::vector<Vec2>& poly);

/// Signed area of poly clipped to the (CCW) triangle tri.
double clipped_area_in_triangle(const std::vector<Vec2>& poly, const std::array<Vec2, 3>& tri);

/// Euclidean projection onto a convex polygon (returns x itself when inside).
Vec2 project_to_convex(const std::vector<Vec2>& poly, const Vec2& x);

/// Signed distance of x to a convex CCW polygon: negative inside.
double convex_signed_distance(const std::vector<Vec2>& poly, const Vec2& x);

}  // namespace riesz
