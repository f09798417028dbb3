#include "riesz/centers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace riesz {

double UnfoldedRegion::diameter() const {
    double best = 0.0;
    for (std::size_t i = 0; i < polygon.size(); ++i)
        for (std::size_t j = i + 1; j < polygon.size(); ++j)
            best = std::max(best, dist(polygon[i], polygon[j]));
    return best;
}

bool UnfoldedRegion::contains(const Vec2& x, double dilation) const {
    if (polygon.empty()) return false;
    return convex_signed_distance(polygon, x) <= dilation;
}

namespace {

void push_dir(std::vector<Vec2>& dirs, const Vec2& v) {
    const double n = v.norm();
    if (n < 1e-15) return;
    dirs.push_back(v * (1.0 / n));
}

// Equi-angular directions plus the structural candidates of polygon loops:
// edge directions (perpendicular-bisector folds) and vertex bisector normals
// (angle-bisector folds). Sampling these exactly pins the Uf vertices of
// polygonal bodies.
std::vector<Vec2> sample_directions(const Body& body, int n_dirs) {
    std::vector<Vec2> dirs;
    dirs.reserve(n_dirs + 16);
    for (int k = 0; k < n_dirs; ++k) dirs.push_back(dir(2.0 * M_PI * k / n_dirs));
    for (const Loop& loop : body.loops()) {
        if (loop.kind != LoopKind::Polygon) continue;
        const std::size_t n = loop.vertices.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2& prev = loop.vertices[(i + n - 1) % n];
            const Vec2& cur = loop.vertices[i];
            const Vec2& next = loop.vertices[(i + 1) % n];
            push_dir(dirs, next - cur);
            push_dir(dirs, cur - next);
            const Vec2 u1 = (prev - cur).normalized();
            const Vec2 u2 = (next - cur).normalized();
            const Vec2 bis = u1 + u2;
            if (bis.norm() > 1e-12) {
                push_dir(dirs, bis.perp());
                push_dir(dirs, -(bis.perp()));
            }
        }
    }
    std::sort(dirs.begin(), dirs.end(), [](const Vec2& a, const Vec2& b) {
        return std::atan2(a.y, a.x) < std::atan2(b.y, b.x);
    });
    dirs.erase(std::unique(dirs.begin(), dirs.end(),
                           [](const Vec2& a, const Vec2& b) {
                               return std::abs(std::atan2(a.y, a.x) - std::atan2(b.y, b.x)) < 1e-13;
                           }),
               dirs.end());
    return dirs;
}

}  // namespace

UnfoldedRegion unfolded_region(const Body& body, int n_dirs, double tol) {
    if (n_dirs < 32) throw SolverError("unfolded_region needs n_dirs >= 32");
    const double diam = body.diameter();
    const double bisect_tol = tol > 0.0 ? tol : 1e-12 * diam;
    const double cap_tol = 1e-13;  // relative area verdict for the fold test
    const CapTester tester(body);

    const std::vector<Vec2> dirs = sample_directions(body, n_dirs);
    UnfoldedRegion uf;
    uf.n_dirs = static_cast<int>(dirs.size());
    uf.halfspaces.reserve(dirs.size());

    const double step = diam / 256.0;
    for (const Vec2& v : dirs) {
        const double top = support_value(body, v);
        const double floor = -support_value(body, -v) - 2.0 * step;
        double lo = top, hi = top;
        bool found = false;
        for (double b = top - step; b > floor; b -= step) {
            if (!tester.contained(v, b, cap_tol)) {
                lo = b;
                hi = b + step;
                found = true;
                break;
            }
            hi = b;
        }
        if (!found)
            throw SolverError("unfolded_region: cap scan found no failing offset");
        for (int it = 0; it < 60 && hi - lo > bisect_tol; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (tester.contained(v, mid, cap_tol)) hi = mid; else lo = mid;
        }
        uf.halfspaces.push_back({v, hi});
    }

    // Intersect {x . v <= l_v + slack}; the slack keeps point-like regions
    // (disks, doubly symmetric bodies) numerically nonempty.
    const double slack = std::max(1e-9 * diam, bisect_tol);
    Vec2 lo, hi;
    body.bounding_box(lo, hi);
    const Vec2 pad{0.1 * diam, 0.1 * diam};
    lo = lo - pad;
    hi = hi + pad;
    std::vector<Vec2> poly{{lo.x, lo.y}, {hi.x, lo.y}, {hi.x, hi.y}, {lo.x, hi.y}};
    for (const auto& h : uf.halfspaces) {
        poly = clip_halfplane(poly, h.v, h.offset + slack);
        if (poly.size() < 3) throw SolverError("unfolded_region: empty halfspace intersection");
    }
    // Drop duplicate vertices introduced by clipping.
    std::vector<Vec2> cleaned;
    for (const Vec2& p : poly)
        if (cleaned.empty() || dist(cleaned.back(), p) > 1e-13 * diam) cleaned.push_back(p);
    if (cleaned.size() > 1 && dist(cleaned.front(), cleaned.back()) <= 1e-13 * diam)
        cleaned.pop_back();
    uf.polygon = std::move(cleaned);

    if (!uf.contains(body.centroid(), 10.0 * slack + 1e-9 * diam))
        throw SolverError("unfolded_region does not contain the centroid");
    return uf;
}

// ---------------------------------------------------------------------------
// find_centers
// ---------------------------------------------------------------------------

namespace {

// All regimes are solved as minimization.
struct Objective {
    const Body* body;
    Alpha alpha;
    Regime regime;
    QuadratureSpec quad;

    bool interior_only() const {
        return regime == Regime::Zero || regime == Regime::Negative;
    }
    double value(const Vec2& x) const {
        if (regime == Regime::EqualM) return -eval_log(*body, x, quad).value;
        const double v = eval(*body, x, alpha, quad).value;
        return regime == Regime::AboveM ? v : -v;
    }
    Vec2 grad(const Vec2& x) const {
        if (regime == Regime::EqualM) return -gradient_log(*body, x, quad);
        const Vec2 g = gradient(*body, x, alpha, quad);
        return regime == Regime::AboveM ? g : -g;
    }
    double to_extremal(double f) const { return regime == Regime::AboveM ? f : -f; }
};

struct StartResult {
    Vec2 x;
    double f = std::numeric_limits<double>::infinity();
    bool converged = false;
};

bool feasible(const Body& body, const Objective& obj, const Vec2& x) {
    if (!obj.interior_only()) return true;
    return classify_point(body, x) == PointClass::Interior;
}

StartResult solve_from(const Body& body, const Objective& obj, const UnfoldedRegion& uf,
                       const SolverOptions& opts, Vec2 x0) {
    const double diam = body.diameter();
    const double uf_dilation = opts.uf_dilation_rel * diam;

    StartResult res;
    if (!feasible(body, obj, x0)) return res;

    Vec2 x = x0;
    double f = obj.value(x);
    Vec2 g = obj.grad(x);
    // Inverse Hessian estimate, symmetric 2x2.
    double h11 = 0.0, h12 = 0.0, h22 = 0.0;
    {
        const double g0 = g.norm();
        const double scale = g0 > 0.0 ? 0.01 * diam / g0 : 1.0;
        h11 = h22 = scale;
    }

    const double gscale = (std::abs(f) + 1e-300) * std::max(1.0, std::abs(obj.alpha.value)) / diam;
    const double gtol = 1e-10 * gscale + 1e-14;
    int stagnant = 0;

    for (int it = 0; it < opts.max_iterations; ++it) {
        if (g.norm() <= gtol) {
            res.converged = true;
            break;
        }
        Vec2 d{-(h11 * g.x + h12 * g.y), -(h12 * g.x + h22 * g.y)};
        if (d.dot(g) >= 0.0) {  // reset to steepest descent
            const double s = 0.01 * diam / std::max(g.norm(), 1e-300);
            h11 = h22 = s;
            h12 = 0.0;
            d = -s * g;
        }

        double t = 1.0;
        if (obj.interior_only()) {
            // The objective blows down at the boundary; never step more than
            // half the distance to it.
            const double db = distance_to_boundary(body, x);
            const double dn = d.norm();
            if (dn > 0.5 * db) t = std::min(t, 0.5 * db / dn);
        }

        bool accepted = false;
        Vec2 xn;
        double fn = f;
        for (int ls = 0; ls < 48; ++ls) {
            xn = x + t * d;
            if (uf.contains(xn, uf_dilation) || !obj.interior_only()) {
                if (!uf.contains(xn, uf_dilation)) {
                    const Vec2 proj = project_to_convex(uf.polygon, xn);
                    if (feasible(body, obj, proj)) xn = proj;
                }
                if (feasible(body, obj, xn)) {
                    fn = obj.value(xn);
                    if (fn <= f + 1e-4 * t * d.dot(g)) {
                        accepted = true;
                        break;
                    }
                }
            }
            t *= 0.5;
        }
        if (!accepted) {
            res.converged = g.norm() <= 1e3 * gtol;
            break;
        }

        const Vec2 gn = obj.grad(xn);
        const Vec2 s = xn - x;
        const Vec2 yv = gn - g;
        const double sy = s.dot(yv);
        if (sy > 1e-14 * s.norm() * yv.norm()) {
            // BFGS inverse update.
            const double rho = 1.0 / sy;
            const double hy1 = h11 * yv.x + h12 * yv.y;
            const double hy2 = h12 * yv.x + h22 * yv.y;
            const double yhy = yv.x * hy1 + yv.y * hy2;
            const double c = (1.0 + rho * yhy) * rho;
            h11 += c * s.x * s.x - rho * (s.x * hy1 + hy1 * s.x);
            h12 += c * s.x * s.y - rho * (s.x * hy2 + hy1 * s.y);
            h22 += c * s.y * s.y - rho * (s.y * hy2 + hy2 * s.y);
        }

        const bool tiny_step = s.norm() <= 1e-14 * diam;
        const bool tiny_gain = f - fn <= 1e-15 * (std::abs(f) + 1e-300);
        stagnant = (tiny_step || tiny_gain) ? stagnant + 1 : 0;
        x = xn;
        f = fn;
        g = gn;
        if (stagnant >= 2) {
            res.converged = true;
            break;
        }
        if (it + 1 == opts.max_iterations) res.converged = g.norm() <= 1e3 * gtol;
    }
    res.x = x;
    res.f = f;
    return res;
}

std::vector<Vec2> start_points(const Body& body, const Objective& obj, const UnfoldedRegion& uf,
                               const SolverOptions& opts, const std::vector<Vec2>& warm) {
    std::vector<Vec2> starts;
    Vec2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    Vec2 hi = -lo;
    for (const Vec2& p : uf.polygon) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    const int g = std::max(2, opts.grid_starts);
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < g; ++j) {
            Vec2 p{lo.x + (hi.x - lo.x) * (i + 0.5) / g, lo.y + (hi.y - lo.y) * (j + 0.5) / g};
            if (!uf.contains(p, 1e-9 * body.diameter())) continue;
            if (classify_point(body, p) != PointClass::Interior) continue;
            starts.push_back(p);
        }
    }
    if (classify_point(body, body.centroid()) == PointClass::Interior)
        starts.push_back(body.centroid());
    for (const Vec2& w : warm)
        if (feasible(body, obj, w)) starts.push_back(w);
    if (starts.empty()) {
        // Fall back to an interior grid over the whole body.
        body.bounding_box(lo, hi);
        const int n = 9;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Vec2 p{lo.x + (hi.x - lo.x) * (i + 0.5) / n,
                       lo.y + (hi.y - lo.y) * (j + 0.5) / n};
                if (classify_point(body, p) == PointClass::Interior) starts.push_back(p);
            }
    }
    if (starts.empty()) throw SolverError("find_centers: no feasible start point");
    return starts;
}

}  // namespace

CenterResult find_centers(const Body& body, Alpha alpha, const SolverOptions& opts,
                          const UnfoldedRegion& uf, const std::vector<Vec2>& warm_starts) {
    Objective obj{&body, alpha, alpha.regime(2), opts.quad};
    const double diam = body.diameter();

    CenterResult out;
    out.alpha = alpha;
    out.regime = obj.regime;

    std::vector<StartResult> finals;
    for (const Vec2& s : start_points(body, obj, uf, opts, warm_starts)) {
        StartResult r = solve_from(body, obj, uf, opts, s);
        if (std::isfinite(r.f)) finals.push_back(r);
    }
    std::erase_if(finals, [](const StartResult& r) { return !r.converged; });
    if (finals.empty()) throw SolverError("find_centers: no multistart converged");

    std::sort(finals.begin(), finals.end(),
              [](const StartResult& a, const StartResult& b) { return a.f < b.f; });
    const double fbest = finals.front().f;
    const double ftol = opts.value_tol_rel * (std::abs(fbest) + 1e-300) + 1e-14;
    const double crad = opts.cluster_radius_rel * diam;

    int at_best = 0;
    for (const StartResult& r : finals) {
        if (r.f > fbest + ftol) continue;
        ++at_best;
        bool fresh = true;
        for (const Vec2& c : out.centers)
            if (dist(c, r.x) <= crad) {
                fresh = false;
                break;
            }
        if (fresh) out.centers.push_back(r.x);
    }
    out.extremal_value = obj.to_extremal(fbest);
    out.multistart_agreement = static_cast<double>(at_best) / finals.size();
    out.converged = true;
    return out;
}

CenterResult find_centers(const Body& body, Alpha alpha, const SolverOptions& opts) {
    const UnfoldedRegion uf = unfolded_region(body, opts.uf_dirs);
    return find_centers(body, alpha, opts, uf, {});
}

std::vector<CenterResult> trajectory(const Body& body, const std::vector<Alpha>& alphas,
                                     const SolverOptions& opts) {
    const UnfoldedRegion uf = unfolded_region(body, opts.uf_dirs);
    std::vector<CenterResult> out;
    std::vector<Vec2> warm;
    for (const Alpha& a : alphas) {
        try {
            CenterResult r = find_centers(body, a, opts, uf, warm);
            warm = r.centers;
            out.push_back(std::move(r));
        } catch (const std::exception&) {
            CenterResult failed;
            failed.alpha = a;
            failed.regime = a.regime(2);
            failed.converged = false;
            out.push_back(std::move(failed));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Extremal balls
// ---------------------------------------------------------------------------

namespace {

struct Circle {
    Vec2 c;
    double r2 = -1.0;
    bool contains(const Vec2& p) const {
        return r2 >= 0.0 && (p - c).norm2() <= r2 * (1.0 + 1e-12) + 1e-300;
    }
};

Circle circle_two(const Vec2& a, const Vec2& b) {
    const Vec2 c = 0.5 * (a + b);
    return {c, (a - c).norm2()};
}

Circle circle_three(const Vec2& a, const Vec2& b, const Vec2& c) {
    const double d = 2.0 * ((b - a).cross(c - a));
    if (std::abs(d) < 1e-300) return {{0, 0}, -1.0};
    const double a2 = a.norm2(), b2 = b.norm2(), c2 = c.norm2();
    const Vec2 ctr{(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
                   (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
    return {ctr, std::max({(a - ctr).norm2(), (b - ctr).norm2(), (c - ctr).norm2()})};
}

Circle trivial_circle(const std::vector<Vec2>& support) {
    switch (support.size()) {
        case 0: return {{0, 0}, -1.0};
        case 1: return {support[0], 0.0};
        case 2: return circle_two(support[0], support[1]);
        default: {
            // Prefer a two-point circle when it already covers the third.
            for (int i = 0; i < 3; ++i) {
                Circle c = circle_two(support[i], support[(i + 1) % 3]);
                if (c.contains(support[(i + 2) % 3])) return c;
            }
            return circle_three(support[0], support[1], support[2]);
        }
    }
}

Circle welzl(std::vector<Vec2>& pts, std::size_t n, std::vector<Vec2> support) {
    if (n == 0 || support.size() == 3) return trivial_circle(support);
    Circle c = welzl(pts, n - 1, support);
    if (c.contains(pts[n - 1])) return c;
    support.push_back(pts[n - 1]);
    return welzl(pts, n - 1, std::move(support));
}

}  // namespace

ExtremalBall minmax_point(const Body& body, unsigned long long seed) {
    // A single disk is its own smallest enclosing circle.
    if (body.loops().size() == 1 && body.loops()[0].kind == LoopKind::Circle &&
        body.loops()[0].orientation == 1)
        return {body.loops()[0].center, body.loops()[0].radius, ExtremalBall::Kind::MinMax};

    std::vector<Vec2> pts;
    for (const Loop& loop : body.loops()) {
        if (loop.orientation != 1) continue;  // holes are interior
        if (loop.kind == LoopKind::Circle) {
            for (int k = 0; k < 256; ++k)
                pts.push_back(loop.center + loop.radius * dir(2.0 * M_PI * k / 256));
        } else {
            pts.insert(pts.end(), loop.vertices.begin(), loop.vertices.end());
        }
    }
    std::mt19937_64 rng(seed);
    std::shuffle(pts.begin(), pts.end(), rng);
    const Circle c = welzl(pts, pts.size(), {});
    return {c.c, std::sqrt(std::max(0.0, c.r2)), ExtremalBall::Kind::MinMax};
}

std::vector<ExtremalBall> chebyshev_centers(const std::vector<Vec2>& convex_poly) {
    const std::size_t n = convex_poly.size();
    if (n < 3) throw GeometryError("chebyshev_centers needs a polygon");
    struct Row {
        Vec2 n;
        double c;
    };
    std::vector<Row> rows;
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = convex_poly[i];
        const Vec2& b = convex_poly[(i + 1) % n];
        const Vec2 e = b - a;
        scale = std::max(scale, e.norm());
        if (e.norm() < 1e-300) continue;
        const Vec2 nn = Vec2{e.y, -e.x} * (1.0 / e.norm());  // outward for CCW
        rows.push_back({nn, nn.dot(a)});
    }
    const double eps = 1e-10 * scale;
    double best_r = -1.0;
    std::vector<Vec2> best;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            for (std::size_t k = j + 1; k < rows.size(); ++k) {
                // Solve n_q . x + r = c_q for the active triple.
                const double m[3][4] = {
                    {rows[i].n.x, rows[i].n.y, 1.0, rows[i].c},
                    {rows[j].n.x, rows[j].n.y, 1.0, rows[j].c},
                    {rows[k].n.x, rows[k].n.y, 1.0, rows[k].c},
                };
                auto det3 = [](const double a[3][3]) {
                    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
                };
                const double base[3][3] = {{m[0][0], m[0][1], m[0][2]},
                                           {m[1][0], m[1][1], m[1][2]},
                                           {m[2][0], m[2][1], m[2][2]}};
                const double d0 = det3(base);
                if (std::abs(d0) < 1e-14) continue;
                double sol[3];
                for (int col = 0; col < 3; ++col) {
                    double tmp[3][3];
                    for (int r = 0; r < 3; ++r)
                        for (int cc = 0; cc < 3; ++cc) tmp[r][cc] = cc == col ? m[r][3] : base[r][cc];
                    sol[col] = det3(tmp) / d0;
                }
                const Vec2 x{sol[0], sol[1]};
                const double r = sol[2];
                if (r < 0.0) continue;
                bool ok = true;
                for (const Row& row : rows)
                    if (row.n.dot(x) + r > row.c + eps) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                if (r > best_r + eps) {
                    best_r = r;
                    best = {x};
                } else if (std::abs(r - best_r) <= eps) {
                    bool fresh = true;
                    for (const Vec2& p : best)
                        if (dist(p, x) <= eps) fresh = false;
                    if (fresh) best.push_back(x);
                }
            }
        }
    }
    std::vector<ExtremalBall> out;
    for (const Vec2& p : best) out.push_back({p, best_r, ExtremalBall::Kind::MaxMin});
    return out;
}

namespace {

bool convex_polygon_body(const Body& body, std::vector<Vec2>& poly) {
    if (body.loops().size() != 1 || body.loops()[0].kind != LoopKind::Polygon ||
        body.loops()[0].orientation != 1)
        return false;
    const auto& v = body.loops()[0].vertices;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % n];
        const Vec2& c = v[(i + 2) % n];
        if ((b - a).cross(c - b) < -1e-12 * body.diameter() * body.diameter()) return false;
    }
    poly = v;
    return true;
}

}  // namespace

std::vector<ExtremalBall> maxmin_points(const Body& body, int grid_n) {
    if (grid_n < 64) throw SolverError("maxmin_points needs grid_n >= 64");
    const double diam = body.diameter();
    auto depth = [&](const Vec2& p) {
        const double d = distance_to_boundary(body, p);
        return classify_point(body, p) == PointClass::Interior ? d : -d;
    };

    Vec2 lo, hi;
    body.bounding_box(lo, hi);
    const double hx = (hi.x - lo.x) / grid_n;
    const double hy = (hi.y - lo.y) / grid_n;
    const double cell = std::hypot(hx, hy);

    std::vector<Vec2> cand;
    double best = -std::numeric_limits<double>::infinity();
    std::vector<std::pair<Vec2, double>> grid_vals;
    grid_vals.reserve(static_cast<std::size_t>(grid_n) * grid_n);
    for (int i = 0; i < grid_n; ++i) {
        for (int j = 0; j < grid_n; ++j) {
            const Vec2 p{lo.x + (i + 0.5) * hx, lo.y + (j + 0.5) * hy};
            const double v = depth(p);
            grid_vals.emplace_back(p, v);
            best = std::max(best, v);
        }
    }
    for (const auto& [p, v] : grid_vals)
        if (v >= best - 2.0 * cell) cand.push_back(p);

    // Local pattern refinement (the depth function is piecewise smooth).
    const Vec2 moves[8] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    std::vector<std::pair<Vec2, double>> refined;
    for (Vec2 p : cand) {
        double v = depth(p);
        double step = cell;
        while (step > 1e-12 * diam) {
            bool improved = false;
            for (const Vec2& mv : moves) {
                const Vec2 q = p + step * mv;
                const double vq = depth(q);
                if (vq > v) {
                    p = q;
                    v = vq;
                    improved = true;
                }
            }
            if (!improved) step *= 0.5;
        }
        refined.emplace_back(p, v);
    }

    // Exact Chebyshev cross-check for convex polygon bodies.
    std::vector<Vec2> poly;
    if (convex_polygon_body(body, poly)) {
        for (const ExtremalBall& b : chebyshev_centers(poly)) refined.emplace_back(b.center, b.radius);
    }

    double r0 = 0.0;
    for (const auto& [p, v] : refined) r0 = std::max(r0, v);
    const double keep = r0 - 1e-7 * diam;
    const double crad = 1e-7 * diam;
    std::vector<ExtremalBall> out;
    std::sort(refined.begin(), refined.end(),
              [](const auto& a, const auto& b) { return a.second > b.second; });
    for (const auto& [p, v] : refined) {
        if (v < keep) continue;
        bool fresh = true;
        for (const ExtremalBall& b : out)
            if (dist(b.center, p) <= crad) {
                fresh = false;
                break;
            }
        if (fresh) out.push_back({p, v, ExtremalBall::Kind::MaxMin});
    }
    return out;
}

double hausdorff(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
    if (a.empty() || b.empty()) throw SolverError("hausdorff of an empty set");
    auto directed = [](const std::vector<Vec2>& from, const std::vector<Vec2>& to) {
        double worst = 0.0;
        for (const Vec2& p : from) {
            double nearest = std::numeric_limits<double>::infinity();
            for (const Vec2& q : to) nearest = std::min(nearest, dist(p, q));
            worst = std::max(worst, nearest);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

std::array<CevianRatio, 3> shibata_ratios(const Body& triangle, const Vec2& L) {
    if (triangle.loops().size() != 1 || triangle.loops()[0].kind != LoopKind::Polygon ||
        triangle.loops()[0].vertices.size() != 3)
        throw GeometryError("shibata_ratios needs a triangle body");
    const auto& v = triangle.loops()[0].vertices;
    if (classify_point(triangle, L) != PointClass::Interior)
        throw GeometryError("shibata_ratios: L must lie strictly inside the triangle");

    auto angle_at_L = [&](const Vec2& p, const Vec2& q) {
        const Vec2 u = p - L, w = q - L;
        return std::atan2(std::abs(u.cross(w)), u.dot(w));
    };
    // Cevian through vertex `a` meets the opposite edge (b, c) at b + s (c-b).
    auto cevian_hit = [&](const Vec2& a, const Vec2& b, const Vec2& c) {
        const Vec2 d1 = L - a, d2 = c - b;
        const double den = d1.cross(d2);
        if (std::abs(den) < 1e-300) throw GeometryError("shibata_ratios: degenerate cevian");
        const double t = (b - a).cross(d2) / den;
        const double s = (b - a).cross(d1) / den;
        if (s <= 0.0 || s >= 1.0 || t <= 0.0)
            throw GeometryError("shibata_ratios: cevian misses the opposite edge");
        return b + s * d2;
    };

    const Vec2 A = v[0], B = v[1], C = v[2];
    const Vec2 X = cevian_hit(A, B, C);  // on BC
    const Vec2 Y = cevian_hit(B, C, A);  // on CA
    const Vec2 Z = cevian_hit(C, A, B);  // on AB

    std::array<CevianRatio, 3> out;
    out[0] = {angle_at_L(A, B) / angle_at_L(A, C), dist(B, X) / dist(C, X)};
    out[1] = {angle_at_L(C, A) / angle_at_L(C, B), dist(A, Z) / dist(B, Z)};
    out[2] = {angle_at_L(B, C) / angle_at_L(B, A), dist(C, Y) / dist(A, Y)};
    return out;
}

IntervalCenters interval_pair_center(double R, Alpha alpha) {
    if (!(R > 1.0)) throw SolverError("interval_pair_center needs R > 1");
    const double a = alpha.value;
    IntervalCenters out;
    if (std::abs(a - 2.0) < 1e-8) {
        out.continuum = true;
        out.points = {-1.0, 1.0};
        return out;
    }
    if (a > 2.0) {
        // V is strictly convex; the origin is the unique center.
        out.points = {0.0};
        return out;
    }
    auto f = [&](double x) {
        if (std::abs(a - 1.0) < 1e-8)
            return std::log((R + x) * (x - 1.0)) - std::log((R - x) * (x + 1.0));
        return std::pow(x + R, a - 1.0) - std::pow(x + 1.0, a - 1.0) -
               std::pow(R - x, a - 1.0) + std::pow(x - 1.0, a - 1.0);
    };
    double lo = 1.0 + 1e-13 * (R - 1.0);
    double hi = 0.5 * (R + 1.0);
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) hi = lo;
    else if (!(flo * fhi < 0.0))
        throw SolverError("interval_pair_center: no isolated root in (1, (R+1)/2)");
    for (int it = 0; it < 200 && hi - lo > 1e-15 * R; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        (flo * fm < 0.0 ? hi : lo) = mid;
        if (hi == lo) break;
        if (flo * fm >= 0.0) flo = fm;
    }
    const double root = 0.5 * (lo + hi);
    out.points = {-root, root};
    return out;
}

}  // namespace riesz
