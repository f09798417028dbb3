#include "riesz/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace riesz {

namespace {

double u01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

std::uint64_t mix_seed(std::uint64_t root, std::uint64_t stream) {
    // splitmix64 step so batch streams are decorrelated but reproducible.
    std::uint64_t z = root + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct Region {
    const Body* body;
    bool want_inside = true;  // false integrates over the complement
    Vec2 x;
    double excise_r = 0.0;  // drop |p - x| < excise_r
    double ball_r = 0.0;    // keep |p - x| <= ball_r (complement route)

    bool contains(const Vec2& p) const {
        const double d2 = (p - x).norm2();
        if (excise_r > 0.0 && d2 < excise_r * excise_r) return false;
        if (ball_r > 0.0 && d2 > ball_r * ball_r) return false;
        return point_inside(*body, p) == want_inside;
    }
    // True when the excision/ball circles or a circle loop could cross the cell.
    bool near_circle(const Vec2& center, double half_diag) const {
        const double d = dist(center, x);
        if (excise_r > 0.0 && std::abs(d - excise_r) <= 1.3 * half_diag) return true;
        if (ball_r > 0.0 && std::abs(d - ball_r) <= 1.3 * half_diag) return true;
        for (const Loop& loop : body->loops())
            if (loop.kind == LoopKind::Circle &&
                std::abs(dist(center, loop.center) - loop.radius) <= 1.3 * half_diag)
                return true;
        return false;
    }
};

// Exact area and centroid of (cell rect) ∩ body for polygon-loop bodies.
void cell_body_overlap(const Body& body, const Vec2& clo, const Vec2& chi, double& area,
                       Vec2& centroid) {
    area = 0.0;
    double cx = 0.0, cy = 0.0;
    for (const Loop& loop : body.loops()) {
        std::vector<Vec2> piece = loop.vertices;
        piece = clip_halfplane(piece, {1, 0}, chi.x);
        piece = clip_halfplane(piece, {-1, 0}, -clo.x);
        piece = clip_halfplane(piece, {0, 1}, chi.y);
        piece = clip_halfplane(piece, {0, -1}, -clo.y);
        if (piece.size() < 3) continue;
        const double a = polygon_signed_area(piece);
        if (std::abs(a) < 1e-30) continue;
        const Vec2 c = polygon_centroid(piece);
        area += loop.orientation * a;
        cx += loop.orientation * a * c.x;
        cy += loop.orientation * a * c.y;
    }
    centroid = area > 1e-300 ? Vec2{cx / area, cy / area} : 0.5 * (clo + chi);
}

// Plain midpoint over an axis-aligned box. Cells cut by polygon edges get
// exact clipped areas (kernel at the piece centroid); cells cut by circles
// (excision, truncation ball, circle loops) fall back to a 16x16 sub-grid.
template <class F>
double cartesian_midpoint(const Region& region, F&& kernel, Vec2 lo, Vec2 hi, double h) {
    const int nx = std::max(1, static_cast<int>(std::ceil((hi.x - lo.x) / h)));
    const int ny = std::max(1, static_cast<int>(std::ceil((hi.y - lo.y) / h)));
    const double hx = (hi.x - lo.x) / nx;
    const double hy = (hi.y - lo.y) / ny;
    const double half_diag = 0.5 * std::hypot(hx, hy);
    constexpr int kSub = 16;

    std::vector<std::uint8_t> corners(static_cast<std::size_t>(nx + 1) * (ny + 1));
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i <= nx; ++i)
            corners[static_cast<std::size_t>(j) * (nx + 1) + i] =
                region.contains({lo.x + i * hx, lo.y + j * hy}) ? 1 : 0;

    double acc = 0.0;
    const double cell_area = hx * hy;
    const double sub_area = cell_area / (kSub * kSub);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const std::uint8_t c00 = corners[static_cast<std::size_t>(j) * (nx + 1) + i];
            const std::uint8_t c10 = corners[static_cast<std::size_t>(j) * (nx + 1) + i + 1];
            const std::uint8_t c01 = corners[static_cast<std::size_t>(j + 1) * (nx + 1) + i];
            const std::uint8_t c11 = corners[static_cast<std::size_t>(j + 1) * (nx + 1) + i + 1];
            const Vec2 center{lo.x + (i + 0.5) * hx, lo.y + (j + 0.5) * hy};
            const bool uniform = c00 == c10 && c00 == c01 && c00 == c11;
            const bool circle_cut = region.near_circle(center, half_diag);
            if (uniform && !circle_cut) {
                if (c00) acc += kernel(center) * cell_area;
                continue;
            }
            if (!circle_cut) {
                const Vec2 clo{lo.x + i * hx, lo.y + j * hy};
                const Vec2 chi{clo.x + hx, clo.y + hy};
                double in_area;
                Vec2 in_c;
                cell_body_overlap(*region.body, clo, chi, in_area, in_c);
                double piece = region.want_inside ? in_area : cell_area - in_area;
                piece = std::min(cell_area, std::max(0.0, piece));
                if (piece > 1e-14 * cell_area) {
                    const Vec2 pc = region.want_inside
                                        ? in_c
                                        : (cell_area * center - in_area * in_c) *
                                              (1.0 / (cell_area - in_area));
                    acc += kernel(pc) * piece;
                }
                continue;
            }
            for (int sj = 0; sj < kSub; ++sj)
                for (int si = 0; si < kSub; ++si) {
                    const Vec2 p{lo.x + (i + (si + 0.5) / kSub) * hx,
                                 lo.y + (j + (sj + 0.5) / kSub) * hy};
                    if (region.contains(p)) acc += kernel(p) * sub_area;
                }
        }
    }
    return acc;
}

// int_{r0}^{r1} 2 pi r^(alpha-1) dr by midpoint on a log-spaced grid (the
// annulus around the excised ball is radially exact territory).
double radial_midpoint(double r0, double r1, double alpha, long bins) {
    if (!(r1 > r0) || r0 <= 0.0) return 0.0;
    const double q = std::log(r1 / r0) / bins;
    double acc = 0.0;
    double left = r0;
    for (long k = 1; k <= bins; ++k) {
        const double right = r0 * std::exp(q * k);
        const double mid = 0.5 * (left + right);
        acc += std::pow(mid, alpha - 1.0) * (right - left);
        left = right;
    }
    return 2.0 * M_PI * acc;
}

struct RouteValues {
    double value = 0.0;
    std::optional<double> complement;
};

RouteValues bruteforce_at_resolution(const Body& body, const Vec2& x, Alpha alpha, double eps,
                                     int resolution, PointClass cls) {
    const double a = alpha.value;
    const double diam = body.diameter();
    const double h = diam / resolution;
    const long radial_bins = std::max<long>(20'000, 40L * resolution);
    auto kernel = [&](const Vec2& p) {
        const double r2 = (p - x).norm2();
        if (r2 < 1e-280) return 0.0;
        return std::pow(r2, 0.5 * (a - 2.0));
    };
    Vec2 lo, hi;
    body.bounding_box(lo, hi);

    RouteValues out;
    const bool nonpositive = a <= 1e-8;

    if (!nonpositive) {
        if (cls == PointClass::Interior) {
            const double delta = 0.999 * distance_to_boundary(body, x);
            Region shell{&body, true, x, delta, 0.0};
            out.value = cartesian_midpoint(shell, kernel, lo, hi, h) +
                        radial_midpoint(delta * 1e-12, delta, a, radial_bins);
        } else {
            Region whole{&body, true, x, 0.0, 0.0};
            out.value = cartesian_midpoint(whole, kernel, lo, hi, h);
        }
        return out;
    }

    // alpha <= 0
    if (cls == PointClass::Exterior) {
        Region whole{&body, true, x, 0.0, 0.0};
        out.value = cartesian_midpoint(whole, kernel, lo, hi, h);
        return out;
    }
    const double d = distance_to_boundary(body, x);
    const double delta = 0.999 * d;
    const double divergent = alpha.is_zero() ? -2.0 * M_PI * std::log(eps)
                                             : -2.0 * M_PI * std::pow(eps, a) / a;
    Region shell{&body, true, x, delta, 0.0};
    out.value = cartesian_midpoint(shell, kernel, lo, hi, h) +
                radial_midpoint(eps, delta, a, radial_bins) - divergent;

    if (a < -1e-8) {
        const double R = 2.0 * diam;
        Region outside{&body, false, x, 0.0, R};
        const Vec2 boxlo = x - Vec2{R, R};
        const Vec2 boxhi = x + Vec2{R, R};
        const double cart = cartesian_midpoint(outside, kernel, boxlo, boxhi, h);
        out.complement = -cart + 2.0 * M_PI * std::pow(R, a) / a;
    }
    return out;
}

RouteValues bruteforce_mc(const Body& body, const Vec2& x, Alpha alpha, double eps,
                          const GridSpec& grid, PointClass cls, double& stderr_out) {
    const double a = alpha.value;
    auto kernel = [&](const Vec2& p) {
        const double r2 = (p - x).norm2();
        if (r2 < 1e-280) return 0.0;
        return std::pow(r2, 0.5 * (a - 2.0));
    };
    Vec2 lo, hi;
    body.bounding_box(lo, hi);
    Region region{&body, true, x, 0.0, 0.0};
    double extra = 0.0;
    if (a <= 1e-8) {
        if (cls == PointClass::Exterior) {
            // plain integral
        } else {
            const double d = distance_to_boundary(body, x);
            region.excise_r = 0.999 * d;
            const double divergent = alpha.is_zero() ? -2.0 * M_PI * std::log(eps)
                                                     : -2.0 * M_PI * std::pow(eps, a) / a;
            extra = radial_midpoint(eps, region.excise_r, a, 100'000) - divergent;
        }
    } else if (cls == PointClass::Interior) {
        const double d = distance_to_boundary(body, x);
        region.excise_r = 0.999 * d;
        extra = radial_midpoint(region.excise_r * 1e-12, region.excise_r, a, 100'000);
    }

    const double box_area = (hi.x - lo.x) * (hi.y - lo.y);
    const long nbatch = std::max<long>(1, grid.samples / grid.batch);
    std::vector<double> means;
    means.reserve(nbatch);
    for (long b = 0; b < nbatch; ++b) {
        std::mt19937_64 rng(mix_seed(grid.seed, static_cast<std::uint64_t>(b)));
        double acc = 0.0;
        for (long s = 0; s < grid.batch; ++s) {
            const Vec2 p{lo.x + u01(rng) * (hi.x - lo.x), lo.y + u01(rng) * (hi.y - lo.y)};
            if (region.contains(p)) acc += kernel(p);
        }
        means.push_back(acc / grid.batch * box_area);
    }
    double m = 0.0;
    for (double v : means) m += v;
    m /= means.size();
    double var = 0.0;
    for (double v : means) var += (v - m) * (v - m);
    stderr_out = means.size() > 1 ? std::sqrt(var / (means.size() - 1) / means.size()) : 0.0;

    RouteValues out;
    out.value = m + extra;
    return out;
}

}  // namespace

BruteForceValue eval_bruteforce(const Body& body, const Vec2& x, Alpha alpha,
                                const GridSpec& grid, double eps) {
    const bool mc = grid.rule == GridSpec::Rule::MonteCarlo;
    if (!mc && grid.resolution < 64) throw OracleError("midpoint rule needs resolution >= 64");
    if (mc && grid.samples < 100'000) throw OracleError("Monte Carlo needs samples >= 1e5");

    const PointClass cls = classify_point(body, x);
    if (alpha.value <= 1e-8 && cls == PointClass::Boundary)
        throw DomainError("eval_bruteforce: x on the boundary with alpha <= 0");

    BruteForceValue out;
    if (alpha.value <= 1e-8 && cls == PointClass::Interior) {
        const double d = distance_to_boundary(body, x);
        out.eps_used = eps > 0.0 ? eps : 0.25 * d;
        if (out.eps_used >= 0.999 * d)
            throw OracleError("eval_bruteforce: eps must be below dist(x, boundary)");
    }

    if (mc) {
        double se = 0.0;
        const RouteValues rv = bruteforce_mc(body, x, alpha, out.eps_used, grid, cls, se);
        out.value = rv.value;
        out.error_estimate = se;
        return out;
    }

    const RouteValues fine = bruteforce_at_resolution(body, x, alpha, out.eps_used,
                                                      grid.resolution, cls);
    const RouteValues coarse = bruteforce_at_resolution(body, x, alpha, out.eps_used,
                                                        grid.resolution / 2, cls);
    out.value = fine.value;
    out.complement_value = fine.complement;
    out.error_estimate = std::abs(fine.value - coarse.value);
    if (fine.complement && coarse.complement)
        out.error_estimate =
            std::max(out.error_estimate, std::abs(*fine.complement - *coarse.complement));
    return out;
}

EnergyValue energy(const Body& body, Alpha alpha, const GridSpec& grid) {
    if (alpha.value <= 1e-8)
        throw DomainError("energy is defined for alpha > 0 only (the alpha <= -1 case "
                          "needs a second renormalization)");
    if (grid.samples < 100'000) throw OracleError("energy needs samples >= 1e5");

    const double a = alpha.value;
    Vec2 lo, hi;
    body.bounding_box(lo, hi);
    const double area = body.area();
    const long nbatch = std::max<long>(1, grid.samples / grid.batch);

    std::vector<double> means(nbatch);
    for (long b = 0; b < nbatch; ++b) {
        std::mt19937_64 rng(mix_seed(grid.seed, static_cast<std::uint64_t>(b)));
        auto draw = [&]() {
            for (;;) {
                const Vec2 p{lo.x + u01(rng) * (hi.x - lo.x), lo.y + u01(rng) * (hi.y - lo.y)};
                if (point_inside(body, p)) return p;
            }
        };
        double acc = 0.0;
        for (long s = 0; s < grid.batch; ++s) {
            const Vec2 p = draw();
            const Vec2 q = draw();
            const double r2 = (p - q).norm2();
            if (r2 < 1e-280) continue;
            acc += std::pow(r2, 0.5 * (a - 2.0));
        }
        means[b] = acc / grid.batch;
    }
    double m = 0.0;
    for (double v : means) m += v;
    m /= means.size();
    double var = 0.0;
    for (double v : means) var += (v - m) * (v - m);

    EnergyValue out;
    out.alpha = alpha;
    out.value = area * area * m;
    out.std_error =
        means.size() > 1 ? area * area * std::sqrt(var / (means.size() - 1) / means.size()) : 0.0;
    out.samples = nbatch * grid.batch;
    return out;
}

namespace {

bool is_disk_body(const Body& body) {
    return body.loops().size() == 1 && body.loops()[0].kind == LoopKind::Circle &&
           body.loops()[0].orientation == 1;
}

void check_equal_areas(const std::vector<std::pair<std::string, Body>>& shapes) {
    if (shapes.empty()) throw OracleError("empty shape family");
    const double a0 = shapes.front().second.area();
    for (const auto& [label, body] : shapes)
        if (std::abs(body.area() - a0) > 1e-9 * a0)
            throw OracleError("shapes must share their area to 1e-9 (rescale first): " + label);
}

}  // namespace

std::vector<ExtremalityRow> ball_extremality_report(
    const std::vector<std::pair<std::string, Body>>& shapes, Alpha alpha,
    const SolverOptions& opts) {
    check_equal_areas(shapes);
    const double r_ball = std::sqrt(shapes.front().second.area() / M_PI);
    const double ball = ball_extremal_value(r_ball, alpha, 2);
    const bool above_m = alpha.regime(2) == Regime::AboveM;

    std::vector<ExtremalityRow> rows;
    for (const auto& [label, body] : shapes) {
        ExtremalityRow row;
        row.label = label;
        row.ball_value = ball;
        const CenterResult cr = find_centers(body, alpha, opts);
        row.shape_value = cr.extremal_value;
        row.gap = row.shape_value - ball;
        const double tol = 1e-8 * std::max(1.0, std::abs(ball));
        row.consistent = above_m ? row.gap >= -tol : row.gap <= tol;
        rows.push_back(std::move(row));
    }
    return rows;
}

EnergyReport energy_extremality_report(const std::vector<std::pair<std::string, Body>>& shapes,
                                       Alpha alpha, const GridSpec& grid) {
    check_equal_areas(shapes);
    EnergyReport report;
    const EnergyRow* disk = nullptr;
    for (const auto& [label, body] : shapes) {
        const EnergyValue ev = energy(body, alpha, grid);
        report.rows.push_back({label, ev.value, ev.std_error, is_disk_body(body)});
    }
    for (const EnergyRow& row : report.rows)
        if (row.is_disk) disk = &row;
    if (!disk) throw OracleError("energy_extremality_report: no disk in the family");

    const Regime regime = alpha.regime(2);
    report.disk_extremal = true;
    for (const EnergyRow& row : report.rows) {
        if (row.is_disk) continue;
        const double sigma = std::sqrt(row.std_error * row.std_error +
                                       disk->std_error * disk->std_error);
        if (regime == Regime::EqualM) {
            if (std::abs(row.value - disk->value) > 3.0 * sigma) report.disk_extremal = false;
        } else {
            const double margin =
                regime == Regime::Between0AndM ? disk->value - row.value : row.value - disk->value;
            if (margin <= 3.0 * sigma) report.disk_extremal = false;
        }
    }
    return report;
}

}  // namespace riesz
