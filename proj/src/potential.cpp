#include "riesz/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <vector>

namespace riesz {

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::AboveM: return "alpha>m";
        case Regime::EqualM: return "alpha=m";
        case Regime::Between0AndM: return "0<alpha<m";
        case Regime::Zero: return "alpha=0";
        case Regime::Negative: return "alpha<0";
    }
    return "?";
}

Regime Alpha::regime(int m) const {
    if (!std::isfinite(value)) throw DomainError("alpha must be finite");
    if (equals(m)) return Regime::EqualM;
    if (is_zero()) return Regime::Zero;
    if (value > m) return Regime::AboveM;
    if (value > 0.0) return Regime::Between0AndM;
    return Regime::Negative;
}

double sphere_area(int m) {
    if (m < 1) throw DomainError("sphere_area needs m >= 1");
    // Gamma(m/2) by the half-integer recursion.
    double g = (m % 2 == 0) ? 1.0 : std::sqrt(M_PI);
    for (double t = (m % 2 == 0) ? 1.0 : 0.5; t < 0.5 * m - 0.25; t += 1.0) g *= t;
    return 2.0 * std::pow(M_PI, 0.5 * m) / g;
}

double eval_ball(double r, Alpha alpha, int m) {
    if (!(r > 0.0)) throw DomainError("eval_ball needs r > 0");
    const double A = sphere_area(m);
    if (alpha.is_zero()) return A * std::log(r);
    return A * std::pow(r, alpha.value) / alpha.value;
}

double ball_extremal_value(double r, Alpha alpha, int m) {
    if (alpha.equals(m)) {
        // Log potential of the ball at its center.
        const double A = sphere_area(m);
        return A * std::pow(r, m) / m * (1.0 / m - std::log(r));
    }
    return eval_ball(r, alpha, m);
}

// ---------------------------------------------------------------------------
// Gauss-Legendre rules
// ---------------------------------------------------------------------------

namespace {

struct GLRule {
    std::vector<double> x;  // nodes on [-1, 1]
    std::vector<double> w;
};

GLRule compute_gl(int n) {
    GLRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double dz = -p1 / pp;
            z += dz;
            if (std::abs(dz) < 1e-15) break;
        }
        rule.x[i] = -z;
        rule.x[n - 1 - i] = z;
        rule.w[i] = rule.w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
    return rule;
}

const GLRule& gl_rule(int n) {
    thread_local std::map<int, GLRule> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gl(n)).first;
    return it->second;
}

template <class F>
double gl_apply(const GLRule& r, F&& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double acc = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) acc += r.w[i] * f(mid + half * r.x[i]);
    return acc * half;
}

struct AdaptState {
    const GLRule* rule;
    double err = 0.0;
    bool converged = true;
};

template <class F>
double adapt(AdaptState& st, F&& f, double a, double b, double tol, int depth) {
    const double whole = gl_apply(*st.rule, f, a, b);
    const double mid = 0.5 * (a + b);
    const double left = gl_apply(*st.rule, f, a, mid);
    const double right = gl_apply(*st.rule, f, mid, b);
    const double e = std::abs(whole - (left + right));
    if (e <= tol || depth <= 0) {
        st.err += e;
        if (e > tol) st.converged = false;
        return left + right;
    }
    return adapt(st, f, a, mid, 0.5 * tol, depth - 1) +
           adapt(st, f, mid, b, 0.5 * tol, depth - 1);
}

// ---------------------------------------------------------------------------
// Contour decomposition
// ---------------------------------------------------------------------------

struct Piece {
    bool is_arc = false;
    Vec2 a, e;   // segment y(t) = a + t e, t in [lo, hi] subset of [0, 1]
    Vec2 c;      // arc y(th) = c + rho (cos th, sin th)
    double rho = 0.0;
    double lo = 0.0, hi = 1.0;
    double weight = 1.0;  // loop orientation
};

std::vector<Piece> build_pieces(const Body& body) {
    std::vector<Piece> out;
    for (const Loop& loop : body.loops()) {
        if (loop.kind == LoopKind::Circle) {
            for (int q = 0; q < 4; ++q) {
                Piece p;
                p.is_arc = true;
                p.c = loop.center;
                p.rho = loop.radius;
                p.lo = 0.5 * M_PI * q;
                p.hi = 0.5 * M_PI * (q + 1);
                p.weight = loop.orientation;
                out.push_back(p);
            }
        } else {
            const std::size_t n = loop.vertices.size();
            for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
                Piece p;
                p.a = loop.vertices[j];
                p.e = loop.vertices[i] - loop.vertices[j];
                p.weight = loop.orientation;
                out.push_back(p);
            }
        }
    }
    return out;
}

Vec2 piece_point(const Piece& p, double s) {
    if (p.is_arc) return p.c + p.rho * dir(s);
    return p.a + s * p.e;
}

// Parameter of the closest approach to x and the corresponding distance.
void piece_closest(const Piece& p, const Vec2& x, double& s_star, double& d) {
    if (p.is_arc) {
        const Vec2 w = x - p.c;
        double th = std::atan2(w.y, w.x);
        while (th < p.lo) th += 2.0 * M_PI;
        if (th > p.hi) th = (th - p.hi < p.lo + 2.0 * M_PI - th) ? p.hi : p.lo;
        s_star = th;
        d = dist(x, piece_point(p, th));
        return;
    }
    const double len2 = p.e.norm2();
    double t = len2 > 0.0 ? (x - p.a).dot(p.e) / len2 : 0.0;
    t = std::min(p.hi, std::max(p.lo, t));
    s_star = t;
    d = dist(x, piece_point(p, t));
}

// Split [lo, hi] geometrically toward s_star (integrand peaks like a power of
// the distance to x there).
std::vector<double> geometric_breaks(double lo, double hi, double s_star, double delta0) {
    std::vector<double> cuts{lo, hi};
    if (s_star > lo && s_star < hi) cuts.push_back(s_star);
    for (double d = delta0; d < hi - lo; d *= 2.0) {
        const double l = s_star - d, r = s_star + d;
        if (l > lo) cuts.push_back(l);
        if (r < hi) cuts.push_back(r);
        if (l <= lo && r >= hi) break;
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    return cuts;
}

// Integrates sum_i weight_i * int f(piece_i, s) ds adaptively. The integrand
// excludes the orientation weight.
template <class F>
double contour_integrate(const std::vector<Piece>& pieces, const Vec2& x, double diam,
                         F&& integrand, const QuadratureSpec& quad, double& err_out) {
    const GLRule& rule = gl_rule(std::max(4, quad.nodes_per_segment));

    // Geometric pre-split toward the near-singular point when x sits close to
    // the contour (the integrand peaks like r^(alpha-2)).
    const double d_body = [&] {
        double best = std::numeric_limits<double>::infinity();
        for (const Piece& p : pieces) {
            double s, d;
            piece_closest(p, x, s, d);
            best = std::min(best, d);
        }
        return best;
    }();
    const bool near = d_body < 1e-3 * diam;

    struct Span {
        const Piece* piece;
        double lo, hi;
        double rough = 0.0;
    };
    std::vector<Span> spans;
    for (const Piece& p : pieces) {
        double s_star, d;
        piece_closest(p, x, s_star, d);
        if (near && d < 0.05 * diam) {
            const double plen = p.is_arc ? (p.hi - p.lo) * p.rho : p.e.norm();
            const double delta0 = std::max(d, 1e-14 * diam) / std::max(plen, 1e-300) *
                                  (p.hi - p.lo);
            auto cuts = geometric_breaks(p.lo, p.hi, s_star, delta0);
            for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
                spans.push_back({&p, cuts[i], cuts[i + 1]});
        } else {
            spans.push_back({&p, p.lo, p.hi});
        }
    }

    double rough_sum = 0.0, rough_abs = 0.0;
    for (Span& s : spans) {
        s.rough = s.piece->weight *
                  gl_apply(rule, [&](double t) { return integrand(*s.piece, t); }, s.lo, s.hi);
        rough_sum += s.rough;
        rough_abs += std::abs(s.rough);
    }

    const double tol_total =
        quad.target_rel_err * std::max(std::abs(rough_sum), 1e-3 * rough_abs + 1e-300);
    double weight_sum = 0.0;
    for (const Span& s : spans) weight_sum += std::abs(s.rough) + rough_abs / spans.size();

    AdaptState st{&rule};
    double total = 0.0;
    for (const Span& s : spans) {
        const double share = (std::abs(s.rough) + rough_abs / spans.size()) / weight_sum;
        total += s.piece->weight *
                 adapt(st, [&](double t) { return integrand(*s.piece, t); }, s.lo, s.hi,
                       tol_total * share, quad.adaptive_depth);
    }
    err_out = st.err;
    if (!st.converged && st.err > 1e3 * tol_total)
        throw QuadratureError("contour quadrature did not converge", st.err);
    return total;
}

double radius_at(const Piece& p, const Vec2& x, double s) {
    return dist(piece_point(p, s), x);
}

// (y - x) x dy geometric factor per unit parameter. Constant on segments.
double flux_factor(const Piece& p, const Vec2& x, double s) {
    if (p.is_arc) return p.rho * ((p.c - x).dot(dir(s)) + p.rho);
    return (p.a - x).cross(p.e);
}

}  // namespace

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

PotentialSample eval(const Body& body, const Vec2& x, Alpha alpha, const QuadratureSpec& quad) {
    const int m = 2;
    const Regime regime = alpha.regime(m);
    const double tol = body.boundary_tol();
    const bool nonpositive = regime == Regime::Zero || regime == Regime::Negative;

    PointClass cls = classify_point(body, x, tol);
    if (nonpositive && cls == PointClass::Boundary)
        throw DomainError("potential undefined on boundary for alpha <= 0");

    PotentialSample out;
    out.regime = regime;
    out.renormalized = nonpositive && cls == PointClass::Interior;

    const std::vector<Piece> pieces = build_pieces(body);
    const double diam = body.diameter();

    if (regime == Regime::EqualM) {
        // V^(m) is the area at every x off the boundary; quadrature of the
        // generic contour form serves as a cross-check.
        double err = 0.0;
        const double contour =
            contour_integrate(pieces, x, diam,
                              [&](const Piece& p, double s) {
                                  const double f = flux_factor(p, x, s);
                                  return f == 0.0 ? 0.0 : f;
                              },
                              quad, err) /
            m;
        out.value = body.area();
        out.quad_error = std::abs(contour - out.value) + err / m;
        return out;
    }

    double err = 0.0;
    if (regime == Regime::Zero) {
        out.value = contour_integrate(
            pieces, x, diam,
            [&](const Piece& p, double s) {
                const double f = flux_factor(p, x, s);
                if (f == 0.0) return 0.0;
                const double r = radius_at(p, x, s);
                return f * std::log(r) / (r * r);
            },
            quad, err);
        out.quad_error = err;
        return out;
    }

    const double a = alpha.value;
    out.value = contour_integrate(
                    pieces, x, diam,
                    [&](const Piece& p, double s) {
                        const double f = flux_factor(p, x, s);
                        if (f == 0.0) return 0.0;
                        const double r = radius_at(p, x, s);
                        if (r <= 0.0) return 0.0;
                        return f * std::pow(r, a - 2.0);
                    },
                    quad, err) /
                a;
    out.quad_error = err / std::abs(a);
    return out;
}

PotentialSample eval_log(const Body& body, const Vec2& x, const QuadratureSpec& quad) {
    const std::vector<Piece> pieces = build_pieces(body);
    double err = 0.0;
    PotentialSample out;
    out.regime = Regime::EqualM;
    out.value = contour_integrate(
        pieces, x, body.diameter(),
        [&](const Piece& p, double s) {
            const double f = flux_factor(p, x, s);
            if (f == 0.0) return 0.0;
            const double r = radius_at(p, x, s);
            if (r <= 0.0) return 0.0;  // r log r -> 0
            return -0.5 * (std::log(r) - 0.5) * f;
        },
        quad, err);
    out.quad_error = err;
    return out;
}

namespace {

double radial_value(const Body& body, const Vec2& x, Alpha alpha, int n_dirs, int stride) {
    double acc = 0.0;
    int count = 0;
    for (int k = 0; k < n_dirs; k += stride) {
        const RayCrossings rc = ray_crossings(body, x, dir(2.0 * M_PI * k / n_dirs));
        double s = 0.0;
        for (const RayEntry& e : rc.entries)
            s += e.sign * (alpha.is_zero() ? std::log(e.t) : std::pow(e.t, alpha.value));
        acc += s;
        ++count;
    }
    const double mean = acc / count;
    return alpha.is_zero() ? 2.0 * M_PI * mean : 2.0 * M_PI * mean / alpha.value;
}

}  // namespace

PotentialSample eval_radial(const Body& body, const Vec2& x, Alpha alpha, int n_dirs) {
    if (n_dirs < 16) throw DomainError("eval_radial needs n_dirs >= 16");
    const double tol = body.boundary_tol();
    const PointClass cls = classify_point(body, x, tol);
    if (cls == PointClass::Boundary) throw DomainError("eval_radial: x lies on the boundary");

    PotentialSample out;
    out.regime = alpha.regime(2);
    out.renormalized =
        (out.regime == Regime::Zero || out.regime == Regime::Negative) && cls == PointClass::Interior;
    out.value = radial_value(body, x, alpha, n_dirs, 1);
    out.quad_error = std::abs(out.value - radial_value(body, x, alpha, n_dirs, 2));
    return out;
}

Vec2 gradient(const Body& body, const Vec2& x, Alpha alpha, const QuadratureSpec& quad) {
    if (alpha.value <= 1.0 && classify_point(body, x) == PointClass::Boundary)
        throw DomainError("gradient undefined on boundary for alpha <= 1");
    const std::vector<Piece> pieces = build_pieces(body);
    const double diam = body.diameter();
    const double a = alpha.value;

    Vec2 g;
    for (int j = 0; j < 2; ++j) {
        double err = 0.0;
        const double comp = contour_integrate(
            pieces, x, diam,
            [&](const Piece& p, double s) {
                const double r = radius_at(p, x, s);
                if (r <= 0.0) return 0.0;
                const double kern = std::pow(r, a - 2.0);
                const double geo = p.is_arc ? p.rho * (j == 0 ? dir(s).x : dir(s).y)
                                            : (j == 0 ? p.e.y : -p.e.x);
                return -kern * geo;
            },
            quad, err);
        if (j == 0) g.x = comp; else g.y = comp;
    }
    return g;
}

Vec2 gradient_log(const Body& body, const Vec2& x, const QuadratureSpec& quad) {
    const std::vector<Piece> pieces = build_pieces(body);
    const double diam = body.diameter();
    Vec2 g;
    for (int j = 0; j < 2; ++j) {
        double err = 0.0;
        const double comp = contour_integrate(
            pieces, x, diam,
            [&](const Piece& p, double s) {
                const double r = radius_at(p, x, s);
                if (r <= 0.0) return 0.0;
                const double geo = p.is_arc ? p.rho * (j == 0 ? dir(s).x : dir(s).y)
                                            : (j == 0 ? p.e.y : -p.e.x);
                return std::log(r) * geo;
            },
            quad, err);
        if (j == 0) g.x = comp; else g.y = comp;
    }
    return g;
}

double second_partial(const Body& body, const Vec2& x, Alpha alpha, int j,
                      const QuadratureSpec& quad) {
    if (j != 0 && j != 1) throw DomainError("second_partial: j must be 0 or 1");
    const int m = 2;
    if (std::abs(alpha.value - 2.0) < 1e-12)
        throw DomainError("second_partial not defined at alpha = 2");
    if (alpha.value < 2.0 && classify_point(body, x) == PointClass::Boundary)
        throw DomainError("second_partial undefined on boundary for alpha < 2");

    const std::vector<Piece> pieces = build_pieces(body);
    const double a = alpha.value;
    double err = 0.0;
    return contour_integrate(
        pieces, x, body.diameter(),
        [&](const Piece& p, double s) {
            const double r = radius_at(p, x, s);
            if (r <= 0.0) return 0.0;
            const Vec2 y = piece_point(p, s);
            const double dj = (j == 0 ? x.x - y.x : x.y - y.y);
            const double geo = p.is_arc ? p.rho * (j == 0 ? dir(s).x : dir(s).y)
                                        : (j == 0 ? p.e.y : -p.e.x);
            return -(a - m) * std::pow(r, a - m - 2.0) * dj * geo;
        },
        quad, err);
}

LaplacianResult laplacian(const Body& body, const Vec2& x, Alpha alpha,
                          const QuadratureSpec& quad) {
    const int m = 2;
    LaplacianResult out;
    out.from_second_partials =
        second_partial(body, x, alpha, 0, quad) + second_partial(body, x, alpha, 1, quad);
    const PotentialSample lower = eval(body, x, Alpha(alpha.value - 2.0), quad);
    out.from_identity = (alpha.value - 2.0) * (alpha.value - m) * lower.value;
    out.discrepancy = std::abs(out.from_second_partials - out.from_identity);
    return out;
}

StarDualCheck star_dual_check(const Body& body, const Vec2& x, Alpha alpha, int n_dirs) {
    if (classify_point(body, x) != PointClass::Interior)
        throw DomainError("star_dual_check needs an interior base point");
    std::vector<double> rho;
    rho.reserve(n_dirs);
    for (int k = 0; k < n_dirs; ++k) {
        const RayCrossings rc = ray_crossings(body, x, dir(2.0 * M_PI * k / n_dirs));
        if (rc.entries.size() != 1 || rc.entries[0].sign != 1)
            throw GeometryError("body is not star-shaped at x");
        rho.push_back(rc.entries[0].t);
    }
    const double a = alpha.value;
    auto radial = [&](const std::vector<double>& prof, double expo) {
        double acc = 0.0;
        for (double r : prof)
            acc += std::abs(expo) < 1e-8 ? std::log(r) : std::pow(r, expo);
        const double mean = acc / prof.size();
        return std::abs(expo) < 1e-8 ? 2.0 * M_PI * mean : 2.0 * M_PI * mean / expo;
    };

    StarDualCheck out;
    out.lhs = radial(rho, a);
    std::vector<double> dual(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) dual[i] = 1.0 / rho[i];
    out.rhs = -radial(dual, -a);
    return out;
}

}  // namespace riesz
