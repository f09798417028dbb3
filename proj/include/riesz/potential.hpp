#pragma once

#include <stdexcept>
#include <string>

#include "riesz/geometry.hpp"

namespace riesz {

/// Evaluation requested where the potential (or a derivative) is undefined,
/// e.g. a renormalized value on the boundary.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct QuadratureError : std::runtime_error {
    QuadratureError(const std::string& msg, double achieved)
        : std::runtime_error(msg), achieved_error(achieved) {}
    double achieved_error;
};

enum class Regime { AboveM, EqualM, Between0AndM, Zero, Negative };

const char* regime_name(Regime r);

/// Exponent of the r^(alpha-m) kernel. Values within 1e-8 of 0 (or of m) are
/// snapped to the exact regime; no interpolation between regimes.
struct Alpha {
    double value = 2.0;

    Alpha() = default;
    explicit Alpha(double v) : value(v) {}

    Regime regime(int m) const;
    bool is_zero() const { return std::abs(value) < 1e-8; }
    bool equals(int m) const { return std::abs(value - m) < 1e-8; }
};

struct QuadratureSpec {
    int nodes_per_segment = 16;
    int adaptive_depth = 12;
    double target_rel_err = 1e-10;
};

struct PotentialSample {
    double value = 0.0;
    Regime regime = Regime::Between0AndM;
    double quad_error = 0.0;
    bool renormalized = false;  // true iff alpha <= 0 and x interior
};

/// Surface volume A(S^(m-1)) = 2 pi^(m/2) / Gamma(m/2), m >= 1.
double sphere_area(int m);

/// Potential of an m-ball of radius r at its center:
/// A(S^(m-1)) r^alpha / alpha, with the log variant at alpha = 0.
double eval_ball(double r, Alpha alpha, int m);

/// V at the center of an m-ball in the sense used by the extremal value
/// M^(alpha): the log potential when alpha = m, eval_ball otherwise.
double ball_extremal_value(double r, Alpha alpha, int m);

/// V^(alpha) at x via the contour integral along the body boundary
/// (1/alpha) oint r^(alpha-2) ((y1-x1) dy2 - (y2-x2) dy1), log kernel at
/// alpha = 0, constant-area shortcut (with quadrature cross-check) at
/// alpha = m. Valid for any x when alpha > 0; x must be off the boundary
/// when alpha <= 0 (DomainError otherwise).
PotentialSample eval(const Body& body, const Vec2& x, Alpha alpha,
                     const QuadratureSpec& quad = {});

/// Log potential V^log(x) = -(1/m) oint (log r - 1/m) (y-x).n dsigma,
/// continuous across the boundary.
PotentialSample eval_log(const Body& body, const Vec2& x, const QuadratureSpec& quad = {});

/// Independent evaluation path: trapezoidal average over n_dirs equi-angular
/// rays of the signed radial sums (1/alpha) sum sgn(p) |p-x|^alpha (log sums
/// at alpha = 0), times A(S^1). quad_error holds an n vs n/2 comparison.
PotentialSample eval_radial(const Body& body, const Vec2& x, Alpha alpha, int n_dirs);

/// grad V = -oint r^(alpha-2) (dy2, -dy1). Requires x off the boundary or
/// alpha > 1.
Vec2 gradient(const Body& body, const Vec2& x, Alpha alpha, const QuadratureSpec& quad = {});

/// grad V^log = oint log r (dy2, -dy1).
Vec2 gradient_log(const Body& body, const Vec2& x, const QuadratureSpec& quad = {});

/// d^2 V / dx_j^2 = -(alpha-m) oint r^(alpha-m-2) (x_j-y_j) e_j.n dsigma.
/// j in {0, 1}. Requires alpha > 2, or x off the boundary with alpha != 2.
double second_partial(const Body& body, const Vec2& x, Alpha alpha, int j,
                      const QuadratureSpec& quad = {});

struct LaplacianResult {
    double from_second_partials = 0.0;  // sum_j d^2V/dx_j^2
    double from_identity = 0.0;         // (alpha-2)(alpha-m) V^(alpha-2)(x)
    double discrepancy = 0.0;
};

LaplacianResult laplacian(const Body& body, const Vec2& x, Alpha alpha,
                          const QuadratureSpec& quad = {});

struct StarDualCheck {
    double lhs = 0.0;  // radial evaluation of V^(alpha) at x
    double rhs = 0.0;  // -V^(-alpha) of the inverted profile rho* = 1/rho
};

/// Inversion duality V^(alpha)(x) = -V^(-alpha)_{dual}(x) for bodies
/// star-shaped at x (errors if some ray has more than one exit crossing).
StarDualCheck star_dual_check(const Body& body, const Vec2& x, Alpha alpha, int n_dirs);

}  // namespace riesz
