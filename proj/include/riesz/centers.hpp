#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "riesz/geometry.hpp"
#include "riesz/potential.hpp"

namespace riesz {

struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Convex region that must contain every center: intersection of the sampled
/// halfspaces {x . v <= l_v}, where l_v is the smallest cap offset whose
/// reflected cap still folds into the body.
struct UnfoldedRegion {
    struct Halfspace {
        Vec2 v;
        double offset;  // l_v
    };
    std::vector<Halfspace> halfspaces;
    std::vector<Vec2> polygon;  // convex, CCW
    int n_dirs = 0;

    double diameter() const;
    bool contains(const Vec2& x, double dilation) const;
};

/// Builds the minimal unfolded region from n_dirs equi-angular directions
/// plus structural candidates derived from polygon loops (edge directions and
/// vertex bisector normals), so polygonal fixtures resolve their Uf vertices
/// exactly. tol <= 0 selects the default bisection tolerance 1e-12 * diameter.
UnfoldedRegion unfolded_region(const Body& body, int n_dirs = 360, double tol = 0.0);

struct SolverOptions {
    int grid_starts = 5;  // per axis; grid_starts^2 multistarts plus centroid
    int max_iterations = 200;
    double cluster_radius_rel = 1e-7;   // times diameter
    double value_tol_rel = 1e-7;        // clusters within this of the best survive
    double uf_dilation_rel = 1e-6;      // times diameter
    int uf_dirs = 360;
    QuadratureSpec quad;
};

struct CenterResult {
    std::vector<Vec2> centers;
    double extremal_value = 0.0;  // M^(alpha)
    Regime regime = Regime::Between0AndM;
    Alpha alpha;
    double multistart_agreement = 0.0;  // fraction of converged starts at the best value
    bool converged = false;
};

/// Regime-aware multistart quasi-Newton search for the r^(alpha-m)-centers.
CenterResult find_centers(const Body& body, Alpha alpha, const SolverOptions& opts = {});
CenterResult find_centers(const Body& body, Alpha alpha, const SolverOptions& opts,
                          const UnfoldedRegion& uf, const std::vector<Vec2>& warm_starts);

struct ExtremalBall {
    enum class Kind { MinMax, MaxMin };
    Vec2 center;
    double radius = 0.0;
    Kind kind = Kind::MinMax;
};

/// Smallest enclosing circle (unique min-max point), randomized incremental
/// with a deterministic seed.
ExtremalBall minmax_point(const Body& body, unsigned long long seed = 42);

/// Largest inscribed balls (max-min points, possibly many): interior grid
/// plus local pattern refinement; convex polygon bodies are cross-checked
/// against the exact Chebyshev center from the edge-offset LP.
std::vector<ExtremalBall> maxmin_points(const Body& body, int grid_n = 128);

/// find_centers over a sorted alpha sweep, warm-starting each solve from the
/// previous centers. Per-alpha failures are recorded (converged = false) and
/// the sweep continues.
std::vector<CenterResult> trajectory(const Body& body, const std::vector<Alpha>& alphas,
                                     const SolverOptions& opts = {});

double hausdorff(const std::vector<Vec2>& a, const std::vector<Vec2>& b);

struct CevianRatio {
    double angle_ratio = 0.0;
    double length_ratio = 0.0;
};

/// Shibata's cevian ratios of a triangle at an interior point L. At the true
/// r^(-2)-center all three angle/length ratio pairs agree.
std::array<CevianRatio, 3> shibata_ratios(const Body& triangle, const Vec2& L);

struct IntervalCenters {
    std::vector<double> points;
    bool continuum = false;  // alpha = 2: any point of [-1, 1] is a center
};

/// 1-D harness for the two-interval body [-R,-1] u [1,R]: roots of
/// d/dx V^(alpha) by bisection on (1, (R+1)/2), with the log-derivative form
/// at alpha = 1 and the continuum flag at alpha = 2.
IntervalCenters interval_pair_center(double R, Alpha alpha);

/// Chebyshev center(s) of a convex CCW polygon via enumeration of active
/// edge triples of the LP max{r : n_i . x + r <= c_i}. Returns the vertices
/// of the optimal face.
std::vector<ExtremalBall> chebyshev_centers(const std::vector<Vec2>& convex_poly);

}  // namespace riesz
