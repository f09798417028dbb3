#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "riesz/centers.hpp"
#include "riesz/geometry.hpp"
#include "riesz/potential.hpp"

namespace riesz {

struct OracleError : std::runtime_error {
    OracleError(const std::string& msg, double achieved = 0.0)
        : std::runtime_error(msg), achieved_estimate(achieved) {}
    double achieved_estimate;
};

struct GridSpec {
    int resolution = 512;  // cells per body diameter
    enum class Rule { Midpoint, MonteCarlo } rule = Rule::Midpoint;
    std::uint64_t seed = 42;
    long samples = 1'000'000;  // Monte Carlo only
    long batch = 10'000;       // stderr batch size
};

struct BruteForceValue {
    double value = 0.0;           // epsilon-route (alpha <= 0) or plain integral
    double error_estimate = 0.0;  // refinement comparison / MC stderr
    std::optional<double> complement_value;  // alpha < 0 second route
    double eps_used = 0.0;
};

/// Defining-integral evaluation of V^(alpha) by plain midpoint (or Monte
/// Carlo) summation. alpha <= 0 at interior x integrates over body \ B_eps(x)
/// and subtracts the divergent term A(S^1) eps^alpha / (-alpha) (log variant
/// at alpha = 0); eps defaults to dist(x, boundary)/4. alpha < 0 additionally
/// reports the complement route -int over B_R \ body with the analytic tail,
/// R = 2 diameter.
BruteForceValue eval_bruteforce(const Body& body, const Vec2& x, Alpha alpha,
                                const GridSpec& grid = {}, double eps = 0.0);

struct EnergyValue {
    double value = 0.0;
    Alpha alpha;
    double std_error = 0.0;
    long samples = 0;
};

/// r^(alpha-m)-energy E^(alpha) = double integral of |x-y|^(alpha-m) over
/// body x body, Monte Carlo with batch-variance stderr. alpha > 0 only.
EnergyValue energy(const Body& body, Alpha alpha, const GridSpec& grid = {});

struct ExtremalityRow {
    std::string label;
    double shape_value = 0.0;  // M^(alpha) of the shape
    double ball_value = 0.0;   // analytic M^(alpha) of the equal-area disk
    double gap = 0.0;          // shape - ball
    bool consistent = false;   // gap sign matches the ball-extremality direction
};

/// Per shape: M^(alpha) from the center solver vs the equal-area disk's
/// analytic value (M(shape) >= M(ball) for alpha > m, <= for alpha <= m).
/// All shapes must share their area to 1e-9 relative.
std::vector<ExtremalityRow> ball_extremality_report(
    const std::vector<std::pair<std::string, Body>>& shapes, Alpha alpha,
    const SolverOptions& opts = {});

struct EnergyRow {
    std::string label;
    double value = 0.0;
    double std_error = 0.0;
    bool is_disk = false;
};

struct EnergyReport {
    std::vector<EnergyRow> rows;
    bool disk_extremal = false;  // disk is max (0<alpha<m) / min (alpha>m) beyond 3 stderr
};

/// Energies of an equal-area family; the disk row is detected as the shape
/// that is a single circle loop.
EnergyReport energy_extremality_report(const std::vector<std::pair<std::string, Body>>& shapes,
                                       Alpha alpha, const GridSpec& grid = {});

}  // namespace riesz
