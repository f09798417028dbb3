#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "riesz/body_io.hpp"
#include "riesz/centers.hpp"
#include "riesz/format.hpp"
#include "riesz/oracle.hpp"
#include "riesz/parallel.hpp"
#include "riesz/potential.hpp"
#include "riesz/svg.hpp"

namespace {

using namespace riesz;

struct GlobalOpts {
    unsigned long long seed = 42;
    double quad_target = 1e-10;
    int quad_nodes = 16;
    int quad_depth = 12;

    QuadratureSpec quad() const { return {quad_nodes, quad_depth, quad_target}; }
};

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write output file: " + path);
    out << content;
}

std::string fmt_err(double e) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3e", e);
    return buf;
}

int cmd_value(const std::string& body_path, double x, double y, double alpha,
              const GlobalOpts& g) {
    const Body body = load_body_file(body_path);
    const PotentialSample s = eval(body, {x, y}, Alpha(alpha), g.quad());
    std::cout << fmt12(s.value) << "\n";
    std::cout << "quad_error " << fmt_err(s.quad_error) << "\n";
    return 0;
}

int cmd_field(const std::string& body_path, double alpha, int res, const std::string& out_path,
              const GlobalOpts& g) {
    if (res < 8) throw ParseError("field needs --res >= 8");
    const Body body = load_body_file(body_path);
    Vec2 lo, hi;
    body.bounding_box(lo, hi);
    const Vec2 pad = 0.2 * (hi - lo);
    lo = lo - pad;
    hi = hi + pad;

    const Alpha a(alpha);
    const bool nonpositive = a.value <= 1e-8;
    const char* regime = regime_name(a.regime(2));
    std::vector<std::string> rows(static_cast<std::size_t>(res) * res);
    const QuadratureSpec quad = g.quad();
    parallel_for(res, [&](int iy) {
        const double y = lo.y + (hi.y - lo.y) * iy / (res - 1);
        for (int ix = 0; ix < res; ++ix) {
            const double x = lo.x + (hi.x - lo.x) * ix / (res - 1);
            std::string value = "nan";
            int defined = 0;
            const bool on_boundary =
                classify_point(body, {x, y}) == PointClass::Boundary;
            if (!(nonpositive && on_boundary)) {
                try {
                    value = fmt12(eval(body, {x, y}, a, quad).value);
                    defined = 1;
                } catch (const DomainError&) {
                }
            }
            rows[static_cast<std::size_t>(iy) * res + ix] = fmt12(x) + "," + fmt12(y) + "," +
                                                            value + "," + regime + "," +
                                                            std::to_string(defined);
        }
    });

    std::ostringstream csv;
    csv << "x,y,value,regime,defined\n";
    for (const std::string& r : rows) csv << r << "\n";
    write_output(out_path, csv.str());
    return 0;
}

int cmd_center(const std::string& body_path, double alpha, const GlobalOpts& g) {
    const Body body = load_body_file(body_path);
    SolverOptions opts;
    opts.quad = g.quad();
    const CenterResult r = find_centers(body, Alpha(alpha), opts);
    for (const Vec2& c : r.centers) std::cout << "center " << fmt12(c.x) << " " << fmt12(c.y) << "\n";
    std::cout << "extremal_value " << fmt12(r.extremal_value) << "\n";
    std::cout << "regime " << regime_name(r.regime) << "\n";
    std::cout << "clusters " << r.centers.size() << "\n";
    std::cout << "agreement " << fmt12(r.multistart_agreement) << "\n";
    std::cout << "converged " << (r.converged ? 1 : 0) << "\n";
    return 0;
}

int cmd_trajectory(const std::string& body_path, double a0, double a1, int steps,
                   const std::string& out_path, const std::string& svg_path,
                   const GlobalOpts& g) {
    if (steps < 2) throw ParseError("trajectory needs --steps >= 2");
    const Body body = load_body_file(body_path);
    SolverOptions opts;
    opts.quad = g.quad();

    std::vector<Alpha> alphas;
    for (int k = 0; k < steps; ++k)
        alphas.push_back(Alpha(a0 + (a1 - a0) * k / (steps - 1)));
    const std::vector<CenterResult> results = trajectory(body, alphas, opts);

    std::ostringstream csv;
    csv << "alpha,cx,cy,value,clusters,converged\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const CenterResult& r = results[i];
        if (r.converged && !r.centers.empty())
            csv << fmt12(alphas[i].value) << "," << fmt12(r.centers[0].x) << ","
                << fmt12(r.centers[0].y) << "," << fmt12(r.extremal_value) << ","
                << r.centers.size() << ",1\n";
        else
            csv << fmt12(alphas[i].value) << ",nan,nan,nan,0,0\n";
    }
    write_output(out_path, csv.str());

    if (!svg_path.empty()) {
        std::vector<Vec2> path;
        for (const CenterResult& r : results)
            if (r.converged && !r.centers.empty()) path.push_back(r.centers[0]);
        const UnfoldedRegion uf = unfolded_region(body, opts.uf_dirs);
        write_output(svg_path, trajectory_svg(body, uf, path, minmax_point(body, g.seed),
                                              maxmin_points(body)));
    }
    return 0;
}

int cmd_uf(const std::string& body_path, int dirs, const std::string& out_path) {
    const Body body = load_body_file(body_path);
    const UnfoldedRegion uf = unfolded_region(body, dirs);
    std::ostringstream csv;
    csv << "x,y\n";
    for (const Vec2& p : uf.polygon) csv << fmt12(p.x) << "," << fmt12(p.y) << "\n";
    csv << "# diam_ratio " << fmt12(uf.diameter() / body.diameter()) << "\n";
    write_output(out_path, csv.str());
    return 0;
}

int cmd_bounds(const std::string& body_path, unsigned long long seed) {
    const Body body = load_body_file(body_path);
    const ExtremalBall mm = minmax_point(body, seed);
    std::cout << "minmax," << fmt12(mm.center.x) << "," << fmt12(mm.center.y) << ","
              << fmt12(mm.radius) << "\n";
    for (const ExtremalBall& b : maxmin_points(body))
        std::cout << "maxmin," << fmt12(b.center.x) << "," << fmt12(b.center.y) << ","
                  << fmt12(b.radius) << "\n";
    return 0;
}

int cmd_validate(const std::string& body_path, std::vector<double> alphas, int res,
                 const GlobalOpts& g) {
    if (alphas.empty()) alphas = {-2, -1, 0, 1, 2, 3, 4};
    const Body body = load_body_file(body_path);
    Vec2 lo, hi;
    body.bounding_box(lo, hi);
    const Vec2 c = body.centroid();
    const double diam = body.diameter();

    std::vector<Vec2> points;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Vec2 p{lo.x + (hi.x - lo.x) * (i + 0.5) / 3, lo.y + (hi.y - lo.y) * (j + 0.5) / 3};
            p = c + 0.6 * (p - c);  // pull toward the centroid, away from the boundary
            if (classify_point(body, p) == PointClass::Interior &&
                distance_to_boundary(body, p) >= 0.05 * diam)
                points.push_back(p);
        }
    if (points.empty()) throw SolverError("validate: no usable interior points");

    GridSpec grid;
    grid.resolution = res;
    grid.seed = g.seed;
    bool all_ok = true;
    for (double av : alphas) {
        const Alpha a(av);
        for (const Vec2& p : points) {
            const PotentialSample fast = eval(body, p, a, g.quad());
            const BruteForceValue slow = eval_bruteforce(body, p, a, grid);
            const double err = std::abs(fast.value - slow.value);
            const double tol =
                std::max(1e-3 * std::abs(fast.value), slow.error_estimate + fast.quad_error);
            const bool ok = err <= tol;
            all_ok = all_ok && ok;
            std::cout << (ok ? "ok" : "FAIL") << " alpha=" << fmt12(av) << " x=" << fmt12(p.x)
                      << " y=" << fmt12(p.y) << " fast=" << fmt12(fast.value)
                      << " oracle=" << fmt12(slow.value) << " err=" << fmt_err(err)
                      << " tol=" << fmt_err(tol) << "\n";
        }
    }
    return all_ok ? 0 : 3;
}

int cmd_intervals(double R, double alpha) {
    const IntervalCenters ic = interval_pair_center(R, Alpha(alpha));
    if (ic.continuum) {
        std::cout << "continuum [" << fmt12(ic.points.front()) << "," << fmt12(ic.points.back())
                  << "]\n";
    } else if (ic.points.size() == 2 && std::abs(ic.points[0] + ic.points[1]) < 1e-12) {
        std::cout << "±" << fmt12(ic.points[1]) << "\n";
    } else {
        for (double p : ic.points) std::cout << fmt12(p) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Renormalized r^(alpha-m) potentials of planar bodies: evaluation, "
                 "centers, unfolded regions, and brute-force validation"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "root seed for all randomized pieces");
    app.add_option("--quad-target", g.quad_target, "quadrature relative error target");
    app.add_option("--quad-nodes", g.quad_nodes, "Gauss-Legendre nodes per segment");
    app.add_option("--quad-depth", g.quad_depth, "adaptive bisection depth");

    std::string body_path, out_path, svg_path;
    double x = 0, y = 0, alpha = 2.0, alpha_to = 2.0, R = 2.0;
    int res = 32, steps = 2, dirs = 360;
    std::vector<double> alpha_list;

    auto* value = app.add_subcommand("value", "potential value at a point");
    value->add_option("body", body_path)->required();
    value->add_option("--x", x)->required();
    value->add_option("--y", y)->required();
    value->add_option("--alpha", alpha)->required();

    auto* field = app.add_subcommand("field", "CSV grid of potential values");
    field->add_option("body", body_path)->required();
    field->add_option("--alpha", alpha)->required();
    field->add_option("--res", res)->required();
    field->add_option("--out", out_path);

    auto* center = app.add_subcommand("center", "locate the r^(alpha-m)-centers");
    center->add_option("body", body_path)->required();
    center->add_option("--alpha", alpha)->required();

    auto* traj = app.add_subcommand("trajectory", "centers across an alpha sweep");
    traj->add_option("body", body_path)->required();
    traj->add_option("--alpha-from", alpha)->required();
    traj->add_option("--alpha-to", alpha_to)->required();
    traj->add_option("--steps", steps)->required();
    traj->add_option("--out", out_path);
    traj->add_option("--svg", svg_path);

    auto* uf = app.add_subcommand("uf", "minimal unfolded region polygon");
    uf->add_option("body", body_path)->required();
    uf->add_option("--dirs", dirs);
    uf->add_option("--out", out_path);

    auto* bounds = app.add_subcommand("bounds", "min-max and max-min points");
    bounds->add_option("body", body_path)->required();

    auto* validate = app.add_subcommand("validate", "oracle-vs-fast agreement suite");
    validate->add_option("body", body_path)->required();
    validate->add_option("--alpha-list", alpha_list)->delimiter(',');
    validate->add_option("--res", res);

    auto* intervals = app.add_subcommand("intervals", "1-D two-interval harness");
    intervals->add_option("--R", R)->required();
    intervals->add_option("--alpha", alpha)->required();

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(value)) return cmd_value(body_path, x, y, alpha, g);
        if (app.got_subcommand(field)) return cmd_field(body_path, alpha, res, out_path, g);
        if (app.got_subcommand(center)) return cmd_center(body_path, alpha, g);
        if (app.got_subcommand(traj))
            return cmd_trajectory(body_path, alpha, alpha_to, steps, out_path, svg_path, g);
        if (app.got_subcommand(uf)) return cmd_uf(body_path, dirs, out_path);
        if (app.got_subcommand(bounds)) return cmd_bounds(body_path, g.seed);
        if (app.got_subcommand(validate)) {
            const int vres = validate->count("--res") ? res : 256;
            return cmd_validate(body_path, alpha_list, vres, g);
        }
        if (app.got_subcommand(intervals)) return cmd_intervals(R, alpha);
        return 1;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;  // input error contract
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const GeometryError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
