// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code = number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mss4/catalog.hpp"
#include "mss4/gauss_map.hpp"
#include "mss4/geometry.hpp"
#include "mss4/lagrange.hpp"
#include "mss4/registry.hpp"
#include "mss4/sampling.hpp"
#include "mss4/solver.hpp"
#include "mss4/special_lagrangian.hpp"

using namespace mss4;

namespace {

int g_failures = 0;

struct Criterion {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

void report(int number, const std::string& name, const Criterion& c, double seconds) {
    std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n", c.pass ? "PASS" : "FAIL",
                number, name.c_str(), seconds, c.detail.empty() ? "" : " -- ",
                c.detail.c_str());
    if (!c.pass) ++g_failures;
}

void run(int number, const std::string& name,
         const std::function<void(Criterion&)>& body) {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(number, name, c, dt);
}

std::vector<Chart> catalog_charts() {
    std::vector<Chart> charts;
    charts.push_back(sigma_N(1));
    charts.push_back(sigma_N(2));
    charts.push_back(sigma_N(3));
    charts.push_back(sigma_alpha_beta(1.0, 0.0));
    charts.push_back(sigma_alpha_beta(0.0, 1.0));
    charts.push_back(sigma_alpha_beta(1.0, 1.0));
    charts.push_back(helicoid_deform(0.3));
    charts.push_back(helicoid_deform(1.0));
    charts.push_back(catenoid_deform(0.3));
    charts.push_back(catenoid_deform(1.0));
    charts.push_back(scherk_doubly(0.7));
    charts.push_back(scherk_doubly_sheared(0.7, 1.5, M_PI / 3.0));
    charts.push_back(scherk_tower(0.5));
    charts.push_back(scherk_tower_general(0.5, 1.2, M_PI / 3.0));
    charts.push_back(lagrangian_scherk());
    return charts;
}

std::vector<Chart> lambda_family_charts() {
    std::vector<Chart> charts;
    charts.push_back(helicoid_deform(0.3));
    charts.push_back(helicoid_deform(1.0));
    charts.push_back(catenoid_deform(0.3));
    charts.push_back(catenoid_deform(1.0));
    charts.push_back(scherk_doubly(0.7));
    charts.push_back(scherk_doubly_sheared(0.7, 1.5, M_PI / 3.0));
    charts.push_back(scherk_tower(0.5));
    charts.push_back(scherk_tower_general(0.5, 1.2, M_PI / 3.0));
    return charts;
}

void criterion_1(Criterion& c) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto charts = catalog_charts();
    c.require(charts.size() >= 12, "needs at least 12 registered charts");
    for (const Chart& chart : charts) {
        double max_res = 0.0;
        for (const auto& [x, y] : halton_in_chart(chart, 200)) {
            auto [jf, jg] = chart.eval(x, y);
            const auto L = mss_residual(jf, jg);
            max_res = std::max({max_res, std::abs(L[0]), std::abs(L[1])});
        }
        c.require(max_res <= 1e-8,
                  chart.name + ": max |mss| = " + fmt(max_res) + " > 1e-8");
    }
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(dt < 5.0, "runtime " + fmt(dt) + " s exceeds 5 s");
}

void criterion_2(Criterion& c) {
    for (const Chart& chart : lambda_family_charts()) {
        const double lambda = chart.meta.params.at("lambda");
        const double mu = 1.0 / std::tanh(lambda);
        double max_res = 0.0;
        std::vector<ProjectivePoint> samples;
        for (const auto& [x, y] : halton_in_chart(chart, 200)) {
            auto [jf, jg] = chart.eval(x, y);
            const auto r = osserman_residual(jf, jg, mu);
            max_res = std::max({max_res, std::abs(r[0]), std::abs(r[1])});
            if (samples.size() < 50) samples.push_back(gauss_map(jf, jg));
        }
        c.require(max_res <= 1e-10,
                  chart.name + ": osserman residual " + fmt(max_res) + " > 1e-10");

        const HyperplaneFit fit = fit_hyperplane(samples);
        const Hyperplane expect =
            Hyperplane::normalized({0.0, 0.0, cplx(1.0, 0.0), cplx(0.0, mu)});
        c.require(fit.residual <= 1e-8,
                  chart.name + ": fit residual " + fmt(fit.residual) + " > 1e-8");
        c.require(fit.plane.distance(expect) <= 1e-7,
                  chart.name + ": fitted hyperplane is off by " +
                      fmt(fit.plane.distance(expect)));
    }
}

void criterion_3(Criterion& c) {
    auto charts = catalog_charts();
    charts.push_back(flat_plane());
    charts.push_back(holomorphic_sq());
    for (const Chart& chart : charts) {
        double max_res = 0.0;
        for (const auto& [x, y] : halton_in_chart(chart, 200)) {
            auto [jf, jg] = chart.eval(x, y);
            max_res = std::max(max_res, hyperquadric_residual(gauss_map(jf, jg)));
        }
        c.require(max_res <= 1e-12,
                  chart.name + ": hyperquadric residual " + fmt(max_res) + " > 1e-12");
    }
}

void criterion_4(Criterion& c) {
    // integration reproduces the printed closed forms after basepoint
    // alignment; each form is the potential of the correspondingly oriented
    // base graph (the mirrored bases carry the two positive printed forms)
    struct Case {
        const char* base;
        std::function<double(double, double)> closed;
    };
    const Case cases[] = {
        {"helicoid_r3",
         [](double x, double y) {
             return -std::sqrt(std::cos(y) * std::cos(y) + x * x) + 1.0;
         }},
        {"catenoid_r3_mirror", [](double x, double y) { return x * std::tanh(y); }},
        {"scherk_r3_mirror",
         [](double x, double y) { return std::asin(std::sin(x) * std::sin(y)); }},
        // true-orientation counterparts of the printed upper/right-way bases
        {"catenoid_r3", [](double x, double y) { return -x * std::tanh(y); }},
        {"scherk_r3",
         [](double x, double y) { return -std::asin(std::sin(x) * std::sin(y)); }},
    };
    for (const Case& k : cases) {
        const Chart base = make_chart(k.base);
        double max_dev = 0.0, max_disagreement = 0.0, max_grad = 0.0;
        for (const auto& [x, y] : halton_in_chart(base, 25)) {
            const auto r = integrate_potential(base, {0.0, 0.0}, {x, y});
            max_dev = std::max(max_dev,
                               std::abs(r.value - (k.closed(x, y) - k.closed(0, 0))));
            max_disagreement = std::max(max_disagreement, r.disagreement);
            const auto of = lagrange_one_form(base.f_jet(x, y));
            max_grad = std::max(max_grad, of[0] * of[0] + of[1] * of[1]);
        }
        c.require(max_dev <= 1e-8, std::string(k.base) + ": closed-form deviation " +
                                       fmt(max_dev) + " > 1e-8");
        c.require(max_disagreement <= 1e-10,
                  std::string(k.base) + ": staircase disagreement " +
                      fmt(max_disagreement) + " > 1e-10");
        c.require(max_grad < 1.0, std::string(k.base) + ": gradient estimate violated");
    }
}

void criterion_5(Criterion& c) {
    const char* families[] = {"helicoid_r3", "catenoid_r3", "catenoid_r3_mirror",
                              "scherk_r3", "scherk_r3_mirror", "scherk_tower_r3"};
    for (const char* fam : families) {
        const Chart base = make_chart(fam);
        const PotentialField q = closed_form_potential(fam);
        double max_res = 0.0;
        for (const auto& [x, y] : halton_in_chart(base, 100)) {
            max_res = std::max(max_res, std::abs(maximal_equation_residual(q.eval(x, y))));
        }
        c.require(max_res <= 1e-9, std::string(fam) + ": dual-equation residual " +
                                       fmt(max_res) + " > 1e-9");
    }
}

void criterion_6(Criterion& c) {
    const char* families[] = {"helicoid_deform", "catenoid_deform", "scherk_doubly",
                              "scherk_tower"};
    for (const char* fam : families) {
        const Chart def = make_chart(fam, {{"lambda", 1.0}});
        const Chart base = make_chart(fam, {{"lambda", 0.0}});
        double max_diff = 0.0;
        for (const auto& [x, y] : halton_in_chart(def, 100)) {
            auto [jf, jg] = def.eval(x, y);
            auto [jp, j0] = base.eval(x, y);
            const auto a = conformal_ratio(jf, jg);
            const auto b = conformal_ratio(jp, j0);
            for (int k = 0; k < 3; ++k)
                max_diff = std::max(max_diff, std::abs(a[k] - b[k]));
        }
        c.require(max_diff <= 1e-10, std::string(fam) + ": conformal ratio changed by " +
                                         fmt(max_diff));
    }
}

void criterion_7(Criterion& c) {
    const auto t0 = std::chrono::steady_clock::now();
    const ConformalPatch annulus = make_patch_F_plus(0.5);
    const double v4 = total_curvature(annulus, 4.0, 200);
    const double v6 = total_curvature(annulus, 6.0, 200);
    const double v8 = total_curvature(annulus, 8.0, 200);
    c.require(std::abs(v6 - (-4.0 * M_PI)) <= 0.05,
              "value(T=6) = " + fmt(v6) + " not within 0.05 of -4 pi");
    c.require(std::abs(v8 - v6) <= std::abs(v6 - v4),
              "tail is not monotone: |v8-v6| = " + fmt(std::abs(v8 - v6)) +
                  " > |v6-v4| = " + fmt(std::abs(v6 - v4)));
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(dt < 10.0, "runtime " + fmt(dt) + " s exceeds 10 s");
}

void criterion_8(Criterion& c) {
    // scherk base over the (+-1.2)^2 box, z in (-3, 3)
    Chart box = scherk_r3();
    box.domain.box = {-1.2, 1.2, -1.2, 1.2};
    box.domain.sample_margin = 0.0;
    const PotentialField q = closed_form_potential("scherk_r3");

    for (double lambda : {-1.0, 0.6}) {
        const HlPotential F = hl_potential(box, q, lambda);
        const DoublyPeriodicSl closed = doubly_periodic_sl(lambda);
        double max_sle = 0.0, max_agree = 0.0;
        const auto xy = halton_in_chart(box, 200);
        for (std::size_t i = 0; i < xy.size(); ++i) {
            const double z = -3.0 + 6.0 * radical_inverse(i + 1, 5);
            max_sle = std::max(max_sle,
                               std::abs(sle3_residual(F.eval(xy[i][0], xy[i][1], z))));
            const auto a = closed(xy[i][0], xy[i][1], z);
            const auto b = sl_graph_point(box, q, lambda, xy[i][0], xy[i][1], z);
            for (int k = 0; k < 6; ++k)
                max_agree = std::max(max_agree, std::abs(a[k] - b[k]));
        }
        c.require(max_sle <= 1e-8, "lambda " + fmt(lambda) + ": sle residual " +
                                       fmt(max_sle) + " > 1e-8");
        c.require(max_agree <= 1e-10, "lambda " + fmt(lambda) +
                                          ": closed form deviates from graph points by " +
                                          fmt(max_agree));
    }
}

void criterion_9(Criterion& c) {
    const Chart ls = lagrangian_scherk();
    double max_res = 0.0;
    for (const auto& [x, y] : halton_in_chart(ls, 200)) {
        max_res = std::max(max_res,
                           std::abs(monge_ampere_residual(lagrangian_scherk_hessian(x, y))));
    }
    c.require(max_res <= 1e-9, "unimodularity residual " + fmt(max_res) + " > 1e-9");
}

void criterion_10(Criterion& c) {
    const std::vector<double> radii = {0.5, 0.1, 0.02, 0.004, 0.001};
    const ProbeReport rep = singularity_probe(sigma_N(1), {0.0, 0.0}, radii);
    double px = 0.0, py = 0.0;
    for (const auto& ray : rep.rays) {
        if (ray.ray == "+x") px = ray.f_limit;
        if (ray.ray == "+y") py = ray.f_limit;
    }
    c.require(std::abs(px - py) >= 0.99, "ray-limit discrepancy " +
                                             fmt(std::abs(px - py)) + " < 0.99");

    const ProbeReport flat = singularity_probe(flat_plane(), {0.0, 0.0}, radii);
    c.require(flat.discrepancy <= 1e-12,
              "flat chart discrepancy " + fmt(flat.discrepancy) + " > 1e-12");
}

void criterion_11(Criterion& c) {
    const auto t0 = std::chrono::steady_clock::now();
    const Chart chart = catenoid_deform(0.5);
    SolveParams params;
    params.tol = 1e-10;

    auto solve_on = [&](int n, double& sup_err, Criterion& cc) {
        GridField grid = make_grid(-0.4, 0.4, -0.4, 0.4, n, n);
        set_boundary_from_chart(grid, chart);
        transfinite_init(grid);
        const SolveReport rep = solve(grid, params);
        cc.require(rep.converged, "solver did not converge at n = " + std::to_string(n));
        cc.require(rep.area_monotone, "area increased along an accepted step");
        sup_err = 0.0;
        for (int j = 0; j < grid.ny; ++j) {
            for (int i = 0; i < grid.nx; ++i) {
                auto [jf, jg] = chart.eval(grid.x_at(i), grid.y_at(j));
                sup_err = std::max(sup_err,
                                   std::abs(grid.f[grid.idx(i, j)] - jf.v));
                sup_err = std::max(sup_err,
                                   std::abs(grid.g[grid.idx(i, j)] - jg.v));
            }
        }
    };

    double e33 = 0.0, e65 = 0.0;
    solve_on(33, e33, c);
    solve_on(65, e65, c);
    c.require(e33 <= 1e-3, "33x33 sup error " + fmt(e33) + " > 1e-3");
    const double ratio = e33 / e65;
    c.require(ratio >= 3.2 && ratio <= 4.8,
              "refinement ratio " + fmt(ratio) + " outside [3.2, 4.8]");

    // analytic gradient against central differences on a random grid
    GridField g = make_grid(0, 1, 0, 1, 17, 17);
    std::uint64_t state = 88172645463325252ull;
    auto rnd = [&]() {  // xorshift, deterministic
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return 0.4 * (static_cast<double>(state % 1000000) / 1000000.0 - 0.5);
    };
    for (auto& v : g.f) v = rnd();
    for (auto& v : g.g) v = rnd();
    const AreaGradient grad = area_gradient(g);
    std::vector<double> df(g.size()), dg(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
        df[k] = g.fixed[k] ? 0.0 : rnd();
        dg[k] = g.fixed[k] ? 0.0 : rnd();
    }
    double directional = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k)
        directional += grad.df[k] * df[k] + grad.dg[k] * dg[k];
    const double eps = 1e-5;
    GridField gp = g, gm = g;
    for (std::size_t k = 0; k < g.size(); ++k) {
        gp.f[k] += eps * df[k];
        gp.g[k] += eps * dg[k];
        gm.f[k] -= eps * df[k];
        gm.g[k] -= eps * dg[k];
    }
    const double fd = (discrete_area(gp) - discrete_area(gm)) / (2.0 * eps);
    c.require(std::abs(directional - fd) <= 1e-6 * std::abs(fd),
              "analytic gradient deviates from finite differences by rel " +
                  fmt(std::abs(directional - fd) / std::abs(fd)));

    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(dt < 60.0, "runtime " + fmt(dt) + " s exceeds 60 s");
}

void criterion_12(Criterion& c) {
    const ConformalPatch patches[] = {make_patch_XN(1), make_patch_XN(2),
                                      make_patch_F_minus(0.7), make_patch_F_plus(0.7)};
    for (const ConformalPatch& p : patches) {
        double defect = 0.0;
        for (int i = 0; i < 20; ++i) {
            for (int j = 0; j < 20; ++j) {
                const double u = -2.0 + 4.0 * i / 19.0;
                const double v = 2.0 * M_PI * j / 19.0;
                const auto du = p.d_u(u, v), dv = p.d_v(u, v);
                const double L = p.conformal_factor(u, v);
                double nu = 0.0, nv = 0.0, dot = 0.0;
                for (int k = 0; k < 4; ++k) {
                    nu += du[k] * du[k];
                    nv += dv[k] * dv[k];
                    dot += du[k] * dv[k];
                }
                defect = std::max({defect, std::abs(nu - L), std::abs(nv - L),
                                   std::abs(dot)});
            }
        }
        c.require(defect <= 1e-10,
                  p.name + ": conformality defect " + fmt(defect) + " > 1e-10");
    }

    // substitution: extension-patch points land on the graph for t > 0
    for (int n : {1, 2}) {
        const ConformalPatch p = make_patch_XN(n);
        const Chart chart = sigma_N(n);
        double dev = 0.0;
        for (double t : {0.2, 0.7, 1.5, 2.0}) {
            for (int j = 0; j < 16; ++j) {
                const double th = 2.0 * M_PI * j / 16.0;
                const auto pt = p.map(t, th);
                auto [jf, jg] = chart.eval(pt[0], pt[1]);
                dev = std::max({dev, std::abs(jf.v - pt[2]), std::abs(jg.v - pt[3])});
            }
        }
        c.require(dev <= 1e-10, p.name + ": graph substitution deviates by " + fmt(dev));
    }
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    run(1, "catalog charts solve the second-order system", criterion_1);
    run(2, "first-order system with mu = coth(lambda) and hyperplane recovery",
        criterion_2);
    run(3, "Gauss map lands on the hyperquadric", criterion_3);
    run(4, "potential integration reproduces the closed forms", criterion_4);
    run(5, "potentials solve the dual zero-mean-curvature equation", criterion_5);
    run(6, "conformal invariance of the normalized metric", criterion_6);
    run(7, "total curvature of the annulus family reaches -4 pi", criterion_7);
    run(8, "affine potentials give special Lagrangian graphs", criterion_8);
    run(9, "unimodular Hessian of the gradient-graph potential", criterion_9);
    run(10, "non-removable singularity at the puncture", criterion_10);
    run(11, "discrete minimizer converges at second order", criterion_11);
    run(12, "patches are conformal and extend the punctured graphs", criterion_12);

    if (g_failures == 0) {
        std::printf("all criteria passed\n");
    } else {
        std::printf("%d criterion(s) failed\n", g_failures);
    }
    return g_failures;
}
