#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "mss4/catalog.hpp"
#include "mss4/errors.hpp"
#include "mss4/geometry.hpp"
#include "mss4/quadrature.hpp"
#include "mss4/solver.hpp"

using namespace mss4;

namespace {

GridField chart_boundary_grid(const Chart& chart, double a, double b, int n) {
    GridField g = make_grid(a, b, a, b, n, n);
    set_boundary_from_chart(g, chart);
    transfinite_init(g);
    return g;
}

double sup_error_vs_chart(const GridField& g, const Chart& chart) {
    double sup = 0.0;
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            auto [jf, jg] = chart.eval(g.x_at(i), g.y_at(j));
            sup = std::max(sup, std::abs(g.f[g.idx(i, j)] - jf.v));
            sup = std::max(sup, std::abs(g.g[g.idx(i, j)] - jg.v));
        }
    }
    return sup;
}

// area of the chart over [a,b]^2 by 24x24 Gauss-Legendre on exact jets
double chart_area_quadrature(const Chart& chart, double a, double b) {
    const QuadRule& rule = gauss_legendre(24);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            const double x = mid + half * rule.nodes[i];
            const double y = mid + half * rule.nodes[j];
            auto [jf, jg] = chart.eval(x, y);
            sum += rule.weights[i] * rule.weights[j] * half * half *
                   fundamental_form(jf, jg).omega;
        }
    }
    return sum;
}

}  // namespace

TEST_CASE("grid construction and validation") {
    CHECK_THROWS_AS(make_grid(0, 1, 0, 1, 2, 5), ConfigError);
    const GridField g = make_grid(0, 1, 0, 1, 5, 4);
    CHECK(g.nx == 5);
    CHECK(g.hx == doctest::Approx(0.25));
    int boundary = 0;
    for (auto m : g.fixed) boundary += m;
    CHECK(boundary == 2 * 5 + 2 * 2);
}

TEST_CASE("discrete area of exact flat and tilted planes") {
    GridField g = make_grid(0, 1, 0, 1, 9, 9);
    CHECK(discrete_area(g) == doctest::Approx(1.0).epsilon(1e-15));

    // f = x has constant unit gradient: area sqrt(2) exactly
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) g.f[g.idx(i, j)] = g.x_at(i);
    CHECK(discrete_area(g) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("discrete area converges to the quadrature oracle at O(h^2)") {
    const Chart c = catenoid_deform(0.5);
    const double exact = chart_area_quadrature(c, -0.4, 0.4);
    auto err = [&](int n) {
        GridField g = make_grid(-0.4, 0.4, -0.4, 0.4, n, n);
        fill_from_chart(g, c);
        return std::abs(discrete_area(g) - exact);
    };
    const double e1 = err(17), e2 = err(33);
    CHECK(e2 < 1e-5);
    CHECK(e1 / e2 > 2.5);
    CHECK(e1 / e2 < 6.0);
}

TEST_CASE("analytic area gradient") {
    SUBCASE("flat grid: gradient vanishes") {
        const GridField g = make_grid(0, 1, 0, 1, 7, 7);
        CHECK(area_gradient(g).max_abs() == 0.0);
    }
    SUBCASE("matches central differences on a random grid") {
        std::mt19937 rng(42);
        std::uniform_real_distribution<double> u(-0.3, 0.3);
        GridField g = make_grid(0, 1, 0, 1, 9, 9);
        for (auto& v : g.f) v = u(rng);
        for (auto& v : g.g) v = u(rng);

        const AreaGradient grad = area_gradient(g);
        std::vector<double> df(g.size()), dg(g.size());
        for (std::size_t k = 0; k < g.size(); ++k) {
            df[k] = g.fixed[k] ? 0.0 : u(rng);
            dg[k] = g.fixed[k] ? 0.0 : u(rng);
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
        CHECK(std::abs(directional - fd) <= 1e-6 * std::abs(fd));
    }
    SUBCASE("fixed nodes carry zero gradient") {
        GridField g = make_grid(0, 1, 0, 1, 6, 6);
        for (std::size_t k = 0; k < g.size(); ++k) g.f[k] = 0.1 * k;
        const AreaGradient grad = area_gradient(g);
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (g.fixed[k]) {
                CHECK(grad.df[k] == 0.0);
                CHECK(grad.dg[k] == 0.0);
            }
        }
    }
    SUBCASE("gradient at the exact interpolant shrinks O(h^2)") {
        const Chart c = catenoid_deform(0.5);
        auto gnorm = [&](int n) {
            GridField g = make_grid(-0.4, 0.4, -0.4, 0.4, n, n);
            fill_from_chart(g, c);
            // scale by the per-node cell area to get a density-like measure
            return area_gradient(g).max_abs() / (g.hx * g.hy);
        };
        const double n1 = gnorm(17), n2 = gnorm(33);
        CHECK(n1 / n2 > 2.5);
        CHECK(n1 / n2 < 6.5);
    }
}

TEST_CASE("solver recovers the flat plane from a perturbed interior") {
    GridField g = make_grid(0, 1, 0, 1, 17, 17);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-0.2, 0.2);
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (!g.fixed[k]) {
            g.f[k] = u(rng);
            g.g[k] = u(rng);
        }
    }
    SolveParams params;
    params.tol = 1e-12;
    const SolveReport rep = solve(g, params);
    CHECK(rep.converged);
    CHECK(rep.area_monotone);
    double sup = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k)
        sup = std::max({sup, std::abs(g.f[k]), std::abs(g.g[k])});
    CHECK(sup <= 1e-8);
    CHECK(rep.final_area == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("solver reproduces the deformed catenoid to discretization accuracy") {
    const Chart c = catenoid_deform(0.5);
    SolveParams params;
    params.tol = 1e-10;

    GridField g17 = chart_boundary_grid(c, -0.4, 0.4, 17);
    GridField g33 = chart_boundary_grid(c, -0.4, 0.4, 33);
    const SolveReport r17 = solve(g17, params);
    const SolveReport r33 = solve(g33, params);
    CHECK(r17.converged);
    CHECK(r33.converged);
    CHECK(r17.area_monotone);
    CHECK(r33.area_monotone);

    const double e17 = sup_error_vs_chart(g17, c);
    const double e33 = sup_error_vs_chart(g33, c);
    CHECK(e33 <= 1e-3);
    CHECK(e17 / e33 > 2.8);  // second-order nodal convergence
    CHECK(e17 / e33 < 6.0);
}

TEST_CASE("solved area-element field matches the exact one at O(h^2)") {
    const Chart c = sigma_alpha_beta(1.0, 1.0);
    auto omega_err = [&](int n) {
        GridField g = make_grid(1.2, 2.0, -0.4, 0.4, n, n);
        set_boundary_from_chart(g, c);
        transfinite_init(g);
        SolveParams params;
        params.tol = 1e-10;
        REQUIRE(solve(g, params).converged);
        double sup = 0.0;
        for (int j = 0; j + 1 < g.ny; ++j) {
            for (int i = 0; i + 1 < g.nx; ++i) {
                // cell-centered gradients from the solved grid
                const double fx = (g.f[g.idx(i + 1, j)] - g.f[g.idx(i, j)] +
                                   g.f[g.idx(i + 1, j + 1)] - g.f[g.idx(i, j + 1)]) /
                                  (2.0 * g.hx);
                const double fy = (g.f[g.idx(i, j + 1)] - g.f[g.idx(i, j)] +
                                   g.f[g.idx(i + 1, j + 1)] - g.f[g.idx(i + 1, j)]) /
                                  (2.0 * g.hy);
                const double gx = (g.g[g.idx(i + 1, j)] - g.g[g.idx(i, j)] +
                                   g.g[g.idx(i + 1, j + 1)] - g.g[g.idx(i, j + 1)]) /
                                  (2.0 * g.hx);
                const double gy = (g.g[g.idx(i, j + 1)] - g.g[g.idx(i, j)] +
                                   g.g[g.idx(i + 1, j + 1)] - g.g[g.idx(i + 1, j)]) /
                                  (2.0 * g.hy);
                const double jac = fx * gy - fy * gx;
                const double w = std::sqrt(1.0 + fx * fx + fy * fy + gx * gx + gy * gy +
                                           jac * jac);
                auto [jf, jg] = c.eval(g.x_at(i) + 0.5 * g.hx, g.y_at(j) + 0.5 * g.hy);
                sup = std::max(sup, std::abs(w - fundamental_form(jf, jg).omega));
            }
        }
        return sup;
    };
    const double e1 = omega_err(9), e2 = omega_err(17);
    CHECK(e2 < 1e-3);
    CHECK(e1 / e2 > 2.0);
    CHECK(e1 / e2 < 8.0);
}

TEST_CASE("non-finite input is reported, not thrown") {
    GridField g = make_grid(0, 1, 0, 1, 5, 5);
    g.f[0] = std::numeric_limits<double>::infinity();
    const SolveReport rep = solve(g);
    CHECK(!rep.converged);
    CHECK(rep.note == "initial area is not finite");
}

TEST_CASE("grid files round-trip") {
    const Chart c = catenoid_deform(0.3);
    GridField g = make_grid(-0.3, 0.3, -0.2, 0.2, 7, 5);
    fill_from_chart(g, c);

    SUBCASE("json preserves every bit") {
        std::stringstream s;
        write_grid_json(g, s);
        const GridField r = read_grid_json(s);
        CHECK(r.nx == g.nx);
        CHECK(r.ny == g.ny);
        CHECK(r.hx == g.hx);
        CHECK(r.f == g.f);
        CHECK(r.g == g.g);
        CHECK(r.fixed == g.fixed);
    }
    SUBCASE("csv carries the lattice and the 17-digit values") {
        std::stringstream s;
        write_grid_csv(g, s);
        std::string header;
        std::getline(s, header);
        CHECK(header == "x,y,f,g");
        s.seekg(0);
        const GridField r = read_grid_csv(s);
        CHECK(r.nx == g.nx);
        CHECK(r.ny == g.ny);
        CHECK(r.f == g.f);
        CHECK(r.g == g.g);
        CHECK(r.hx == doctest::Approx(g.hx).epsilon(1e-15));
    }
    SUBCASE("csv rejects malformed input") {
        std::stringstream s("x,y\n1,2\n");
        CHECK_THROWS_AS(read_grid_csv(s), ConfigError);
    }
}
