#include "mss4/cli_app.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mss4/catalog.hpp"
#include "mss4/errors.hpp"
#include "mss4/gauss_map.hpp"
#include "mss4/geometry.hpp"
#include "mss4/lagrange.hpp"
#include "mss4/registry.hpp"
#include "mss4/sampling.hpp"
#include "mss4/solver.hpp"

namespace mss4 {

namespace {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void emit(const json& j, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << j.dump(2) << '\n';
    } else {
        std::ofstream f(out_path);
        if (!f) throw ConfigError("cannot open output file '" + out_path + "'");
        f << j.dump(2) << '\n';
    }
}

json check_entry(double max_residual, double tol) {
    json j;
    j["max_residual"] = max_residual;
    j["tol"] = tol;
    j["pass"] = max_residual <= tol;
    return j;
}

// --------------------------------------------------------------------------
// verify
// --------------------------------------------------------------------------

struct VerifyOpts {
    std::string chart;
    int n = 200;
    std::uint64_t seed = 1;
    double fd_step = 1e-3;
    double tol_mss = 1e-8;
    double tol_osserman = 1e-10;
    double tol_hyperquadric = 1e-12;
    double tol_hyperplane = 1e-10;
    double tol_divergence = 1e-3;
    double tol_conformal = 1e-10;
    std::string out_path;
};

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
    Chart chart = make_chart(o.chart);
    const auto pts = halton_in_chart(chart, o.n, o.seed, 2.0 * o.fd_step);

    double max_mss = 0.0, max_quadric = 0.0, max_oss = 0.0, max_plane = 0.0;
    double max_div = 0.0, max_conf = 0.0;

    std::optional<Hyperplane> expect_plane;
    if (chart.meta.mu)
        expect_plane = Hyperplane::normalized(
            {0.0, 0.0, cplx(1.0, 0.0), cplx(0.0, *chart.meta.mu)});

    std::optional<Chart> base;  // lambda = 0 sibling for conformal invariance
    const auto lam = chart.meta.params.find("lambda");
    if (lam != chart.meta.params.end() && lam->second != 0.0) {
        auto params = chart.meta.params;
        params["lambda"] = 0.0;
        base = make_chart(chart.meta.family, params);
    }

    for (const auto& [x, y] : pts) {
        auto [jf, jg] = chart.eval(x, y);
        const auto L = mss_residual(jf, jg);
        max_mss = std::max({max_mss, std::abs(L[0]), std::abs(L[1])});

        const ProjectivePoint G = gauss_map(jf, jg);
        max_quadric = std::max(max_quadric, hyperquadric_residual(G));

        if (chart.meta.mu) {
            const auto r = osserman_residual(jf, jg, *chart.meta.mu);
            max_oss = std::max({max_oss, std::abs(r[0]), std::abs(r[1])});
            max_plane = std::max(max_plane, hyperplane_residual(G, *expect_plane));
        }
        const auto div = divergence_identities_residual(chart, x, y, o.fd_step);
        max_div = std::max({max_div, std::abs(div[0]), std::abs(div[1])});

        if (base) {
            auto [jp, jq0] = base->eval(x, y);
            const auto c0 = conformal_ratio(jp, jq0);
            const auto c1 = conformal_ratio(jf, jg);
            for (int k = 0; k < 3; ++k)
                max_conf = std::max(max_conf, std::abs(c1[k] - c0[k]));
        }
    }

    json rep;
    rep["schema_version"] = kSchemaVersion;
    rep["command"] = "verify";
    rep["chart"] = chart.name;
    rep["n"] = o.n;
    rep["seed"] = o.seed;
    rep["fd_step"] = o.fd_step;
    json checks;
    checks["mss"] = check_entry(max_mss, o.tol_mss);
    checks["hyperquadric"] = check_entry(max_quadric, o.tol_hyperquadric);
    if (chart.meta.mu) {
        checks["osserman"] = check_entry(max_oss, o.tol_osserman);
        checks["hyperplane"] = check_entry(max_plane, o.tol_hyperplane);
        checks["osserman"]["mu"] = *chart.meta.mu;
    }
    checks["divergence_identities"] = check_entry(max_div, o.tol_divergence);
    if (base) checks["conformal_invariance"] = check_entry(max_conf, o.tol_conformal);
    bool pass = true;
    for (const auto& [name, c] : checks.items())
        if (c.contains("pass") && !c["pass"].get<bool>()) pass = false;
    rep["checks"] = checks;
    rep["pass"] = pass;
    emit(rep, o.out_path, out);
    return pass ? 0 : 1;
}

// --------------------------------------------------------------------------
// sample
// --------------------------------------------------------------------------

struct SampleOpts {
    std::string chart;
    int nx = 40, ny = 40;
    std::string format = "csv";  // csv | obj | json
    std::string project = "xyf";
    std::string out_path;
};

int cmd_sample(const SampleOpts& o, std::ostream& out) {
    Chart chart = make_chart(o.chart);
    if (o.nx < 2 || o.ny < 2) throw ConfigError("sample: need nx, ny >= 2");
    if (o.project.size() != 3 ||
        o.project.find_first_not_of("xyfg") != std::string::npos)
        throw ConfigError("sample: --project must be 3 characters from {x,y,f,g}");

    const SampleBox& box = chart.domain.box;
    const double hx = (box.xmax - box.xmin) / (o.nx - 1);
    const double hy = (box.ymax - box.ymin) / (o.ny - 1);

    struct Vertex {
        bool valid = false;
        int id = 0;  // 1-based OBJ index
        std::array<double, 4> p{};
    };
    std::vector<Vertex> verts(static_cast<std::size_t>(o.nx) * o.ny);
    int next_id = 1;
    for (int j = 0; j < o.ny; ++j) {
        for (int i = 0; i < o.nx; ++i) {
            const double x = box.xmin + i * hx, y = box.ymin + j * hy;
            Vertex& v = verts[static_cast<std::size_t>(j) * o.nx + i];
            if (!chart.contains(x, y) || chart.margin(x, y) <= 0.0) continue;
            auto [jf, jg] = chart.eval(x, y);
            v.valid = true;
            v.id = next_id++;
            v.p = {x, y, jf.v, jg.v};
        }
    }

    const std::string names = "xyfg";
    std::array<int, 3> keep{};
    for (int k = 0; k < 3; ++k) keep[k] = static_cast<int>(names.find(o.project[k]));
    int dropped = 0;
    for (int c = 0; c < 4; ++c)
        if (std::find(keep.begin(), keep.end(), c) == keep.end()) dropped = c;

    std::ostringstream body;
    if (o.format == "obj") {
        body << "# parametric surface sample: " << chart.name << "\n";
        body << "# projection " << o.project << "; dropped coordinate "
             << names[dropped] << " recorded per vertex\n";
        for (const auto& v : verts) {
            if (!v.valid) continue;
            body << "v " << fmt17(v.p[keep[0]]) << ' ' << fmt17(v.p[keep[1]]) << ' '
                 << fmt17(v.p[keep[2]]) << "\n";
            body << "# attr " << names[dropped] << "=" << fmt17(v.p[dropped]) << "\n";
        }
        auto at = [&](int i, int j) -> const Vertex& {
            return verts[static_cast<std::size_t>(j) * o.nx + i];
        };
        for (int j = 0; j + 1 < o.ny; ++j) {
            for (int i = 0; i + 1 < o.nx; ++i) {
                const Vertex &a = at(i, j), &b = at(i + 1, j), &c = at(i, j + 1),
                             &d = at(i + 1, j + 1);
                if (a.valid && b.valid && d.valid)
                    body << "f " << a.id << ' ' << b.id << ' ' << d.id << "\n";
                if (a.valid && d.valid && c.valid)
                    body << "f " << a.id << ' ' << d.id << ' ' << c.id << "\n";
            }
        }
    } else if (o.format == "csv") {
        body << "x,y,f,g\n";
        for (const auto& v : verts) {
            if (!v.valid) continue;
            body << fmt17(v.p[0]) << ',' << fmt17(v.p[1]) << ',' << fmt17(v.p[2]) << ','
                 << fmt17(v.p[3]) << "\n";
        }
    } else if (o.format == "json") {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "sample";
        j["chart"] = chart.name;
        json pts = json::array();
        for (const auto& v : verts) {
            if (!v.valid) continue;
            pts.push_back({v.p[0], v.p[1], v.p[2], v.p[3]});
        }
        j["points"] = pts;
        body << j.dump(2) << '\n';
    } else {
        throw ConfigError("sample: unknown format '" + o.format + "'");
    }

    if (o.out_path.empty()) {
        out << body.str();
    } else {
        std::ofstream f(o.out_path);
        if (!f) throw ConfigError("cannot open output file '" + o.out_path + "'");
        f << body.str();
    }
    return 0;
}

// --------------------------------------------------------------------------
// potential
// --------------------------------------------------------------------------

struct PotentialOpts {
    std::string chart;
    std::vector<double> basepoint{0.0, 0.0};
    std::vector<double> target{0.5, 0.3};
    double grid_step = 0.05;
    double order_tol = 1e-8;
    std::string out_path;
};

int cmd_potential(const PotentialOpts& o, std::ostream& out) {
    Chart chart = make_chart(o.chart);
    const auto res =
        integrate_potential(chart, {o.basepoint[0], o.basepoint[1]},
                            {o.target[0], o.target[1]}, o.grid_step, o.order_tol);
    json rep;
    rep["schema_version"] = kSchemaVersion;
    rep["command"] = "potential";
    rep["chart"] = chart.name;
    rep["basepoint"] = o.basepoint;
    rep["target"] = o.target;
    rep["grid_step"] = o.grid_step;
    rep["value"] = res.value;
    rep["x_first"] = res.x_first;
    rep["y_first"] = res.y_first;
    rep["path_disagreement"] = res.disagreement;

    try {
        const PotentialField cf = closed_form_potential(chart.meta.family);
        const double aligned = cf.eval(o.target[0], o.target[1]).v -
                               cf.eval(o.basepoint[0], o.basepoint[1]).v;
        rep["closed_form_value"] = aligned;
        rep["closed_form_deviation"] = std::abs(aligned - res.value);
    } catch (const ConfigError&) {
        // no closed form registered for this chart
    }
    emit(rep, o.out_path, out);
    return 0;
}

// --------------------------------------------------------------------------
// gauss
// --------------------------------------------------------------------------

struct GaussOpts {
    std::string chart;
    int n = 50;
    std::uint64_t seed = 1;
    bool fit = false;
    double tol_hyperquadric = 1e-12;
    std::string out_path;
};

int cmd_gauss(const GaussOpts& o, std::ostream& out) {
    Chart chart = make_chart(o.chart);
    const auto pts = halton_in_chart(chart, o.n, o.seed);
    std::vector<ProjectivePoint> samples;
    samples.reserve(pts.size());
    double max_quadric = 0.0;
    for (const auto& [x, y] : pts) {
        auto [jf, jg] = chart.eval(x, y);
        samples.push_back(gauss_map(jf, jg));
        max_quadric = std::max(max_quadric, hyperquadric_residual(samples.back()));
    }

    json rep;
    rep["schema_version"] = kSchemaVersion;
    rep["command"] = "gauss";
    rep["chart"] = chart.name;
    rep["n"] = o.n;
    rep["seed"] = o.seed;
    rep["hyperquadric"] = check_entry(max_quadric, o.tol_hyperquadric);
    bool pass = max_quadric <= o.tol_hyperquadric;

    if (o.fit) {
        const HyperplaneFit fit = fit_hyperplane(samples);
        json jf;
        json coeffs = json::array();
        for (const auto& a : fit.plane.a)
            coeffs.push_back({{"re", a.real()}, {"im", a.imag()}});
        jf["coefficients"] = coeffs;
        jf["residual"] = fit.residual;
        jf["degenerate"] = is_degenerate(fit, samples.size());
        if (chart.meta.mu) {
            const Hyperplane expect = Hyperplane::normalized(
                {0.0, 0.0, cplx(1.0, 0.0), cplx(0.0, *chart.meta.mu)});
            jf["mu"] = *chart.meta.mu;
            jf["distance_to_expected"] = fit.plane.distance(expect);
        }
        rep["fit"] = jf;
    }
    rep["pass"] = pass;
    emit(rep, o.out_path, out);
    return pass ? 0 : 1;
}

// --------------------------------------------------------------------------
// curvature
// --------------------------------------------------------------------------

struct CurvatureOpts {
    std::string family;
    double T = 6.0;
    int n = 200;
    std::string out_path;
};

int cmd_curvature(const CurvatureOpts& o, std::ostream& out) {
    const ConformalPatch patch = make_patch(o.family);
    const TotalCurvatureReport r = total_curvature_report(patch, o.T, o.n);
    json rep;
    rep["schema_version"] = kSchemaVersion;
    rep["command"] = "curvature";
    rep["family"] = patch.name;
    rep["T"] = r.T;
    rep["n"] = r.n;
    rep["value"] = r.value;
    rep["tail_estimate"] = r.tail_estimate;
    emit(rep, o.out_path, out);
    return 0;
}

// --------------------------------------------------------------------------
// solve
// --------------------------------------------------------------------------

struct SolveOpts {
    std::string boundary_chart;
    std::string in_path;
    double xmin = -0.4, xmax = 0.4, ymin = -0.4, ymax = 0.4;
    int nx = 33, ny = 33;
    SolveParams params;
    std::string grid_out;  // solution grid file (.json or .csv)
    std::string out_path;  // report
};

int cmd_solve(const SolveOpts& o, std::ostream& out, std::ostream& err) {
    GridField grid;
    std::optional<Chart> chart;
    if (!o.in_path.empty()) {
        std::ifstream f(o.in_path);
        if (!f) throw ConfigError("cannot open grid file '" + o.in_path + "'");
        if (o.in_path.size() > 4 && o.in_path.substr(o.in_path.size() - 4) == ".csv")
            grid = read_grid_csv(f);
        else
            grid = read_grid_json(f);
    } else if (!o.boundary_chart.empty()) {
        chart = make_chart(o.boundary_chart);
        grid = make_grid(o.xmin, o.xmax, o.ymin, o.ymax, o.nx, o.ny);
        set_boundary_from_chart(grid, *chart);
        transfinite_init(grid);
    } else {
        throw ConfigError("solve: need --boundary-chart or --in");
    }

    const SolveReport rep = solve(grid, o.params);
    err << "solve wall time: " << rep.wall_time_s << " s\n";

    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "solve";
    if (chart) j["boundary_chart"] = chart->name;
    j["nx"] = grid.nx;
    j["ny"] = grid.ny;
    j["iterations"] = rep.iterations;
    j["final_area"] = rep.final_area;
    j["final_gradient_norm"] = rep.final_gradient_norm;
    j["converged"] = rep.converged;
    j["area_monotone"] = rep.area_monotone;
    if (!rep.note.empty()) j["note"] = rep.note;

    if (chart) {
        double sup = 0.0;
        for (int jj = 0; jj < grid.ny; ++jj) {
            for (int ii = 0; ii < grid.nx; ++ii) {
                auto [jf, jg] = chart->eval(grid.x_at(ii), grid.y_at(jj));
                sup = std::max(sup, std::abs(grid.f[grid.idx(ii, jj)] - jf.v));
                sup = std::max(sup, std::abs(grid.g[grid.idx(ii, jj)] - jg.v));
            }
        }
        j["sup_error_vs_chart"] = sup;
    }

    if (!o.grid_out.empty()) {
        std::ofstream f(o.grid_out);
        if (!f) throw ConfigError("cannot open output file '" + o.grid_out + "'");
        if (o.grid_out.size() > 4 && o.grid_out.substr(o.grid_out.size() - 4) == ".csv")
            write_grid_csv(grid, f);
        else
            write_grid_json(grid, f);
    }
    emit(j, o.out_path, out);
    return rep.converged ? 0 : 1;
}

// --------------------------------------------------------------------------
// list
// --------------------------------------------------------------------------

int cmd_list(std::ostream& out) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "list";
    json charts = json::array();
    for (const auto& e : chart_registry())
        charts.push_back({{"family", e.family}, {"key", e.key_pattern}, {"brief", e.brief}});
    j["charts"] = charts;
    j["patches"] = {"XN:<N>", "Fplus:lambda=<l>", "Fminus:lambda=<l>", "flat"};
    out << j.dump(2) << '\n';
    return 0;
}

json error_object(const char* type, const std::string& message) {
    json j;
    j["error"] = {{"type", type}, {"message", message}};
    return j;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"numerical laboratory for graph surfaces in R^4"};
    app.require_subcommand(1);

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "residual sweep over a chart");
    verify->add_option("--chart", vo.chart, "chart registry key")->required();
    verify->add_option("--n", vo.n, "sample count");
    verify->add_option("--seed", vo.seed, "halton start offset");
    verify->add_option("--fd-step", vo.fd_step, "finite-difference step");
    verify->add_option("--tol", vo.tol_mss, "second-order residual tolerance");
    verify->add_option("--tol-osserman", vo.tol_osserman, "");
    verify->add_option("--tol-hyperquadric", vo.tol_hyperquadric, "");
    verify->add_option("--tol-hyperplane", vo.tol_hyperplane, "");
    verify->add_option("--tol-divergence", vo.tol_divergence, "");
    verify->add_option("--tol-conformal", vo.tol_conformal, "");
    verify->add_option("--out", vo.out_path, "write report to file");

    SampleOpts so;
    auto* sample = app.add_subcommand("sample", "export a point cloud or mesh");
    sample->add_option("--chart", so.chart, "chart registry key")->required();
    sample->add_option("--nx", so.nx, "grid columns");
    sample->add_option("--ny", so.ny, "grid rows");
    sample->add_option("--format", so.format, "csv | obj | json");
    sample->add_option("--project", so.project, "three of x,y,f,g for OBJ/3D export");
    sample->add_option("--out", so.out_path, "output file");

    PotentialOpts po;
    auto* pot = app.add_subcommand("potential", "integrate the conjugate potential");
    pot->add_option("--chart", po.chart, "R^3 base chart key")->required();
    pot->add_option("--basepoint", po.basepoint, "x y")->expected(2);
    pot->add_option("--target", po.target, "x y")->expected(2);
    pot->add_option("--grid-step", po.grid_step, "quadrature panel size");
    pot->add_option("--order-tol", po.order_tol, "staircase order tolerance");
    pot->add_option("--out", po.out_path, "write report to file");

    GaussOpts go;
    auto* gauss = app.add_subcommand("gauss", "sample the generalized Gauss map");
    gauss->add_option("--chart", go.chart, "chart registry key")->required();
    gauss->add_option("--n", go.n, "sample count");
    gauss->add_option("--seed", go.seed, "halton start offset");
    gauss->add_flag("--fit", go.fit, "fit the best hyperplane through the samples");
    gauss->add_option("--tol-hyperquadric", go.tol_hyperquadric, "");
    gauss->add_option("--out", go.out_path, "write report to file");

    CurvatureOpts co;
    auto* curv = app.add_subcommand("curvature", "total curvature of a patch family");
    curv->add_option("--family", co.family, "patch key, e.g. Fplus:lambda=0.5")->required();
    curv->add_option("--T", co.T, "parameter truncation");
    curv->add_option("--n", co.n, "quadrature nodes per axis");
    curv->add_option("--out", co.out_path, "write report to file");

    SolveOpts lo;
    auto* solve_cmd = app.add_subcommand("solve", "discrete area minimization");
    solve_cmd->add_option("--boundary-chart", lo.boundary_chart, "chart for boundary data");
    solve_cmd->add_option("--in", lo.in_path, "grid file (.json or .csv)");
    solve_cmd->add_option("--xmin", lo.xmin, "");
    solve_cmd->add_option("--xmax", lo.xmax, "");
    solve_cmd->add_option("--ymin", lo.ymin, "");
    solve_cmd->add_option("--ymax", lo.ymax, "");
    solve_cmd->add_option("--nx", lo.nx, "");
    solve_cmd->add_option("--ny", lo.ny, "");
    solve_cmd->add_option("--max-iter", lo.params.max_iter, "");
    solve_cmd->add_option("--tol", lo.params.tol, "gradient sup-norm tolerance");
    solve_cmd->add_option("--step-rule", lo.params.step_rule, "bb | fixed");
    solve_cmd->add_option("--grid-out", lo.grid_out, "write solution grid");
    solve_cmd->add_option("--out", lo.out_path, "write report to file");

    auto* list = app.add_subcommand("list", "print the chart registry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << error_object("usage", e.what()).dump(2) << '\n';
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(vo, out);
        if (sample->parsed()) return cmd_sample(so, out);
        if (pot->parsed()) return cmd_potential(po, out);
        if (gauss->parsed()) return cmd_gauss(go, out);
        if (curv->parsed()) return cmd_curvature(co, out);
        if (solve_cmd->parsed()) return cmd_solve(lo, out, err);
        if (list->parsed()) return cmd_list(out);
        err << error_object("usage", "no subcommand given").dump(2) << '\n';
        return 2;
    } catch (const ConfigError& e) {
        err << error_object("config", e.what()).dump(2) << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << error_object("domain", e.what()).dump(2) << '\n';
        return 1;
    } catch (const PathError& e) {
        err << error_object("path", e.what()).dump(2) << '\n';
        return 1;
    } catch (const MonodromyError& e) {
        err << error_object("monodromy", e.what()).dump(2) << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << error_object("internal", e.what()).dump(2) << '\n';
        return 2;
    }
}

}  // namespace mss4
