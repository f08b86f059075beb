#include "mss4/solver.hpp"

#include <chrono>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "mss4/errors.hpp"

namespace mss4 {

namespace {

// 2-point Gauss nodes on [0, 1]
constexpr double kGaussLo = 0.5 - 0.28867513459481287;  // (1 - 1/sqrt(3)) / 2
constexpr double kGaussHi = 0.5 + 0.28867513459481287;

struct CellGrad {
    double fx, fy, gx, gy;
};

inline CellGrad cell_gradient(const GridField& gr, int i, int j, double xi, double eta) {
    const double f00 = gr.f[gr.idx(i, j)], f10 = gr.f[gr.idx(i + 1, j)];
    const double f01 = gr.f[gr.idx(i, j + 1)], f11 = gr.f[gr.idx(i + 1, j + 1)];
    const double g00 = gr.g[gr.idx(i, j)], g10 = gr.g[gr.idx(i + 1, j)];
    const double g01 = gr.g[gr.idx(i, j + 1)], g11 = gr.g[gr.idx(i + 1, j + 1)];
    CellGrad c;
    c.fx = ((f10 - f00) * (1.0 - eta) + (f11 - f01) * eta) / gr.hx;
    c.fy = ((f01 - f00) * (1.0 - xi) + (f11 - f10) * xi) / gr.hy;
    c.gx = ((g10 - g00) * (1.0 - eta) + (g11 - g01) * eta) / gr.hx;
    c.gy = ((g01 - g00) * (1.0 - xi) + (g11 - g10) * xi) / gr.hy;
    return c;
}

inline double omega_of(const CellGrad& c) {
    const double jac = c.fx * c.gy - c.fy * c.gx;
    return std::sqrt(1.0 + c.fx * c.fx + c.fy * c.fy + c.gx * c.gx + c.gy * c.gy +
                     jac * jac);
}

void check_grid(const GridField& gr) {
    if (gr.nx < 3 || gr.ny < 3) throw ConfigError("grid: need nx, ny >= 3");
    if (gr.hx <= 0.0 || gr.hy <= 0.0) throw ConfigError("grid: spacings must be > 0");
    if (gr.f.size() != gr.size() || gr.g.size() != gr.size() ||
        gr.fixed.size() != gr.size())
        throw ConfigError("grid: array sizes do not match nx * ny");
}

}  // namespace

GridField make_grid(double xmin, double xmax, double ymin, double ymax, int nx, int ny) {
    if (nx < 3 || ny < 3) throw ConfigError("make_grid: need nx, ny >= 3");
    GridField gr;
    gr.nx = nx;
    gr.ny = ny;
    gr.x0 = xmin;
    gr.y0 = ymin;
    gr.hx = (xmax - xmin) / (nx - 1);
    gr.hy = (ymax - ymin) / (ny - 1);
    gr.f.assign(gr.size(), 0.0);
    gr.g.assign(gr.size(), 0.0);
    gr.fixed.assign(gr.size(), 0);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            if (i == 0 || j == 0 || i == nx - 1 || j == ny - 1) gr.fixed[gr.idx(i, j)] = 1;
    return gr;
}

void set_boundary_from_chart(GridField& grid, const Chart& chart) {
    check_grid(grid);
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            if (!grid.fixed[grid.idx(i, j)]) continue;
            auto [jf, jg] = chart.eval(grid.x_at(i), grid.y_at(j));
            grid.f[grid.idx(i, j)] = jf.v;
            grid.g[grid.idx(i, j)] = jg.v;
        }
    }
}

void fill_from_chart(GridField& grid, const Chart& chart) {
    check_grid(grid);
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            auto [jf, jg] = chart.eval(grid.x_at(i), grid.y_at(j));
            grid.f[grid.idx(i, j)] = jf.v;
            grid.g[grid.idx(i, j)] = jg.v;
        }
    }
}

void transfinite_init(GridField& grid) {
    check_grid(grid);
    const int nx = grid.nx, ny = grid.ny;
    for (auto field : {&GridField::f, &GridField::g}) {
        auto& a = grid.*field;
        for (int j = 1; j < ny - 1; ++j) {
            const double e = static_cast<double>(j) / (ny - 1);
            for (int i = 1; i < nx - 1; ++i) {
                if (grid.fixed[grid.idx(i, j)]) continue;
                const double t = static_cast<double>(i) / (nx - 1);
                const double v =
                    (1 - t) * a[grid.idx(0, j)] + t * a[grid.idx(nx - 1, j)] +
                    (1 - e) * a[grid.idx(i, 0)] + e * a[grid.idx(i, ny - 1)] -
                    ((1 - t) * (1 - e) * a[grid.idx(0, 0)] +
                     t * (1 - e) * a[grid.idx(nx - 1, 0)] +
                     (1 - t) * e * a[grid.idx(0, ny - 1)] +
                     t * e * a[grid.idx(nx - 1, ny - 1)]);
                a[grid.idx(i, j)] = v;
            }
        }
    }
}

double discrete_area(const GridField& grid) {
    check_grid(grid);
    const double quarter_cell = 0.25 * grid.hx * grid.hy;
    double sum = 0.0, comp = 0.0;
    for (int j = 0; j + 1 < grid.ny; ++j) {
        for (int i = 0; i + 1 < grid.nx; ++i) {
            for (double xi : {kGaussLo, kGaussHi}) {
                for (double eta : {kGaussLo, kGaussHi}) {
                    const double term =
                        quarter_cell * omega_of(cell_gradient(grid, i, j, xi, eta));
                    const double t = sum + term;
                    comp += (std::abs(sum) >= std::abs(term)) ? (sum - t) + term
                                                              : (term - t) + sum;
                    sum = t;
                }
            }
        }
    }
    return sum + comp;
}

double AreaGradient::max_abs() const {
    double m = 0.0;
    for (double v : df) m = std::max(m, std::abs(v));
    for (double v : dg) m = std::max(m, std::abs(v));
    return m;
}

AreaGradient area_gradient(const GridField& grid) {
    check_grid(grid);
    AreaGradient out;
    out.df.assign(grid.size(), 0.0);
    out.dg.assign(grid.size(), 0.0);
    const double quarter_cell = 0.25 * grid.hx * grid.hy;

    for (int j = 0; j + 1 < grid.ny; ++j) {
        for (int i = 0; i + 1 < grid.nx; ++i) {
            for (double xi : {kGaussLo, kGaussHi}) {
                for (double eta : {kGaussLo, kGaussHi}) {
                    const CellGrad c = cell_gradient(grid, i, j, xi, eta);
                    const double jac = c.fx * c.gy - c.fy * c.gx;
                    const double w = omega_of(c);
                    const double s = quarter_cell / w;
                    // d omega / d (cell gradients)
                    const double dfx = s * (c.fx + jac * c.gy);
                    const double dfy = s * (c.fy - jac * c.gx);
                    const double dgx = s * (c.gx - jac * c.fy);
                    const double dgy = s * (c.gy + jac * c.fx);
                    // chain to the four corner nodes
                    const double ax = 1.0 / grid.hx, ay = 1.0 / grid.hy;
                    const double w00x = -(1.0 - eta) * ax, w10x = (1.0 - eta) * ax;
                    const double w01x = -eta * ax, w11x = eta * ax;
                    const double w00y = -(1.0 - xi) * ay, w01y = (1.0 - xi) * ay;
                    const double w10y = -xi * ay, w11y = xi * ay;
                    out.df[grid.idx(i, j)] += dfx * w00x + dfy * w00y;
                    out.df[grid.idx(i + 1, j)] += dfx * w10x + dfy * w10y;
                    out.df[grid.idx(i, j + 1)] += dfx * w01x + dfy * w01y;
                    out.df[grid.idx(i + 1, j + 1)] += dfx * w11x + dfy * w11y;
                    out.dg[grid.idx(i, j)] += dgx * w00x + dgy * w00y;
                    out.dg[grid.idx(i + 1, j)] += dgx * w10x + dgy * w10y;
                    out.dg[grid.idx(i, j + 1)] += dgx * w01x + dgy * w01y;
                    out.dg[grid.idx(i + 1, j + 1)] += dgx * w11x + dgy * w11y;
                }
            }
        }
    }
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (grid.fixed[k]) {
            out.df[k] = 0.0;
            out.dg[k] = 0.0;
        }
    }
    return out;
}

SolveReport solve(GridField& grid, const SolveParams& params) {
    check_grid(grid);
    const auto t_start = std::chrono::steady_clock::now();
    SolveReport rep;

    double area = discrete_area(grid);
    if (!std::isfinite(area)) {
        rep.note = "initial area is not finite";
        rep.final_area = area;
        return rep;
    }

    AreaGradient grad = area_gradient(grid);
    double gnorm = grad.max_abs();
    const bool use_bb = params.step_rule != "fixed";

    std::vector<double> pf, pg;        // previous iterate (for BB)
    std::vector<double> pdf, pdg;      // previous gradient
    double step_seed = 1.0;

    int it = 0;
    for (; it < params.max_iter && gnorm > params.tol; ++it) {
        double trial = step_seed;
        if (use_bb && !pf.empty()) {
            // Barzilai-Borwein step from the last accepted move
            double sty = 0.0, sts = 0.0;
            for (std::size_t k = 0; k < grid.size(); ++k) {
                const double sf = grid.f[k] - pf[k], sg = grid.g[k] - pg[k];
                sty += sf * (grad.df[k] - pdf[k]) + sg * (grad.dg[k] - pdg[k]);
                sts += sf * sf + sg * sg;
            }
            if (sty > 0.0 && std::isfinite(sty)) trial = sts / sty;
        }

        double g2 = 0.0;
        for (std::size_t k = 0; k < grid.size(); ++k)
            g2 += grad.df[k] * grad.df[k] + grad.dg[k] * grad.dg[k];

        pf = grid.f;
        pg = grid.g;
        pdf = grad.df;
        pdg = grad.dg;

        // Armijo backtracking along the negative gradient
        bool accepted = false;
        double new_area = area;
        for (int half = 0; half < 60; ++half) {
            for (std::size_t k = 0; k < grid.size(); ++k) {
                grid.f[k] = pf[k] - trial * grad.df[k];
                grid.g[k] = pg[k] - trial * grad.dg[k];
            }
            new_area = discrete_area(grid);
            if (std::isfinite(new_area) && new_area <= area - params.armijo_c * trial * g2) {
                accepted = true;
                break;
            }
            trial *= 0.5;
        }
        if (!accepted) {
            grid.f = pf;
            grid.g = pg;
            rep.note = "line search stalled";
            break;
        }
        if (new_area > area) rep.area_monotone = false;
        area = new_area;
        step_seed = 2.0 * trial;
        grad = area_gradient(grid);
        gnorm = grad.max_abs();
    }

    rep.iterations = it;
    rep.final_area = area;
    rep.final_gradient_norm = gnorm;
    rep.converged = gnorm <= params.tol;
    rep.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return rep;
}

// ---------------------------------------------------------------------------
// file formats
// ---------------------------------------------------------------------------

namespace {

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void write_grid_csv(const GridField& grid, std::ostream& out) {
    check_grid(grid);
    out << "x,y,f,g\n";
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i)
            out << fmt17(grid.x_at(i)) << ',' << fmt17(grid.y_at(j)) << ','
                << fmt17(grid.f[grid.idx(i, j)]) << ',' << fmt17(grid.g[grid.idx(i, j)])
                << '\n';
}

GridField read_grid_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("grid csv: empty stream");
    std::vector<std::array<double, 4>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::array<double, 4> row{};
        std::istringstream ls(line);
        std::string tok;
        for (int k = 0; k < 4; ++k) {
            if (!std::getline(ls, tok, ',')) throw ConfigError("grid csv: short row");
            row[k] = std::stod(tok);
        }
        rows.push_back(row);
    }
    if (rows.size() < 9) throw ConfigError("grid csv: too few rows");
    // row-major with i fastest: nx = index where y first changes
    std::size_t nx = 1;
    while (nx < rows.size() && rows[nx][1] == rows[0][1]) ++nx;
    if (nx < 3 || rows.size() % nx != 0) throw ConfigError("grid csv: not a lattice");
    const std::size_t ny = rows.size() / nx;
    GridField gr;
    gr.nx = static_cast<int>(nx);
    gr.ny = static_cast<int>(ny);
    gr.x0 = rows[0][0];
    gr.y0 = rows[0][1];
    gr.hx = rows[1][0] - rows[0][0];
    gr.hy = rows[nx][1] - rows[0][1];
    gr.f.resize(rows.size());
    gr.g.resize(rows.size());
    gr.fixed.assign(rows.size(), 0);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        gr.f[k] = rows[k][2];
        gr.g[k] = rows[k][3];
    }
    for (int j = 0; j < gr.ny; ++j)
        for (int i = 0; i < gr.nx; ++i)
            if (i == 0 || j == 0 || i == gr.nx - 1 || j == gr.ny - 1)
                gr.fixed[gr.idx(i, j)] = 1;
    check_grid(gr);
    return gr;
}

void write_grid_json(const GridField& grid, std::ostream& out) {
    check_grid(grid);
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = "grid_field";
    j["nx"] = grid.nx;
    j["ny"] = grid.ny;
    j["x0"] = grid.x0;
    j["y0"] = grid.y0;
    j["hx"] = grid.hx;
    j["hy"] = grid.hy;
    j["f"] = grid.f;
    j["g"] = grid.g;
    j["fixed"] = grid.fixed;
    out << j.dump(2) << '\n';
}

GridField read_grid_json(std::istream& in) {
    nlohmann::json j;
    in >> j;
    GridField gr;
    gr.nx = j.at("nx").get<int>();
    gr.ny = j.at("ny").get<int>();
    gr.x0 = j.at("x0").get<double>();
    gr.y0 = j.at("y0").get<double>();
    gr.hx = j.at("hx").get<double>();
    gr.hy = j.at("hy").get<double>();
    gr.f = j.at("f").get<std::vector<double>>();
    gr.g = j.at("g").get<std::vector<double>>();
    gr.fixed = j.at("fixed").get<std::vector<std::uint8_t>>();
    check_grid(gr);
    return gr;
}

}  // namespace mss4
