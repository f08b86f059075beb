#include "mss4/lagrange.hpp"

#include <cmath>
#include <memory>
#include <sstream>
#include <vector>

#include "mss4/errors.hpp"
#include "mss4/quadrature.hpp"

namespace mss4 {

std::array<double, 2> lagrange_one_form(const Jet2& jp) {
    const double W = std::sqrt(1.0 + jp.dx * jp.dx + jp.dy * jp.dy);
    return {-jp.dy / W, jp.dx / W};
}

namespace {

void require_inside(const Chart& chart, double x, double y) {
    if (!chart.contains(x, y) || chart.margin(x, y) <= 0.0) {
        std::ostringstream os;
        os << "integration path exits the domain of '" << chart.name << "' at ("
           << x << ", " << y << ")";
        throw PathError(os.str());
    }
}

// integral of the one-form along the horizontal segment y = const
double x_leg(const Chart& chart, double x0, double x1, double y, double panel) {
    return integrate_1d(
        [&](double t) {
            require_inside(chart, t, y);
            return lagrange_one_form(chart.f_jet(t, y))[0];
        },
        x0, x1, panel, 8);
}

// integral along the vertical segment x = const
double y_leg(const Chart& chart, double x, double y0, double y1, double panel) {
    return integrate_1d(
        [&](double t) {
            require_inside(chart, x, t);
            return lagrange_one_form(chart.f_jet(x, t))[1];
        },
        y0, y1, panel, 8);
}

}  // namespace

IntegrationResult integrate_potential(const Chart& p_chart,
                                      std::array<double, 2> basepoint,
                                      std::array<double, 2> target,
                                      double grid_step, double order_tol) {
    if (!p_chart.domain.simply_connected)
        throw MonodromyError("integrate_potential: domain of '" + p_chart.name +
                             "' is not simply connected; the potential is multivalued");
    if (grid_step <= 0.0) throw ConfigError("integrate_potential: grid_step must be > 0");
    require_inside(p_chart, basepoint[0], basepoint[1]);
    require_inside(p_chart, target[0], target[1]);

    IntegrationResult r;
    r.x_first = x_leg(p_chart, basepoint[0], target[0], basepoint[1], grid_step) +
                y_leg(p_chart, target[0], basepoint[1], target[1], grid_step);
    r.y_first = y_leg(p_chart, basepoint[0], basepoint[1], target[1], grid_step) +
                x_leg(p_chart, basepoint[0], target[0], target[1], grid_step);
    r.disagreement = std::abs(r.x_first - r.y_first);
    r.value = r.x_first;
    if (r.disagreement > order_tol) {
        std::ostringstream os;
        os << "integrate_potential: staircase orders disagree by " << r.disagreement
           << " on '" << p_chart.name << "' (closed but not exact one-form?)";
        throw MonodromyError(os.str());
    }
    return r;
}

double maximal_equation_residual(const Jet2& jq) {
    const double s = jq.dx * jq.dx + jq.dy * jq.dy;
    if (s >= 1.0)
        throw DomainError("maximal_equation_residual: gradient estimate violated");
    return (1.0 - jq.dy * jq.dy) * jq.dxx + 2.0 * jq.dx * jq.dy * jq.dxy +
           (1.0 - jq.dx * jq.dx) * jq.dyy;
}

Chart deform(const Chart& p_chart, const PotentialField& q_field, double lambda) {
    const double ch = std::cosh(lambda), sh = std::sinh(lambda);
    Chart out;
    std::ostringstream os;
    os << p_chart.name << ":deformed(lambda=" << lambda << ")";
    out.name = os.str();
    out.domain = p_chart.domain;
    auto pf = p_chart.f_jet;
    out.f_jet = [pf, ch](double x, double y) { return ch * pf(x, y); };
    if (lambda == 0.0) {
        out.g_jet = [](double, double) { return Jet2{}; };
    } else {
        auto qf = q_field.q_jet;
        out.g_jet = [qf, sh](double x, double y) { return sh * qf(x, y); };
    }
    out.meta.family = "deform";
    out.meta.params["lambda"] = lambda;
    if (lambda != 0.0) out.meta.mu = 1.0 / std::tanh(lambda);
    out.meta.note = "deformation of '" + p_chart.name + "' by its potential '" +
                    q_field.source + "'";
    return out;
}

double omega_closed_form(const Jet2& jp, double lambda) {
    const double W = std::sqrt(1.0 + jp.dx * jp.dx + jp.dy * jp.dy);
    const double ch = std::cosh(lambda), sh = std::sinh(lambda);
    return ch * ch * W - sh * sh / W;
}

namespace {

// Bicubic cell interpolation from values and finite-difference derivatives at
// the four corners; C^1 across edges, second derivatives O(step^2).
struct BicubicGrid {
    SampleBox box;
    int nx = 0, ny = 0;
    double hx = 0.0, hy = 0.0;
    std::vector<double> val;  // row-major (j * nx + i)

    double at(int i, int j) const { return val[j * nx + i]; }

    // one-sided at the edges, central inside
    double ddx(int i, int j) const {
        if (i == 0) return (at(1, j) - at(0, j)) / hx;
        if (i == nx - 1) return (at(nx - 1, j) - at(nx - 2, j)) / hx;
        return (at(i + 1, j) - at(i - 1, j)) / (2.0 * hx);
    }
    double ddy(int i, int j) const {
        if (j == 0) return (at(i, 1) - at(i, 0)) / hy;
        if (j == ny - 1) return (at(i, ny - 1) - at(i, ny - 2)) / hy;
        return (at(i, j + 1) - at(i, j - 1)) / (2.0 * hy);
    }
    double ddxy(int i, int j) const {
        const int i0 = std::max(0, i - 1), i1 = std::min(nx - 1, i + 1);
        const int j0 = std::max(0, j - 1), j1 = std::min(ny - 1, j + 1);
        return (at(i1, j1) - at(i1, j0) - at(i0, j1) + at(i0, j0)) /
               ((i1 - i0) * hx * (j1 - j0) * hy);
    }

    Jet2 eval(double x, double y) const {
        int i = static_cast<int>(std::floor((x - box.xmin) / hx));
        int j = static_cast<int>(std::floor((y - box.ymin) / hy));
        i = std::clamp(i, 0, nx - 2);
        j = std::clamp(j, 0, ny - 2);
        const double u = (x - (box.xmin + i * hx)) / hx;
        const double v = (y - (box.ymin + j * hy)) / hy;

        // Hermite basis and derivatives on [0,1]
        auto H = [](double t, double b[4], double db[4], double ddb[4]) {
            b[0] = 1 + t * t * (2 * t - 3);
            b[1] = t * (t - 1) * (t - 1);
            b[2] = t * t * (3 - 2 * t);
            b[3] = t * t * (t - 1);
            db[0] = 6 * t * (t - 1);
            db[1] = 3 * t * t - 4 * t + 1;
            db[2] = -6 * t * (t - 1);
            db[3] = 3 * t * t - 2 * t;
            ddb[0] = 12 * t - 6;
            ddb[1] = 6 * t - 4;
            ddb[2] = 6 - 12 * t;
            ddb[3] = 6 * t - 2;
        };
        double bu[4], dbu[4], ddbu[4], bv[4], dbv[4], ddbv[4];
        H(u, bu, dbu, ddbu);
        H(v, bv, dbv, ddbv);

        // corner data scaled to the unit cell
        double C[4][4];
        const int ii[2] = {i, i + 1}, jj[2] = {j, j + 1};
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                C[2 * a][2 * b] = at(ii[a], jj[b]);
                C[2 * a + 1][2 * b] = ddx(ii[a], jj[b]) * hx;
                C[2 * a][2 * b + 1] = ddy(ii[a], jj[b]) * hy;
                C[2 * a + 1][2 * b + 1] = ddxy(ii[a], jj[b]) * hx * hy;
            }
        }
        // basis slot a: 0 = value at corner 0, 1 = slope at corner 0,
        //               2 = value at corner 1, 3 = slope at corner 1
        auto sum = [&](const double* fu, const double* fv) {
            double s = 0.0;
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) s += C[a][b] * fu[a] * fv[b];
            return s;
        };
        Jet2 out;
        out.v = sum(bu, bv);
        out.dx = sum(dbu, bv) / hx;
        out.dy = sum(bu, dbv) / hy;
        out.dxx = sum(ddbu, bv) / (hx * hx);
        out.dxy = sum(dbu, dbv) / (hx * hy);
        out.dyy = sum(bu, ddbv) / (hy * hy);
        return out;
    }
};

}  // namespace

PotentialField grid_potential(const Chart& p_chart, std::array<double, 2> basepoint,
                              SampleBox box, int nx, int ny) {
    if (nx < 4 || ny < 4) throw ConfigError("grid_potential: need at least a 4x4 lattice");
    auto grid = std::make_shared<BicubicGrid>();
    grid->box = box;
    grid->nx = nx;
    grid->ny = ny;
    grid->hx = (box.xmax - box.xmin) / (nx - 1);
    grid->hy = (box.ymax - box.ymin) / (ny - 1);
    grid->val.resize(static_cast<std::size_t>(nx) * ny);
    const double step = 0.5 * std::min(grid->hx, grid->hy);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const double x = box.xmin + i * grid->hx;
            const double y = box.ymin + j * grid->hy;
            grid->val[j * nx + i] =
                integrate_potential(p_chart, basepoint, {x, y}, step).value;
        }
    }
    PotentialField field;
    field.source = p_chart.name;
    field.basepoint = basepoint;
    field.q_jet = [grid](double x, double y) { return grid->eval(x, y); };
    return field;
}

}  // namespace mss4
