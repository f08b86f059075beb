#include "mss4/geometry.hpp"

#include <cmath>

namespace mss4 {

FundamentalForm fundamental_form(const Jet2& jf, const Jet2& jg) {
    FundamentalForm m;
    m.E = 1.0 + jf.dx * jf.dx + jg.dx * jg.dx;
    m.F = jf.dx * jf.dy + jg.dx * jg.dy;
    m.G = 1.0 + jf.dy * jf.dy + jg.dy * jg.dy;
    m.omega = std::sqrt(m.E * m.G - m.F * m.F);
    return m;
}

double omega_sq_quartic(const Jet2& jf, const Jet2& jg) {
    const double jac = jf.dx * jg.dy - jf.dy * jg.dx;
    return 1.0 + jf.dx * jf.dx + jf.dy * jf.dy + jg.dx * jg.dx + jg.dy * jg.dy +
           jac * jac;
}

std::array<double, 2> mss_residual(const Jet2& jf, const Jet2& jg) {
    const FundamentalForm m = fundamental_form(jf, jg);
    auto L = [&](const Jet2& u) {
        return m.G * u.dxx - 2.0 * m.F * u.dxy + m.E * u.dyy;
    };
    return {L(jf), L(jg)};
}

std::array<double, 3> conformal_ratio(const Jet2& jf, const Jet2& jg) {
    const FundamentalForm m = fundamental_form(jf, jg);
    return {m.E / m.omega, m.F / m.omega, m.G / m.omega};
}

namespace {

// E/omega, F/omega, G/omega at a point, from exact first-order data.
std::array<double, 3> ratios_at(const Chart& chart, double x, double y) {
    auto [jf, jg] = chart.eval(x, y);
    return conformal_ratio(jf, jg);
}

struct RatioDerivatives {
    // d/dx and d/dy of (E/omega, F/omega, G/omega), central differences
    std::array<double, 3> ddx, ddy;
};

RatioDerivatives ratio_derivatives(const Chart& chart, double x, double y, double h) {
    const auto xp = ratios_at(chart, x + h, y);
    const auto xm = ratios_at(chart, x - h, y);
    const auto yp = ratios_at(chart, x, y + h);
    const auto ym = ratios_at(chart, x, y - h);
    RatioDerivatives d;
    for (int k = 0; k < 3; ++k) {
        d.ddx[k] = (xp[k] - xm[k]) / (2.0 * h);
        d.ddy[k] = (yp[k] - ym[k]) / (2.0 * h);
    }
    return d;
}

}  // namespace

std::array<double, 4> mean_curvature_vector(const Chart& chart, double x, double y,
                                            double fd_step) {
    auto [jf, jg] = chart.eval_interior(x, y, 2.0 * fd_step);
    const FundamentalForm m = fundamental_form(jf, jg);
    const auto d = ratio_derivatives(chart, x, y, fd_step);

    const double P = d.ddx[2] - d.ddy[1];  // d/dx(G/w) - d/dy(F/w)
    const double Q = d.ddy[0] - d.ddx[1];  // d/dy(E/w) - d/dx(F/w)
    const auto L = mss_residual(jf, jg);
    const double w = m.omega;
    return {P / w, Q / w,
            (P * jf.dx + Q * jf.dy + L[0] / w) / w,
            (P * jg.dx + Q * jg.dy + L[1] / w) / w};
}

std::array<double, 2> divergence_identities_residual(const Chart& chart, double x,
                                                     double y, double fd_step) {
    chart.eval_interior(x, y, 2.0 * fd_step);
    const auto d = ratio_derivatives(chart, x, y, fd_step);
    return {d.ddy[1] - d.ddx[2], d.ddy[0] - d.ddx[1]};
}

}  // namespace mss4
