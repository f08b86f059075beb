#pragma once

#include <array>

#include "mss4/chart.hpp"
#include "mss4/jet.hpp"

namespace mss4 {

/// First fundamental form coefficients and area element of a graph chart.
/// For graphs EG - F^2 >= 1, so omega >= 1.
struct FundamentalForm {
    double E = 1.0, F = 0.0, G = 1.0;
    double omega = 1.0;
};

/// E = 1 + fx^2 + gx^2, F = fx fy + gx gy, G = 1 + fy^2 + gy^2,
/// omega = sqrt(EG - F^2).
FundamentalForm fundamental_form(const Jet2& jf, const Jet2& jg);

/// omega^2 written as the quartic 1 + |grad f|^2 + |grad g|^2 + (fx gy - fy gx)^2;
/// agrees with EG - F^2 identically and is the numerically stable form.
double omega_sq_quartic(const Jet2& jf, const Jet2& jg);

/// Residual pair (L f, L g) of the second-order system, where
/// L u = G u_xx - 2 F u_xy + E u_yy. Both vanish exactly at points where the
/// graph is minimal.
std::array<double, 2> mss_residual(const Jet2& jf, const Jet2& jg);

/// (E/omega, F/omega, G/omega) — the conformally normalized metric. Invariant
/// under the potential deformation of R^3 graphs.
std::array<double, 3> conformal_ratio(const Jet2& jf, const Jet2& jg);

/// Mean curvature vector H = (1/omega) (P, Q, P fx + Q fy + Lf/omega,
/// P gx + Q gy + Lg/omega) with P = d/dx(G/omega) - d/dy(F/omega) and
/// Q = d/dy(E/omega) - d/dx(F/omega) taken by central differences of the
/// exact first-order data with step fd_step. Requires margin >= 2 fd_step.
std::array<double, 4> mean_curvature_vector(const Chart& chart, double x, double y,
                                            double fd_step);

/// Residuals of the two divergence identities of minimal graphs:
/// (d/dy(F/omega) - d/dx(G/omega), d/dy(E/omega) - d/dx(F/omega)),
/// by central differences with step fd_step.
std::array<double, 2> divergence_identities_residual(const Chart& chart, double x,
                                                     double y, double fd_step);

}  // namespace mss4
