#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "mss4/chart.hpp"
#include "mss4/jet.hpp"
#include "mss4/lagrange.hpp"

namespace mss4 {

// ---------------------------------------------------------------------------
// Chebyshev polynomials (first kind), by the three-term recurrence.
// ---------------------------------------------------------------------------

/// T_N(zeta) via T_{k+2} = 2 zeta T_{k+1} - T_k. Matches cosh(N arcosh zeta)
/// for zeta >= 1 and cos(N arccos zeta) on [-1, 1].
double chebyshev_T(int N, double zeta);

namespace detail {
/// (T_N, T_N', T_N'') at zeta, by differentiating the recurrence.
std::array<double, 3> chebyshev_T_jet(int N, double zeta);
}  // namespace detail

// ---------------------------------------------------------------------------
// Graph charts. All jets are exact closed forms assembled with the jet
// algebra; the finite-difference oracle cross-checks them in the tests.
// ---------------------------------------------------------------------------

/// The flat plane f = g = 0.
Chart flat_plane();

/// Non-minimal negative control: f = x^2 + y^2, g = 0.
Chart paraboloid_test();

/// Holomorphic graph of zeta^2: (x^2 - y^2, 2xy). Gauss map sits on the
/// intersection of the hyperplanes z1 + i z2 = 0 and z3 + i z4 = 0.
Chart holomorphic_sq();

/// Punctured-plane graph with the Chebyshev weight Psi_N(rho) =
/// T_N(sqrt(1 + rho^2)) / (N rho^N):
///   f = Psi_N Re[(x+iy)^N],  g = Psi_N Im[(x+iy)^N].
/// Minimal on R^2 minus the origin, with a non-removable singularity there.
Chart sigma_N(int N);

/// Two-parameter family
///   f = alpha ln((r + sqrt(r^2 + beta^2 - alpha^2)) / 2),  g = beta atan(y/x)
/// over x > 0 and r^2 > alpha^2 - beta^2. Connects the catenoid (1, 0), the
/// helicoid (0, 1) and the complex logarithmic graph (lambda, lambda).
Chart sigma_alpha_beta(double alpha, double beta);

/// One-parameter families generated from classical R^3 graphs and their
/// potentials; each satisfies the first-order system with mu = coth(lambda)
/// (recorded in metadata) and is minimal for every lambda.
Chart helicoid_deform(double lambda);          // from p = x tan y
Chart catenoid_deform(double lambda);          // from p = sqrt(cosh^2 y - x^2)
Chart scherk_doubly(double lambda);            // from p = ln(cos x / cos y)
Chart scherk_doubly_sheared(double lambda, double rho, double alpha);
Chart scherk_tower(double lambda);             // from p = arcsin(sinh x sinh y)
Chart scherk_tower_general(double lambda, double rho, double alpha);

/// Gradient graph (arsinh(tan x cos y), arsinh(tan y cos x)) over the open
/// square; the generating potential solves det Hess = 1.
Chart lagrangian_scherk();

/// R^3 base graphs (g identically zero), the inputs of the deformations.
Chart helicoid_r3();
Chart catenoid_r3();         // upper half, p = +sqrt(cosh^2 y - x^2)
Chart catenoid_r3_mirror();  // lower half, p = -sqrt(cosh^2 y - x^2)
Chart scherk_r3();           // p = ln(cos x / cos y)
Chart scherk_r3_mirror();    // p = ln(cos y / cos x)
Chart scherk_tower_r3();
Chart scherk_sheared_r3(double rho, double alpha);
Chart scherk_tower_general_r3(double rho, double alpha);

/// Closed-form Lagrange potential of a registered R^3 base chart, pinned at
/// the base chart's natural basepoint. Throws ConfigError for charts without
/// a closed form.
PotentialField closed_form_potential(const std::string& r3_family);

// ---------------------------------------------------------------------------
// Conformal harmonic patches.
// ---------------------------------------------------------------------------

/// Parametrization X(u, v) in R^4 with induced metric Lambda (du^2 + dv^2).
struct ConformalPatch {
    std::string name;
    std::function<std::array<double, 4>(double, double)> map;
    std::function<std::array<double, 4>(double, double)> d_u, d_v;
    std::function<double(double, double)> conformal_factor;
    bool u_entire = true;
    bool v_periodic = false;  // period 2*pi when set
    bool v_entire = false;
    double v_lo = 0.0, v_hi = 0.0;  // used when neither periodic nor entire
};

/// Extension patch of sigma_N in coordinates x = sinh t cos th,
/// y = sinh t sin th; conformal factor cosh^2 t + sinh^2(N t).
ConformalPatch make_patch_XN(int N);

/// Annulus patch (cosh U cos V, U, cosh(lambda) cosh U sin V,
/// sinh(lambda) sinh U cos V); periodic in V.
ConformalPatch make_patch_F_plus(double lambda);

/// Strip patch (sinh U cos V, V, cosh(lambda) sinh U sin V,
/// sinh(lambda) cosh U cos V); reduces to the helicoid at lambda = 0.
ConformalPatch make_patch_F_minus(double lambda);

/// Flat reference patch (u, v, 0, 0), Lambda = 1.
ConformalPatch make_flat_patch();

/// Gauss curvature of the conformal metric, K = -(1/(2 Lambda)) Laplacian(log Lambda),
/// with central differences of step fd_step. Requires Lambda > 0 and an
/// interior margin of 2 fd_step on bounded parameter ranges.
double gauss_curvature_conformal(const ConformalPatch& patch, double u, double v,
                                 double fd_step);

/// Tensor Gauss-Legendre quadrature of K dA over [-T, T] x [0, 2 pi]
/// (v-periodic patches only), n nodes per axis.
double total_curvature(const ConformalPatch& patch, double T, int n);

struct TotalCurvatureReport {
    double T = 0.0;
    int n = 0;
    double value = 0.0;
    double tail_estimate = 0.0;  // |value(T) - value(3T/4)|
};

TotalCurvatureReport total_curvature_report(const ConformalPatch& patch, double T, int n);

// ---------------------------------------------------------------------------
// Pointwise diagnostics.
// ---------------------------------------------------------------------------

/// h_xx h_yy - h_xy^2 - 1 for a Hessian carried in a Jet2.
double monge_ampere_residual(const Jet2& h_hessian);

/// Jet of the scalar potential behind lagrangian_scherk: gradient and Hessian
/// obtained by differentiating (arsinh(tan x cos y), arsinh(tan y cos x)) in
/// closed form. The value slot is the (arbitrary) constant 0.
Jet2 lagrangian_scherk_hessian(double x, double y);

struct RayLimit {
    std::string ray;
    double f_limit = 0.0;
    double g_limit = 0.0;
};

struct ProbeReport {
    std::vector<RayLimit> rays;
    double f_discrepancy = 0.0;  // max pairwise difference of ray limits
    double g_discrepancy = 0.0;
    double discrepancy = 0.0;    // max of the two
};

/// Sample f and g along axis rays approaching `center` at the given radii
/// (descending). A nonzero limit discrepancy between rays certifies a
/// non-removable singularity.
ProbeReport singularity_probe(const Chart& chart, std::array<double, 2> center,
                              const std::vector<double>& radii);

}  // namespace mss4
