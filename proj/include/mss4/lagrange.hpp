#pragma once

#include <array>
#include <functional>
#include <string>

#include "mss4/chart.hpp"
#include "mss4/jet.hpp"

namespace mss4 {

/// Lagrange potential of an R^3 minimal graph: evaluator for the jet of q,
/// pinned to q(basepoint) = 0 convention when produced by integration.
/// Closed-form fields from the catalog carry their natural constant.
struct PotentialField {
    std::string source;  // name of the generating p-chart
    std::array<double, 2> basepoint{0.0, 0.0};
    std::function<Jet2(double, double)> q_jet;

    Jet2 eval(double x, double y) const { return q_jet(x, y); }
};

/// Components (-py/W, px/W) of the closed one-form attached to a minimal
/// graph p, with W = sqrt(1 + px^2 + py^2). Its primitive is the Lagrange
/// potential; the norm is strictly below 1.
std::array<double, 2> lagrange_one_form(const Jet2& jp);

struct IntegrationResult {
    double value = 0.0;         // x-leg-first staircase integral
    double x_first = 0.0;
    double y_first = 0.0;
    double disagreement = 0.0;  // |x_first - y_first|
};

/// Integrate the Lagrange one-form of `p_chart` from basepoint to target
/// along an axis-aligned staircase (x-leg then y-leg), composite 8-point
/// Gauss-Legendre with panels of length <= grid_step. The y-first order is
/// integrated as well; disagreement beyond `order_tol` throws MonodromyError,
/// as does a chart whose domain is not simply connected. A path leaving the
/// domain throws PathError.
IntegrationResult integrate_potential(const Chart& p_chart,
                                      std::array<double, 2> basepoint,
                                      std::array<double, 2> target,
                                      double grid_step = 0.05,
                                      double order_tol = 1e-8);

/// Residual (1 - qy^2) qxx + 2 qx qy qxy + (1 - qx^2) qyy of the dual
/// zero-mean-curvature equation satisfied by Lagrange potentials.
/// Requires the gradient estimate qx^2 + qy^2 < 1.
double maximal_equation_residual(const Jet2& jq);

/// The deformed graph (cosh(lambda) p, sinh(lambda) q) over the same domain.
/// When q is the Lagrange potential of p this solves the first-order system
/// with coefficient mu = coth(lambda); metadata records it. lambda = 0
/// returns the original R^3 graph.
Chart deform(const Chart& p_chart, const PotentialField& q_field, double lambda);

/// Closed form of the deformed area element,
/// cosh^2(lambda) W - sinh^2(lambda)/W >= 1; agrees with the fundamental
/// form of the deformed chart.
double omega_closed_form(const Jet2& jp, double lambda);

/// Potential field sampled on a lattice over `box` by staircase integration
/// and interpolated bicubically (second derivatives accurate to O(step^2)).
/// For p-charts that lack a closed-form potential.
PotentialField grid_potential(const Chart& p_chart, std::array<double, 2> basepoint,
                              SampleBox box, int nx, int ny);

}  // namespace mss4
