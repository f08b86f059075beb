#pragma once

#include <array>
#include <cmath>
#include <functional>

#include "mss4/chart.hpp"
#include "mss4/lagrange.hpp"

namespace mss4 {

/// Second-order jet of a scalar field of (x, y, z). Symmetric Hessian
/// storage: mixed partials share a slot.
struct Jet3 {
    double v = 0.0;
    double dx = 0.0, dy = 0.0, dz = 0.0;
    double dxx = 0.0, dxy = 0.0, dxz = 0.0, dyy = 0.0, dyz = 0.0, dzz = 0.0;

    bool finite() const {
        return std::isfinite(v) && std::isfinite(dx) && std::isfinite(dy) &&
               std::isfinite(dz) && std::isfinite(dxx) && std::isfinite(dxy) &&
               std::isfinite(dxz) && std::isfinite(dyy) && std::isfinite(dyz) &&
               std::isfinite(dzz);
    }
};

/// det(Hess F) - tr(Hess F); zero iff the gradient graph of F is a special
/// Lagrangian 3-fold. 3x3 determinant by direct cofactor expansion.
double sle3_residual(const Jet3& jF);

/// The affine-in-z potential F(x, y, z) = p(x, y) + lambda z q(x, y). With p
/// minimal and q its Lagrange potential, F solves the special Lagrangian
/// equation for every lambda; F_zz vanishes identically.
class HlPotential {
  public:
    HlPotential(Chart p_chart, PotentialField q_field, double lambda)
        : p_(std::move(p_chart)), q_(std::move(q_field)), lambda_(lambda) {}

    Jet3 eval(double x, double y, double z) const;
    double lambda() const { return lambda_; }
    const Chart& p_chart() const { return p_; }
    const PotentialField& q_field() const { return q_; }

  private:
    Chart p_;
    PotentialField q_;
    double lambda_;
};

inline HlPotential hl_potential(Chart p_chart, PotentialField q_field, double lambda) {
    return HlPotential(std::move(p_chart), std::move(q_field), lambda);
}

/// Point of the ruled 3-fold in R^6:
/// (x, y, z, px - lambda z py/W, py + lambda z px/W, lambda q),
/// W = sqrt(1 + px^2 + py^2). Equals the gradient of the affine potential
/// when q solves the Lagrange system of p.
std::array<double, 6> sl_graph_point(const Chart& p_chart, const PotentialField& q_field,
                                     double lambda, double x, double y, double z);

/// Closed-form doubly periodic special Lagrangian graph over the Scherk
/// square: agrees with sl_graph_point of the Scherk base at the same lambda.
class DoublyPeriodicSl {
  public:
    explicit DoublyPeriodicSl(double lambda) : lambda_(lambda) {}
    std::array<double, 6> operator()(double x, double y, double z) const;
    double lambda() const { return lambda_; }

  private:
    double lambda_;
};

inline DoublyPeriodicSl doubly_periodic_sl(double lambda) {
    return DoublyPeriodicSl(lambda);
}

}  // namespace mss4
