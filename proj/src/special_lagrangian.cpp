#include "mss4/special_lagrangian.hpp"

#include <cmath>

#include "mss4/errors.hpp"

namespace mss4 {

double sle3_residual(const Jet3& jF) {
    const double det =
        jF.dxx * (jF.dyy * jF.dzz - jF.dyz * jF.dyz) -
        jF.dxy * (jF.dxy * jF.dzz - jF.dyz * jF.dxz) +
        jF.dxz * (jF.dxy * jF.dyz - jF.dyy * jF.dxz);
    const double tr = jF.dxx + jF.dyy + jF.dzz;
    return det - tr;
}

Jet3 HlPotential::eval(double x, double y, double z) const {
    const Jet2 jp = p_.eval(x, y).first;
    const Jet2 jq = q_.eval(x, y);
    const double lz = lambda_ * z;
    Jet3 F;
    F.v = jp.v + lz * jq.v;
    F.dx = jp.dx + lz * jq.dx;
    F.dy = jp.dy + lz * jq.dy;
    F.dz = lambda_ * jq.v;
    F.dxx = jp.dxx + lz * jq.dxx;
    F.dxy = jp.dxy + lz * jq.dxy;
    F.dyy = jp.dyy + lz * jq.dyy;
    F.dxz = lambda_ * jq.dx;
    F.dyz = lambda_ * jq.dy;
    F.dzz = 0.0;  // affine in z
    return F;
}

std::array<double, 6> sl_graph_point(const Chart& p_chart, const PotentialField& q_field,
                                     double lambda, double x, double y, double z) {
    const Jet2 jp = p_chart.eval(x, y).first;
    const double W = std::sqrt(1.0 + jp.dx * jp.dx + jp.dy * jp.dy);
    const double q = q_field.eval(x, y).v;
    return {x,
            y,
            z,
            jp.dx - lambda * z * jp.dy / W,
            jp.dy + lambda * z * jp.dx / W,
            lambda * q};
}

std::array<double, 6> DoublyPeriodicSl::operator()(double x, double y, double z) const {
    if (std::abs(x) >= M_PI_2 || std::abs(y) >= M_PI_2)
        throw DomainError("doubly_periodic_sl: (x, y) must lie in the open square");
    const double sx = std::sin(x), cx = std::cos(x);
    const double sy = std::sin(y), cy = std::cos(y);
    const double root = std::sqrt(1.0 - sx * sx * sy * sy);
    return {x,
            y,
            z,
            -sx / cx - lambda_ * z * sy * cx / root,
            sy / cy - lambda_ * z * sx * cy / root,
            -lambda_ * std::asin(sx * sy)};
}

}  // namespace mss4
