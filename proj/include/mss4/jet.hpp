#pragma once

#include <cmath>
#include <limits>

namespace mss4 {

/// Second-order jet of a scalar field at a point: value, both first
/// partials and the (symmetric) Hessian. The single dxy field makes
/// Hessian symmetry structural.
struct Jet2 {
    double v = 0.0;
    double dx = 0.0, dy = 0.0;
    double dxx = 0.0, dxy = 0.0, dyy = 0.0;

    static Jet2 constant(double c) { return {c, 0, 0, 0, 0, 0}; }
    static Jet2 var_x(double x) { return {x, 1, 0, 0, 0, 0}; }
    static Jet2 var_y(double y) { return {y, 0, 1, 0, 0, 0}; }

    bool finite() const {
        return std::isfinite(v) && std::isfinite(dx) && std::isfinite(dy) &&
               std::isfinite(dxx) && std::isfinite(dxy) && std::isfinite(dyy);
    }

    double max_abs() const {
        double m = std::abs(v);
        m = std::max(m, std::abs(dx));
        m = std::max(m, std::abs(dy));
        m = std::max(m, std::abs(dxx));
        m = std::max(m, std::abs(dxy));
        return std::max(m, std::abs(dyy));
    }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
    return {a.v + b.v, a.dx + b.dx, a.dy + b.dy,
            a.dxx + b.dxx, a.dxy + b.dxy, a.dyy + b.dyy};
}

inline Jet2 operator-(const Jet2& a, const Jet2& b) {
    return {a.v - b.v, a.dx - b.dx, a.dy - b.dy,
            a.dxx - b.dxx, a.dxy - b.dxy, a.dyy - b.dyy};
}

inline Jet2 operator-(const Jet2& a) {
    return {-a.v, -a.dx, -a.dy, -a.dxx, -a.dxy, -a.dyy};
}

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.v * b.v,
            a.dx * b.v + a.v * b.dx,
            a.dy * b.v + a.v * b.dy,
            a.dxx * b.v + 2.0 * a.dx * b.dx + a.v * b.dxx,
            a.dxy * b.v + a.dx * b.dy + a.dy * b.dx + a.v * b.dxy,
            a.dyy * b.v + 2.0 * a.dy * b.dy + a.v * b.dyy};
}

inline Jet2 operator*(double c, const Jet2& a) {
    return {c * a.v, c * a.dx, c * a.dy, c * a.dxx, c * a.dxy, c * a.dyy};
}
inline Jet2 operator*(const Jet2& a, double c) { return c * a; }
inline Jet2 operator+(const Jet2& a, double c) {
    Jet2 r = a;
    r.v += c;
    return r;
}
inline Jet2 operator+(double c, const Jet2& a) { return a + c; }
inline Jet2 operator-(const Jet2& a, double c) { return a + (-c); }
inline Jet2 operator-(double c, const Jet2& a) { return (-a) + c; }

/// Chain rule through a univariate map given f(u), f'(u), f''(u).
inline Jet2 chain(const Jet2& u, double f, double f1, double f2) {
    return {f,
            f1 * u.dx,
            f1 * u.dy,
            f2 * u.dx * u.dx + f1 * u.dxx,
            f2 * u.dx * u.dy + f1 * u.dxy,
            f2 * u.dy * u.dy + f1 * u.dyy};
}

inline Jet2 inv(const Jet2& u) {
    const double w = 1.0 / u.v;
    return chain(u, w, -w * w, 2.0 * w * w * w);
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * inv(b); }
inline Jet2 operator/(const Jet2& a, double c) { return a * (1.0 / c); }
inline Jet2 operator/(double c, const Jet2& b) { return c * inv(b); }

inline Jet2 sqrt(const Jet2& u) {
    const double s = std::sqrt(u.v);
    return chain(u, s, 0.5 / s, -0.25 / (s * u.v));
}

inline Jet2 sq(const Jet2& u) { return u * u; }

inline Jet2 exp(const Jet2& u) {
    const double e = std::exp(u.v);
    return chain(u, e, e, e);
}

inline Jet2 log(const Jet2& u) {
    const double w = 1.0 / u.v;
    return chain(u, std::log(u.v), w, -w * w);
}

inline Jet2 sin(const Jet2& u) {
    const double s = std::sin(u.v), c = std::cos(u.v);
    return chain(u, s, c, -s);
}

inline Jet2 cos(const Jet2& u) {
    const double s = std::sin(u.v), c = std::cos(u.v);
    return chain(u, c, -s, -c);
}

inline Jet2 tan(const Jet2& u) {
    const double t = std::tan(u.v), s = 1.0 + t * t;
    return chain(u, t, s, 2.0 * t * s);
}

inline Jet2 sinh(const Jet2& u) {
    const double s = std::sinh(u.v), c = std::cosh(u.v);
    return chain(u, s, c, s);
}

inline Jet2 cosh(const Jet2& u) {
    const double s = std::sinh(u.v), c = std::cosh(u.v);
    return chain(u, c, s, c);
}

inline Jet2 tanh(const Jet2& u) {
    const double t = std::tanh(u.v), s = 1.0 - t * t;
    return chain(u, t, s, -2.0 * t * s);
}

inline Jet2 asin(const Jet2& u) {
    const double d = 1.0 - u.v * u.v, r = 1.0 / std::sqrt(d);
    return chain(u, std::asin(u.v), r, u.v * r / d);
}

inline Jet2 acos(const Jet2& u) {
    const double d = 1.0 - u.v * u.v, r = 1.0 / std::sqrt(d);
    return chain(u, std::acos(u.v), -r, -u.v * r / d);
}

inline Jet2 atan(const Jet2& u) {
    const double d = 1.0 + u.v * u.v;
    return chain(u, std::atan(u.v), 1.0 / d, -2.0 * u.v / (d * d));
}

inline Jet2 asinh(const Jet2& u) {
    const double d = 1.0 + u.v * u.v, r = 1.0 / std::sqrt(d);
    return chain(u, std::asinh(u.v), r, -u.v * r / d);
}

inline Jet2 acosh(const Jet2& u) {
    const double d = u.v * u.v - 1.0, r = 1.0 / std::sqrt(d);
    return chain(u, std::acosh(u.v), r, -u.v * r / d);
}

/// Generic central-difference jet of a scalar function, the independent
/// oracle for the closed-form jets. 5-point stencils per direction,
/// h = cbrt(eps) * max(1, |coordinate|).
template <class F>
Jet2 fd_jet2(F&& f, double x, double y) {
    const double eps = std::numeric_limits<double>::epsilon();
    const double h0 = std::cbrt(eps);
    const double hx = h0 * std::max(1.0, std::abs(x));
    const double hy = h0 * std::max(1.0, std::abs(y));

    auto d1 = [](double fm2, double fm1, double fp1, double fp2, double h) {
        return (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
    };
    auto d2 = [](double fm2, double fm1, double f0, double fp1, double fp2, double h) {
        return (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
    };

    const double f0 = f(x, y);
    const double fxm2 = f(x - 2 * hx, y), fxm1 = f(x - hx, y);
    const double fxp1 = f(x + hx, y), fxp2 = f(x + 2 * hx, y);
    const double fym2 = f(x, y - 2 * hy), fym1 = f(x, y - hy);
    const double fyp1 = f(x, y + hy), fyp2 = f(x, y + 2 * hy);

    Jet2 j;
    j.v = f0;
    j.dx = d1(fxm2, fxm1, fxp1, fxp2, hx);
    j.dy = d1(fym2, fym1, fyp1, fyp2, hy);
    j.dxx = d2(fxm2, fxm1, f0, fxp1, fxp2, hx);
    j.dyy = d2(fym2, fym1, f0, fyp1, fyp2, hy);

    // mixed partial: 5-point x-stencil applied to 5-point y-derivatives
    double gy[4];
    const double xs[4] = {x - 2 * hx, x - hx, x + hx, x + 2 * hx};
    for (int k = 0; k < 4; ++k) {
        gy[k] = d1(f(xs[k], y - 2 * hy), f(xs[k], y - hy),
                   f(xs[k], y + hy), f(xs[k], y + 2 * hy), hy);
    }
    j.dxy = d1(gy[0], gy[1], gy[2], gy[3], hx);
    return j;
}

}  // namespace mss4
