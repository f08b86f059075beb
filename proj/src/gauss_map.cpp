#include "mss4/gauss_map.hpp"

#include <algorithm>
#include <cmath>

#include "mss4/errors.hpp"

namespace mss4 {

namespace {

int argmax_modulus(const std::array<cplx, 4>& w) {
    int best = 0;
    double m = std::abs(w[0]);
    for (int k = 1; k < 4; ++k) {
        const double a = std::abs(w[k]);
        if (a > m) {
            m = a;
            best = k;
        }
    }
    return best;
}

}  // namespace

ProjectivePoint ProjectivePoint::normalized(const std::array<cplx, 4>& w) {
    const int k = argmax_modulus(w);
    const cplx pivot = w[k];
    if (pivot == cplx(0.0, 0.0))
        throw ConfigError("projective point: all homogeneous coordinates are zero");
    ProjectivePoint p;
    for (int i = 0; i < 4; ++i) p.z[i] = w[i] / pivot;
    p.z[k] = cplx(1.0, 0.0);
    return p;
}

double ProjectivePoint::distance(const ProjectivePoint& other) const {
    double d = 0.0;
    for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(z[i] - other.z[i]));
    return d;
}

Hyperplane Hyperplane::normalized(const std::array<cplx, 4>& v) {
    double n2 = 0.0;
    for (const cplx& c : v) n2 += std::norm(c);
    const double n = std::sqrt(n2);
    if (n == 0.0) throw ConfigError("hyperplane: zero coefficient vector");
    std::array<cplx, 4> a;
    for (int i = 0; i < 4; ++i) a[i] = v[i] / n;
    // phase-fix on the first component that is not numerical noise
    for (int i = 0; i < 4; ++i) {
        const double m = std::abs(a[i]);
        if (m > 1e-8) {
            const cplx phase = a[i] / m;
            for (int k = 0; k < 4; ++k) a[k] /= phase;
            a[i] = cplx(m, 0.0);
            break;
        }
    }
    Hyperplane h;
    h.a = a;
    return h;
}

double Hyperplane::distance(const Hyperplane& other) const {
    double d = 0.0;
    for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(a[i] - other.a[i]));
    return d;
}

std::array<double, 2> osserman_residual(const Jet2& jf, const Jet2& jg, double mu) {
    if (mu == 0.0) throw ConfigError("osserman_residual: mu must be nonzero");
    const FundamentalForm m = fundamental_form(jf, jg);
    const double a = m.E / m.omega, b = m.F / m.omega, c = m.G / m.omega;
    return {jf.dx - mu * (a * jg.dy - b * jg.dx),
            jf.dy - mu * (b * jg.dy - c * jg.dx)};
}

std::array<double, 2> osserman_residual_dual(const Jet2& jf, const Jet2& jg, double mu) {
    if (mu == 0.0) throw ConfigError("osserman_residual: mu must be nonzero");
    const FundamentalForm m = fundamental_form(jf, jg);
    const double a = m.E / m.omega, b = m.F / m.omega, c = m.G / m.omega;
    return {jg.dx + (a * jf.dy - b * jf.dx) / mu,
            jg.dy + (b * jf.dy - c * jf.dx) / mu};
}

ProjectivePoint gauss_map(const Jet2& jf, const Jet2& jg) {
    const FundamentalForm m = fundamental_form(jf, jg);
    const cplx z1(m.G / m.omega, 0.0);
    const cplx z2(-m.F / m.omega, 1.0);
    return ProjectivePoint::normalized(
        {z1, z2, z1 * jf.dx + z2 * jf.dy, z1 * jg.dx + z2 * jg.dy});
}

ProjectivePoint gauss_map_alt(const Jet2& jf, const Jet2& jg) {
    const FundamentalForm m = fundamental_form(jf, jg);
    const cplx z1(1.0, -m.F / m.omega);
    const cplx z2(0.0, m.E / m.omega);
    return ProjectivePoint::normalized(
        {z1, z2, z1 * jf.dx + z2 * jf.dy, z1 * jg.dx + z2 * jg.dy});
}

double hyperquadric_residual(const ProjectivePoint& p) {
    cplx s(0.0, 0.0);
    for (const cplx& z : p.z) s += z * z;
    return std::abs(s);
}

double hyperplane_residual(const ProjectivePoint& p, const Hyperplane& h) {
    cplx s(0.0, 0.0);
    for (int i = 0; i < 4; ++i) s += h.a[i] * p.z[i];
    return std::abs(s);
}

HyperplaneFit fit_hyperplane(const std::vector<ProjectivePoint>& samples) {
    const std::size_t n = samples.size();
    if (n < 4) throw ConfigError("fit_hyperplane: need at least 4 samples");

    // One-sided Jacobi SVD of the n x 4 matrix A whose rows are the samples:
    // orthogonalize the columns of B = A V by plane rotations accumulated
    // into V. Column norms converge to the singular values; the hyperplane
    // is the V-column of the smallest one.
    std::array<std::vector<cplx>, 4> col;
    for (int j = 0; j < 4; ++j) {
        col[j].resize(n);
        for (std::size_t r = 0; r < n; ++r) col[j][r] = samples[r].z[j];
    }
    std::array<std::array<cplx, 4>, 4> V{};
    for (int j = 0; j < 4; ++j) V[j][j] = cplx(1.0, 0.0);

    const int max_sweeps = 60;
    const double tol = 1e-30;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < 3; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                cplx apq(0.0, 0.0);
                double app = 0.0, aqq = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    apq += std::conj(col[p][r]) * col[q][r];
                    app += std::norm(col[p][r]);
                    aqq += std::norm(col[q][r]);
                }
                const double m = std::abs(apq);
                off = std::max(off, m);
                if (m * m <= tol * app * aqq) continue;

                // complex Jacobi rotation zeroing the (p,q) Gram entry
                const cplx phase = apq / m;
                const double tau = (aqq - app) / (2.0 * m);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = cs * t;
                const cplx s1 = sn * phase;
                for (std::size_t r = 0; r < n; ++r) {
                    const cplx bp = col[p][r], bq = col[q][r];
                    col[p][r] = cs * bp - std::conj(s1) * bq;
                    col[q][r] = s1 * bp + cs * bq;
                }
                for (int r = 0; r < 4; ++r) {
                    const cplx vp = V[r][p], vq = V[r][q];
                    V[r][p] = cs * vp - std::conj(s1) * vq;
                    V[r][q] = s1 * vp + cs * vq;
                }
            }
        }
        if (off < 1e-15) break;
    }

    int jmin = 0;
    double smin = -1.0;
    for (int j = 0; j < 4; ++j) {
        double s2 = 0.0;
        for (std::size_t r = 0; r < n; ++r) s2 += std::norm(col[j][r]);
        const double s = std::sqrt(s2);
        if (smin < 0.0 || s < smin) {
            smin = s;
            jmin = j;
        }
    }

    HyperplaneFit fit;
    fit.residual = smin;
    fit.plane = Hyperplane::normalized({V[0][jmin], V[1][jmin], V[2][jmin], V[3][jmin]});
    return fit;
}

bool is_degenerate(const HyperplaneFit& fit, std::size_t n_samples) {
    return fit.residual <= 1e-6 * std::sqrt(static_cast<double>(n_samples));
}

std::array<double, 2> cauchy_riemann_residual(const Chart& chart, const Jet2& jA,
                                              const Jet2& jB, double x, double y) {
    auto [jf, jg] = chart.eval(x, y);
    const FundamentalForm m = fundamental_form(jf, jg);
    const double a = m.E / m.omega, b = m.F / m.omega, c = m.G / m.omega;
    return {jA.dx - (a * jB.dy - b * jB.dx),
            jA.dy - (b * jB.dy - c * jB.dx)};
}

}  // namespace mss4
