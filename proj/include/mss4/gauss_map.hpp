#pragma once

#include <array>
#include <complex>
#include <vector>

#include "mss4/chart.hpp"
#include "mss4/geometry.hpp"
#include "mss4/jet.hpp"

namespace mss4 {

using cplx = std::complex<double>;

/// A point of complex projective 3-space in the canonical representative:
/// the largest-modulus homogeneous coordinate is exactly 1.
struct ProjectivePoint {
    std::array<cplx, 4> z{};

    /// Canonicalize an arbitrary nonzero homogeneous vector: divide by the
    /// first component of maximal modulus (so it becomes 1, real positive).
    static ProjectivePoint normalized(const std::array<cplx, 4>& w);

    /// Max componentwise distance between canonical representatives.
    double distance(const ProjectivePoint& other) const;
};

/// Hyperplane a1 z1 + ... + a4 z4 = 0, coefficients normalized to unit
/// Euclidean norm with the first non-negligible component real positive.
struct Hyperplane {
    std::array<cplx, 4> a{};

    static Hyperplane normalized(const std::array<cplx, 4>& v);
    double distance(const Hyperplane& other) const;
};

/// Residual of the first-order system (fx, fy)^T - mu M (gy, -gx)^T with
/// M = [[E/w, F/w], [F/w, G/w]]. Zero iff the pair solves the system with
/// this coefficient at the point. mu = 0 is rejected.
std::array<double, 2> osserman_residual(const Jet2& jf, const Jet2& jg, double mu);

/// Residual of the equivalent dual form (gx, gy)^T + (1/mu) M (fy, -fx)^T.
/// Related to the primal residual by an invertible matrix factor.
std::array<double, 2> osserman_residual_dual(const Jet2& jf, const Jet2& jg, double mu);

/// Coordinate formula for the generalized Gauss map of a graph:
/// [G/w : i - F/w : (G/w) fx + (i - F/w) fy : (G/w) gx + (i - F/w) gy].
ProjectivePoint gauss_map(const Jet2& jf, const Jet2& jg);

/// Second representative of the same map,
/// [1 - iF/w : iE/w : (1 - iF/w) fx + i(E/w) fy : (1 - iF/w) gx + i(E/w) gy];
/// normalizes to the same projective point whenever w > 0.
ProjectivePoint gauss_map_alt(const Jet2& jf, const Jet2& jg);

/// |z1^2 + z2^2 + z3^2 + z4^2| on the canonical representative. Vanishes for
/// every graph jet (hyperquadric membership is an algebraic identity).
double hyperquadric_residual(const ProjectivePoint& p);

/// |a1 z1 + ... + a4 z4| on canonical representatives (scale invariant by
/// construction).
double hyperplane_residual(const ProjectivePoint& p, const Hyperplane& h);

struct HyperplaneFit {
    Hyperplane plane;
    double residual = 0.0;  // smallest singular value of the sample matrix
};

/// Least-squares hyperplane through >= 4 projective samples: the singular
/// direction of the N x 4 sample matrix with minimal singular value,
/// computed by one-sided Jacobi iteration. Residual near zero certifies
/// that the sampled Gauss-map image is degenerate.
HyperplaneFit fit_hyperplane(const std::vector<ProjectivePoint>& samples);

/// Degeneracy call for a fit over n samples: residual <= 1e-6 * sqrt(n).
bool is_degenerate(const HyperplaneFit& fit, std::size_t n_samples);

/// Residual of the Cauchy-Riemann system on a minimal graph for the scalar
/// pair (A, B): (Ax, Ay)^T - M (By, -Bx)^T with M from the chart's jets at
/// the point. Zero iff A + iB is holomorphic on the graph there.
std::array<double, 2> cauchy_riemann_residual(const Chart& chart, const Jet2& jA,
                                              const Jet2& jB, double x, double y);

}  // namespace mss4
