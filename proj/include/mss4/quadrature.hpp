#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace mss4 {

struct QuadRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

/// Gauss-Legendre rule with n points on [-1, 1]; nodes by Newton iteration
/// on the Legendre polynomial, cached per n. Deterministic.
const QuadRule& gauss_legendre(int n);

/// Integrate f over [a, b] with a composite rule: panels of length at most
/// `panel`, `points` Gauss-Legendre nodes per panel, Kahan-compensated sum.
template <class F>
double integrate_1d(F&& f, double a, double b, double panel, int points) {
    const QuadRule& rule = gauss_legendre(points);
    const double len = b - a;
    if (len == 0.0) return 0.0;
    const int n_panels = std::max(1, static_cast<int>(std::ceil(std::abs(len) / panel)));
    const double h = len / n_panels;
    double sum = 0.0, comp = 0.0;
    for (int p = 0; p < n_panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h, half = 0.5 * h;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            const double term = rule.weights[k] * f(mid + half * rule.nodes[k]) * half;
            const double t = sum + term;
            comp += (std::abs(sum) >= std::abs(term)) ? (sum - t) + term : (term - t) + sum;
            sum = t;
        }
    }
    return sum + comp;
}

}  // namespace mss4
