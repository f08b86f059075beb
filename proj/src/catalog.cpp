#include "mss4/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "mss4/errors.hpp"
#include "mss4/quadrature.hpp"

namespace mss4 {

double chebyshev_T(int N, double zeta) {
    if (N < 0) throw ConfigError("chebyshev_T: degree must be >= 0");
    if (N == 0) return 1.0;
    double t0 = 1.0, t1 = zeta;
    for (int k = 2; k <= N; ++k) {
        const double t2 = 2.0 * zeta * t1 - t0;
        t0 = t1;
        t1 = t2;
    }
    return t1;
}

namespace detail {

std::array<double, 3> chebyshev_T_jet(int N, double zeta) {
    if (N < 0) throw ConfigError("chebyshev_T: degree must be >= 0");
    if (N == 0) return {1.0, 0.0, 0.0};
    double t0 = 1.0, d0 = 0.0, s0 = 0.0;
    double t1 = zeta, d1 = 1.0, s1 = 0.0;
    for (int k = 2; k <= N; ++k) {
        const double t2 = 2.0 * zeta * t1 - t0;
        const double d2 = 2.0 * t1 + 2.0 * zeta * d1 - d0;
        const double s2 = 4.0 * d1 + 2.0 * zeta * s1 - s0;
        t0 = t1; d0 = d1; s0 = s1;
        t1 = t2; d1 = d2; s1 = s2;
    }
    return {t1, d1, s1};
}

}  // namespace detail

namespace {

using J = Jet2;

J jx(double x) { return J::var_x(x); }
J jy(double y) { return J::var_y(y); }

J jet_pow_int(const J& u, int k) {
    J r = J::constant(1.0);
    for (int i = 0; i < k; ++i) r = r * u;
    return r;
}

std::function<Jet2(double, double)> zero_jet() {
    return [](double, double) { return Jet2{}; };
}

Domain square_domain(double half, SampleBox box, double sm) {
    Domain d;
    d.contains = [half](double x, double y) {
        return std::abs(x) < half && std::abs(y) < half;
    };
    d.margin = [half](double x, double y) {
        return std::min(half - std::abs(x), half - std::abs(y));
    };
    d.simply_connected = true;
    d.box = box;
    d.sample_margin = sm;
    return d;
}

std::string param_name(const char* fam, double lambda) {
    std::ostringstream os;
    os << fam << ":lambda=" << lambda;
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// simple fixtures
// ---------------------------------------------------------------------------

Chart flat_plane() {
    Chart c;
    c.name = "flat_plane";
    c.domain = Domain::whole_plane({-1.0, 1.0, -1.0, 1.0});
    c.f_jet = zero_jet();
    c.g_jet = zero_jet();
    c.meta.family = "flat_plane";
    return c;
}

Chart paraboloid_test() {
    Chart c;
    c.name = "paraboloid_test";
    c.domain = Domain::whole_plane({-1.0, 1.0, -1.0, 1.0});
    c.f_jet = [](double x, double y) {
        return Jet2{x * x + y * y, 2 * x, 2 * y, 2.0, 0.0, 2.0};
    };
    c.g_jet = zero_jet();
    c.meta.family = "paraboloid_test";
    c.meta.note = "non-minimal control surface";
    return c;
}

Chart holomorphic_sq() {
    Chart c;
    c.name = "holomorphic_sq";
    c.domain = Domain::whole_plane({-1.0, 1.0, -1.0, 1.0});
    c.f_jet = [](double x, double y) {
        return Jet2{x * x - y * y, 2 * x, -2 * y, 2.0, 0.0, -2.0};
    };
    c.g_jet = [](double x, double y) {
        return Jet2{2 * x * y, 2 * y, 2 * x, 0.0, 2.0, 0.0};
    };
    c.meta.family = "holomorphic_sq";
    c.meta.mu = 1.0;
    c.meta.note = "graph of zeta^2; solves the Cauchy-Riemann equations";
    return c;
}

// ---------------------------------------------------------------------------
// punctured-plane family
// ---------------------------------------------------------------------------

Chart sigma_N(int N) {
    if (N < 1) throw ConfigError("sigma_N: N must be >= 1");

    // weight Psi_N(rho) = T_N(sqrt(1 + rho^2)) / (N rho^N) as a jet
    auto psi = [N](const J& X, const J& Y) {
        const J rho2 = X * X + Y * Y;
        const J s = sqrt(1.0 + rho2);
        const auto t = detail::chebyshev_T_jet(N, s.v);
        const J TN = chain(s, t[0], t[1], t[2]);
        J rhoN = jet_pow_int(rho2, N / 2);
        if (N % 2 == 1) rhoN = rhoN * sqrt(rho2);
        return TN / (static_cast<double>(N) * rhoN);
    };
    // real and imaginary parts of (x + iy)^N
    auto zpow = [N](const J& X, const J& Y) {
        J C = J::constant(1.0), S = J::constant(0.0);
        for (int k = 0; k < N; ++k) {
            const J C2 = C * X - S * Y;
            const J S2 = C * Y + S * X;
            C = C2;
            S = S2;
        }
        return std::pair<J, J>{C, S};
    };

    Chart c;
    {
        std::ostringstream os;
        os << "sigmaN:" << N;
        c.name = os.str();
    }
    c.domain.contains = [](double x, double y) { return x * x + y * y > 0.0; };
    c.domain.margin = [](double x, double y) { return std::sqrt(x * x + y * y); };
    c.domain.simply_connected = false;  // punctured plane
    c.domain.box = {-2.0, 2.0, -2.0, 2.0};
    c.domain.sample_margin = 0.3;
    c.f_jet = [psi, zpow](double x, double y) {
        const J X = jx(x), Y = jy(y);
        return psi(X, Y) * zpow(X, Y).first;
    };
    c.g_jet = [psi, zpow](double x, double y) {
        const J X = jx(x), Y = jy(y);
        return psi(X, Y) * zpow(X, Y).second;
    };
    c.meta.family = "sigmaN";
    c.meta.params["N"] = N;
    c.meta.note = "isolated non-removable singularity at the origin";
    return c;
}

// ---------------------------------------------------------------------------
// two-parameter catenoid/helicoid/logarithm family
// ---------------------------------------------------------------------------

Chart sigma_alpha_beta(double alpha, double beta) {
    const double c2 = beta * beta - alpha * alpha;
    const double R = std::sqrt(std::max(0.0, -c2));  // inner radius when alpha^2 > beta^2

    Chart c;
    {
        std::ostringstream os;
        os << "sigma_alpha_beta:alpha=" << alpha << ",beta=" << beta;
        c.name = os.str();
    }
    c.domain.contains = [R](double x, double y) {
        return x > 0.0 && x * x + y * y > R * R;
    };
    c.domain.margin = [R](double x, double y) {
        const double r = std::sqrt(x * x + y * y);
        return R > 0.0 ? std::min(x, r - R) : x;
    };
    c.domain.simply_connected = true;
    c.domain.box = {std::max(0.2, R + 0.2), R + 2.2, -1.5, 1.5};
    c.domain.sample_margin = 0.15;

    c.f_jet = [alpha, c2](double x, double y) {
        if (alpha == 0.0) return Jet2{};
        const J X = jx(x), Y = jy(y);
        const J r = sqrt(X * X + Y * Y);
        const J s = sqrt(X * X + Y * Y + c2);
        return alpha * (log(r + s) - M_LN2);
    };
    c.g_jet = [beta](double x, double y) {
        if (beta == 0.0) return Jet2{};
        const J X = jx(x), Y = jy(y);
        return beta * atan(Y / X);
    };
    c.meta.family = "sigma_alpha_beta";
    c.meta.params["alpha"] = alpha;
    c.meta.params["beta"] = beta;
    if (alpha != 0.0 && beta != 0.0) c.meta.mu = alpha / beta;
    return c;
}

// ---------------------------------------------------------------------------
// lambda-deformation families
// ---------------------------------------------------------------------------

namespace {

// shared construction: f = cosh(l) p, g = sinh(l) q from jet formulas
Chart lambda_family(std::string name, std::string family, double lambda, Domain domain,
                    std::function<Jet2(double, double)> p,
                    std::function<Jet2(double, double)> q, std::string note) {
    Chart c;
    c.name = std::move(name);
    c.domain = std::move(domain);
    const double ch = std::cosh(lambda), sh = std::sinh(lambda);
    c.f_jet = [p, ch](double x, double y) { return ch * p(x, y); };
    if (lambda == 0.0) {
        c.g_jet = zero_jet();
    } else {
        c.g_jet = [q, sh](double x, double y) { return sh * q(x, y); };
    }
    c.meta.family = std::move(family);
    c.meta.params["lambda"] = lambda;
    if (lambda != 0.0) c.meta.mu = 1.0 / std::tanh(lambda);
    c.meta.note = std::move(note);
    return c;
}

Domain helicoid_domain() {
    Domain d;
    d.contains = [](double, double y) { return std::abs(y) < M_PI_2; };
    d.margin = [](double, double y) { return M_PI_2 - std::abs(y); };
    d.box = {-2.0, 2.0, -1.4, 1.4};
    d.sample_margin = 0.12;
    return d;
}

Domain catenoid_domain() {
    Domain d;
    d.contains = [](double x, double y) { return std::abs(x) < std::cosh(y); };
    d.margin = [](double x, double y) {
        const double chy = std::cosh(y);
        return (chy - std::abs(x)) / (2.0 * chy);
    };
    d.box = {-1.0, 1.0, -1.0, 1.0};
    d.sample_margin = 0.05;
    return d;
}

Domain tower_domain() {
    Domain d;
    d.contains = [](double x, double y) {
        return std::abs(std::sinh(x) * std::sinh(y)) < 1.0;
    };
    d.margin = [](double x, double y) {
        const double s = std::abs(std::sinh(x) * std::sinh(y));
        return (1.0 - s) / (2.0 * std::cosh(x) * std::cosh(y));
    };
    d.box = {-0.85, 0.85, -0.85, 0.85};
    d.sample_margin = 0.03;
    return d;
}

Jet2 helicoid_p(double x, double y) { return jx(x) * tan(jy(y)); }
Jet2 helicoid_q(double x, double y) {
    const J X = jx(x), Y = jy(y);
    return -sqrt(sq(cos(Y)) + X * X);
}

Jet2 catenoid_p(double x, double y) {
    const J X = jx(x), Y = jy(y);
    return sqrt(sq(cosh(Y)) - X * X);
}
Jet2 catenoid_q(double x, double y) { return -(jx(x) * tanh(jy(y))); }

Jet2 scherk_p(double x, double y) { return log(cos(jx(x))) - log(cos(jy(y))); }
Jet2 scherk_q(double x, double y) { return -asin(sin(jx(x)) * sin(jy(y))); }

Jet2 tower_p(double x, double y) { return asin(sinh(jx(x)) * sinh(jy(y))); }
Jet2 tower_q(double x, double y) { return log(cosh(jy(y))) - log(cosh(jx(x))); }

struct ShearedParams {
    double rho, alpha, ca, sa;
    void check() const {
        if (rho <= 0.0) throw ConfigError("sheared family: rho must be > 0");
        if (alpha <= 0.0 || alpha >= M_PI_2)
            throw ConfigError("sheared family: alpha must lie in (0, pi/2)");
    }
};

Jet2 sheared_p(const ShearedParams& sp, double x, double y) {
    const J u = jx(x) / sp.ca, v = jy(y) / sp.sa;
    const J Rm = 0.5 * sp.rho * (u - v), Rp = 0.5 * sp.rho * (u + v);
    return (log(cos(Rm)) - log(cos(Rp))) / sp.rho;
}

Jet2 sheared_D(const ShearedParams& sp, double x, double y) {
    const J u = jx(x) / sp.ca, v = jy(y) / sp.sa;
    return sp.ca * sp.ca * cos(sp.rho * u) - sp.sa * sp.sa * cos(sp.rho * v);
}

Jet2 sheared_q(const ShearedParams& sp, double x, double y) {
    const J D = sheared_D(sp, x, y);
    if (std::abs(D.v) >= 1.0)
        throw DomainError("sheared family: arccos argument left (-1, 1)");
    return -acos(D) / sp.rho;
}

Domain sheared_domain(const ShearedParams& sp) {
    const double rho = sp.rho, ca = sp.ca, sa = sp.sa;
    // exact distances to the four rhomboid edges |R_-| = pi/2, |R_+| = pi/2
    const double grad_R = 0.5 * rho * std::sqrt(1.0 / (ca * ca) + 1.0 / (sa * sa));
    Domain d;
    d.contains = [rho, ca, sa](double x, double y) {
        const double u = x / ca, v = y / sa;
        const double Rm = 0.5 * rho * (u - v), Rp = 0.5 * rho * (u + v);
        return std::abs(Rm) < M_PI_2 && std::abs(Rp) < M_PI_2;
    };
    d.margin = [rho, ca, sa, grad_R](double x, double y) {
        const double u = x / ca, v = y / sa;
        const double Rm = 0.5 * rho * (u - v), Rp = 0.5 * rho * (u + v);
        return std::min(M_PI_2 - std::abs(Rm), M_PI_2 - std::abs(Rp)) / grad_R;
    };
    const double bx = 0.45 * M_PI * ca / rho, by = 0.45 * M_PI * sa / rho;
    d.box = {-bx, bx, -by, by};
    d.sample_margin = (M_PI / 8.0) / grad_R;
    return d;
}

Jet2 tower_general_D(const ShearedParams& sp, double x, double y) {
    const J u = jx(x) / sp.ca, v = jy(y) / sp.sa;
    return sp.ca * sp.ca * cosh(sp.rho * u) - sp.sa * sp.sa * cosh(sp.rho * v);
}

Jet2 tower_general_p(const ShearedParams& sp, double x, double y) {
    const J D = tower_general_D(sp, x, y);
    if (std::abs(D.v) >= 1.0)
        throw DomainError("generalized tower: arccos argument left (-1, 1)");
    return acos(D) / sp.rho;
}

Jet2 tower_general_q(const ShearedParams& sp, double x, double y) {
    const J u = jx(x) / sp.ca, v = jy(y) / sp.sa;
    const J Rm = 0.5 * sp.rho * (u - v), Rp = 0.5 * sp.rho * (u + v);
    return (log(cosh(Rm)) - log(cosh(Rp))) / sp.rho;
}

Domain tower_general_domain(const ShearedParams& sp) {
    const double rho = sp.rho, ca = sp.ca, sa = sp.sa;
    Domain d;
    auto Dval = [rho, ca, sa](double x, double y) {
        return ca * ca * std::cosh(rho * x / ca) - sa * sa * std::cosh(rho * y / sa);
    };
    d.contains = [Dval](double x, double y) { return std::abs(Dval(x, y)) < 1.0; };
    d.margin = [rho, ca, sa, Dval](double x, double y) {
        const double Dx = rho * ca * std::sinh(rho * x / ca);
        const double Dy = rho * sa * std::sinh(rho * y / sa);
        const double grad = std::abs(Dx) + std::abs(Dy);
        return (1.0 - std::abs(Dval(x, y))) / (2.0 * grad + 1.0);
    };
    const double bx = 0.75 * (ca / rho) * std::acosh((1.0 + sa * sa) / (ca * ca));
    const double by = 0.75 * (sa / rho) * std::acosh((1.0 + ca * ca) / (sa * sa));
    d.box = {-bx, bx, -by, by};
    d.sample_margin = 0.02;
    return d;
}

}  // namespace

Chart helicoid_deform(double lambda) {
    return lambda_family(param_name("helicoid_deform", lambda), "helicoid_deform",
                         lambda, helicoid_domain(), helicoid_p, helicoid_q,
                         "g follows the potential orientation; the mirrored graph "
                         "(g -> -g) is the member at -lambda");
}

Chart catenoid_deform(double lambda) {
    return lambda_family(param_name("catenoid_deform", lambda), "catenoid_deform",
                         lambda, catenoid_domain(), catenoid_p, catenoid_q,
                         "g follows the potential orientation; the mirrored graph "
                         "(g -> -g) is the member at -lambda");
}

Chart scherk_doubly(double lambda) {
    return lambda_family(param_name("scherk_doubly", lambda), "scherk_doubly", lambda,
                         square_domain(M_PI_2, {-1.45, 1.45, -1.45, 1.45}, 0.12),
                         scherk_p, scherk_q,
                         "g follows the potential orientation; the mirrored graph "
                         "(g -> -g) is the member at -lambda");
}

Chart scherk_doubly_sheared(double lambda, double rho, double alpha) {
    ShearedParams sp{rho, alpha, std::cos(alpha), std::sin(alpha)};
    sp.check();
    std::ostringstream os;
    os << "scherk_doubly_sheared:lambda=" << lambda << ",rho=" << rho
       << ",alpha=" << alpha;
    Chart c = lambda_family(
        os.str(), "scherk_doubly_sheared", lambda, sheared_domain(sp),
        [sp](double x, double y) { return sheared_p(sp, x, y); },
        [sp](double x, double y) { return sheared_q(sp, x, y); },
        "central rhomboid piece; potential pinned so that q(0,0) = -arccos(cos 2a)/rho");
    c.meta.params["rho"] = rho;
    c.meta.params["alpha"] = alpha;
    return c;
}

Chart scherk_tower(double lambda) {
    return lambda_family(param_name("scherk_tower", lambda), "scherk_tower", lambda,
                         tower_domain(), tower_p, tower_q,
                         "g follows the potential orientation; the mirrored graph "
                         "(g -> -g) is the member at -lambda");
}

Chart scherk_tower_general(double lambda, double rho, double alpha) {
    ShearedParams sp{rho, alpha, std::cos(alpha), std::sin(alpha)};
    sp.check();
    std::ostringstream os;
    os << "scherk_tower_general:lambda=" << lambda << ",rho=" << rho
       << ",alpha=" << alpha;
    Chart c = lambda_family(
        os.str(), "scherk_tower_general", lambda, tower_general_domain(sp),
        [sp](double x, double y) { return tower_general_p(sp, x, y); },
        [sp](double x, double y) { return tower_general_q(sp, x, y); }, "");
    c.meta.params["rho"] = rho;
    c.meta.params["alpha"] = alpha;
    return c;
}

Chart lagrangian_scherk() {
    Chart c;
    c.name = "lagrangian_scherk";
    c.domain = square_domain(M_PI_2, {-1.3, 1.3, -1.3, 1.3}, 0.1);
    c.f_jet = [](double x, double y) { return asinh(tan(jx(x)) * cos(jy(y))); };
    c.g_jet = [](double x, double y) { return asinh(tan(jy(y)) * cos(jx(x))); };
    c.meta.family = "lagrangian_scherk";
    c.meta.note = "gradient graph of a potential solving det Hess = 1";
    return c;
}

// ---------------------------------------------------------------------------
// R^3 base graphs
// ---------------------------------------------------------------------------

namespace {

Chart r3_chart(std::string name, Domain domain, std::function<Jet2(double, double)> p,
               std::string note = "") {
    Chart c;
    c.name = name;
    c.domain = std::move(domain);
    c.f_jet = std::move(p);
    c.g_jet = zero_jet();
    c.meta.family = std::move(name);
    c.meta.note = std::move(note);
    return c;
}

}  // namespace

Chart helicoid_r3() { return r3_chart("helicoid_r3", helicoid_domain(), helicoid_p); }

Chart catenoid_r3() { return r3_chart("catenoid_r3", catenoid_domain(), catenoid_p); }

Chart catenoid_r3_mirror() {
    return r3_chart("catenoid_r3_mirror", catenoid_domain(),
                    [](double x, double y) { return -catenoid_p(x, y); },
                    "lower half; its potential carries the opposite sign");
}

Chart scherk_r3() {
    return r3_chart("scherk_r3", square_domain(M_PI_2, {-1.45, 1.45, -1.45, 1.45}, 0.12),
                    scherk_p);
}

Chart scherk_r3_mirror() {
    return r3_chart("scherk_r3_mirror",
                    square_domain(M_PI_2, {-1.45, 1.45, -1.45, 1.45}, 0.12),
                    [](double x, double y) { return -scherk_p(x, y); },
                    "reflected graph; its potential carries the opposite sign");
}

Chart scherk_tower_r3() { return r3_chart("scherk_tower_r3", tower_domain(), tower_p); }

Chart scherk_sheared_r3(double rho, double alpha) {
    ShearedParams sp{rho, alpha, std::cos(alpha), std::sin(alpha)};
    sp.check();
    std::ostringstream os;
    os << "scherk_sheared_r3:rho=" << rho << ",alpha=" << alpha;
    Chart c = r3_chart(os.str(), sheared_domain(sp),
                       [sp](double x, double y) { return sheared_p(sp, x, y); });
    c.meta.family = "scherk_sheared_r3";
    c.meta.params["rho"] = rho;
    c.meta.params["alpha"] = alpha;
    return c;
}

Chart scherk_tower_general_r3(double rho, double alpha) {
    ShearedParams sp{rho, alpha, std::cos(alpha), std::sin(alpha)};
    sp.check();
    std::ostringstream os;
    os << "scherk_tower_general_r3:rho=" << rho << ",alpha=" << alpha;
    Chart c = r3_chart(os.str(), tower_general_domain(sp),
                       [sp](double x, double y) { return tower_general_p(sp, x, y); });
    c.meta.family = "scherk_tower_general_r3";
    c.meta.params["rho"] = rho;
    c.meta.params["alpha"] = alpha;
    return c;
}

PotentialField closed_form_potential(const std::string& r3_family) {
    PotentialField f;
    f.source = r3_family;
    f.basepoint = {0.0, 0.0};
    if (r3_family == "helicoid_r3") {
        f.q_jet = [](double x, double y) { return 1.0 + helicoid_q(x, y); };
    } else if (r3_family == "catenoid_r3") {
        f.q_jet = catenoid_q;
    } else if (r3_family == "catenoid_r3_mirror") {
        f.q_jet = [](double x, double y) { return -catenoid_q(x, y); };
    } else if (r3_family == "scherk_r3") {
        f.q_jet = scherk_q;
    } else if (r3_family == "scherk_r3_mirror") {
        f.q_jet = [](double x, double y) { return -scherk_q(x, y); };
    } else if (r3_family == "scherk_tower_r3") {
        f.q_jet = tower_q;
    } else {
        throw ConfigError("closed_form_potential: no closed form registered for '" +
                          r3_family + "'");
    }
    return f;
}

// ---------------------------------------------------------------------------
// conformal harmonic patches
// ---------------------------------------------------------------------------

ConformalPatch make_patch_XN(int N) {
    if (N < 1) throw ConfigError("patch_XN: N must be >= 1");
    ConformalPatch p;
    {
        std::ostringstream os;
        os << "XN:" << N;
        p.name = os.str();
    }
    const double n = N;
    p.map = [n](double t, double th) -> std::array<double, 4> {
        return {std::sinh(t) * std::cos(th), std::sinh(t) * std::sin(th),
                std::cosh(n * t) * std::cos(n * th) / n,
                std::cosh(n * t) * std::sin(n * th) / n};
    };
    p.d_u = [n](double t, double th) -> std::array<double, 4> {
        return {std::cosh(t) * std::cos(th), std::cosh(t) * std::sin(th),
                std::sinh(n * t) * std::cos(n * th), std::sinh(n * t) * std::sin(n * th)};
    };
    p.d_v = [n](double t, double th) -> std::array<double, 4> {
        return {-std::sinh(t) * std::sin(th), std::sinh(t) * std::cos(th),
                -std::cosh(n * t) * std::sin(n * th), std::cosh(n * t) * std::cos(n * th)};
    };
    p.conformal_factor = [n](double t, double) {
        const double s = std::sinh(n * t);
        const double c = std::cosh(t);
        return c * c + s * s;
    };
    p.u_entire = true;
    p.v_periodic = true;
    return p;
}

ConformalPatch make_patch_F_plus(double lambda) {
    ConformalPatch p;
    p.name = param_name("Fplus", lambda);
    const double ch = std::cosh(lambda), sh = std::sinh(lambda);
    p.map = [ch, sh](double U, double V) -> std::array<double, 4> {
        return {std::cosh(U) * std::cos(V), U, ch * std::cosh(U) * std::sin(V),
                sh * std::sinh(U) * std::cos(V)};
    };
    p.d_u = [ch, sh](double U, double V) -> std::array<double, 4> {
        return {std::sinh(U) * std::cos(V), 1.0, ch * std::sinh(U) * std::sin(V),
                sh * std::cosh(U) * std::cos(V)};
    };
    p.d_v = [ch, sh](double U, double V) -> std::array<double, 4> {
        return {-std::cosh(U) * std::sin(V), 0.0, ch * std::cosh(U) * std::cos(V),
                -sh * std::sinh(U) * std::sin(V)};
    };
    p.conformal_factor = [ch, sh](double U, double V) {
        const double su = std::sinh(U), cu = std::cosh(U);
        const double cv = std::cos(V), sv = std::sin(V);
        return 1.0 + su * su * cv * cv + ch * ch * su * su * sv * sv +
               sh * sh * cu * cu * cv * cv;
    };
    p.u_entire = true;
    p.v_periodic = true;
    return p;
}

ConformalPatch make_patch_F_minus(double lambda) {
    ConformalPatch p;
    p.name = param_name("Fminus", lambda);
    const double ch = std::cosh(lambda), sh = std::sinh(lambda);
    p.map = [ch, sh](double U, double V) -> std::array<double, 4> {
        return {std::sinh(U) * std::cos(V), V, ch * std::sinh(U) * std::sin(V),
                sh * std::cosh(U) * std::cos(V)};
    };
    p.d_u = [ch, sh](double U, double V) -> std::array<double, 4> {
        return {std::cosh(U) * std::cos(V), 0.0, ch * std::cosh(U) * std::sin(V),
                sh * std::sinh(U) * std::cos(V)};
    };
    p.d_v = [ch, sh](double U, double V) -> std::array<double, 4> {
        return {-std::sinh(U) * std::sin(V), 1.0, ch * std::sinh(U) * std::cos(V),
                -sh * std::cosh(U) * std::sin(V)};
    };
    p.conformal_factor = [ch, sh](double U, double V) {
        const double su = std::sinh(U), cu = std::cosh(U);
        const double cv = std::cos(V), sv = std::sin(V);
        return cu * cu * cv * cv + ch * ch * cu * cu * sv * sv +
               sh * sh * su * su * cv * cv;
    };
    p.u_entire = true;
    p.v_entire = true;
    return p;
}

ConformalPatch make_flat_patch() {
    ConformalPatch p;
    p.name = "flat";
    p.map = [](double u, double v) -> std::array<double, 4> { return {u, v, 0.0, 0.0}; };
    p.d_u = [](double, double) -> std::array<double, 4> { return {1.0, 0.0, 0.0, 0.0}; };
    p.d_v = [](double, double) -> std::array<double, 4> { return {0.0, 1.0, 0.0, 0.0}; };
    p.conformal_factor = [](double, double) { return 1.0; };
    p.u_entire = true;
    p.v_entire = true;
    return p;
}

double gauss_curvature_conformal(const ConformalPatch& patch, double u, double v,
                                 double fd_step) {
    if (!patch.v_periodic && !patch.v_entire) {
        if (v < patch.v_lo + 2.0 * fd_step || v > patch.v_hi - 2.0 * fd_step)
            throw DomainError("gauss_curvature_conformal: v too close to the patch edge");
    }
    const double L0 = patch.conformal_factor(u, v);
    if (!(L0 > 0.0))
        throw DomainError("gauss_curvature_conformal: conformal factor must be positive");
    auto logL = [&](double a, double b) { return std::log(patch.conformal_factor(a, b)); };
    const double h = fd_step;
    const double lap =
        (logL(u + h, v) - 2.0 * logL(u, v) + logL(u - h, v)) / (h * h) +
        (logL(u, v + h) - 2.0 * logL(u, v) + logL(u, v - h)) / (h * h);
    return -lap / (2.0 * L0);
}

double total_curvature(const ConformalPatch& patch, double T, int n) {
    if (T <= 0.0) throw ConfigError("total_curvature: T must be > 0");
    if (n < 16) throw ConfigError("total_curvature: need n >= 16 nodes per axis");
    if (!patch.v_periodic)
        throw ConfigError("total_curvature: patch must be periodic in v");
    const QuadRule& rule = gauss_legendre(n);
    const double fd_step = 1e-4;
    double sum = 0.0, comp = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = T * rule.nodes[i];
        const double wu = T * rule.weights[i];
        for (int j = 0; j < n; ++j) {
            const double v = M_PI * (1.0 + rule.nodes[j]);
            const double wv = M_PI * rule.weights[j];
            const double K = gauss_curvature_conformal(patch, u, v, fd_step);
            const double term = wu * wv * K * patch.conformal_factor(u, v);
            const double t = sum + term;
            comp += (std::abs(sum) >= std::abs(term)) ? (sum - t) + term
                                                      : (term - t) + sum;
            sum = t;
        }
    }
    return sum + comp;
}

TotalCurvatureReport total_curvature_report(const ConformalPatch& patch, double T,
                                            int n) {
    TotalCurvatureReport r;
    r.T = T;
    r.n = n;
    r.value = total_curvature(patch, T, n);
    r.tail_estimate = std::abs(r.value - total_curvature(patch, 0.75 * T, n));
    return r;
}

// ---------------------------------------------------------------------------
// pointwise diagnostics
// ---------------------------------------------------------------------------

double monge_ampere_residual(const Jet2& h) {
    return h.dxx * h.dyy - h.dxy * h.dxy - 1.0;
}

Jet2 lagrangian_scherk_hessian(double x, double y) {
    const J hx = asinh(tan(jx(x)) * cos(jy(y)));
    const J hy = asinh(tan(jy(y)) * cos(jx(x)));
    Jet2 h;
    h.v = 0.0;  // potential is defined up to a constant
    h.dx = hx.v;
    h.dy = hy.v;
    h.dxx = hx.dx;
    h.dxy = hx.dy;
    h.dyy = hy.dy;
    return h;
}

ProbeReport singularity_probe(const Chart& chart, std::array<double, 2> center,
                              const std::vector<double>& radii) {
    if (radii.empty()) throw ConfigError("singularity_probe: need at least one radius");
    const double r_min = *std::min_element(radii.begin(), radii.end());

    const std::array<std::pair<std::string, std::array<double, 2>>, 4> rays = {{
        {"+x", {1.0, 0.0}},
        {"+y", {0.0, 1.0}},
        {"-x", {-1.0, 0.0}},
        {"-y", {0.0, -1.0}},
    }};

    ProbeReport rep;
    for (const auto& [label, dir] : rays) {
        // walk inward; the limit estimate is the innermost sample
        for (double r : radii) {
            chart.eval(center[0] + r * dir[0], center[1] + r * dir[1]);
        }
        auto [jf, jg] = chart.eval(center[0] + r_min * dir[0], center[1] + r_min * dir[1]);
        rep.rays.push_back({label, jf.v, jg.v});
    }
    for (std::size_t a = 0; a < rep.rays.size(); ++a) {
        for (std::size_t b = a + 1; b < rep.rays.size(); ++b) {
            rep.f_discrepancy = std::max(
                rep.f_discrepancy, std::abs(rep.rays[a].f_limit - rep.rays[b].f_limit));
            rep.g_discrepancy = std::max(
                rep.g_discrepancy, std::abs(rep.rays[a].g_limit - rep.rays[b].g_limit));
        }
    }
    rep.discrepancy = std::max(rep.f_discrepancy, rep.g_discrepancy);
    return rep;
}

}  // namespace mss4
