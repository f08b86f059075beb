#include "mss4/registry.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "mss4/errors.hpp"
#include "mss4/sampling.hpp"

namespace mss4 {

double radical_inverse(std::uint64_t i, std::uint32_t base) {
    double inv = 1.0 / base, scale = inv, value = 0.0;
    while (i > 0) {
        value += (i % base) * scale;
        i /= base;
        scale *= inv;
    }
    return value;
}

std::vector<std::array<double, 2>> halton_in_chart(const Chart& chart, int n,
                                                   std::uint64_t seed, double min_margin) {
    const SampleBox& box = chart.domain.box;
    const double need = std::max(chart.domain.sample_margin, min_margin);
    std::vector<std::array<double, 2>> pts;
    pts.reserve(n);
    const std::uint64_t max_tries = static_cast<std::uint64_t>(n) * 4000 + 1000;
    for (std::uint64_t k = 0; k < max_tries && pts.size() < static_cast<std::size_t>(n);
         ++k) {
        const std::uint64_t i = seed + k;
        const double x = box.xmin + (box.xmax - box.xmin) * radical_inverse(i, 2);
        const double y = box.ymin + (box.ymax - box.ymin) * radical_inverse(i, 3);
        if (chart.contains(x, y) && chart.margin(x, y) >= need) pts.push_back({x, y});
    }
    if (pts.size() < static_cast<std::size_t>(n))
        throw ConfigError("halton_in_chart: sample box of '" + chart.name +
                          "' rejects too many points");
    return pts;
}

namespace {

struct FamilySpec {
    std::string key_pattern;
    std::string brief;
    std::string principal;  // parameter a bare ":value" binds to
    std::map<std::string, double> defaults;
    std::function<Chart(const std::map<std::string, double>&)> build;
};

double arg(const std::map<std::string, double>& m, const std::string& k) {
    return m.at(k);
}

const std::vector<std::pair<std::string, FamilySpec>>& family_table() {
    static const std::vector<std::pair<std::string, FamilySpec>> table = {
        {"flat_plane",
         {"flat_plane", "flat reference plane f = g = 0", "", {},
          [](const auto&) { return flat_plane(); }}},
        {"paraboloid_test",
         {"paraboloid_test", "non-minimal control: f = x^2 + y^2", "", {},
          [](const auto&) { return paraboloid_test(); }}},
        {"holomorphic_sq",
         {"holomorphic_sq", "holomorphic graph of zeta^2", "", {},
          [](const auto&) { return holomorphic_sq(); }}},
        {"sigmaN",
         {"sigmaN:<N>",
          "punctured-plane graph with Chebyshev weight; non-removable singularity",
          "N", {{"N", 1.0}},
          [](const auto& m) { return sigma_N(static_cast<int>(arg(m, "N"))); }}},
        {"sigma_alpha_beta",
         {"sigma_alpha_beta:alpha=<a>,beta=<b>",
          "two-parameter family joining catenoid, helicoid and complex log graph",
          "", {{"alpha", 1.0}, {"beta", 1.0}},
          [](const auto& m) { return sigma_alpha_beta(arg(m, "alpha"), arg(m, "beta")); }}},
        {"helicoid_deform",
         {"helicoid_deform:lambda=<l>",
          "helicoid deformation, foliated by lines and hyperbolas", "lambda",
          {{"lambda", 1.0}},
          [](const auto& m) { return helicoid_deform(arg(m, "lambda")); }}},
        {"catenoid_deform",
         {"catenoid_deform:lambda=<l>", "catenoid deformation, foliated by ellipses",
          "lambda", {{"lambda", 1.0}},
          [](const auto& m) { return catenoid_deform(arg(m, "lambda")); }}},
        {"scherk_doubly",
         {"scherk_doubly:lambda=<l>", "doubly periodic graph deformation", "lambda",
          {{"lambda", 1.0}},
          [](const auto& m) { return scherk_doubly(arg(m, "lambda")); }}},
        {"scherk_doubly_sheared",
         {"scherk_doubly_sheared:lambda=<l>,rho=<r>,alpha=<a>",
          "sheared doubly periodic graph deformation over a rhomboid", "lambda",
          {{"lambda", 0.7}, {"rho", 1.5}, {"alpha", M_PI / 3.0}},
          [](const auto& m) {
              return scherk_doubly_sheared(arg(m, "lambda"), arg(m, "rho"),
                                           arg(m, "alpha"));
          }}},
        {"scherk_tower",
         {"scherk_tower:lambda=<l>", "saddle-tower graph deformation", "lambda",
          {{"lambda", 1.0}},
          [](const auto& m) { return scherk_tower(arg(m, "lambda")); }}},
        {"scherk_tower_general",
         {"scherk_tower_general:lambda=<l>,rho=<r>,alpha=<a>",
          "generalized tower deformation", "lambda",
          {{"lambda", 0.5}, {"rho", 1.2}, {"alpha", M_PI / 3.0}},
          [](const auto& m) {
              return scherk_tower_general(arg(m, "lambda"), arg(m, "rho"),
                                          arg(m, "alpha"));
          }}},
        {"lagrangian_scherk",
         {"lagrangian_scherk", "gradient graph whose potential solves det Hess = 1",
          "", {},
          [](const auto&) { return lagrangian_scherk(); }}},
        {"helicoid_r3",
         {"helicoid_r3", "helicoid graph x tan y (g = 0)", "", {},
          [](const auto&) { return helicoid_r3(); }}},
        {"catenoid_r3",
         {"catenoid_r3", "upper catenoid graph sqrt(cosh^2 y - x^2) (g = 0)", "", {},
          [](const auto&) { return catenoid_r3(); }}},
        {"catenoid_r3_mirror",
         {"catenoid_r3_mirror", "lower catenoid graph (g = 0)", "", {},
          [](const auto&) { return catenoid_r3_mirror(); }}},
        {"scherk_r3",
         {"scherk_r3", "doubly periodic graph ln(cos x / cos y) (g = 0)", "", {},
          [](const auto&) { return scherk_r3(); }}},
        {"scherk_r3_mirror",
         {"scherk_r3_mirror", "reflected doubly periodic graph (g = 0)", "", {},
          [](const auto&) { return scherk_r3_mirror(); }}},
        {"scherk_tower_r3",
         {"scherk_tower_r3", "saddle tower graph arcsin(sinh x sinh y) (g = 0)", "", {},
          [](const auto&) { return scherk_tower_r3(); }}},
        {"scherk_sheared_r3",
         {"scherk_sheared_r3:rho=<r>,alpha=<a>", "sheared doubly periodic graph (g = 0)",
          "", {{"rho", 1.5}, {"alpha", M_PI / 3.0}},
          [](const auto& m) { return scherk_sheared_r3(arg(m, "rho"), arg(m, "alpha")); }}},
        {"scherk_tower_general_r3",
         {"scherk_tower_general_r3:rho=<r>,alpha=<a>", "generalized tower graph (g = 0)",
          "", {{"rho", 1.2}, {"alpha", M_PI / 3.0}},
          [](const auto& m) {
              return scherk_tower_general_r3(arg(m, "rho"), arg(m, "alpha"));
          }}},
    };
    return table;
}

const FamilySpec& find_family(const std::string& name) {
    for (const auto& [fam, spec] : family_table())
        if (fam == name) return spec;
    throw ConfigError("unknown chart family '" + name + "'");
}

std::map<std::string, double> parse_params(const std::string& text,
                                           const std::string& principal,
                                           const std::string& key) {
    std::map<std::string, double> params;
    std::stringstream rest(text);
    std::string item;
    while (std::getline(rest, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        try {
            if (eq == std::string::npos) {
                if (principal.empty())
                    throw ConfigError("key '" + key + "' takes no positional parameter");
                params[principal] = std::stod(item);
            } else {
                params[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
            }
        } catch (const std::invalid_argument&) {
            throw ConfigError("cannot parse parameter '" + item + "' in key '" + key + "'");
        }
    }
    return params;
}

}  // namespace

std::pair<std::string, std::map<std::string, double>> parse_chart_key(
    const std::string& key) {
    const auto colon = key.find(':');
    std::string family = key.substr(0, colon);
    if (colon == std::string::npos) return {family, {}};
    const FamilySpec& spec = find_family(family);
    return {family, parse_params(key.substr(colon + 1), spec.principal, key)};
}

Chart make_chart(const std::string& family, std::map<std::string, double> params) {
    const FamilySpec& spec = find_family(family);
    std::map<std::string, double> full = spec.defaults;
    for (const auto& [k, v] : params) {
        if (spec.defaults.find(k) == spec.defaults.end())
            throw ConfigError("family '" + family + "' has no parameter '" + k + "'");
        full[k] = v;
    }
    return spec.build(full);
}

Chart make_chart(const std::string& key) {
    auto [family, params] = parse_chart_key(key);
    return make_chart(family, std::move(params));
}

ConformalPatch make_patch(const std::string& key) {
    const auto colon = key.find(':');
    const std::string family = key.substr(0, colon);
    const std::string principal = family == "XN" ? "N" : "lambda";
    const auto params = colon == std::string::npos
                            ? std::map<std::string, double>{}
                            : parse_params(key.substr(colon + 1), principal, key);
    auto get = [&](const char* name, double dflt) {
        auto it = params.find(name);
        return it == params.end() ? dflt : it->second;
    };
    if (family == "XN") return make_patch_XN(static_cast<int>(get("N", 1.0)));
    if (family == "Fplus") return make_patch_F_plus(get("lambda", 0.5));
    if (family == "Fminus") return make_patch_F_minus(get("lambda", 0.5));
    if (family == "flat") return make_flat_patch();
    throw ConfigError("unknown patch key '" + key + "'");
}

std::vector<RegistryEntry> chart_registry() {
    std::vector<RegistryEntry> out;
    for (const auto& [fam, spec] : family_table())
        out.push_back({fam, spec.key_pattern, spec.brief});
    return out;
}

}  // namespace mss4
