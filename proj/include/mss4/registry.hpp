#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mss4/catalog.hpp"
#include "mss4/chart.hpp"

namespace mss4 {

/// Build a chart from a registry key such as "sigmaN:2",
/// "scherk_doubly:lambda=0.7" or "sigma_alpha_beta:alpha=1,beta=1".
/// A bare value after ':' binds to the family's principal parameter.
/// Unknown keys or parameters raise ConfigError.
Chart make_chart(const std::string& key);

/// Same, from a family name plus explicit parameters (missing ones default).
Chart make_chart(const std::string& family, std::map<std::string, double> params);

/// Conformal patch from a key: "XN:2", "Fplus:lambda=0.5",
/// "Fminus:lambda=0.7", "flat".
ConformalPatch make_patch(const std::string& key);

struct RegistryEntry {
    std::string family;
    std::string key_pattern;  // e.g. "sigmaN:<N>"
    std::string brief;
};

/// All registered chart families, stable order.
std::vector<RegistryEntry> chart_registry();

/// Parse "name" / "name:v" / "name:k=v,k=v" into family + parameter map.
std::pair<std::string, std::map<std::string, double>> parse_chart_key(
    const std::string& key);

}  // namespace mss4
