#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mss4/chart.hpp"

namespace mss4 {

/// Radical-inverse (van der Corput) value of index i in the given base.
double radical_inverse(std::uint64_t i, std::uint32_t base);

/// Halton (2,3) points mapped into the chart's sample box, rejecting points
/// whose interior margin falls below max(chart sample margin, min_margin).
/// `seed` offsets the start index of the deterministic sequence.
std::vector<std::array<double, 2>> halton_in_chart(const Chart& chart, int n,
                                                   std::uint64_t seed = 1,
                                                   double min_margin = 0.0);

}  // namespace mss4
