#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "mss4/errors.hpp"
#include "mss4/jet.hpp"

namespace mss4 {

/// Axis-aligned rectangle used as the recommended sampling window of a chart.
struct SampleBox {
    double xmin = -1.0, xmax = 1.0;
    double ymin = -1.0, ymax = 1.0;
};

/// Open planar domain with a strict-interior margin function.
///
/// `margin(x, y)` is positive inside the domain, tends to zero toward the
/// boundary and scales like a distance; finite-difference operations require
/// margin >= 2 * step before touching the chart.
struct Domain {
    std::function<bool(double, double)> contains;
    std::function<double(double, double)> margin;
    bool simply_connected = true;
    SampleBox box;
    double sample_margin = 0.05;  // margin enforced when drawing samples

    static Domain whole_plane(SampleBox box = {}) {
        return Domain{[](double, double) { return true; },
                      [](double, double) { return 1e100; },
                      true, box, 0.0};
    }
};

struct ChartMeta {
    std::string family;                   // registry family name
    std::map<std::string, double> params; // named constructor parameters
    std::optional<double> mu;             // first-order system coefficient, when one applies
    std::string note;                     // human remark (orientation conventions etc.)
};

/// A graph surface in R^4 given by a named pair (f, g) of height-function
/// jet evaluators over a planar domain. R^3 graphs set g identically zero.
struct Chart {
    std::string name;
    Domain domain;
    std::function<Jet2(double, double)> f_jet;
    std::function<Jet2(double, double)> g_jet;
    ChartMeta meta;

    bool contains(double x, double y) const { return domain.contains(x, y); }
    double margin(double x, double y) const { return domain.margin(x, y); }

    /// Evaluate both height jets; throws DomainError outside the domain.
    std::pair<Jet2, Jet2> eval(double x, double y) const;

    /// Same with an explicit interior margin requirement (for FD stencils).
    std::pair<Jet2, Jet2> eval_interior(double x, double y, double min_margin) const;
};

/// Finite-difference jets of the chart's height values — the independent
/// derivative route used to cross-check hand-coded jets.
std::pair<Jet2, Jet2> fd_chart_jets(const Chart& chart, double x, double y);

}  // namespace mss4
