#include "mss4/chart.hpp"

#include <sstream>

namespace mss4 {

namespace {

[[noreturn]] void outside(const std::string& name, double x, double y, const char* what) {
    std::ostringstream os;
    os << "chart '" << name << "': point (" << x << ", " << y << ") " << what;
    throw DomainError(os.str());
}

}  // namespace

std::pair<Jet2, Jet2> Chart::eval(double x, double y) const {
    if (!domain.contains(x, y)) outside(name, x, y, "is outside the domain");
    Jet2 jf = f_jet(x, y);
    Jet2 jg = g_jet(x, y);
    if (!jf.finite() || !jg.finite())
        outside(name, x, y, "produced a non-finite jet");
    return {jf, jg};
}

std::pair<Jet2, Jet2> Chart::eval_interior(double x, double y, double min_margin) const {
    if (!domain.contains(x, y) || domain.margin(x, y) < min_margin)
        outside(name, x, y, "violates the interior margin");
    return eval(x, y);
}

std::pair<Jet2, Jet2> fd_chart_jets(const Chart& chart, double x, double y) {
    auto fv = [&](double u, double v) { return chart.f_jet(u, v).v; };
    auto gv = [&](double u, double v) { return chart.g_jet(u, v).v; };
    return {fd_jet2(fv, x, y), fd_jet2(gv, x, y)};
}

}  // namespace mss4
