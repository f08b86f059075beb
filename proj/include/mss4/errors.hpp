#pragma once

#include <stdexcept>
#include <string>

namespace mss4 {

/// Evaluation outside a chart's domain, or too close to its boundary for a
/// finite-difference stencil.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Bad arguments: unknown chart key, out-of-range parameter, mu = 0, ...
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A staircase integration path leaves the chart's domain.
class PathError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Potential integration is ill-posed: the domain is not simply connected,
/// or the two staircase orders disagree beyond tolerance.
class MonodromyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace mss4
