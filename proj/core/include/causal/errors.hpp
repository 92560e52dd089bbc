#ifndef CAUSAL_ERRORS_HPP
#define CAUSAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace causal {

// Pre/post-selection pair on which the requested quantity is undefined
// (vanishing overlap, vanishing ABL denominator, ...).
struct SelectionError : std::domain_error {
  explicit SelectionError(const std::string& what) : std::domain_error(what) {}
};

// Zero overlap between the effective forward and backward states: weak
// values and Gamma builders divide by it.
struct UndefinedWeakValueError : SelectionError {
  explicit UndefinedWeakValueError(const std::string& what) : SelectionError(what) {}
};

// ABL denominator (or a symmetrized overlap) vanished.
struct DegenerateSelectionError : SelectionError {
  explicit DegenerateSelectionError(const std::string& what) : SelectionError(what) {}
};

// A diagonal population is exactly zero, the effective beta diverges.
struct ThermalPoleError : std::domain_error {
  explicit ThermalPoleError(const std::string& what) : std::domain_error(what) {}
};

// No photon survived post-selection, nothing to estimate from.
struct InsufficientStatisticsError : std::runtime_error {
  explicit InsufficientStatisticsError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace causal

#endif
