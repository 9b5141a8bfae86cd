#pragma once

#include <stdexcept>
#include <string>

namespace bded {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input that violates a documented precondition (malformed families,
// non-cubic inputs, improper colorings, invalid covers, non-forests, ...).
struct InvalidArgument : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

// The requested target density lies outside the intervals a solver handles.
struct UnsupportedDensity : Error {
  using Error::Error;
};

// No exact backend applies to the instance within the configured budget.
struct NoApplicableSolver : Error {
  using Error::Error;
};

// An enumeration guard was exceeded before the search even started.
struct TooLarge : Error {
  using Error::Error;
};

// A configurable work limit (nodes, candidates) was hit mid-search.
struct BudgetExceeded : Error {
  using Error::Error;
};

// A self-verifying construction failed its own check.
struct ConstructionFailed : Error {
  using Error::Error;
};

// The requested density cannot be realized by a balanced graph.
struct UnrealizableDensity : Error {
  using Error::Error;
};

}  // namespace bded
