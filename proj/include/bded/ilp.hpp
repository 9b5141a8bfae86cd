#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bded/budget.hpp"
#include "bded/rational.hpp"

namespace bded {

/// Bounded-variable integer linear program, minimization. Constraints are
/// stored with integer coefficients; rational right-hand sides are scaled
/// away at insertion time.
class IlpModel {
 public:
  enum class Relation { LessEq, Eq };

  struct Constraint {
    std::vector<std::pair<int, long long>> terms;  // (variable, coefficient)
    Relation relation = Relation::LessEq;
    long long rhs = 0;
  };

  /// Returns the variable index. Bounds must be finite with lower <= upper.
  int add_variable(std::string name, long long lower, long long upper);
  /// sum(coeff * var) relation rhs. Rational rhs is cleared by scaling.
  void add_constraint(std::vector<std::pair<int, long long>> terms, Relation relation,
                      const Rational& rhs);
  /// Objective term list; unspecified variables contribute zero.
  void set_objective(std::vector<std::pair<int, long long>> terms);

  int variable_count() const { return static_cast<int>(lower_.size()); }
  const std::string& variable_name(int v) const { return names_[v]; }
  long long lower(int v) const { return lower_[v]; }
  long long upper(int v) const { return upper_[v]; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<std::pair<int, long long>>& objective() const { return objective_; }

 private:
  std::vector<std::string> names_;
  std::vector<long long> lower_, upper_;
  std::vector<Constraint> constraints_;
  std::vector<std::pair<int, long long>> objective_;
};

using Assignment = std::vector<long long>;

/// Given an integer candidate, returns a violated constraint that every
/// true solution satisfies, or nothing when the candidate is acceptable.
using LazySeparator = std::function<std::optional<IlpModel::Constraint>(const Assignment&)>;

struct IlpSolution {
  Assignment values;
  long long objective = 0;
};

/// Best-first branch and bound. Bounds come from per-variable extreme
/// contributions plus integer bounds propagation; no LP relaxation.
/// Throws BudgetExceeded when the node limit is hit.
std::optional<IlpSolution> solve_ilp(const IlpModel& model, const LazySeparator& separator = {},
                                     const Budget& budget = {});

}  // namespace bded
