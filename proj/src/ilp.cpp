#include "bded/ilp.hpp"

#include <algorithm>
#include <queue>

#include "bded/errors.hpp"

namespace bded {

namespace {

using Int = __int128;

long long to_ll(Int v) {
  if (v > Int(9'000'000'000'000'000'000LL) || v < Int(-9'000'000'000'000'000'000LL))
    throw Error("ilp: value out of 64-bit range");
  return static_cast<long long>(v);
}

long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

long long ceil_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  if (r != 0 && ((r < 0) == (b < 0))) ++q;
  return q;
}

}  // namespace

int IlpModel::add_variable(std::string name, long long lower, long long upper) {
  if (lower > upper) throw InvalidArgument("ilp: empty variable domain for " + name);
  names_.push_back(std::move(name));
  lower_.push_back(lower);
  upper_.push_back(upper);
  return static_cast<int>(lower_.size()) - 1;
}

void IlpModel::add_constraint(std::vector<std::pair<int, long long>> terms, Relation relation,
                              const Rational& rhs) {
  for (const auto& [v, c] : terms) {
    (void)c;
    if (v < 0 || v >= variable_count()) throw InvalidArgument("ilp: constraint on unknown variable");
  }
  long long den = to_ll(rhs.den());
  for (auto& [v, c] : terms) c = to_ll(Rational::checked_mul(c, den));
  constraints_.push_back({std::move(terms), relation, to_ll(rhs.num())});
}

void IlpModel::set_objective(std::vector<std::pair<int, long long>> terms) {
  for (const auto& [v, c] : terms) {
    (void)c;
    if (v < 0 || v >= variable_count()) throw InvalidArgument("ilp: objective on unknown variable");
  }
  objective_ = std::move(terms);
}

namespace {

struct Bounds {
  std::vector<long long> lo, hi;
};

struct Node {
  int parent = -1;   // index into the node arena
  int var = -1;      // branched variable; -1 for the root
  long long lo = 0, hi = 0;
  Int bound = 0;     // objective lower bound valid for the subtree
  long long seq = 0;
};

struct Search {
  const IlpModel& model;
  const LazySeparator& separator;
  const Budget& budget;
  std::vector<IlpModel::Constraint> cuts;
  std::vector<Node> arena;

  Search(const IlpModel& m, const LazySeparator& sep, const Budget& b)
      : model(m), separator(sep), budget(b) {}

  Bounds bounds_at(int node) const {
    Bounds b;
    b.lo.assign(model.variable_count(), 0);
    b.hi.assign(model.variable_count(), 0);
    for (int v = 0; v < model.variable_count(); ++v) {
      b.lo[v] = model.lower(v);
      b.hi[v] = model.upper(v);
    }
    std::vector<int> chain;
    for (int cur = node; cur != -1; cur = arena[cur].parent)
      if (arena[cur].var != -1) chain.push_back(cur);
    // apply ancestor tightenings root-first; they only ever shrink
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      const Node& nd = arena[*it];
      b.lo[nd.var] = std::max(b.lo[nd.var], nd.lo);
      b.hi[nd.var] = std::min(b.hi[nd.var], nd.hi);
    }
    return b;
  }

  Int objective_bound(const Bounds& b) const {
    Int total = 0;
    for (const auto& [v, c] : model.objective())
      total += std::min(Int(c) * b.lo[v], Int(c) * b.hi[v]);
    return total;
  }

  // Integer bounds propagation to a fixpoint. Returns false on an empty
  // domain or a constraint that cannot be satisfied.
  bool propagate(Bounds& b) const {
    auto apply_leq = [&](const IlpModel::Constraint& c, bool flip) -> int {
      // flip=true treats the constraint as -lhs <= -rhs (the >= half of Eq)
      Int min_sum = 0;
      for (const auto& [v, raw] : c.terms) {
        Int coeff = flip ? -Int(raw) : Int(raw);
        min_sum += coeff > 0 ? coeff * b.lo[v] : coeff * b.hi[v];
      }
      Int rhs = flip ? -Int(c.rhs) : Int(c.rhs);
      if (min_sum > rhs) return -1;
      int changed = 0;
      for (const auto& [v, raw] : c.terms) {
        Int coeff = flip ? -Int(raw) : Int(raw);
        if (coeff == 0) continue;
        Int own_min = coeff > 0 ? coeff * b.lo[v] : coeff * b.hi[v];
        Int slack = rhs - (min_sum - own_min);
        if (coeff > 0) {
          long long limit = floor_div(to_ll(slack), to_ll(coeff));
          if (limit < b.hi[v]) {
            b.hi[v] = limit;
            ++changed;
          }
        } else {
          long long limit = ceil_div(to_ll(slack), to_ll(coeff));
          if (limit > b.lo[v]) {
            b.lo[v] = limit;
            ++changed;
          }
        }
        if (b.lo[v] > b.hi[v]) return -1;
        min_sum = min_sum - own_min + (coeff > 0 ? coeff * b.lo[v] : coeff * b.hi[v]);
      }
      return changed;
    };
    bool again = true;
    while (again) {
      again = false;
      for (const auto* pool : {&model.constraints(), &cuts}) {
        for (const auto& c : *pool) {
          int r = apply_leq(c, false);
          if (r < 0) return false;
          if (r > 0) again = true;
          if (c.relation == IlpModel::Relation::Eq) {
            r = apply_leq(c, true);
            if (r < 0) return false;
            if (r > 0) again = true;
          }
        }
      }
    }
    return true;
  }

  bool feasible(const Assignment& x) const {
    for (const auto* pool : {&model.constraints(), &cuts}) {
      for (const auto& c : *pool) {
        Int lhs = 0;
        for (const auto& [v, coeff] : c.terms) lhs += Int(coeff) * x[v];
        if (c.relation == IlpModel::Relation::Eq ? lhs != c.rhs : lhs > c.rhs) return false;
      }
    }
    return true;
  }

  Int objective_value(const Assignment& x) const {
    Int total = 0;
    for (const auto& [v, c] : model.objective()) total += Int(c) * x[v];
    return total;
  }

  std::optional<IlpSolution> run() {
    struct QueueEntry {
      Int bound;
      long long seq;
      int node;
      bool operator>(const QueueEntry& o) const {
        return bound != o.bound ? bound > o.bound : seq > o.seq;
      }
    };
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<QueueEntry>> queue;
    long long seq = 0;
    arena.push_back({});
    queue.push({objective_bound(bounds_at(0)), seq++, 0});

    std::optional<IlpSolution> incumbent;
    long long pops = 0;
    while (!queue.empty()) {
      auto entry = queue.top();
      queue.pop();
      if (++pops > budget.ilp_nodes) throw BudgetExceeded("ilp: node limit reached");
      if (incumbent && entry.bound >= incumbent->objective) continue;
      Bounds b = bounds_at(entry.node);
      if (!propagate(b)) continue;
      Int bound = objective_bound(b);
      if (incumbent && bound >= incumbent->objective) continue;
      int branch_var = -1;
      for (int v = 0; v < model.variable_count(); ++v)
        if (b.lo[v] < b.hi[v]) {
          branch_var = v;
          break;
        }
      if (branch_var == -1) {
        Assignment x(b.lo.begin(), b.lo.end());
        if (!feasible(x)) continue;
        if (separator) {
          if (auto cut = separator(x)) {
            Int lhs = 0;
            for (const auto& [v, coeff] : cut->terms) lhs += Int(coeff) * x[v];
            bool violated = cut->relation == IlpModel::Relation::Eq ? lhs != cut->rhs : lhs > cut->rhs;
            if (!violated) throw Error("ilp: separator returned a non-violated constraint");
            cuts.push_back(std::move(*cut));
            continue;
          }
        }
        Int value = objective_value(x);
        if (!incumbent || value < incumbent->objective)
          incumbent = IlpSolution{std::move(x), to_ll(value)};
        continue;
      }
      long long mid = b.lo[branch_var] + (b.hi[branch_var] - b.lo[branch_var]) / 2;
      for (int side = 0; side < 2; ++side) {
        Node child;
        child.parent = entry.node;
        child.var = branch_var;
        child.lo = side == 0 ? b.lo[branch_var] : mid + 1;
        child.hi = side == 0 ? mid : b.hi[branch_var];
        // cheap child key: parent bound with the branched variable's
        // objective contribution recomputed over the shrunken range
        Int child_bound = bound;
        for (const auto& [v, c] : model.objective()) {
          if (v != branch_var) continue;
          child_bound -= std::min(Int(c) * b.lo[v], Int(c) * b.hi[v]);
          child_bound += std::min(Int(c) * child.lo, Int(c) * child.hi);
        }
        child.seq = seq;
        arena.push_back(child);
        queue.push({child_bound, seq++, static_cast<int>(arena.size()) - 1});
      }
    }
    return incumbent;
  }
};

}  // namespace

std::optional<IlpSolution> solve_ilp(const IlpModel& model, const LazySeparator& separator,
                                     const Budget& budget) {
  Search search(model, separator, budget);
  return search.run();
}

}  // namespace bded
