#pragma once

#include <cstdlib>

namespace bded {

/// Work limits for the enumeration-based backends. BDED_BUDGET (a single
/// integer) overrides every cap at once.
struct Budget {
  long long brute_candidates = 1LL << 23;  // subset enumeration cap
  long long ilp_nodes = 500000;            // branch-and-bound node cap
  long long enumeration_cap = 1LL << 23;   // twin-class candidate cap
  int max_cover_for_fpt = 14;              // refuse larger covers outright
  int brute_max_n = 20;

  static Budget from_env() {
    Budget b;
    if (const char* raw = std::getenv("BDED_BUDGET")) {
      char* end = nullptr;
      long long value = std::strtoll(raw, &end, 10);
      if (end != raw && value > 0) {
        b.brute_candidates = value;
        b.ilp_nodes = value;
        b.enumeration_cap = value;
      }
    }
    return b;
  }
};

}  // namespace bded
