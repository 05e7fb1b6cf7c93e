#pragma once

namespace verlinde {

// Process-wide knobs, set once at startup (CLI flags --tol / --max-labels).
struct config {
  double tol = 1e-9;            // modular axiom tolerance
  double int_tol = 1e-6;        // integer rounding threshold for Verlinde sums
  int max_labels = 1000;        // resource guard on primary counts
  long long search_budget = 100'000'000;
};

config& global_config();

}  // namespace verlinde
