#pragma once

#include <string>
#include <vector>

#include "core/inclusion.hpp"
#include "core/weights.hpp"

namespace verlinde {

// The pie-slicing map: a su(m)_n weight to a su(n)_m weight (one
// representative of the dual center orbit).  Shifted-label sums m+n map
// to m+n.
affine_weight beta_map(const affine_weight& w, int n);

// The unique su(n)_m weight paired with (w, Lambda) in the decomposition of
// the level-1 su(mn) sector Lambda under su(m)_n x su(n)_m.  Requires
// nality(w) == Lambda mod m; throws pairing_empty_error otherwise.
affine_weight lr_pair(const affine_weight& w, int Lambda);

struct lr_entry {
  affine_weight lhs;   // su(m)_n weight
  int Lambda;          // level-1 su(mn) label
  affine_weight rhs;   // su(n)_m weight
  int twist;           // j with rhs = simple_current(beta(lhs), j)
};

// Full pairing table over all (weight, Lambda) with matching nality.
std::vector<lr_entry> levelrank_table(int m, int n);

// The inclusion su(m)_n x su(n)_m in su(mn)_1 with b built from the pairing.
conformal_inclusion build_product_inclusion(int m, int n);

// The su(n+2)_n weights branching from the ambient vacuum in
// su(n+2)_n in su((n+1)(n+2)/2)_1, built from the sign-vector enumeration.
std::vector<affine_weight> ll_subsectors(int n);

struct phi_result {
  std::vector<std::pair<affine_weight, affine_weight>> map;  // lhs su(n+2)_n, rhs su(n)_{n+2}
  double max_dim_dev = 0;
};

// The duality bijection between the vacuum subsector sets of
// su(n+2)_n in su((n+1)(n+2)/2)_1 and su(n)_{n+2} in su(n(n+1)/2)_1.
// Throws bijection_failure_error if the image does not match.
phi_result phi_map(int n);

struct th42_report {
  bool success = false;
  int subsectors = 0;
  int closure_a = 0, closure_b = 0;
  long long triples_compared = 0;
  long long mismatches = 0;
  std::string detail;
};

// Extends phi over the fusion closures of both subsector sets and compares
// all structure constants.
th42_report verify_th42(int n);

}  // namespace verlinde
