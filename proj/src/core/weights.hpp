#pragma once

#include <compare>
#include <string>
#include <vector>

#include "core/rational.hpp"

namespace verlinde {

// Dominant highest weight of affine su(N) at level k.  Canonical form is the
// Dynkin label vector (a_1..a_{N-1}); partition and shifted views are
// conversions.
class affine_weight {
 public:
  affine_weight(int N, int level, std::vector<int> dynkin);

  int rank_plus_one() const { return N_; }   // the N of su(N)
  int level() const { return k_; }
  const std::vector<int>& dynkin() const { return a_; }

  // lambda_1 >= ... >= lambda_{N-1} >= lambda_N = 0; lambda_1 <= k.
  std::vector<int> partition() const;
  // k_i = a_i + 1 for i = 0..N-1 with a_0 = k - sum a_i; entries >= 1, sum k+N.
  std::vector<int> shifted() const;
  // lambda_a + N - a for a = 1..N; strictly decreasing, last entry 0.
  std::vector<int> shifted_partition() const;

  int boxes() const;                // |lambda| = sum of partition entries
  bool is_vacuum() const;

  auto operator<=>(const affine_weight&) const = default;

  std::string to_string() const;          // partition form "[2,1]"
  std::string to_string_dynkin() const;   // "d[1,1]"

 private:
  int N_, k_;
  std::vector<int> a_;
};

affine_weight weight_from_partition(int N, int level, const std::vector<int>& partition);

// All dominant weights at level k, lexicographic on Dynkin labels
// (vacuum first); size is binomial(N-1+k, N-1).
std::vector<affine_weight> enumerate_weights(int N, int level);

// sum_i i*a_i mod N: the congruence class (center charge) of the weight.
int nality(const affine_weight& w);

// Rotate the extended Dynkin labels (a_0..a_{N-1}) by j positions.
affine_weight simple_current(const affine_weight& w, int j);

affine_weight conjugate(const affine_weight& w);

// h = (lambda, lambda + 2 rho) / (2 (k + N)), highest root normalized to
// squared length 2.  Exact.
rat conformal_weight(const affine_weight& w);

// k (N^2 - 1) / (k + N), exact.
rat central_charge_suNk(int N, int level);

}  // namespace verlinde
