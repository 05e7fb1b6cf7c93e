#pragma once

#include <complex>
#include <string>
#include <vector>

#include "core/fusion.hpp"
#include "core/modular.hpp"

namespace verlinde {

// A conformal inclusion G_k in H_1 with its nonnegative integer branching
// matrix b, indexed (row: ambient label, column: sub label).
struct conformal_inclusion {
  std::string name;
  modular_ptr sub;
  modular_ptr amb;
  int_matrix b;
};

struct branch_check {
  bool vacuum_ok = false;           // b_{1,1} = 1 and vacuum in no other row
  double s_residual = 0;            // max |S^H b - b S^G|
  std::vector<std::pair<int, int>> h_failures;  // (i, lambda) with nonintegral h_i - h_lambda
  bool conj_symmetric = false;      // b_{i,lam} == b_{ibar, lambar}
  double row_dim_dev = 0;           // conj-related rows: |sum b d - sum b d|
  bool pass(double tol = 1e-8) const {
    return vacuum_ok && s_residual < tol && h_failures.empty() && conj_symmetric &&
           row_dim_dev < tol;
  }
};

branch_check verify_branching(const conformal_inclusion& inc);

// All nonnegative-integer matrices satisfying the inclusion invariants,
// in lexicographic order.  Throws search_budget_error if the integer search
// exceeds the configured node budget.
std::vector<int_matrix> solve_branching(const modular_ptr& sub, const modular_ptr& amb);

// Named inclusions: su3_9_in_e6, su3_3_in_so8, su4_2_in_su6, series_a(n),
// series_b(n), product(m,n).  Cached; every returned inclusion passes
// verify_branching.
conformal_inclusion builtin_inclusion(const std::string& name);

struct kw_violation {
  int i, lam, j, mu;                // ambient, sub, ambient, sub
  std::complex<double> value;       // S^G_{lam,mu} * conj(S^H_{ij})
};

struct kw_scan_result {
  std::vector<kw_violation> violations;
  long long pairs_checked = 0;
};

// Tests S^G_{lam mu} conj(S^H_{ij}) >= 0 over all quadruples with
// b_{i lam} b_{j mu} > 0.  Empty result means the hypothesis holds here.
kw_scan_result kw_scan(const conformal_inclusion& inc, double tol = 1e-9);

struct kw_inequality_report {
  long long triples = 0;
  long long failures = 0;
  long long strict = 0;             // triples where the inequality is strict
  std::vector<std::array<int, 3>> failed;  // (mu1, mu2, i), first few
};

// sum_mu3 N_{mu1 mu2}^{mu3} b_{i mu3} >= sum_{k,j} N_{jbar i}^k b_{k mu2} b_{j mu1},
// exact integers, all triples.
kw_inequality_report kw_inequality_check(const conformal_inclusion& inc);

// True iff no sub label is branched to from two distinct ambient labels.
bool label_disjoint(const conformal_inclusion& inc);

struct exponent_entry {
  int sub_label, amb_label;
  long long multiplicity;
};

// The multiset {(delta, k) with multiplicity b_{k delta} : b_{k delta} > 0}.
std::vector<exponent_entry> exponents(const conformal_inclusion& inc);

}  // namespace verlinde
