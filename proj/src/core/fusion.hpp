#pragma once

#include <Eigen/Dense>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "core/modular.hpp"

namespace verlinde {

using int_matrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

// Verlinde fusion coefficients of one modular datum.  Fusion matrices are
// computed lazily per label and cached; completed matrices are immutable.
class fusion_context {
 public:
  explicit fusion_context(modular_ptr data);

  const modular_data& data() const { return *data_; }

  // N_{ab}^c, rounded from the Verlinde sum; throws integrality_error if the
  // pre-rounding value is further than 1e-6 from a nonnegative integer.
  long long coeff(int a, int b, int c);

  // (N_a)_b^c
  const int_matrix& matrix(int a);

  double qdim(int a) const { return data_->qdim(a); }

  // decomposition of a x b as (label, multiplicity), multiplicities > 0
  std::vector<std::pair<int, long long>> product(int a, int b);

 private:
  int_matrix compute_matrix(int a);
  modular_ptr data_;
  std::map<int, int_matrix> cache_;
  std::mutex mu_;
};

// Shared per-algebra context, cached by spec string.
std::shared_ptr<fusion_context> get_fusion(const modular_ptr& data);

// One side of a quantum-dimension identity: sum of coeff * product(labels),
// an empty label list meaning the constant term.
struct dim_monomial {
  long long coeff = 1;
  std::vector<int> labels;
};
using dim_expr = std::vector<dim_monomial>;

struct dim_identity_report {
  double lhs = 0, rhs = 0;
  double deviation = 0;
  bool pass = false;
};

dim_identity_report dim_identity_check(const modular_data& d, const dim_expr& lhs,
                                       const dim_expr& rhs, double tol = 1e-8);

}  // namespace verlinde
