#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "core/rational.hpp"
#include "core/weights.hpp"

namespace verlinde {

enum class algebra_family { su_nk, su_level1, so_even_level1, e6_level1, e7_level1, product };

// Labeled modular data: S-matrix, T-phases, exact conformal weights.
// Immutable after construction; every constructor runs the axiom verifier.
struct modular_data {
  algebra_family family = algebra_family::su_nk;
  std::string spec;  // canonical, e.g. "su3@9", "so8@1", "su2@3 x su3@2"
  std::vector<std::string> names;
  Eigen::MatrixXcd S;
  std::vector<std::complex<double>> T;
  std::vector<rat> h;
  rat c{0};
  std::vector<int> conj;  // conjugation permutation, from S^2

  // su_nk only: labels as weights, aligned with names.
  std::vector<affine_weight> weights;
  // product only:
  std::vector<std::shared_ptr<const modular_data>> factors;
  std::vector<std::vector<int>> tuples;  // factor indices per label

  int size() const { return static_cast<int>(names.size()); }
  double qdim(int i) const { return (S(0, i) / S(0, 0)).real(); }
  int find(const std::string& name) const;              // -1 if absent
  int index_of_weight(const affine_weight& w) const;    // throws if absent
};

using modular_ptr = std::shared_ptr<const modular_data>;

// Kac-Peterson determinant construction for su(N)_k, N >= 2, k >= 1.
// Normalization fixed by unitarity and S_11 > 0.
modular_ptr s_matrix_suNk(int N, int k);

// Fixed finite catalogs, constructed then verified.
modular_ptr level1_su(int M);
modular_ptr level1_so_even(int M);  // so(2M)_1, label order (1, v, s, c)
modular_ptr level1_e6();
modular_ptr level1_e7();

modular_ptr tensor(const std::vector<modular_ptr>& factors);

struct axiom_check {
  double symmetry_dev = 0;
  double unitarity_dev = 0;
  double vacuum_row_min = 0;     // must be > 0
  bool conj_is_permutation = false;
  double conj_dev = 0;           // off-pattern magnitude in S^2
  double st3_dev = 0;            // max |(ST)^3 - S^2|
  double tol = 0;
  bool pass() const;
};

axiom_check verify_modular(const modular_data& d, double tol);
axiom_check verify_modular(const modular_data& d);  // global tol

// Cached lookup by canonical spec string ("su3@9", "so8@1", "e6@1", "e7@1";
// "suM@1" resolves to the level-1 catalog).
modular_ptr get_modular(const std::string& spec);

}  // namespace verlinde
