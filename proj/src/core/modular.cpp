#include "core/modular.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "core/config.hpp"
#include "core/errors.hpp"

namespace verlinde {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> unit_phase(long long num, long long den) {
  // exp(2*pi*i*num/den) with the angle reduced exactly first
  long long m = num % den;
  if (m < 0) m += den;
  double ang = kTwoPi * static_cast<double>(m) / static_cast<double>(den);
  return {std::cos(ang), std::sin(ang)};
}

std::vector<std::complex<double>> t_phases(const std::vector<rat>& h, const rat& c) {
  std::vector<std::complex<double>> t;
  t.reserve(h.size());
  for (const auto& hi : h) {
    rat x = frac(hi - c / 24);
    t.push_back(unit_phase(x.numerator(), x.denominator()));
  }
  return t;
}

std::vector<int> conj_from_s2(const Eigen::MatrixXcd& S, double tol, double* dev) {
  const int P = static_cast<int>(S.rows());
  Eigen::MatrixXcd C = S * S;
  std::vector<int> perm(P, -1);
  double worst = 0;
  for (int i = 0; i < P; ++i) {
    int hit = -1;
    for (int j = 0; j < P; ++j) {
      double d1 = std::abs(C(i, j) - 1.0);
      if (d1 < 0.5) {
        hit = j;
        worst = std::max(worst, d1);
      } else {
        worst = std::max(worst, 0.0);
      }
    }
    perm[i] = hit;
  }
  // off-pattern deviation
  double off = 0;
  for (int i = 0; i < P; ++i)
    for (int j = 0; j < P; ++j) {
      double target = (perm[i] == j) ? 1.0 : 0.0;
      off = std::max(off, std::abs(C(i, j) - target));
    }
  if (dev) *dev = off;
  // validate it is an involutive permutation fixing the vacuum
  std::vector<int> seen(P, 0);
  for (int i = 0; i < P; ++i) {
    if (perm[i] < 0 || seen[perm[i]]) return {};
    seen[perm[i]] = 1;
  }
  for (int i = 0; i < P; ++i)
    if (perm[perm[i]] != i) return {};
  if (perm[0] != 0) return {};
  (void)tol;
  return perm;
}

void finalize(modular_data& d) {
  d.T = t_phases(d.h, d.c);
  double dev = 0;
  d.conj = conj_from_s2(d.S, global_config().tol, &dev);
  auto chk = verify_modular(d);
  if (!chk.pass())
    throw modular_axiom_error("modular axioms failed for " + d.spec +
                              ": unit=" + std::to_string(chk.unitarity_dev) +
                              " sym=" + std::to_string(chk.symmetry_dev) +
                              " conj=" + std::to_string(chk.conj_dev) +
                              " st3=" + std::to_string(chk.st3_dev));
}

}  // namespace

int modular_data::find(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == name) return i;
  return -1;
}

int modular_data::index_of_weight(const affine_weight& w) const {
  for (int i = 0; i < static_cast<int>(weights.size()); ++i)
    if (weights[i] == w) return i;
  throw std::invalid_argument("weight " + w.to_string() + " not a label of " + spec);
}

bool axiom_check::pass() const {
  return symmetry_dev < tol && unitarity_dev < tol && vacuum_row_min > 0 &&
         conj_is_permutation && conj_dev < tol && st3_dev < tol;
}

axiom_check verify_modular(const modular_data& d, double tol) {
  axiom_check r;
  r.tol = tol;
  const int P = d.size();
  r.symmetry_dev = (d.S - d.S.transpose()).cwiseAbs().maxCoeff();
  r.unitarity_dev =
      (d.S * d.S.adjoint() - Eigen::MatrixXcd::Identity(P, P)).cwiseAbs().maxCoeff();
  r.vacuum_row_min = d.S.row(0).real().minCoeff();
  double cdev = 0;
  auto perm = conj_from_s2(d.S, tol, &cdev);
  r.conj_is_permutation = !perm.empty();
  r.conj_dev = cdev;
  Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(P, P);
  for (int i = 0; i < P; ++i) T(i, i) = d.T[i];
  Eigen::MatrixXcd ST = d.S * T;
  r.st3_dev = (ST * ST * ST - d.S * d.S).cwiseAbs().maxCoeff();
  return r;
}

axiom_check verify_modular(const modular_data& d) {
  return verify_modular(d, global_config().tol);
}

modular_ptr s_matrix_suNk(int N, int k) {
  if (N < 2 || k < 1) throw std::invalid_argument("s_matrix_suNk: need N >= 2, k >= 1");
  auto ws = enumerate_weights(N, k);
  const int P = static_cast<int>(ws.size());
  if (P > global_config().max_labels)
    throw resource_limit_error("su" + std::to_string(N) + "@" + std::to_string(k) +
                               " has " + std::to_string(P) + " primaries, over the limit of " +
                               std::to_string(global_config().max_labels));
  const long long n = N + k;
  std::vector<std::vector<int>> ls(P);
  std::vector<long long> lsum(P);
  for (int i = 0; i < P; ++i) {
    ls[i] = ws[i].shifted_partition();
    lsum[i] = std::accumulate(ls[i].begin(), ls[i].end(), 0LL);
  }
  auto d = std::make_shared<modular_data>();
  d->family = algebra_family::su_nk;
  d->spec = "su" + std::to_string(N) + "@" + std::to_string(k);
  d->S.resize(P, P);
  Eigen::MatrixXcd M(N, N);
  for (int a = 0; a < P; ++a) {
    for (int b = a; b < P; ++b) {
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
          M(i, j) = unit_phase(-static_cast<long long>(ls[a][i]) * ls[b][j], n);
      std::complex<double> det = M.determinant();
      std::complex<double> ph = unit_phase(lsum[a] * lsum[b], N * n);
      d->S(a, b) = ph * det;
      d->S(b, a) = d->S(a, b);
    }
  }
  // fix scale by unitarity and the phase by S_11 > 0
  d->S /= d->S.row(0).norm();
  std::complex<double> s00 = d->S(0, 0);
  d->S *= std::conj(s00) / std::abs(s00);

  d->names.reserve(P);
  d->weights = std::move(ws);
  for (const auto& w : d->weights) {
    d->names.push_back(w.to_string());
    d->h.push_back(conformal_weight(w));
  }
  d->c = central_charge_suNk(N, k);
  finalize(*d);
  return d;
}

modular_ptr level1_su(int M) {
  if (M < 2) throw std::invalid_argument("level1_su: need M >= 2");
  auto d = std::make_shared<modular_data>();
  d->family = algebra_family::su_level1;
  d->spec = "su" + std::to_string(M) + "@1";
  d->S.resize(M, M);
  for (int j = 0; j < M; ++j)
    for (int l = 0; l < M; ++l)
      d->S(j, l) = unit_phase(static_cast<long long>(j) * l, M) / std::sqrt(double(M));
  for (int j = 0; j < M; ++j) {
    d->names.push_back("w" + std::to_string(j));
    d->h.push_back(rat(static_cast<long long>(j) * (M - j), 2LL * M));
  }
  d->c = rat(M - 1);
  finalize(*d);
  return d;
}

modular_ptr level1_so_even(int M) {
  if (M < 2) throw std::invalid_argument("level1_so_even: need M >= 2");
  auto d = std::make_shared<modular_data>();
  d->family = algebra_family::so_even_level1;
  d->spec = "so" + std::to_string(2 * M) + "@1";
  // S_ss = (-i)^M / 2 reproduces so(6)_1 = su(4)_1 and the real so(8)_1 matrix.
  std::complex<double> w = std::pow(std::complex<double>(0, -1), M) / 2.0;
  d->S.resize(4, 4);
  d->S << 0.5, 0.5, 0.5, 0.5,
          0.5, 0.5, -0.5, -0.5,
          0.5, -0.5, w, -w,
          0.5, -0.5, -w, w;
  d->names = {"1", "v", "s", "c"};
  d->h = {rat(0), rat(1, 2), rat(M, 8), rat(M, 8)};
  d->c = rat(M);
  finalize(*d);
  return d;
}

modular_ptr level1_e6() {
  auto d = std::make_shared<modular_data>();
  d->family = algebra_family::e6_level1;
  d->spec = "e6@1";
  // Z_3 Fourier matrix; the orientation with (ST)^3 = S^2 at h = 2/3 is
  // omega = exp(-2 pi i / 3).
  std::complex<double> om = unit_phase(-1, 3);
  double r = 1.0 / std::sqrt(3.0);
  d->S.resize(3, 3);
  d->S << r, r, r,
          r, r * om, r * om * om,
          r, r * om * om, r * om;
  d->names = {"1", "e", "eb"};
  d->h = {rat(0), rat(2, 3), rat(2, 3)};
  d->c = rat(6);
  finalize(*d);
  return d;
}

modular_ptr level1_e7() {
  auto d = std::make_shared<modular_data>();
  d->family = algebra_family::e7_level1;
  d->spec = "e7@1";
  double r = 1.0 / std::sqrt(2.0);
  d->S.resize(2, 2);
  d->S << r, r, r, -r;
  d->names = {"1", "f"};
  d->h = {rat(0), rat(3, 4)};
  d->c = rat(7);
  finalize(*d);
  return d;
}

modular_ptr tensor(const std::vector<modular_ptr>& factors) {
  if (factors.empty()) throw std::invalid_argument("tensor: empty factor list");
  if (factors.size() == 1) return factors[0];
  auto d = std::make_shared<modular_data>();
  d->family = algebra_family::product;
  d->factors = factors;
  long long P = 1;
  for (const auto& f : factors) {
    P *= f->size();
    if (P > global_config().max_labels)
      throw resource_limit_error("tensor product label count over limit");
    d->spec += (d->spec.empty() ? "" : " x ") + f->spec;
  }
  const int Pi = static_cast<int>(P);
  d->tuples.assign(Pi, {});
  d->S = Eigen::MatrixXcd::Ones(Pi, Pi);
  d->h.assign(Pi, rat(0));
  for (int i = 0; i < Pi; ++i) {
    long long rest = i;
    std::vector<int> tup(factors.size());
    for (int f = static_cast<int>(factors.size()) - 1; f >= 0; --f) {
      tup[f] = static_cast<int>(rest % factors[f]->size());
      rest /= factors[f]->size();
    }
    d->tuples[i] = tup;
    std::string nm = "(";
    for (size_t f = 0; f < factors.size(); ++f) {
      if (f) nm += ",";
      nm += factors[f]->names[tup[f]];
      d->h[i] += factors[f]->h[tup[f]];
    }
    d->names.push_back(nm + ")");
  }
  for (int i = 0; i < Pi; ++i)
    for (int j = 0; j < Pi; ++j)
      for (size_t f = 0; f < factors.size(); ++f)
        d->S(i, j) *= factors[f]->S(d->tuples[i][f], d->tuples[j][f]);
  d->c = rat(0);
  for (const auto& f : factors) d->c += f->c;
  finalize(*d);
  return d;
}

namespace {
std::map<std::string, modular_ptr>& registry() {
  static std::map<std::string, modular_ptr> reg;
  return reg;
}
std::mutex registry_mu;
}  // namespace

modular_ptr get_modular(const std::string& spec) {
  {
    std::lock_guard<std::mutex> lk(registry_mu);
    auto it = registry().find(spec);
    if (it != registry().end()) return it->second;
  }
  modular_ptr d;
  auto at = spec.find('@');
  if (at == std::string::npos) throw parse_error("bad algebra spec '" + spec + "'");
  std::string base = spec.substr(0, at);
  int lvl = 0;
  try {
    lvl = std::stoi(spec.substr(at + 1));
  } catch (...) {
    throw parse_error("bad level in algebra spec '" + spec + "'");
  }
  if (base == "e6") {
    if (lvl != 1) throw parse_error("e6 is only available at level 1");
    d = level1_e6();
  } else if (base == "e7") {
    if (lvl != 1) throw parse_error("e7 is only available at level 1");
    d = level1_e7();
  } else if (base.rfind("so", 0) == 0) {
    if (lvl != 1) throw parse_error("so algebras are only available at level 1");
    int twoM = std::stoi(base.substr(2));
    if (twoM < 4 || twoM % 2) throw parse_error("expected so<2M>@1 with 2M even");
    d = level1_so_even(twoM / 2);
  } else if (base.rfind("su", 0) == 0) {
    int N = 0;
    try {
      N = std::stoi(base.substr(2));
    } catch (...) {
      throw parse_error("bad algebra spec '" + spec + "'");
    }
    d = (lvl == 1) ? level1_su(N) : s_matrix_suNk(N, lvl);
  } else {
    throw parse_error("unknown algebra '" + base + "'");
  }
  std::lock_guard<std::mutex> lk(registry_mu);
  registry().emplace(spec, d);
  return d;
}

config& global_config() {
  static config cfg;
  return cfg;
}

}  // namespace verlinde
