#include "core/fusion.hpp"

#include <cmath>
#include <stdexcept>

#include "core/config.hpp"
#include "core/errors.hpp"

namespace verlinde {

fusion_context::fusion_context(modular_ptr data) : data_(std::move(data)) {
  if (!data_) throw std::invalid_argument("fusion_context: null data");
}

int_matrix fusion_context::compute_matrix(int a) {
  const auto& d = *data_;
  const int P = d.size();
  if (!d.factors.empty()) {
    // product data: exact Kronecker product of the factor fusion matrices
    std::vector<const int_matrix*> fm;
    std::vector<std::shared_ptr<fusion_context>> ctxs;
    for (size_t f = 0; f < d.factors.size(); ++f)
      ctxs.push_back(get_fusion(d.factors[f]));
    int_matrix out(P, P);
    for (int b = 0; b < P; ++b)
      for (int c = 0; c < P; ++c) {
        long long v = 1;
        for (size_t f = 0; f < d.factors.size() && v; ++f)
          v *= ctxs[f]->coeff(d.tuples[a][f], d.tuples[b][f], d.tuples[c][f]);
        out(b, c) = v;
      }
    return out;
  }
  // N_a = S diag(S_{a.}/S_{0.}) S^dagger, rounded entrywise
  Eigen::VectorXcd gamma(P);
  for (int t = 0; t < P; ++t) gamma(t) = d.S(a, t) / d.S(0, t);
  Eigen::MatrixXcd Na = d.S * gamma.asDiagonal() * d.S.adjoint();
  int_matrix out(P, P);
  const double tol = global_config().int_tol;
  for (int b = 0; b < P; ++b)
    for (int c = 0; c < P; ++c) {
      double re = Na(b, c).real();
      long long r = std::llround(re);
      double dev = std::max(std::abs(re - static_cast<double>(r)),
                            std::abs(Na(b, c).imag()));
      if (dev > tol || r < 0)
        throw integrality_error("Verlinde sum for " + d.spec + " at (" +
                                std::to_string(a) + "," + std::to_string(b) + "," +
                                std::to_string(c) + ") deviates by " + std::to_string(dev));
      out(b, c) = r;
    }
  return out;
}

const int_matrix& fusion_context::matrix(int a) {
  std::lock_guard<std::mutex> lk(mu_);
  auto it = cache_.find(a);
  if (it != cache_.end()) return it->second;
  auto m = compute_matrix(a);
  return cache_.emplace(a, std::move(m)).first->second;
}

long long fusion_context::coeff(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0 || a >= data_->size() || b >= data_->size() ||
      c >= data_->size())
    throw std::invalid_argument("fusion coeff: label out of range");
  return matrix(a)(b, c);
}

std::vector<std::pair<int, long long>> fusion_context::product(int a, int b) {
  const auto& m = matrix(a);
  std::vector<std::pair<int, long long>> out;
  for (int c = 0; c < data_->size(); ++c)
    if (m(b, c) > 0) out.emplace_back(c, m(b, c));
  return out;
}

namespace {
std::map<std::string, std::shared_ptr<fusion_context>>& fusion_registry() {
  static std::map<std::string, std::shared_ptr<fusion_context>> reg;
  return reg;
}
std::mutex fusion_mu;
}  // namespace

std::shared_ptr<fusion_context> get_fusion(const modular_ptr& data) {
  std::lock_guard<std::mutex> lk(fusion_mu);
  auto it = fusion_registry().find(data->spec);
  if (it != fusion_registry().end()) return it->second;
  auto ctx = std::make_shared<fusion_context>(data);
  fusion_registry().emplace(data->spec, ctx);
  return ctx;
}

dim_identity_report dim_identity_check(const modular_data& d, const dim_expr& lhs,
                                       const dim_expr& rhs, double tol) {
  auto eval = [&](const dim_expr& e) {
    double total = 0;
    for (const auto& mono : e) {
      double v = static_cast<double>(mono.coeff);
      for (int l : mono.labels) {
        if (l < 0 || l >= d.size())
          throw std::invalid_argument("dim_identity_check: unknown label index");
        v *= d.qdim(l);
      }
      total += v;
    }
    return total;
  };
  dim_identity_report r;
  r.lhs = eval(lhs);
  r.rhs = eval(rhs);
  r.deviation = std::abs(r.lhs - r.rhs);
  r.pass = r.deviation <= tol;
  return r;
}

}  // namespace verlinde
