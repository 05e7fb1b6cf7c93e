#include "core/weights.hpp"

#include <numeric>
#include <stdexcept>

#include "core/errors.hpp"

namespace verlinde {

affine_weight::affine_weight(int N, int level, std::vector<int> dynkin)
    : N_(N), k_(level), a_(std::move(dynkin)) {
  if (N < 2) throw std::invalid_argument("affine_weight: need N >= 2");
  if (level < 0) throw std::invalid_argument("affine_weight: negative level");
  if (static_cast<int>(a_.size()) != N - 1)
    throw std::invalid_argument("affine_weight: expected N-1 Dynkin labels");
  int sum = 0;
  for (int x : a_) {
    if (x < 0) throw std::invalid_argument("affine_weight: negative Dynkin label");
    sum += x;
  }
  if (sum > level) throw std::invalid_argument("affine_weight: sum of labels exceeds level");
}

std::vector<int> affine_weight::partition() const {
  std::vector<int> lam(N_, 0);
  for (int i = N_ - 2; i >= 0; --i) lam[i] = lam[i + 1] + a_[i];
  return lam;
}

std::vector<int> affine_weight::shifted() const {
  std::vector<int> k(N_);
  int sum = std::accumulate(a_.begin(), a_.end(), 0);
  k[0] = k_ - sum + 1;
  for (int i = 1; i < N_; ++i) k[i] = a_[i - 1] + 1;
  return k;
}

std::vector<int> affine_weight::shifted_partition() const {
  auto lam = partition();
  std::vector<int> l(N_);
  for (int i = 0; i < N_; ++i) l[i] = lam[i] + N_ - 1 - i;
  return l;
}

int affine_weight::boxes() const {
  int s = 0, acc = 0;
  for (int i = N_ - 2; i >= 0; --i) {
    acc += a_[i];
    s += acc;
  }
  return s;
}

bool affine_weight::is_vacuum() const {
  for (int x : a_) if (x) return false;
  return true;
}

std::string affine_weight::to_string() const {
  auto lam = partition();
  std::string s = "[";
  for (int i = 0; i + 1 < N_; ++i) {
    if (i) s += ",";
    s += std::to_string(lam[i]);
  }
  return s + "]";
}

std::string affine_weight::to_string_dynkin() const {
  std::string s = "d[";
  for (size_t i = 0; i < a_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a_[i]);
  }
  return s + "]";
}

affine_weight weight_from_partition(int N, int level, const std::vector<int>& partition) {
  if (static_cast<int>(partition.size()) > N)
    throw std::invalid_argument("partition has more than N rows");
  std::vector<int> lam(partition);
  lam.resize(N, 0);
  if (lam[N - 1] != 0) {
    // reduce modulo full columns
    for (auto& x : lam) x -= lam[N - 1];
  }
  std::vector<int> a(N - 1);
  for (int i = 0; i < N - 1; ++i) {
    a[i] = lam[i] - lam[i + 1];
    if (a[i] < 0) throw std::invalid_argument("not weakly decreasing");
  }
  return affine_weight(N, level, a);
}

std::vector<affine_weight> enumerate_weights(int N, int level) {
  if (N < 2) throw std::invalid_argument("enumerate_weights: need N >= 2");
  if (level < 0) throw std::invalid_argument("enumerate_weights: negative level");
  std::vector<affine_weight> out;
  std::vector<int> cur(N - 1, 0);
  // lexicographic: recurse on positions left to right
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == N - 1) {
      out.emplace_back(N, level, cur);
      return;
    }
    for (int a = 0; a <= rem; ++a) {
      cur[pos] = a;
      self(self, pos + 1, rem - a);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, level);
  return out;
}

int nality(const affine_weight& w) {
  int N = w.rank_plus_one();
  long long t = 0;
  const auto& a = w.dynkin();
  for (int i = 0; i < N - 1; ++i) t += static_cast<long long>(i + 1) * a[i];
  return static_cast<int>(t % N);
}

affine_weight simple_current(const affine_weight& w, int j) {
  int N = w.rank_plus_one();
  j = ((j % N) + N) % N;
  auto sh = w.shifted();  // (k_0..k_{N-1}), entries a_i + 1
  std::vector<int> e(N);
  for (int i = 0; i < N; ++i) e[i] = sh[(i - j % N + N) % N] - 1;
  return affine_weight(N, w.level(), std::vector<int>(e.begin() + 1, e.end()));
}

affine_weight conjugate(const affine_weight& w) {
  std::vector<int> a(w.dynkin().rbegin(), w.dynkin().rend());
  return affine_weight(w.rank_plus_one(), w.level(), std::move(a));
}

rat conformal_weight(const affine_weight& w) {
  const int N = w.rank_plus_one();
  auto lam = w.partition();
  long long ss = 0, s = 0, lr = 0;
  for (int i = 0; i < N; ++i) {
    ss += static_cast<long long>(lam[i]) * lam[i];
    s += lam[i];
    lr += static_cast<long long>(lam[i]) * (N - 1 - i);
  }
  // (lambda,lambda) = ss - s^2/N ; (lambda,rho) = lr - s(N-1)/2
  rat ll = rat(ss) - rat(s * s, N);
  rat lrho = rat(lr) - rat(s * (N - 1), 2);
  return (ll + 2 * lrho) / rat(2 * (w.level() + N));
}

rat central_charge_suNk(int N, int level) {
  return rat(static_cast<long long>(level) * (static_cast<long long>(N) * N - 1),
             level + N);
}

}  // namespace verlinde
