#include "core/parse.hpp"

#include <cctype>

#include "core/errors.hpp"

namespace verlinde {

namespace {

std::vector<int> parse_int_list(const std::string& body, const std::string& ctx) {
  std::vector<int> out;
  size_t pos = 0;
  if (body.empty()) return out;
  while (pos <= body.size()) {
    size_t comma = body.find(',', pos);
    std::string tok =
        body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (...) {
      throw parse_error("bad integer '" + tok + "' in " + ctx);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

affine_weight parse_weight(const std::string& text, int N, int level) {
  bool dynkin = false;
  std::string body = text;
  if (!body.empty() && body[0] == 'd') {
    dynkin = true;
    body = body.substr(1);
  }
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw parse_error("bad weight literal '" + text + "': expected [..] or d[..]");
  auto vals = parse_int_list(body.substr(1, body.size() - 2), "weight literal " + text);
  try {
    if (dynkin) {
      if (static_cast<int>(vals.size()) != N - 1)
        throw parse_error("expected " + std::to_string(N - 1) + " Dynkin labels");
      return affine_weight(N, level, vals);
    }
    return weight_from_partition(N, level, vals);
  } catch (const parse_error&) {
    throw;
  } catch (const std::exception& e) {
    throw parse_error("bad weight '" + text + "': " + e.what());
  }
}

int parse_label(const modular_data& d, const std::string& text) {
  int hit = d.find(text);
  if (hit >= 0) return hit;
  switch (d.family) {
    case algebra_family::su_nk: {
      auto w = parse_weight(text, d.weights[0].rank_plus_one(), d.weights[0].level());
      return d.index_of_weight(w);
    }
    case algebra_family::su_level1: {
      int M = d.size();
      std::string t = text;
      if (!t.empty() && t[0] == 'w') t = t.substr(1);
      bool numeric = !t.empty();
      for (char ch : t)
        if (!std::isdigit(static_cast<unsigned char>(ch))) numeric = false;
      if (numeric) {
        int j = std::stoi(t);
        if (j < 0 || j >= M) throw parse_error("label " + text + " out of range for " + d.spec);
        return j;
      }
      // fundamental-weight literal: partition (1^j) or Dynkin e_j
      auto w = parse_weight(text, M, 1);
      long long j = 0;
      const auto& a = w.dynkin();
      for (int i = 0; i < M - 1; ++i) j += static_cast<long long>(i + 1) * a[i];
      return static_cast<int>(j % M);
    }
    default:
      throw parse_error("unknown label '" + text + "' for " + d.spec);
  }
}

}  // namespace verlinde
