#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

namespace verlinde {

using ordered_json = nlohmann::ordered_json;

// 12 significant digits, lowercase scientific beyond 1e+-6.
std::string fmt_num(double x);
// double rounded through the 12-digit text form, for stable JSON payloads
double round12(double x);

std::string fmt_complex(const std::complex<double>& z);

struct check_line {
  std::string name;
  bool pass = false;
  double max_deviation = 0;
};

// One command's structured output: echoed inputs, results payload, checks.
// Serializes with stable key order; identical runs give identical bytes.
struct report_document {
  std::string command;
  ordered_json inputs = ordered_json::object();
  ordered_json results = ordered_json::object();
  std::vector<check_line> checks;

  bool all_pass() const;
  ordered_json to_json() const;
  std::string dump() const;  // 2-space indent, trailing newline
};

}  // namespace verlinde
