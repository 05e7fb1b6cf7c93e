#include "core/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace verlinde {

std::string fmt_num(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  double ax = std::abs(x);
  if (ax >= 1e6 || ax < 1e-6)
    std::snprintf(buf, sizeof buf, "%.11e", x);
  else
    std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x) { return std::strtod(fmt_num(x).c_str(), nullptr); }

std::string fmt_complex(const std::complex<double>& z) {
  std::string s = fmt_num(z.real());
  s += (z.imag() < 0 ? " - " : " + ");
  s += fmt_num(std::abs(z.imag()));
  s += "i";
  return s;
}

bool report_document::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

ordered_json report_document::to_json() const {
  ordered_json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["results"] = results;
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["max_deviation"] = round12(c.max_deviation);
    arr.push_back(cj);
  }
  j["checks"] = arr;
  j["pass"] = all_pass();
  return j;
}

std::string report_document::dump() const { return to_json().dump(2) + "\n"; }

}  // namespace verlinde
