// Command-line front end.  Everything goes through the C API in verlinde.h;
// this translation unit never sees the core library headers.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "verlinde.h"

namespace {

int status_exit(vl_status s) {
  if (s == VL_OK) return 0;
  std::cerr << "error: " << vl_last_error() << "\n";
  return (s == VL_E_PARSE || s == VL_E_UNKNOWN || s == VL_E_INVALID) ? 2 : 1;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  vl_string_free(s);
  return out;
}

// 12 significant digits, lowercase scientific beyond 1e+-6
std::string num(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  double ax = std::fabs(x);
  if (ax >= 1e6 || ax < 1e-6)
    std::snprintf(buf, sizeof buf, "%.11e", x);
  else
    std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string cnum(double re, double im) {
  std::string s = num(re);
  s += im < 0 ? " - " : " + ";
  s += num(std::fabs(im));
  return s + "i";
}

struct algebra_handle {
  vl_algebra* a = nullptr;
  ~algebra_handle() { vl_algebra_close(a); }
};

struct inclusion_handle {
  vl_inclusion* i = nullptr;
  ~inclusion_handle() { vl_inclusion_close(i); }
};

std::string label_name(const vl_algebra* a, int idx, bool dynkin) {
  char* s = nullptr;
  if (dynkin)
    vl_algebra_label_dynkin(a, idx, &s);
  else
    vl_algebra_label_name(a, idx, &s);
  return take(s);
}

int print_report_json_or_text(const std::string& json, bool as_json) {
  if (as_json) {
    std::cout << json;
  } else {
    auto j = nlohmann::json::parse(json);
    for (const auto& c : j["checks"]) {
      std::cout << (c["pass"].get<bool>() ? "[PASS] " : "[FAIL] ")
                << c["name"].get<std::string>() << "  (max deviation "
                << num(c["max_deviation"].get<double>()) << ")\n";
    }
    bool pass = j["pass"].get<bool>();
    std::cout << (pass ? "OVERALL PASS" : "OVERALL FAIL") << "\n";
  }
  auto j = nlohmann::json::parse(json);
  return j["pass"].get<bool>() ? 0 : 1;
}

int cmd_smatrix(const std::string& algebra, bool as_json) {
  algebra_handle h;
  if (auto s = vl_algebra_open(algebra.c_str(), &h.a); s != VL_OK) return status_exit(s);
  if (as_json) {
    char* js = nullptr;
    if (auto s = vl_smatrix_json(h.a, &js); s != VL_OK) return status_exit(s);
    std::cout << take(js);
    return 0;
  }
  int P = vl_algebra_size(h.a);
  std::cout << "S-matrix of " << vl_algebra_spec(h.a) << " (" << P << " primaries)\n";
  for (int i = 0; i < P; ++i) {
    std::cout << label_name(h.a, i, false) << ":";
    for (int j = 0; j < P; ++j) {
      double re, im;
      vl_algebra_s_entry(h.a, i, j, &re, &im);
      std::cout << "  " << cnum(re, im);
    }
    std::cout << "\n";
  }
  std::cout << "T:";
  for (int i = 0; i < P; ++i) {
    double re, im;
    vl_algebra_t_entry(h.a, i, &re, &im);
    std::cout << "  " << cnum(re, im);
  }
  std::cout << "\n";
  return 0;
}

int cmd_qdim(const std::string& algebra, const std::string& label, bool as_json) {
  algebra_handle h;
  if (auto s = vl_algebra_open(algebra.c_str(), &h.a); s != VL_OK) return status_exit(s);
  int idx = 0;
  if (auto s = vl_algebra_find_label(h.a, label.c_str(), &idx); s != VL_OK)
    return status_exit(s);
  double d = 0;
  vl_algebra_qdim(h.a, idx, &d);
  if (as_json) {
    nlohmann::ordered_json j;
    j["command"] = "qdim";
    j["algebra"] = vl_algebra_spec(h.a);
    j["label"] = label_name(h.a, idx, false);
    j["qdim"] = std::stod(num(d));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << num(d) << "\n";
  }
  return 0;
}

int cmd_fuse(const std::string& algebra, const std::string& l1, const std::string& l2,
             bool as_json) {
  algebra_handle h;
  if (auto s = vl_algebra_open(algebra.c_str(), &h.a); s != VL_OK) return status_exit(s);
  int a = 0, b = 0;
  if (auto s = vl_algebra_find_label(h.a, l1.c_str(), &a); s != VL_OK) return status_exit(s);
  if (auto s = vl_algebra_find_label(h.a, l2.c_str(), &b); s != VL_OK) return status_exit(s);
  bool dynkin = !l1.empty() && l1[0] == 'd';
  int P = vl_algebra_size(h.a);
  std::vector<std::pair<int, long long>> parts;
  for (int c = 0; c < P; ++c) {
    long long nc = 0;
    if (auto s = vl_algebra_fusion(h.a, a, b, c, &nc); s != VL_OK) return status_exit(s);
    if (nc > 0) parts.emplace_back(c, nc);
  }
  if (as_json) {
    nlohmann::ordered_json j;
    j["command"] = "fuse";
    j["algebra"] = vl_algebra_spec(h.a);
    j["lhs"] = label_name(h.a, a, false);
    j["rhs"] = label_name(h.a, b, false);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (auto [c, nc] : parts) {
      nlohmann::ordered_json e;
      e["label"] = label_name(h.a, c, false);
      e["multiplicity"] = nc;
      arr.push_back(e);
    }
    j["decomposition"] = arr;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::string out;
  for (auto [c, nc] : parts) {
    if (!out.empty()) out += " + ";
    if (nc > 1) out += std::to_string(nc) + "*";
    out += label_name(h.a, c, dynkin);
  }
  std::cout << (out.empty() ? "0" : out) << "\n";
  return 0;
}

int cmd_branch(const std::string& name, bool as_json) {
  inclusion_handle h;
  if (auto s = vl_inclusion_open(name.c_str(), &h.i); s != VL_OK) return status_exit(s);
  if (as_json) {
    char* js = nullptr;
    if (auto s = vl_branch_json(h.i, &js); s != VL_OK) return status_exit(s);
    std::cout << take(js);
    return 0;
  }
  algebra_handle sub, amb;
  vl_inclusion_sub(h.i, &sub.a);
  vl_inclusion_amb(h.i, &amb.a);
  std::cout << "branching of " << vl_inclusion_name(h.i) << " ("
            << vl_algebra_spec(sub.a) << " in " << vl_algebra_spec(amb.a) << ")\n";
  for (int r = 0; r < vl_algebra_size(amb.a); ++r) {
    std::string line;
    for (int c = 0; c < vl_algebra_size(sub.a); ++c) {
      long long v = 0;
      vl_inclusion_b(h.i, r, c, &v);
      if (!v) continue;
      if (!line.empty()) line += " + ";
      if (v > 1) line += std::to_string(v) + "*";
      line += label_name(sub.a, c, false);
    }
    std::cout << label_name(amb.a, r, false) << ": " << (line.empty() ? "0" : line) << "\n";
  }
  return 0;
}

int cmd_kw_check(const std::string& name, bool as_json) {
  inclusion_handle h;
  if (auto s = vl_inclusion_open(name.c_str(), &h.i); s != VL_OK) return status_exit(s);
  if (as_json) {
    char* js = nullptr;
    if (auto s = vl_kw_check_json(h.i, &js); s != VL_OK) return status_exit(s);
    std::string txt = take(js);
    std::cout << txt;
    auto j = nlohmann::json::parse(txt);
    return j["pass"].get<bool>() ? 0 : 1;
  }
  vl_kw_scan* scan = nullptr;
  if (auto s = vl_kw_scan_run(h.i, &scan); s != VL_OK) return status_exit(s);
  std::unique_ptr<vl_kw_scan, void (*)(vl_kw_scan*)> guard(scan, vl_kw_scan_close);
  int nv = vl_kw_scan_violation_count(scan);
  if (nv == 0) {
    std::cout << "HYPOTHESIS HOLDS (" << vl_kw_scan_pairs_checked(scan)
              << " pairs checked)\n";
    return 0;
  }
  algebra_handle sub, amb;
  vl_inclusion_sub(h.i, &sub.a);
  vl_inclusion_amb(h.i, &amb.a);
  std::cout << nv << " violations over " << vl_kw_scan_pairs_checked(scan)
            << " pairs:\n";
  std::cout << "i\tlambda\tj\tmu\tRe\tIm\n";
  for (int t = 0; t < nv; ++t) {
    int i, lam, j, mu;
    double re, im;
    vl_kw_scan_violation(scan, t, &i, &lam, &j, &mu, &re, &im);
    std::cout << label_name(amb.a, i, false) << "\t" << label_name(sub.a, lam, false)
              << "\t" << label_name(amb.a, j, false) << "\t"
              << label_name(sub.a, mu, false) << "\t" << num(re) << "\t" << num(im)
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modular data, fusion rings, branching rules, and level-rank duality"};
  app.require_subcommand(1);
  bool as_json = false;
  double tol = 0;
  int max_labels = 0;
  app.add_flag("--json", as_json, "machine-readable JSON output");
  app.add_option("--tol", tol, "modular axiom tolerance (default 1e-9)");
  app.add_option("--max-labels", max_labels, "primary count guard (default 1000)");

  std::string algebra, label1, label2, incname, weight;
  int m = 0, n = 0, Lambda = 0;

  auto* smatrix = app.add_subcommand("smatrix", "print the S-matrix of an algebra");
  smatrix->add_option("algebra", algebra, "e.g. su3@9, su6@1, so8@1, e6@1")->required();

  auto* fuse = app.add_subcommand("fuse", "decompose a fusion product");
  fuse->add_option("algebra", algebra)->required();
  fuse->add_option("lhs", label1, "weight literal, e.g. [2,1] or d[1,1]")->required();
  fuse->add_option("rhs", label2)->required();

  auto* qdim = app.add_subcommand("qdim", "quantum dimension of a primary");
  qdim->add_option("algebra", algebra)->required();
  qdim->add_option("label", label1)->required();

  auto* branch = app.add_subcommand("branch", "print a branching matrix");
  branch->add_option("inclusion", incname,
                     "su3_9_in_e6, su3_3_in_so8, su4_2_in_su6, series_a(n), "
                     "series_b(n), product(m,n)")
      ->required();

  auto* kw = app.add_subcommand("kw-check", "scan an inclusion for positivity violations");
  kw->add_option("inclusion", incname)->required();

  auto* lr = app.add_subcommand("levelrank", "level-rank duality maps");
  lr->require_subcommand(1);
  auto* lrbeta = lr->add_subcommand("beta", "the pie-slicing map");
  lrbeta->add_option("m", m)->required();
  lrbeta->add_option("n", n)->required();
  lrbeta->add_option("weight", weight, "su(m)_n weight literal")->required();
  auto* lrpair = lr->add_subcommand("pair", "partner weight in a level-1 sector");
  lrpair->add_option("m", m)->required();
  lrpair->add_option("n", n)->required();
  lrpair->add_option("weight", weight)->required();
  lrpair->add_option("Lambda", Lambda)->required();
  auto* lrtable = lr->add_subcommand("table", "full pairing table");
  lrtable->add_option("m", m)->required();
  lrtable->add_option("n", n)->required();
  auto* lrth = lr->add_subcommand("verify-th42", "closure isomorphism check");
  lrth->add_option("n", n)->required();

  auto* repro = app.add_subcommand("reproduce-paper", "run the consolidated battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (tol > 0) vl_set_tolerance(tol);
  if (max_labels > 0) vl_set_max_labels(max_labels);

  if (smatrix->parsed()) return cmd_smatrix(algebra, as_json);
  if (fuse->parsed()) return cmd_fuse(algebra, label1, label2, as_json);
  if (qdim->parsed()) return cmd_qdim(algebra, label1, as_json);
  if (branch->parsed()) return cmd_branch(incname, as_json);
  if (kw->parsed()) return cmd_kw_check(incname, as_json);

  if (lr->parsed()) {
    if (lrbeta->parsed()) {
      char* out = nullptr;
      if (auto s = vl_levelrank_beta(m, n, weight.c_str(), &out); s != VL_OK)
        return status_exit(s);
      std::cout << take(out) << "\n";
      return 0;
    }
    if (lrpair->parsed()) {
      char* out = nullptr;
      if (auto s = vl_levelrank_pair(m, n, weight.c_str(), Lambda, &out); s != VL_OK)
        return status_exit(s);
      std::cout << take(out) << "\n";
      return 0;
    }
    if (lrtable->parsed()) {
      char* out = nullptr;
      if (auto s = vl_levelrank_table_json(m, n, &out); s != VL_OK) return status_exit(s);
      std::string txt = take(out);
      if (as_json) {
        std::cout << txt;
      } else {
        auto j = nlohmann::json::parse(txt);
        for (const auto& e : j["pairs"])
          std::cout << e["weight"].get<std::string>() << "  Lambda="
                    << e["Lambda"].get<int>() << "  -> "
                    << e["partner"].get<std::string>() << "  (twist "
                    << e["twist"].get<int>() << ")\n";
      }
      return 0;
    }
    if (lrth->parsed()) {
      int pass = 0;
      char* out = nullptr;
      if (auto s = vl_levelrank_verify_th42(n, &pass, &out); s != VL_OK)
        return status_exit(s);
      std::string txt = take(out);
      if (as_json) {
        std::cout << txt;
      } else {
        auto j = nlohmann::json::parse(txt);
        std::cout << (pass ? "PASS" : "FAIL") << " (closure sizes "
                  << j["results"]["closure_sizes"][0].get<int>() << "/"
                  << j["results"]["closure_sizes"][1].get<int>() << ")\n";
      }
      return pass ? 0 : 1;
    }
  }

  if (repro->parsed()) {
    int pass = 0;
    char* out = nullptr;
    if (auto s = vl_reproduce_paper(&pass, &out); s != VL_OK) return status_exit(s);
    return print_report_json_or_text(take(out), as_json);
  }
  return 2;
}
