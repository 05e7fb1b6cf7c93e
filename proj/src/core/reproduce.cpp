#include "core/reproduce.hpp"

#include <cmath>
#include <complex>

#include "core/errors.hpp"
#include "core/fusion.hpp"
#include "core/inclusion.hpp"
#include "core/levelrank.hpp"
#include "core/parse.hpp"

namespace verlinde {

namespace {

void push(report_document& rep, const std::string& name, bool pass, double dev) {
  rep.checks.push_back({name, pass, dev});
}

ordered_json cnum(const std::complex<double>& z) {
  return ordered_json::array({round12(z.real()), round12(z.imag())});
}

}  // namespace

report_document reproduce_paper() {
  report_document rep;
  rep.command = "reproduce-paper";

  // Example 2: su(3)_3 in so(8)_1
  {
    auto inc = builtin_inclusion("su3_3_in_so8");
    const auto& G = *inc.sub;
    const auto& H = *inc.amb;
    int ia = parse_label(G, "[2,1]");
    int iv = H.find("v");
    std::complex<double> saa = G.S(ia, ia), svv = H.S(iv, iv);
    std::complex<double> prod = saa * std::conj(svv);
    ordered_json ex2;
    ex2["S_aa"] = cnum(saa);
    ex2["S_vv"] = cnum(svv);
    ex2["product"] = cnum(prod);
    push(rep, "example2.S_aa = -1/2", std::abs(saa - std::complex<double>(-0.5)) < 1e-9,
         std::abs(saa - std::complex<double>(-0.5)));
    push(rep, "example2.S_vv = 1/2", std::abs(svv - std::complex<double>(0.5)) < 1e-9,
         std::abs(svv - std::complex<double>(0.5)));
    auto scan = kw_scan(inc);
    bool found = false;
    double best = 1e300;
    for (const auto& v : scan.violations) {
      double dd = std::abs(v.value - std::complex<double>(-0.25));
      best = std::min(best, dd);
      if (dd < 1e-9) found = true;
    }
    ex2["violations"] = static_cast<long long>(scan.violations.size());
    rep.results["example2"] = ex2;
    push(rep, "example2.kw_scan has violation -1/4", found, best);
  }

  // Example 3: su(4)_2 in su(6)_1
  {
    auto inc = builtin_inclusion("su4_2_in_su6");
    const auto& G = *inc.sub;
    const auto& H = *inc.amb;
    int imu = parse_label(G, "[1,1,0]");
    int iw = 1;
    std::complex<double> smm = G.S(imu, imu), sww = H.S(iw, iw);
    std::complex<double> expect_s = 1.0 / std::sqrt(6.0);
    std::complex<double> expect_w =
        std::polar(1.0 / std::sqrt(6.0), 2.0 * M_PI / 6.0);
    std::complex<double> expect_v = std::polar(1.0 / 6.0, -2.0 * M_PI / 6.0);
    ordered_json ex3;
    ex3["S_mumu"] = cnum(smm);
    ex3["S_ww"] = cnum(sww);
    push(rep, "example3.S_mumu = 1/sqrt(6)", std::abs(smm - expect_s) < 1e-9,
         std::abs(smm - expect_s));
    push(rep, "example3.S_ww = exp(2 pi i/6)/sqrt(6)", std::abs(sww - expect_w) < 1e-9,
         std::abs(sww - expect_w));
    auto scan = kw_scan(inc);
    bool found = false;
    double best = 1e300;
    for (const auto& v : scan.violations) {
      double dd = std::abs(v.value - expect_v);
      best = std::min(best, dd);
      if (dd < 1e-9) found = true;
    }
    ex3["violations"] = static_cast<long long>(scan.violations.size());
    rep.results["example3"] = ex3;
    push(rep, "example3.kw_scan has violation exp(-2 pi i/6)/6", found, best);
  }

  // The su(3)_9 in E6 counterexample
  {
    auto inc = builtin_inclusion("su3_9_in_e6");
    auto chk = verify_branching(inc);
    push(rep, "e6.verify_branching", chk.pass(), chk.s_residual);

    const auto& G = *inc.sub;
    auto fus = get_fusion(inc.sub);
    int a21 = parse_label(G, "[2,1]");
    int a42 = parse_label(G, "[4,2]");
    int a51 = parse_label(G, "[5,1]");
    // eq (3): d_{21}^2 = 6 d_{21} + 3; eq (4): d_{42} = 2 d_{21} + 2;
    // eq (5): d_{51} = 2 d_{21} + 1   (extension sectors all have dimension 1)
    auto r3 = dim_identity_check(G, {{1, {a21, a21}}}, {{6, {a21}}, {3, {}}});
    auto r4 = dim_identity_check(G, {{1, {a42}}}, {{2, {a21}}, {2, {}}});
    auto r5 = dim_identity_check(G, {{1, {a51}}}, {{2, {a21}}, {1, {}}});
    push(rep, "e6.dim identity eq3", r3.pass, r3.deviation);
    push(rep, "e6.dim identity eq4", r4.pass, r4.deviation);
    push(rep, "e6.dim identity eq5", r5.pass, r5.deviation);
    ordered_json dims;
    dims["d_21"] = round12(fus->qdim(a21));
    dims["d_42"] = round12(fus->qdim(a42));
    dims["d_51"] = round12(fus->qdim(a51));
    rep.results["e6_dimensions"] = dims;

    auto scan = kw_scan(inc);
    push(rep, "e6.kw_scan nonempty", !scan.violations.empty(),
         static_cast<double>(scan.violations.size()));
    rep.results["e6_violations"] = static_cast<long long>(scan.violations.size());

    push(rep, "e6.label_disjoint = false", !label_disjoint(inc), 0);
  }

  // The derived inequality, all triples, three inclusions
  for (const char* nm : {"su3_3_in_so8", "su4_2_in_su6", "su3_9_in_e6"}) {
    auto inc = builtin_inclusion(nm);
    auto ineq = kw_inequality_check(inc);
    push(rep, std::string("inequality.") + nm + " (" + std::to_string(ineq.triples) +
                  " triples)",
         ineq.failures == 0, static_cast<double>(ineq.failures));
  }

  // Level-rank: the (2,3) product inclusion
  {
    auto inc = builtin_inclusion("product(2,3)");
    auto chk = verify_branching(inc);
    push(rep, "levelrank.product(2,3) verify_branching", chk.pass(), chk.s_residual);
  }

  // Theorem 4.2 for n = 2 and n = 3
  for (int n : {2, 3}) {
    auto r = verify_th42(n);
    push(rep, "th42(" + std::to_string(n) + ") closures " + std::to_string(r.closure_a) +
                  "/" + std::to_string(r.closure_b),
         r.success, static_cast<double>(r.mismatches));
  }

  return rep;
}

}  // namespace verlinde
