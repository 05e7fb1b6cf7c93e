#include "verlinde.h"

#include <cstring>
#include <string>

#include "core/config.hpp"
#include "core/errors.hpp"
#include "core/fusion.hpp"
#include "core/inclusion.hpp"
#include "core/levelrank.hpp"
#include "core/modular.hpp"
#include "core/parse.hpp"
#include "core/report.hpp"
#include "core/reproduce.hpp"

#define VL_EXPORT __attribute__((visibility("default")))

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
vl_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return VL_OK;
  } catch (const verlinde::parse_error& e) {
    g_last_error = e.what();
    return VL_E_PARSE;
  } catch (const verlinde::unknown_name_error& e) {
    g_last_error = e.what();
    return VL_E_UNKNOWN;
  } catch (const verlinde::integrality_error& e) {
    g_last_error = e.what();
    return VL_E_INTEGRALITY;
  } catch (const verlinde::search_budget_error& e) {
    g_last_error = e.what();
    return VL_E_BUDGET;
  } catch (const verlinde::pairing_empty_error& e) {
    g_last_error = e.what();
    return VL_E_PAIRING;
  } catch (const verlinde::pairing_ambiguous_error& e) {
    g_last_error = e.what();
    return VL_E_PAIRING;
  } catch (const verlinde::solver_ambiguity_error& e) {
    g_last_error = e.what();
    return VL_E_AMBIGUOUS;
  } catch (const verlinde::extension_ambiguous_error& e) {
    g_last_error = e.what();
    return VL_E_AMBIGUOUS;
  } catch (const verlinde::bijection_failure_error& e) {
    g_last_error = e.what();
    return VL_E_VERIFY;
  } catch (const verlinde::modular_axiom_error& e) {
    g_last_error = e.what();
    return VL_E_VERIFY;
  } catch (const verlinde::resource_limit_error& e) {
    g_last_error = e.what();
    return VL_E_LIMIT;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return VL_E_INVALID;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return VL_E_INTERNAL;
  }
}

}  // namespace

struct vl_algebra {
  verlinde::modular_ptr data;
  std::shared_ptr<verlinde::fusion_context> fusion;
};

struct vl_inclusion {
  verlinde::conformal_inclusion inc;
};

struct vl_kw_scan {
  verlinde::kw_scan_result result;
};

extern "C" {

VL_EXPORT const char* vl_status_name(vl_status s) {
  switch (s) {
    case VL_OK: return "ok";
    case VL_E_INVALID: return "invalid argument";
    case VL_E_PARSE: return "parse error";
    case VL_E_UNKNOWN: return "unknown name";
    case VL_E_INTEGRALITY: return "integrality error";
    case VL_E_BUDGET: return "search budget exceeded";
    case VL_E_PAIRING: return "pairing error";
    case VL_E_AMBIGUOUS: return "ambiguous";
    case VL_E_VERIFY: return "verification failed";
    case VL_E_LIMIT: return "resource limit";
    default: return "internal error";
  }
}

VL_EXPORT const char* vl_last_error(void) { return g_last_error.c_str(); }

VL_EXPORT void vl_string_free(char* s) { delete[] s; }

VL_EXPORT void vl_set_tolerance(double tol) {
  if (tol > 0) verlinde::global_config().tol = tol;
}

VL_EXPORT void vl_set_max_labels(int max_labels) {
  if (max_labels > 0) verlinde::global_config().max_labels = max_labels;
}

VL_EXPORT vl_status vl_algebra_open(const char* spec, vl_algebra** out) {
  if (!spec || !out) return VL_E_INVALID;
  return guarded([&] {
    auto d = verlinde::get_modular(spec);
    *out = new vl_algebra{d, verlinde::get_fusion(d)};
  });
}

VL_EXPORT void vl_algebra_close(vl_algebra* a) { delete a; }

VL_EXPORT int vl_algebra_size(const vl_algebra* a) { return a ? a->data->size() : 0; }

VL_EXPORT const char* vl_algebra_spec(const vl_algebra* a) {
  return a ? a->data->spec.c_str() : "";
}

VL_EXPORT vl_status vl_algebra_label_name(const vl_algebra* a, int idx, char** out) {
  if (!a || !out || idx < 0 || idx >= a->data->size()) return VL_E_INVALID;
  *out = dup_string(a->data->names[idx]);
  return VL_OK;
}

VL_EXPORT vl_status vl_algebra_label_dynkin(const vl_algebra* a, int idx, char** out) {
  if (!a || !out || idx < 0 || idx >= a->data->size()) return VL_E_INVALID;
  if (!a->data->weights.empty())
    *out = dup_string(a->data->weights[idx].to_string_dynkin());
  else
    *out = dup_string(a->data->names[idx]);
  return VL_OK;
}

VL_EXPORT vl_status vl_algebra_find_label(const vl_algebra* a, const char* literal,
                                          int* idx) {
  if (!a || !literal || !idx) return VL_E_INVALID;
  return guarded([&] { *idx = verlinde::parse_label(*a->data, literal); });
}

VL_EXPORT vl_status vl_algebra_s_entry(const vl_algebra* a, int i, int j, double* re,
                                       double* im) {
  if (!a || !re || !im || i < 0 || j < 0 || i >= a->data->size() || j >= a->data->size())
    return VL_E_INVALID;
  *re = a->data->S(i, j).real();
  *im = a->data->S(i, j).imag();
  return VL_OK;
}

VL_EXPORT vl_status vl_algebra_t_entry(const vl_algebra* a, int i, double* re, double* im) {
  if (!a || !re || !im || i < 0 || i >= a->data->size()) return VL_E_INVALID;
  *re = a->data->T[i].real();
  *im = a->data->T[i].imag();
  return VL_OK;
}

VL_EXPORT vl_status vl_algebra_h(const vl_algebra* a, int i, long long* num,
                                 long long* den) {
  if (!a || !num || !den || i < 0 || i >= a->data->size()) return VL_E_INVALID;
  *num = a->data->h[i].numerator();
  *den = a->data->h[i].denominator();
  return VL_OK;
}

VL_EXPORT vl_status vl_algebra_central_charge(const vl_algebra* a, long long* num,
                                              long long* den) {
  if (!a || !num || !den) return VL_E_INVALID;
  *num = a->data->c.numerator();
  *den = a->data->c.denominator();
  return VL_OK;
}

VL_EXPORT vl_status vl_algebra_conjugate(const vl_algebra* a, int i, int* out) {
  if (!a || !out || i < 0 || i >= a->data->size()) return VL_E_INVALID;
  *out = a->data->conj[i];
  return VL_OK;
}

VL_EXPORT vl_status vl_algebra_qdim(const vl_algebra* a, int i, double* out) {
  if (!a || !out || i < 0 || i >= a->data->size()) return VL_E_INVALID;
  *out = a->data->qdim(i);
  return VL_OK;
}

VL_EXPORT vl_status vl_algebra_fusion(const vl_algebra* a, int x, int y, int z,
                                      long long* out) {
  if (!a || !out) return VL_E_INVALID;
  return guarded([&] { *out = a->fusion->coeff(x, y, z); });
}

VL_EXPORT vl_status vl_smatrix_json(const vl_algebra* a, char** json) {
  if (!a || !json) return VL_E_INVALID;
  return guarded([&] {
    using verlinde::ordered_json;
    using verlinde::round12;
    const auto& d = *a->data;
    ordered_json j;
    j["labels"] = d.names;
    ordered_json sre = ordered_json::array(), sim = ordered_json::array(),
                 t = ordered_json::array();
    for (int r = 0; r < d.size(); ++r) {
      ordered_json rr = ordered_json::array(), ri = ordered_json::array();
      for (int c = 0; c < d.size(); ++c) {
        rr.push_back(round12(d.S(r, c).real()));
        ri.push_back(round12(d.S(r, c).imag()));
      }
      sre.push_back(rr);
      sim.push_back(ri);
      t.push_back(ordered_json::array({round12(d.T[r].real()), round12(d.T[r].imag())}));
    }
    j["S_re"] = sre;
    j["S_im"] = sim;
    j["T"] = t;
    *json = dup_string(j.dump(2) + "\n");
  });
}

VL_EXPORT vl_status vl_algebra_verify_json(const vl_algebra* a, char** json) {
  if (!a || !json) return VL_E_INVALID;
  return guarded([&] {
    auto chk = verlinde::verify_modular(*a->data);
    verlinde::report_document rep;
    rep.command = "verify";
    rep.inputs["algebra"] = a->data->spec;
    rep.checks.push_back({"symmetry", chk.symmetry_dev < chk.tol, chk.symmetry_dev});
    rep.checks.push_back({"unitarity", chk.unitarity_dev < chk.tol, chk.unitarity_dev});
    rep.checks.push_back({"vacuum row positive", chk.vacuum_row_min > 0, 0});
    rep.checks.push_back({"S^2 = C", chk.conj_is_permutation && chk.conj_dev < chk.tol,
                          chk.conj_dev});
    rep.checks.push_back({"(ST)^3 = S^2", chk.st3_dev < chk.tol, chk.st3_dev});
    *json = dup_string(rep.dump());
  });
}

VL_EXPORT vl_status vl_inclusion_open(const char* name, vl_inclusion** out) {
  if (!name || !out) return VL_E_INVALID;
  return guarded([&] { *out = new vl_inclusion{verlinde::builtin_inclusion(name)}; });
}

VL_EXPORT void vl_inclusion_close(vl_inclusion* inc) { delete inc; }

VL_EXPORT const char* vl_inclusion_name(const vl_inclusion* inc) {
  return inc ? inc->inc.name.c_str() : "";
}

VL_EXPORT vl_status vl_inclusion_sub(const vl_inclusion* inc, vl_algebra** out) {
  if (!inc || !out) return VL_E_INVALID;
  return guarded([&] { *out = new vl_algebra{inc->inc.sub, verlinde::get_fusion(inc->inc.sub)}; });
}

VL_EXPORT vl_status vl_inclusion_amb(const vl_inclusion* inc, vl_algebra** out) {
  if (!inc || !out) return VL_E_INVALID;
  return guarded([&] { *out = new vl_algebra{inc->inc.amb, verlinde::get_fusion(inc->inc.amb)}; });
}

VL_EXPORT vl_status vl_inclusion_b(const vl_inclusion* inc, int amb_idx, int sub_idx,
                                   long long* out) {
  if (!inc || !out || amb_idx < 0 || sub_idx < 0 || amb_idx >= inc->inc.amb->size() ||
      sub_idx >= inc->inc.sub->size())
    return VL_E_INVALID;
  *out = inc->inc.b(amb_idx, sub_idx);
  return VL_OK;
}

VL_EXPORT vl_status vl_inclusion_label_disjoint(const vl_inclusion* inc, int* out) {
  if (!inc || !out) return VL_E_INVALID;
  *out = verlinde::label_disjoint(inc->inc) ? 1 : 0;
  return VL_OK;
}

VL_EXPORT vl_status vl_inclusion_verify_json(const vl_inclusion* inc, char** json) {
  if (!inc || !json) return VL_E_INVALID;
  return guarded([&] {
    auto chk = verlinde::verify_branching(inc->inc);
    verlinde::report_document rep;
    rep.command = "verify-branching";
    rep.inputs["inclusion"] = inc->inc.name;
    rep.checks.push_back({"vacuum multiplicity", chk.vacuum_ok, 0});
    rep.checks.push_back({"S-intertwining", chk.s_residual < 1e-8, chk.s_residual});
    rep.checks.push_back({"h-integrality", chk.h_failures.empty(),
                          static_cast<double>(chk.h_failures.size())});
    rep.checks.push_back({"conjugation symmetry", chk.conj_symmetric, 0});
    rep.checks.push_back({"row dimensions under conjugation", chk.row_dim_dev < 1e-8,
                          chk.row_dim_dev});
    *json = dup_string(rep.dump());
  });
}

VL_EXPORT vl_status vl_branch_json(const vl_inclusion* inc, char** json) {
  if (!inc || !json) return VL_E_INVALID;
  return guarded([&] {
    using verlinde::ordered_json;
    const auto& ic = inc->inc;
    ordered_json j;
    j["schema"] = "verlinde.branching/1";
    j["name"] = ic.name;
    j["sub"] = ic.sub->spec;
    j["amb"] = ic.amb->spec;
    j["amb_labels"] = ic.amb->names;
    j["sub_labels"] = ic.sub->names;
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < ic.amb->size(); ++r) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c < ic.sub->size(); ++c) row.push_back(ic.b(r, c));
      rows.push_back(row);
    }
    j["b"] = rows;
    *json = dup_string(j.dump(2) + "\n");
  });
}

VL_EXPORT vl_status vl_kw_scan_run(const vl_inclusion* inc, vl_kw_scan** out) {
  if (!inc || !out) return VL_E_INVALID;
  return guarded([&] { *out = new vl_kw_scan{verlinde::kw_scan(inc->inc)}; });
}

VL_EXPORT void vl_kw_scan_close(vl_kw_scan* s) { delete s; }

VL_EXPORT int vl_kw_scan_violation_count(const vl_kw_scan* s) {
  return s ? static_cast<int>(s->result.violations.size()) : 0;
}

VL_EXPORT long long vl_kw_scan_pairs_checked(const vl_kw_scan* s) {
  return s ? s->result.pairs_checked : 0;
}

VL_EXPORT vl_status vl_kw_scan_violation(const vl_kw_scan* s, int idx, int* i, int* lam,
                                         int* j, int* mu, double* re, double* im) {
  if (!s || idx < 0 || idx >= static_cast<int>(s->result.violations.size()))
    return VL_E_INVALID;
  const auto& v = s->result.violations[idx];
  if (i) *i = v.i;
  if (lam) *lam = v.lam;
  if (j) *j = v.j;
  if (mu) *mu = v.mu;
  if (re) *re = v.value.real();
  if (im) *im = v.value.imag();
  return VL_OK;
}

VL_EXPORT vl_status vl_kw_check_json(const vl_inclusion* inc, char** json) {
  if (!inc || !json) return VL_E_INVALID;
  return guarded([&] {
    using verlinde::ordered_json;
    using verlinde::round12;
    const auto& ic = inc->inc;
    auto scan = verlinde::kw_scan(ic);
    verlinde::report_document rep;
    rep.command = "kw-check";
    rep.inputs["inclusion"] = ic.name;
    rep.results["pairs_checked"] = scan.pairs_checked;
    rep.results["holds"] = scan.violations.empty();
    ordered_json arr = ordered_json::array();
    for (const auto& v : scan.violations) {
      ordered_json e;
      e["i"] = ic.amb->names[v.i];
      e["lambda"] = ic.sub->names[v.lam];
      e["j"] = ic.amb->names[v.j];
      e["mu"] = ic.sub->names[v.mu];
      e["re"] = round12(v.value.real());
      e["im"] = round12(v.value.imag());
      arr.push_back(e);
    }
    rep.results["violations"] = arr;
    auto chk = verlinde::verify_branching(ic);
    rep.checks.push_back({"branching verified", chk.pass(), chk.s_residual});
    *json = dup_string(rep.dump());
  });
}

VL_EXPORT vl_status vl_kw_inequality(const vl_inclusion* inc, long long* triples,
                                     long long* failures, long long* strict) {
  if (!inc) return VL_E_INVALID;
  return guarded([&] {
    auto r = verlinde::kw_inequality_check(inc->inc);
    if (triples) *triples = r.triples;
    if (failures) *failures = r.failures;
    if (strict) *strict = r.strict;
  });
}

VL_EXPORT vl_status vl_levelrank_beta(int m, int n, const char* weight, char** out) {
  if (!weight || !out) return VL_E_INVALID;
  return guarded([&] {
    auto w = verlinde::parse_weight(weight, m, n);
    auto img = verlinde::beta_map(w, n);
    bool dynkin = weight[0] == 'd';
    *out = dup_string(dynkin ? img.to_string_dynkin() : img.to_string());
  });
}

VL_EXPORT vl_status vl_levelrank_pair(int m, int n, const char* weight, int Lambda,
                                      char** out) {
  if (!weight || !out) return VL_E_INVALID;
  return guarded([&] {
    auto w = verlinde::parse_weight(weight, m, n);
    auto img = verlinde::lr_pair(w, Lambda);
    bool dynkin = weight[0] == 'd';
    *out = dup_string(dynkin ? img.to_string_dynkin() : img.to_string());
  });
}

VL_EXPORT vl_status vl_levelrank_table_json(int m, int n, char** json) {
  if (!json) return VL_E_INVALID;
  return guarded([&] {
    using verlinde::ordered_json;
    auto table = verlinde::levelrank_table(m, n);
    ordered_json j;
    j["schema"] = "verlinde.levelrank/1";
    j["m"] = m;
    j["n"] = n;
    ordered_json arr = ordered_json::array();
    for (const auto& e : table) {
      ordered_json row;
      row["weight"] = e.lhs.to_string();
      row["Lambda"] = e.Lambda;
      row["partner"] = e.rhs.to_string();
      row["twist"] = e.twist;
      arr.push_back(row);
    }
    j["pairs"] = arr;
    *json = dup_string(j.dump(2) + "\n");
  });
}

VL_EXPORT vl_status vl_levelrank_verify_th42(int n, int* pass, char** json) {
  return guarded([&] {
    auto r = verlinde::verify_th42(n);
    if (pass) *pass = r.success ? 1 : 0;
    if (json) {
      verlinde::report_document rep;
      rep.command = "levelrank verify-th42";
      rep.inputs["n"] = n;
      rep.results["subsectors"] = r.subsectors;
      rep.results["closure_sizes"] = verlinde::ordered_json::array({r.closure_a, r.closure_b});
      rep.results["triples_compared"] = r.triples_compared;
      if (!r.detail.empty()) rep.results["detail"] = r.detail;
      rep.checks.push_back({"structure constants agree", r.success,
                            static_cast<double>(r.mismatches)});
      *json = dup_string(rep.dump());
    }
  });
}

VL_EXPORT vl_status vl_reproduce_paper(int* pass, char** json) {
  return guarded([&] {
    auto rep = verlinde::reproduce_paper();
    if (pass) *pass = rep.all_pass() ? 1 : 0;
    if (json) *json = dup_string(rep.dump());
  });
}

}  // extern "C"
