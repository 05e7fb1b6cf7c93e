#pragma once

#include <stdexcept>
#include <string>

namespace verlinde {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct unknown_name_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Verlinde sum further than 1e-6 from an integer: the modular data is corrupt.
struct integrality_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct modular_axiom_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct search_budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct solver_ambiguity_error : std::runtime_error {
  int candidate_count;
  solver_ambiguity_error(const std::string& msg, int count)
      : std::runtime_error(msg), candidate_count(count) {}
};

struct pairing_empty_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct pairing_ambiguous_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct bijection_failure_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct extension_ambiguous_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace verlinde
