#pragma once
// Catalog of certified entropy-sum minima and known saturating states, used
// by reports, the verification command, and the test suite.
#include <optional>
#include <string>
#include <vector>

#include "core/observables.hpp"
#include "core/state.hpp"

namespace eur {

struct CertifiedCase {
  std::string name;   // stable identifier, e.g. "spin2-triple"
  ObservableSet set;
  double value = 0.0;        // certified minimum of the entropy sum
  std::string source;        // "analytic" or "numerical"
  bool has_claimed = false;  // a differing reference value is tracked
  double claimed = 0.0;
  std::string note;
};

struct SaturatingCase {
  std::string name;
  std::string note;
  ObservableSet set;
  std::vector<Vec> states;  // every state must attain `expected`
  double expected = 0.0;
  double tol = 0.0;
};

// Full table of certified minima for the supported observable sets.
const std::vector<CertifiedCase>& certified_cases();

// Certified minimum for an observable set, if the registry covers it.
// Spin sets are matched by (spin, number of axes); MUB sets by (dimension,
// exact subset of the catalog).
std::optional<CertifiedCase> certified_lookup(const ObservableSet& set);

// Known saturating states with their expected values.
const std::vector<SaturatingCase>& saturating_cases();

struct CaseResult {
  std::string name;
  int state_index = 0;
  bool pass = false;
  double value = 0.0;
  double expected = 0.0;
  double residual = 0.0;
  double tol = 0.0;
};

// Checks every state of the named saturating case ("" = all cases) and
// returns one row per state. Throws DomainError for an unknown name.
std::vector<CaseResult> verify_cases(const std::string& name = "");

}  // namespace eur
