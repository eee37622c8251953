#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace excseq {

struct CheckResult {
  std::string name;
  bool passed = false;
  long long checked = 0;    // number of elementary facts verified
  std::string detail;       // headline counts, or the first counterexample
  double elapsed_ms = 0.0;
};

struct SuiteResult {
  int n = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

// Suite names accepted by run_verification, with the documented exhaustive
// bound per suite.
inline constexpr std::array<std::pair<std::string_view, int>, 6> kVerifySuites{{
    {"homext", 8},       // closed forms vs oracle, regions, derived degrees
    {"trichotomy", 8},   // Hom/Ext pair relation vs the chord picture
    {"bijection", 5},    // class -> tree bijection and round trips
    {"mutation", 6},     // chord/module commutation, disjoint equivalences, braid action
    {"cyclic", 4},       // rotation action on modules, chords and sequences
    {"transitivity", 4}, // braid orbit reaches every class
}};

int suite_bound(std::string_view suite);  // throws on unknown name

CheckResult verify_homext(int n);
CheckResult verify_trichotomy(int n);
CheckResult verify_bijection_suite(int n, int jobs = 1);
CheckResult verify_mutation(int n, int jobs = 1);
CheckResult verify_cyclic(int n, int jobs = 1);
CheckResult verify_transitivity(int n);

// Runs the named suites (all six when `suites` is empty) at rank n.
SuiteResult run_verification(int n, const std::vector<std::string>& suites, int jobs = 1);

nlohmann::json to_json(const SuiteResult& result);

}  // namespace excseq
