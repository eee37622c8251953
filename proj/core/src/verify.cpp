#include "excseq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "excseq/bijection.hpp"
#include "excseq/chord.hpp"
#include "excseq/exceptional.hpp"
#include "excseq/homext.hpp"
#include "excseq/mutation.hpp"
#include "excseq/nc_tree.hpp"
#include "excseq/oracle.hpp"

namespace excseq {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Fails the check on the first counterexample, keeping its description.
struct Checker {
  long long checked = 0;
  bool passed = true;
  std::string failure;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && passed) {
      passed = false;
      failure = what;
    }
  }
};

bool region_contains(const std::vector<Interval>& region, const Interval& x) {
  return std::find(region.begin(), region.end(), x) != region.end();
}

ExceptionalSequence star_sequence(int n) {
  std::vector<Interval> modules;
  modules.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) modules.emplace_back(n, 0, j);
  return sequence_of_modules(n, modules);
}

}  // namespace

bool SuiteResult::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

int suite_bound(std::string_view suite) {
  for (const auto& [name, bound] : kVerifySuites) {
    if (name == suite) return bound;
  }
  throw std::invalid_argument("unknown verification suite '" + std::string(suite) + "'");
}

CheckResult verify_homext(int n) {
  const auto start = Clock::now();
  Checker check;
  const std::vector<Interval> modules = indecomposables(n);

  for (const Interval& x : modules) {
    for (const Interval& y : modules) {
      const int hom = hom_dim(x, y);
      const int oracle = hom_dim_oracle(x, y);
      check.expect(hom == oracle, "hom closed form " + std::to_string(hom) + " != oracle " +
                                      std::to_string(oracle) + " for " + x.to_string() + " -> " +
                                      y.to_string());
      const long long ext_via_euler = oracle - euler_form(dim_vector(x), dim_vector(y));
      check.expect(ext_via_euler == 0 || ext_via_euler == 1,
                   "ext oracle out of {0,1} for " + x.to_string() + " -> " + y.to_string());
      check.expect(ext_dim(x, y) == ext_via_euler,
                   "ext closed form != oracle for " + x.to_string() + " -> " + y.to_string());

      // Region duality against the dimension predicates.
      check.expect(region_contains(hom_region(x, RegionKind::HomOut), y) == (hom == 1),
                   "HomOut region disagrees with hom_dim at " + x.to_string());
      check.expect(region_contains(hom_region(y, RegionKind::HomIn), x) == (hom == 1),
                   "HomIn region disagrees with hom_dim at " + y.to_string());
      check.expect(region_contains(hom_region(x, RegionKind::ExtOut), y) == (ext_dim(x, y) == 1),
                   "ExtOut region disagrees with ext_dim at " + x.to_string());
      check.expect(region_contains(hom_region(y, RegionKind::ExtIn), x) == (ext_dim(x, y) == 1),
                   "ExtIn region disagrees with ext_dim at " + y.to_string());

      // Derived degrees concentrate once, with total dimension at most 1.
      int total = 0;
      for (const auto& [degree, dim] : derived_hom_degrees({x, 0}, {y, 0})) total += dim;
      check.expect(total <= 1, "derived total dimension > 1 for " + x.to_string() + " -> " +
                                   y.to_string());
    }
    check.expect(hom_dim(x, x) == 1 && ext_dim(x, x) == 0,
                 x.to_string() + " is not exceptional");
    if (x.i >= 1) {
      check.expect(hom_region(x, RegionKind::ExtOut) ==
                       hom_region(Interval(n, x.i - 1, x.j - 1), RegionKind::HomIn),
                   "translate identity fails at " + x.to_string());
    }
  }

  CheckResult result{"homext", check.passed, check.checked, "", ms_since(start)};
  result.detail = check.passed
                      ? std::to_string(modules.size() * modules.size()) + " ordered pairs agree with the oracle"
                      : check.failure;
  return result;
}

CheckResult verify_trichotomy(int n) {
  const auto start = Clock::now();
  Checker check;
  const std::vector<Interval> modules = indecomposables(n);

  for (std::size_t a = 0; a < modules.size(); ++a) {
    for (std::size_t b = a + 1; b < modules.size(); ++b) {
      const PairRelation algebraic = pair_relation(modules[a], modules[b]);
      const PairRelation geometric = pair_relation_geometric(modules[a], modules[b]);
      check.expect(algebraic == geometric, "relation mismatch for (" + modules[a].to_string() +
                                               ", " + modules[b].to_string() + ")");
      // Swapping the arguments mirrors the relation.
      const PairRelation reversed = pair_relation(modules[b], modules[a]);
      const PairRelation expected =
          algebraic == PairRelation::OnlyFirstSecond   ? PairRelation::OnlySecondFirst
          : algebraic == PairRelation::OnlySecondFirst ? PairRelation::OnlyFirstSecond
                                                       : algebraic;
      check.expect(reversed == expected, "relation not mirrored for (" + modules[a].to_string() +
                                             ", " + modules[b].to_string() + ")");
    }
  }

  CheckResult result{"trichotomy", check.passed, check.checked, "", ms_since(start)};
  result.detail = check.passed ? std::to_string(modules.size() * (modules.size() - 1) / 2) +
                                     " unordered pairs classified identically"
                               : check.failure;
  return result;
}

CheckResult verify_bijection_suite(int n, int jobs) {
  const auto start = Clock::now();
  const BijectionReport report = verify_bijection(n, jobs);
  CheckResult result{"bijection", report.matched,
                     static_cast<long long>(report.sequence_class_count + report.tree_count), "",
                     0.0};
  result.detail = std::to_string(report.sequence_class_count) + " classes = " +
                  std::to_string(report.tree_count) + " trees";
  if (!report.matched) {
    result.detail += "; " + std::to_string(report.missing_trees.size()) + " missing, " +
                     std::to_string(report.colliding_classes.size()) + " colliding";
  }
  result.elapsed_ms = ms_since(start);
  return result;
}

CheckResult verify_mutation(int n, int jobs) {
  const auto start = Clock::now();
  Checker check;
  const std::vector<Interval> modules = indecomposables(n);

  for (const Interval& x : modules) {
    for (const Interval& y : modules) {
      if (x == y || !is_exceptional_pair(x, y)) continue;
      const ShiftedObject e{x, 0}, f{y, 0};
      const MutationResult left = mutate_left(e, f);
      const MutationResult right = mutate_right(f, e);
      const std::string pair = "(" + x.to_string() + ", " + y.to_string() + ")";

      // Chord-level commutation.
      check.expect(phi(left.object) == chord_mutate(Direction::Left, phi(x), phi(y)),
                   "left mutation leaves the chord picture at " + pair);
      check.expect(phi(right.object) == chord_mutate(Direction::Right, phi(y), phi(x)),
                   "right mutation leaves the chord picture at " + pair);

      // Disjointness equivalences.
      const bool meets = meet_type(phi(x), phi(y)).kind != MeetType::Kind::Disjoint;
      const bool left_fixed = left.object == f;
      const bool right_fixed = right.object == e;
      const bool reverse_pair = is_exceptional_pair(y, x);
      const bool degrees_empty = derived_hom_degrees(e, f).empty();
      check.expect(left_fixed == !meets && right_fixed == !meets && reverse_pair == !meets &&
                       degrees_empty == !meets,
                   "disjointness equivalences disagree at " + pair);

      if (meets) {
        // Triangle-exact shift law: R = S^{-(d+1)} L with d the degree
        // where the Hom concentrates.
        const int d = derived_hom_degrees(e, f).begin()->first;
        check.expect(left.object.module == right.object.module &&
                         right.object.shift == left.object.shift - (d + 1),
                     "left/right shift law fails at " + pair);
        check.expect(left.tag == right.tag && left.tag != MutationCase::Disjoint,
                     "case tags disagree at " + pair);

        // Shift covariance of the defining triangles.
        const ShiftedObject e2{x, 2}, f2{y, -1};
        check.expect(mutate_left(e2, f2).object ==
                         ShiftedObject(left.object.module, left.object.shift - 1),
                     "left mutation not shift covariant at " + pair);
        check.expect(mutate_right(f2, e2).object ==
                         ShiftedObject(right.object.module, right.object.shift + 2),
                     "right mutation not shift covariant at " + pair);
      }
    }
  }

  // Braid action over the enumerated sequences.
  int max_shift_offset = 0;
  for (const ExceptionalSequence& seq : enumerate_complete_sequences(n, jobs)) {
    for (int k = 1; k <= n - 1; ++k) {
      const BraidLetter sk{BraidLetter::Kind::Braid, k};
      const BraidLetter sk_inv{BraidLetter::Kind::BraidInv, k};
      const ExceptionalSequence mutated = braid_apply_letter(sk, seq);
      check.expect(is_exceptional_sequence(mutated),
                   "s" + std::to_string(k) + " broke " + seq.to_string());
      check.expect(braid_apply_letter(sk_inv, mutated) == seq,
                   "inverse round trip failed at " + seq.to_string());
      check.expect(braid_apply_letter(sk, braid_apply_letter(sk_inv, seq)) == seq,
                   "other inverse round trip failed at " + seq.to_string());

      if (k + 1 <= n - 1) {
        const BraidLetter sk1{BraidLetter::Kind::Braid, k + 1};
        const ExceptionalSequence lhs =
            braid_apply_letter(sk, braid_apply_letter(sk1, braid_apply_letter(sk, seq)));
        const ExceptionalSequence rhs =
            braid_apply_letter(sk1, braid_apply_letter(sk, braid_apply_letter(sk1, seq)));
        bool modules_agree = true;
        for (std::size_t pos = 0; pos < lhs.objects.size(); ++pos) {
          modules_agree = modules_agree && lhs.objects[pos].module == rhs.objects[pos].module;
          max_shift_offset = std::max(
              max_shift_offset, std::abs(lhs.objects[pos].shift - rhs.objects[pos].shift));
        }
        check.expect(modules_agree, "braid relation failed on modules at " + seq.to_string());
      }
      for (int m = k + 2; m <= n - 1; ++m) {
        const BraidLetter sm{BraidLetter::Kind::Braid, m};
        check.expect(braid_apply_letter(sk, braid_apply_letter(sm, seq)) ==
                         braid_apply_letter(sm, braid_apply_letter(sk, seq)),
                     "far commutation failed at " + seq.to_string());
      }
    }
  }

  CheckResult result{"mutation", check.passed, check.checked, "", ms_since(start)};
  result.detail = check.passed
                      ? "commutation, disjointness equivalences and braid action hold; "
                        "braid-relation shift offsets all " +
                            std::to_string(max_shift_offset)
                      : check.failure;
  return result;
}

CheckResult verify_cyclic(int n, int jobs) {
  const auto start = Clock::now();
  Checker check;

  for (const Interval& x : indecomposables(n)) {
    Interval current = x;
    for (int step = 0; step < n + 1; ++step) current = rotate(current);
    check.expect(current == x, "rotation does not have order n+1 at " + x.to_string());
    check.expect(phi(rotate(x)) == rotate(phi(x)),
                 "rotation does not commute with the chord map at " + x.to_string());
  }

  for (const NCTree& tree : enumerate_nc_trees(n, jobs)) {
    std::vector<Chord> rotated;
    rotated.reserve(tree.chords.size());
    for (const Chord& c : tree.chords) rotated.push_back(rotate(c));
    check.expect(check_nc_spanning_tree(rotated, n).ok,
                 "rotated tree is not a tree: " + tree.to_string());
  }

  for (const ExceptionalSequence& seq : enumerate_complete_sequences(n, jobs)) {
    check.expect(is_exceptional_sequence(rotate(seq)),
                 "rotation broke the sequence " + seq.to_string());
  }

  CheckResult result{"cyclic", check.passed, check.checked, "", ms_since(start)};
  result.detail = check.passed ? "rotation preserves trees and sequences, order n+1, "
                                 "commutes with the chord map"
                               : check.failure;
  return result;
}

CheckResult verify_transitivity(int n) {
  const auto start = Clock::now();
  const std::set<ClassKey> orbit = orbit_classes(star_sequence(n), braid_generators(n));
  const BigNat expected = nc_tree_count(n);
  const bool passed = BigNat(orbit.size()) == expected;
  CheckResult result{"transitivity", passed, static_cast<long long>(orbit.size()), "",
                     ms_since(start)};
  result.detail = "orbit reaches " + std::to_string(orbit.size()) + " of " +
                  expected.to_string() + " classes";
  return result;
}

SuiteResult run_verification(int n, const std::vector<std::string>& suites, int jobs) {
  checked_rank(n);
  std::vector<std::string> selected = suites;
  if (selected.empty()) {
    for (const auto& [name, bound] : kVerifySuites) selected.emplace_back(name);
  }
  SuiteResult result{n, {}};
  for (const std::string& suite : selected) {
    suite_bound(suite);  // validates the name
    if (suite == "homext") result.checks.push_back(verify_homext(n));
    else if (suite == "trichotomy") result.checks.push_back(verify_trichotomy(n));
    else if (suite == "bijection") result.checks.push_back(verify_bijection_suite(n, jobs));
    else if (suite == "mutation") result.checks.push_back(verify_mutation(n, jobs));
    else if (suite == "cyclic") result.checks.push_back(verify_cyclic(n, jobs));
    else if (suite == "transitivity") result.checks.push_back(verify_transitivity(n));
  }
  return result;
}

nlohmann::json to_json(const SuiteResult& result) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& check : result.checks) {
    checks.push_back({{"name", check.name},
                      {"status", check.passed ? "pass" : "fail"},
                      {"checked", check.checked},
                      {"detail", check.detail},
                      {"elapsed_ms", check.elapsed_ms}});
  }
  return {{"n", result.n},
          {"status", result.all_passed() ? "pass" : "fail"},
          {"checks", std::move(checks)}};
}

}  // namespace excseq
