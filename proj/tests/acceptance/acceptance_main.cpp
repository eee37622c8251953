// Acceptance suite: exhaustive end-to-end checks, one line per criterion.
// Exit code 0 iff every criterion passes.  Values are exact; each criterion
// also carries a wall-clock budget that is enforced.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "excseq/bijection.hpp"
#include "excseq/exceptional.hpp"
#include "excseq/homext.hpp"
#include "excseq/json_io.hpp"
#include "excseq/mutation.hpp"
#include "excseq/nc_tree.hpp"
#include "excseq/oracle.hpp"
#include "excseq/svg.hpp"

using namespace excseq;

namespace {

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<std::string()> run;  // empty string = pass, else failure detail
};

// ---- 1: counting -----------------------------------------------------------

std::string criterion_counting() {
  const std::vector<std::uint64_t> tree_counts{1, 3, 12, 55, 273};
  const std::vector<std::uint64_t> sequence_counts{1, 3, 16, 125, 1296};
  for (int n = 1; n <= 5; ++n) {
    const auto idx = static_cast<std::size_t>(n - 1);
    const std::uint64_t trees = enumerate_nc_trees(n).size();
    const std::uint64_t seqs = enumerate_complete_sequences(n).size();
    if (trees != tree_counts[idx])
      return "n=" + std::to_string(n) + ": enumerated " + std::to_string(trees) +
             " trees, expected " + std::to_string(tree_counts[idx]);
    if (nc_tree_count(n) != BigNat(tree_counts[idx]))
      return "n=" + std::to_string(n) + ": closed-form tree count disagrees";
    if (seqs != sequence_counts[idx])
      return "n=" + std::to_string(n) + ": enumerated " + std::to_string(seqs) +
             " sequences, expected " + std::to_string(sequence_counts[idx]);
    if (sequence_count(n) != BigNat(sequence_counts[idx]))
      return "n=" + std::to_string(n) + ": closed-form sequence count disagrees";
  }
  if (enumerate_complete_sequences(3).size() != 16 || enumerate_nc_trees(3).size() != 12)
    return "rank 3 does not reproduce 16 sequences and 12 trees";
  return "";
}

// ---- 2: closed forms vs oracle ---------------------------------------------

std::string criterion_oracle() {
  for (int n = 1; n <= 8; ++n) {
    for (const Interval& a : indecomposables(n)) {
      for (const Interval& b : indecomposables(n)) {
        const int hom = hom_dim(a, b);
        const int oracle = hom_dim_oracle(a, b);
        if (hom != oracle)
          return "hom mismatch at n=" + std::to_string(n) + " " + a.to_string() + " -> " +
                 b.to_string();
        const long long ext = oracle - euler_form(dim_vector(a), dim_vector(b));
        if (ext != 0 && ext != 1)
          return "ext oracle out of {0,1} at " + a.to_string() + " -> " + b.to_string();
        if (ext_dim(a, b) != ext)
          return "ext mismatch at n=" + std::to_string(n) + " " + a.to_string() + " -> " +
                 b.to_string();
      }
    }
  }
  return "";
}

// ---- 3: trichotomy ----------------------------------------------------------

std::string criterion_trichotomy() {
  for (int n = 1; n <= 8; ++n) {
    const auto modules = indecomposables(n);
    for (std::size_t a = 0; a < modules.size(); ++a) {
      for (std::size_t b = a + 1; b < modules.size(); ++b) {
        if (pair_relation(modules[a], modules[b]) !=
            pair_relation_geometric(modules[a], modules[b]))
          return "relation mismatch at n=" + std::to_string(n) + " (" + modules[a].to_string() +
                 ", " + modules[b].to_string() + ")";
      }
    }
  }
  return "";
}

// ---- 4: the bijection -------------------------------------------------------

std::string criterion_bijection() {
  for (int n = 1; n <= 5; ++n) {
    const BijectionReport report = verify_bijection(n);
    if (!report.matched)
      return "bijection report not matched at n=" + std::to_string(n) + " (" +
             std::to_string(report.sequence_class_count) + " classes vs " +
             std::to_string(report.tree_count) + " trees)";
  }

  // The known rank-3 pairings, frozen in the golden file.
  std::ifstream golden_file(std::string(EXCSEQ_GOLDEN_DIR) + "/n3_pairings.json");
  if (!golden_file.good()) return "golden file n3_pairings.json missing";
  const nlohmann::json golden = nlohmann::json::parse(golden_file);
  if (golden["pairings"].size() != 12) return "golden file must list 12 pairings";

  std::set<NCTree> golden_trees;
  std::size_t golden_sequence_count = 0;
  for (const auto& pairing : golden["pairings"]) {
    NCTree tree{3, {}};
    for (const auto& chord : pairing["tree"])
      tree.chords.emplace_back(3, chord[0].get<int>(), chord[1].get<int>());
    std::sort(tree.chords.begin(), tree.chords.end());
    golden_trees.insert(tree);
    for (const auto& listed : pairing["sequences"]) {
      std::vector<Interval> modules;
      for (const auto& entry : listed)
        modules.emplace_back(3, entry[0].get<int>(), entry[1].get<int>());
      const ExceptionalSequence seq = sequence_of_modules(3, modules);
      ++golden_sequence_count;
      if (!is_exceptional_sequence(seq))
        return "golden sequence " + seq.to_string() + " is not exceptional";
      if (tree_of_sequence(seq) != tree)
        return "golden sequence " + seq.to_string() + " does not map to its listed tree";
    }
  }
  const auto trees = enumerate_nc_trees(3);
  if (golden_trees != std::set<NCTree>(trees.begin(), trees.end()))
    return "golden trees differ from the enumerated rank-3 trees";
  if (golden_sequence_count != 16) return "golden file must list all 16 sequences";
  return "";
}

// ---- 5: mutation commutes with the chord picture ----------------------------

std::string criterion_commutation() {
  for (int n = 1; n <= 6; ++n) {
    for (const Interval& x : indecomposables(n)) {
      for (const Interval& y : indecomposables(n)) {
        if (x == y || !is_exceptional_pair(x, y)) continue;
        const ShiftedObject e{x, 0}, f{y, 0};
        const MutationResult left = mutate_left(e, f);
        const MutationResult right = mutate_right(f, e);
        const std::string pair = "(" + x.to_string() + ", " + y.to_string() + ")";
        if (phi(left.object) != chord_mutate(Direction::Left, phi(x), phi(y)))
          return "left commutation fails at " + pair;
        if (phi(right.object) != chord_mutate(Direction::Right, phi(y), phi(x)))
          return "right commutation fails at " + pair;

        const bool disjoint = meet_type(phi(x), phi(y)).kind == MeetType::Kind::Disjoint;
        const bool conditions[5] = {left.object == f, right.object == e,
                                    is_exceptional_pair(y, x), derived_hom_degrees(e, f).empty(),
                                    disjoint};
        for (int c = 1; c < 5; ++c)
          if (conditions[c] != conditions[0])
            return "disjointness equivalences disagree at " + pair;
      }
    }
  }
  return "";
}

// ---- 6: group actions --------------------------------------------------------

std::string criterion_group_actions() {
  for (int n = 1; n <= 4; ++n) {
    // Rotation has order n+1 on the indecomposables and matches the chord
    // rotation through the correspondence.
    for (const Interval& m : indecomposables(n)) {
      Interval current = m;
      for (int step = 0; step <= n; ++step) current = rotate(current);
      if (current != m) return "rotation order is not n+1 at " + m.to_string();
      if (phi(rotate(m)) != rotate(phi(m)))
        return "rotation does not commute with the chord map at " + m.to_string();
    }

    for (const ExceptionalSequence& seq : enumerate_complete_sequences(n)) {
      if (!is_exceptional_sequence(rotate(seq)))
        return "rotation broke " + seq.to_string();
      for (int k = 1; k <= n - 1; ++k) {
        const BraidLetter sk{BraidLetter::Kind::Braid, k};
        const BraidLetter sk_inv{BraidLetter::Kind::BraidInv, k};
        const ExceptionalSequence mutated = braid_apply_letter(sk, seq);
        if (!is_exceptional_sequence(mutated))
          return "s" + std::to_string(k) + " broke " + seq.to_string();
        const ExceptionalSequence restored = braid_apply_letter(sk_inv, mutated);
        for (std::size_t pos = 0; pos < restored.objects.size(); ++pos)
          if (restored.objects[pos].module != seq.objects[pos].module)
            return "inverse round trip changed modules at " + seq.to_string();

        if (k + 1 <= n - 1) {
          const BraidLetter sk1{BraidLetter::Kind::Braid, k + 1};
          const ExceptionalSequence lhs =
              braid_apply_letter(sk, braid_apply_letter(sk1, braid_apply_letter(sk, seq)));
          const ExceptionalSequence rhs =
              braid_apply_letter(sk1, braid_apply_letter(sk, braid_apply_letter(sk1, seq)));
          for (std::size_t pos = 0; pos < lhs.objects.size(); ++pos)
            if (lhs.objects[pos].module != rhs.objects[pos].module)
              return "braid relation fails on modules at " + seq.to_string();
        }
        for (int m = k + 2; m <= n - 1; ++m) {
          const BraidLetter sm{BraidLetter::Kind::Braid, m};
          const ExceptionalSequence lhs = braid_apply_letter(sk, braid_apply_letter(sm, seq));
          const ExceptionalSequence rhs = braid_apply_letter(sm, braid_apply_letter(sk, seq));
          for (std::size_t pos = 0; pos < lhs.objects.size(); ++pos)
            if (lhs.objects[pos].module != rhs.objects[pos].module)
              return "far commutation fails at " + seq.to_string();
        }
      }
    }
  }
  return "";
}

// ---- 7: transitivity certificate ---------------------------------------------

std::string criterion_transitivity() {
  const auto star = [](int n) {
    std::vector<Interval> modules;
    for (int j = 1; j <= n; ++j) modules.emplace_back(n, 0, j);
    return sequence_of_modules(n, modules);
  };
  const std::size_t reached3 = orbit_classes(star(3), braid_generators(3)).size();
  if (reached3 != 12) return "orbit at n=3 reached " + std::to_string(reached3) + " of 12 classes";
  const std::size_t reached4 = orbit_classes(star(4), braid_generators(4)).size();
  if (reached4 != 55) return "orbit at n=4 reached " + std::to_string(reached4) + " of 55 classes";
  return "";
}

// ---- 8: rendering -------------------------------------------------------------

std::string criterion_rendering() {
  // The 6-point reference tree.
  const NCTree tree = make_nc_tree(
      {Chord(5, 1, 2), Chord(5, 1, 3), Chord(5, 0, 3), Chord(5, 0, 4), Chord(5, 0, 5)}, 5);

  for (std::size_t a = 0; a < tree.chords.size(); ++a)
    for (std::size_t b = a + 1; b < tree.chords.size(); ++b)
      if (meet_type(tree.chords[a], tree.chords[b]).kind == MeetType::Kind::InteriorCross)
        return "reference tree has an interior crossing";

  const std::string svg = render_svg(tree);
  const auto count = [&](const std::string& needle) {
    std::size_t hits = 0, pos = 0;
    while ((pos = svg.find(needle, pos)) != std::string::npos) { ++hits; pos += needle.size(); }
    return hits;
  };
  if (count("<line class=\"chord\"") != 5)
    return "expected exactly 5 chord segments, found " +
           std::to_string(count("<line class=\"chord\""));
  if (count("<text class=\"label\"") != 6)
    return "expected exactly 6 labeled points, found " +
           std::to_string(count("<text class=\"label\""));
  if (render_svg(tree) != svg) return "svg output is not byte stable";
  return "";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "counting: tree and sequence enumerations match the closed forms for n=1..5", 5.0,
       criterion_counting},
      {2, "closed-form Hom/Ext equals the rational-elimination oracle for all pairs, n<=8", 10.0,
       criterion_oracle},
      {3, "Hom/Ext pair trichotomy equals the chord classification for all pairs, n<=8", 5.0,
       criterion_trichotomy},
      {4, "class -> tree map is a bijection with round trips for n<=5, rank-3 pairings golden",
       30.0, criterion_bijection},
      {5, "module mutation commutes with chord mutation; disjointness equivalences, n<=6", 20.0,
       criterion_commutation},
      {6, "braid and rotation actions preserve sequences and satisfy their relations, n<=4", 60.0,
       criterion_group_actions},
      {7, "braid orbit from the star sequence reaches all 12 (n=3) and 55 (n=4) classes", 60.0,
       criterion_transitivity},
      {8, "reference 6-point diagram renders 5 chords, 6 labels, byte-stable", 5.0,
       criterion_rendering},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = criterion.run();
    } catch (const std::exception& error) {
      detail = std::string("exception: ") + error.what();
    }
    const double seconds = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - start).count();
    if (detail.empty() && seconds > criterion.budget_seconds)
      detail = "exceeded the " + std::to_string(criterion.budget_seconds) + "s budget";
    const bool passed = detail.empty();
    failures += passed ? 0 : 1;
    std::printf("[%s] %d %s (%.2fs)%s%s\n", passed ? "PASS" : "FAIL", criterion.id,
                criterion.title.c_str(), seconds, passed ? "" : ": ", detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
