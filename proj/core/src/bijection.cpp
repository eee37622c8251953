#include "excseq/bijection.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace excseq {

Chord phi(const Interval& x) { return Chord(x.n, x.i, x.j); }

Chord phi(const ShiftedObject& x) { return phi(x.module); }

Interval phi_inverse(const Chord& c) { return Interval(c.n, c.p, c.q); }

NCTree tree_of_sequence(const ExceptionalSequence& seq) {
  if (!seq.complete()) {
    throw std::invalid_argument("tree_of_sequence requires a complete sequence of length " +
                                std::to_string(seq.n));
  }
  if (const auto bad = first_failing_pair(seq)) {
    throw std::invalid_argument(
        "not an exceptional sequence: pair (" +
        seq.objects[static_cast<std::size_t>(bad->first)].to_string() + ", " +
        seq.objects[static_cast<std::size_t>(bad->second)].to_string() + ") fails");
  }
  std::vector<Chord> chords;
  chords.reserve(seq.objects.size());
  for (const ShiftedObject& obj : seq.objects) chords.push_back(phi(obj));
  std::sort(chords.begin(), chords.end());
  return NCTree{seq.n, std::move(chords)};
}

ExceptionalSequence sequence_from_tree(const NCTree& tree) {
  const TreeCheck check = check_nc_spanning_tree(tree.chords, tree.n);
  if (!check.ok) throw std::invalid_argument("not a non-crossing spanning tree: " + check.detail);

  std::vector<Chord> remaining = tree.chords;
  std::sort(remaining.begin(), remaining.end());

  ExceptionalSequence seq{tree.n, {}};
  seq.objects.reserve(remaining.size());
  while (!remaining.empty()) {
    bool found = false;
    for (std::size_t c = 0; c < remaining.size() && !found; ++c) {
      const Interval candidate = phi_inverse(remaining[c]);
      bool eligible = true;
      for (std::size_t d = 0; d < remaining.size() && eligible; ++d) {
        if (d == c) continue;
        eligible = is_exceptional_pair(candidate, phi_inverse(remaining[d]));
      }
      if (eligible) {
        seq.objects.emplace_back(candidate, 0);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(c));
        found = true;
      }
    }
    if (!found) {
      throw std::logic_error("no eligible chord while ordering " + tree.to_string() +
                             "; tree validation and the pair predicate disagree");
    }
  }
  return seq;
}

BijectionReport verify_bijection(int n, int jobs) {
  checked_rank(n);
  BijectionReport report;
  report.n = n;

  // Collect tree_of_sequence per class, checking along the way that all
  // members of a class land on the same tree.
  std::map<ClassKey, NCTree> tree_by_class;
  for (const ExceptionalSequence& seq : enumerate_complete_sequences(n, jobs)) {
    const ClassKey key = class_key(seq);
    const NCTree tree = tree_of_sequence(seq);
    const auto [it, inserted] = tree_by_class.emplace(key, tree);
    if (!inserted && it->second != tree)
      throw std::logic_error("class " + to_string(key) + " maps to two different trees");
  }
  report.sequence_class_count = tree_by_class.size();

  const std::vector<NCTree> trees = enumerate_nc_trees(n, jobs);
  report.tree_count = trees.size();

  // Injectivity.
  std::map<NCTree, ClassKey> class_by_tree;
  for (const auto& [key, tree] : tree_by_class) {
    const auto [it, inserted] = class_by_tree.emplace(tree, key);
    if (!inserted) {
      report.colliding_classes.push_back(it->second);
      report.colliding_classes.push_back(key);
    }
  }

  // Surjectivity onto the enumerated trees, plus the round trip.
  for (const NCTree& tree : trees) {
    if (!class_by_tree.contains(tree)) report.missing_trees.push_back(tree);
    const ExceptionalSequence ordered = sequence_from_tree(tree);
    if (!is_exceptional_sequence(ordered) || tree_of_sequence(ordered) != tree)
      throw std::logic_error("sequence_from_tree failed to round-trip " + tree.to_string());
  }

  report.matched = report.missing_trees.empty() && report.colliding_classes.empty() &&
                   report.sequence_class_count == report.tree_count;
  return report;
}

}  // namespace excseq
