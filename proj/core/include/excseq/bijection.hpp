#pragma once

#include <cstdint>
#include <vector>

#include "excseq/exceptional.hpp"
#include "excseq/nc_tree.hpp"

namespace excseq {

// The index-preserving correspondence X(i,j) <-> c(i,j), extended to shifted
// objects by forgetting the shift.
Chord phi(const Interval& x);
Chord phi(const ShiftedObject& x);
Interval phi_inverse(const Chord& c);

// Chord set of a complete exceptional sequence; always a non-crossing
// spanning tree.  Throws std::invalid_argument naming the failing pair when
// the input is not a complete exceptional sequence.
NCTree tree_of_sequence(const ExceptionalSequence& seq);

// Constructive inverse: repeatedly append the lexicographically smallest
// chord whose module forms an exceptional pair with every module still
// remaining.  For a genuine tree an eligible chord always exists; running
// out is an internal invariant violation (std::logic_error).
ExceptionalSequence sequence_from_tree(const NCTree& tree);

struct BijectionReport {
  int n = 0;
  std::uint64_t sequence_class_count = 0;
  std::uint64_t tree_count = 0;
  bool matched = false;
  std::vector<NCTree> missing_trees;       // enumerated trees hit by no class
  std::vector<ClassKey> colliding_classes; // classes sharing a tree with another class
};

// Exhaustively checks that class -> tree is well defined, injective and
// surjective at rank n, and that sequence_from_tree round-trips every tree.
// Practical bound n <= 5.
BijectionReport verify_bijection(int n, int jobs = 1);

}  // namespace excseq
