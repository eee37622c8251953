#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "excseq/bignat.hpp"
#include "excseq/interval.hpp"

namespace excseq {

// Ordered list of derived-category objects.  Whether it actually is an
// exceptional sequence is a predicate, not a constructor invariant.
struct ExceptionalSequence {
  int n = 0;
  std::vector<ShiftedObject> objects;

  friend auto operator<=>(const ExceptionalSequence&, const ExceptionalSequence&) = default;

  bool complete() const { return static_cast<int>(objects.size()) == n; }
  std::string to_string() const;  // "(X(0,1), X(0,2), ...)"
};

ExceptionalSequence sequence_of_modules(int n, const std::vector<Interval>& modules);

// (E, F) is an exceptional pair iff Hom(F, E) = Ext^1(F, E) = 0.  Shifts do
// not matter, so the predicate works on underlying modules.  E = F is
// rejected: Hom(E, E) never vanishes.
bool is_exceptional_pair(const Interval& e, const Interval& f);

// How an unordered pair of distinct modules sits relative to the pair
// condition: both orders work, neither does, or exactly one.
enum class PairRelation { BothOrders, NeitherOrder, OnlyFirstSecond, OnlySecondFirst };

// From the Hom/Ext data.
PairRelation pair_relation(const Interval& x, const Interval& y);

// From the picture: disjoint chords give BothOrders, an interior crossing
// gives NeitherOrder, a shared endpoint gives exactly one order, decided by
// the four distance conditions
//   i=i': d(i,j) < d(i',j')     i=j': d(i,j) < d(j',i')
//   j=i': d(j,i) < d(i',j')     j=j': d(j,i) < d(j',i')
// (any of them holding means the (x, y) order is the exceptional one).
PairRelation pair_relation_geometric(const Interval& x, const Interval& y);

// True iff (E_a, E_b) is an exceptional pair for all a < b.  Checked on
// underlying modules; a repeated module fails via Hom(E, E) != 0.
bool is_exceptional_sequence(const ExceptionalSequence& seq);

// First (a, b), a < b, whose pair condition fails; nullopt when none does.
std::optional<std::pair<int, int>> first_failing_pair(const ExceptionalSequence& seq);

// All complete exceptional sequences with every shift 0, in lexicographic
// order of the module index lists.  Exhaustive backtracking; practical
// bound n <= 6 ((n+1)^(n-1) sequences).  jobs > 1 partitions on the first
// module, output order is unchanged.
std::vector<ExceptionalSequence> enumerate_complete_sequences(int n, int jobs = 1);
void for_each_complete_sequence(int n, const std::function<void(const ExceptionalSequence&)>& emit);

// Closed form (n+1)^(n-1).
BigNat sequence_count(int n);

// Sorted set of the underlying modules.  Two complete exceptional sequences
// are equivalent (permutation plus shifts) iff their keys agree.
using ClassKey = std::vector<Interval>;

// Requires a complete exceptional sequence; throws std::invalid_argument
// naming the failing pair otherwise.
ClassKey class_key(const ExceptionalSequence& seq);

std::string to_string(const ClassKey& key);

}  // namespace excseq
