#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "excseq/bignat.hpp"
#include "excseq/chord.hpp"

namespace excseq {

// Non-crossing spanning tree on the circle with n+1 points: n chords, no
// interior crossing, no cycle in the endpoint graph.  With n edges and no
// cycle on n+1 vertices, spanning connectedness follows.
struct NCTree {
  int n = 0;
  std::vector<Chord> chords;  // sorted lexicographically

  friend auto operator<=>(const NCTree&, const NCTree&) = default;
  std::string to_string() const;
};

enum class TreeDefect { None, WrongSize, Crossing, Cycle, Disconnected };

struct TreeCheck {
  bool ok = false;
  TreeDefect defect = TreeDefect::None;
  std::string detail;
};

TreeCheck check_nc_spanning_tree(const std::vector<Chord>& chords, int n);

// Validated constructor; throws std::invalid_argument with the defect.
NCTree make_nc_tree(std::vector<Chord> chords, int n);

// Exhaustive, duplicate-free, in lexicographic order of the sorted chord
// lists.  With jobs > 1 the search is partitioned on the first chord and
// merged back in order, so the output is identical for any job count.
// Practical bound n <= 8 (43263 trees); larger n grows as ~27^n/n^3.
std::vector<NCTree> enumerate_nc_trees(int n, int jobs = 1);

// Streaming form of the above (always sequential).
void for_each_nc_tree(int n, const std::function<void(const NCTree&)>& emit);

// Closed form C(3n, n) / (2n + 1); the division is always exact.
BigNat nc_tree_count(int n);

}  // namespace excseq
