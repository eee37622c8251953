#include <catch2/catch_amalgamated.hpp>

#include "excseq/mutation.hpp"
#include "excseq/nc_tree.hpp"

using namespace excseq;

namespace {

std::vector<Chord> chords5(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Chord> out;
  for (const auto& [p, q] : pairs) out.emplace_back(5, p, q);
  return out;
}

}  // namespace

TEST_CASE("tree predicate on the three reference diagrams") {
  // Star-ish tree on 6 points.
  const auto good = chords5({{1, 2}, {1, 3}, {0, 3}, {0, 4}, {0, 5}});
  CHECK(check_nc_spanning_tree(good, 5).ok);

  // Same five chords but closing the triangle 0-1-3.
  const auto cyclic = chords5({{0, 1}, {1, 3}, {0, 3}, {0, 4}, {0, 5}});
  const TreeCheck cycle_check = check_nc_spanning_tree(cyclic, 5);
  CHECK_FALSE(cycle_check.ok);
  CHECK(cycle_check.defect == TreeDefect::Cycle);

  // c(0,2) meets c(1,3) inside the circle.
  const auto crossing = chords5({{0, 2}, {1, 3}, {0, 3}, {0, 4}, {0, 5}});
  const TreeCheck crossing_check = check_nc_spanning_tree(crossing, 5);
  CHECK_FALSE(crossing_check.ok);
  CHECK(crossing_check.defect == TreeDefect::Crossing);
}

TEST_CASE("tree predicate rejects wrong sizes and duplicates") {
  const TreeCheck small = check_nc_spanning_tree(chords5({{0, 1}}), 5);
  CHECK((!small.ok && small.defect == TreeDefect::WrongSize));
  const TreeCheck dup = check_nc_spanning_tree(chords5({{0, 1}, {0, 1}, {0, 3}, {0, 4}, {0, 5}}), 5);
  CHECK((!dup.ok && dup.defect == TreeDefect::Cycle));
  CHECK_THROWS_AS(check_nc_spanning_tree({Chord(4, 0, 1)}, 5), std::invalid_argument);
  CHECK_THROWS_AS(make_nc_tree(chords5({{0, 2}, {1, 3}, {0, 3}, {0, 4}, {0, 5}}), 5),
                  std::invalid_argument);
}

TEST_CASE("enumeration counts match the closed form") {
  CHECK(enumerate_nc_trees(1).size() == 1);
  CHECK(enumerate_nc_trees(1).front().chords == std::vector<Chord>{Chord(1, 0, 1)});
  CHECK(enumerate_nc_trees(2).size() == 3);
  CHECK(enumerate_nc_trees(3).size() == 12);
  CHECK(enumerate_nc_trees(4).size() == 55);
  CHECK(enumerate_nc_trees(5).size() == 273);
  CHECK(enumerate_nc_trees(6).size() == 1428);
  for (int n = 1; n <= 6; ++n)
    CHECK(BigNat(enumerate_nc_trees(n).size()) == nc_tree_count(n));
}

TEST_CASE("enumeration is sorted, valid and duplicate free") {
  for (int n = 1; n <= 5; ++n) {
    const auto trees = enumerate_nc_trees(n);
    CHECK(std::is_sorted(trees.begin(), trees.end()));
    CHECK(std::adjacent_find(trees.begin(), trees.end()) == trees.end());
    for (const NCTree& tree : trees) {
      REQUIRE(check_nc_spanning_tree(tree.chords, n).ok);
      REQUIRE(std::is_sorted(tree.chords.begin(), tree.chords.end()));
    }
  }
}

TEST_CASE("enumeration equals the full subset scan") {
  // Every n-subset of chords passing the predicate is enumerated, and
  // nothing else.
  for (int n = 2; n <= 4; ++n) {
    const auto chords = all_chords(n);
    std::vector<NCTree> expected;
    std::vector<bool> take(chords.size(), false);
    std::fill(take.begin(), take.begin() + n, true);
    std::sort(take.begin(), take.end());
    do {
      std::vector<Chord> subset;
      for (std::size_t k = 0; k < chords.size(); ++k)
        if (take[k]) subset.push_back(chords[k]);
      if (check_nc_spanning_tree(subset, n).ok) expected.push_back(NCTree{n, subset});
    } while (std::next_permutation(take.begin(), take.end()));
    std::sort(expected.begin(), expected.end());
    CHECK(enumerate_nc_trees(n) == expected);
  }
}

TEST_CASE("parallel enumeration preserves the order") {
  for (int jobs : {2, 4, 7}) {
    CHECK(enumerate_nc_trees(5, jobs) == enumerate_nc_trees(5));
    CHECK(enumerate_nc_trees(1, jobs) == enumerate_nc_trees(1));
  }
}

TEST_CASE("rotating a tree gives a tree") {
  for (int n = 1; n <= 5; ++n) {
    for (const NCTree& tree : enumerate_nc_trees(n)) {
      std::vector<Chord> rotated;
      for (const Chord& c : tree.chords) rotated.push_back(rotate(c));
      CHECK(check_nc_spanning_tree(rotated, n).ok);
    }
  }
}

TEST_CASE("closed-form counts") {
  CHECK(nc_tree_count(1) == BigNat(1));
  CHECK(nc_tree_count(2) == BigNat(3));
  CHECK(nc_tree_count(3) == BigNat(12));
  CHECK(nc_tree_count(5) == BigNat(273));
  CHECK(nc_tree_count(9) == BigNat(246675));
  CHECK(nc_tree_count(10) == BigNat(1430715));
  // Far past 64-bit territory; the division by 2n+1 stays exact.
  CHECK(nc_tree_count(40).to_string() == "1414282077098335379544565517191");
  for (int n = 1; n <= 60; ++n) CHECK_NOTHROW(nc_tree_count(n));
  CHECK_THROWS_AS(nc_tree_count(0), std::invalid_argument);
}
