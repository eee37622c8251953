#include <catch2/catch_amalgamated.hpp>

#include "excseq/interval.hpp"

using namespace excseq;

TEST_CASE("interval validation") {
  CHECK_NOTHROW(Interval(3, 0, 3));
  CHECK_THROWS_AS(Interval(0, 0, 1), std::invalid_argument);   // rank 0 rejected
  CHECK_THROWS_AS(Interval(3, 2, 2), std::invalid_argument);   // i < j required
  CHECK_THROWS_AS(Interval(3, -1, 2), std::invalid_argument);
  CHECK_THROWS_AS(Interval(3, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(indecomposables(0), std::invalid_argument);
}

TEST_CASE("indecomposables enumeration") {
  CHECK(indecomposables(1) == std::vector<Interval>{Interval(1, 0, 1)});

  const auto n3 = indecomposables(3);
  const std::vector<Interval> expected{Interval(3, 0, 1), Interval(3, 0, 2), Interval(3, 0, 3),
                                       Interval(3, 1, 2), Interval(3, 1, 3), Interval(3, 2, 3)};
  CHECK(n3 == expected);

  CHECK(indecomposables(4).size() == 10);
  for (int n = 1; n <= 8; ++n) {
    const auto all = indecomposables(n);
    CHECK(static_cast<int>(all.size()) == n * (n + 1) / 2);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
}

TEST_CASE("dimension vectors") {
  CHECK(dim_vector(Interval(3, 0, 3)) == DimVector{1, 1, 1});
  CHECK(dim_vector(Interval(3, 1, 2)) == DimVector{0, 1, 0});
  CHECK(dim_vector(Interval(1, 0, 1)) == DimVector{1});
  // Entry at vertex v is 1 exactly when i < v <= j.
  for (const Interval& x : indecomposables(5)) {
    const DimVector d = dim_vector(x);
    for (int v = 1; v <= 5; ++v)
      CHECK(d[static_cast<std::size_t>(v - 1)] == (x.i < v && v <= x.j ? 1 : 0));
  }
}

TEST_CASE("shifted objects and printing") {
  const ShiftedObject plain(Interval(3, 0, 2));
  const ShiftedObject shifted(Interval(3, 0, 2), -1);
  CHECK(plain.to_string() == "X(0,2)");
  CHECK(shifted.to_string() == "S^-1 X(0,2)");
  CHECK(plain != shifted);
  CHECK(plain == ShiftedObject(Interval(3, 0, 2), 0));
}

TEST_CASE("rank mismatch is rejected") {
  CHECK_THROWS_AS(require_same_rank(Interval(3, 0, 1), Interval(4, 0, 1)), std::invalid_argument);
  CHECK_NOTHROW(require_same_rank(Interval(3, 0, 1), Interval(3, 2, 3)));
}
