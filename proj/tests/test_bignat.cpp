#include <catch2/catch_amalgamated.hpp>

#include "excseq/bignat.hpp"

using excseq::BigNat;

TEST_CASE("small values and printing") {
  CHECK(BigNat(0).to_string() == "0");
  CHECK(BigNat(7).to_string() == "7");
  CHECK(BigNat(1'000'000'000).to_string() == "1000000000");
  CHECK(BigNat(123'456'789'012'345'678ull).to_string() == "123456789012345678");
  CHECK(BigNat(0).is_zero());
  CHECK_FALSE(BigNat(1).is_zero());
}

TEST_CASE("multiply, add, divide") {
  BigNat x(999'999'999);
  x.mul_small(999'999'999);
  CHECK(x.to_string() == "999999998000000001");

  BigNat sum(1);
  sum.add(BigNat(999'999'999));
  CHECK(sum.to_string() == "1000000000");

  BigNat q(1'000'000'000'000ull);
  CHECK(q.div_small(7) == 1'000'000'000'000ull % 7);

  CHECK_THROWS_AS(BigNat(10).div_small_exact(3), std::domain_error);
  CHECK(BigNat(10).div_small_exact(5) == BigNat(2));
  CHECK_THROWS_AS(BigNat(10).div_small(0), std::domain_error);
}

TEST_CASE("comparisons") {
  CHECK(BigNat(5) < BigNat(6));
  CHECK(BigNat(1'000'000'000'000ull) > BigNat(999'999'999'999ull));
  CHECK(BigNat(42) == BigNat(42));
  CHECK(BigNat::power(10, 30) > BigNat::power(9, 30));
}

TEST_CASE("binomials against Pascal's triangle") {
  // Independent route: additive recurrence only.
  constexpr int kRows = 76;
  std::vector<std::vector<BigNat>> pascal(kRows);
  for (int a = 0; a < kRows; ++a) {
    pascal[a].resize(static_cast<std::size_t>(a) + 1, BigNat(1));
    for (int b = 1; b < a; ++b) {
      pascal[a][static_cast<std::size_t>(b)] = pascal[a - 1][static_cast<std::size_t>(b - 1)];
      pascal[a][static_cast<std::size_t>(b)].add(pascal[a - 1][static_cast<std::size_t>(b)]);
    }
  }
  for (int a = 0; a < kRows; ++a)
    for (int b = 0; b <= a; ++b)
      REQUIRE(BigNat::binomial(a, b) == pascal[a][static_cast<std::size_t>(b)]);

  CHECK(BigNat::binomial(60, 20).to_string() == "4191844505805495");
  CHECK(BigNat::binomial(3, 5).is_zero());
}

TEST_CASE("powers") {
  CHECK(BigNat::power(4, 2) == BigNat(16));
  CHECK(BigNat::power(10, 0) == BigNat(1));
  CHECK(BigNat::power(2, 100).to_string() == "1267650600228229401496703205376");
}

TEST_CASE("u64 narrowing") {
  CHECK(BigNat(UINT64_MAX).fits_u64());
  CHECK(BigNat(UINT64_MAX).as_u64() == UINT64_MAX);
  BigNat big = BigNat(UINT64_MAX);
  big.add(BigNat(1));
  CHECK_FALSE(big.fits_u64());
  CHECK_THROWS_AS(big.as_u64(), std::overflow_error);
}
