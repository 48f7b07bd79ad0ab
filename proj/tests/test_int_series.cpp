#include <doctest.h>

#include "oracles.hpp"
#include "parlab/int_series.hpp"
#include "parlab/qexpr.hpp"

using namespace parlab;

namespace {

BigInt to_big(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt out = 0;
  BigInt place = 1;
  while (u) {
    out += place * static_cast<unsigned>(u % 10);
    place *= 10;
    u /= 10;
  }
  return neg ? -out : out;
}

}  // namespace

TEST_SUITE("fps-int") {
  TEST_CASE("singular spec validation") {
    CHECK_NOTHROW(SingularSpec(4, 1));
    CHECK_NOTHROW(SingularSpec(7, 3));
    CHECK_THROWS_AS(SingularSpec(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(SingularSpec(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(SingularSpec(2, 1), std::invalid_argument);
    const auto s = SingularSpec::four_k(13);
    CHECK(s.k() == 52);
    CHECK(s.i() == 13);
  }

  TEST_CASE("C(0) = 1 and small values of C_{4,1}") {
    const auto c = singular_series(SingularSpec(4, 1), 11);
    CHECK(c[0] == 1);
    // Overpartitions of n into parts not divisible by 4, overlined parts odd.
    // n = 1: 1, 1bar.  n = 2: 2, 1+1, 1bar+1.  n = 3: 3, 3bar, 2+1, 2+1bar,
    // 1+1+1, 1bar+1+1.
    CHECK(c[1] == 2);
    CHECK(c[2] == 3);
    CHECK(c[3] == 6);
    for (std::int64_t n = 0; n <= 10; ++n) CHECK(brute_force_count(4, 1, n) == c[static_cast<std::size_t>(n)]);
  }

  TEST_CASE("product expansion agrees with an independent 128-bit expansion") {
    for (auto [k, i] : std::vector<std::pair<std::int64_t, std::int64_t>>{{4, 1}, {8, 2}, {20, 5}, {7, 3}, {92, 23}}) {
      const auto c = singular_series(SingularSpec(k, i), 150);
      const auto ref = oracle::singular_counts(k, i, 150);
      for (std::size_t n = 0; n < 150; ++n) {
        CAPTURE(k);
        CAPTURE(n);
        REQUIRE(c[n] == to_big(ref[n]));
      }
    }
  }

  TEST_CASE("brute-force enumeration equals the product for n <= 25") {
    for (auto [k, i] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {4, 1}, {8, 2}, {12, 3}, {20, 5}, {28, 7}, {44, 11}}) {
      const auto c = singular_series(SingularSpec(k, i), 26);
      for (std::int64_t n = 0; n <= 25; ++n) {
        CAPTURE(k);
        CAPTURE(n);
        CHECK(brute_force_count(k, i, n) == c[static_cast<std::size_t>(n)]);
      }
    }
  }

  TEST_CASE("brute force guards its domain") {
    CHECK_THROWS_AS(brute_force_count(4, 1, kBruteForceMaxN + 1), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_count(4, 1, -1), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_count(4, 0, 5), std::invalid_argument);
    CHECK(brute_force_count(4, 1, 0) == 1);
  }

  TEST_CASE("reduction mod 2 matches f_k^3/f_1") {
    for (std::int64_t k = 1; k <= 24; ++k) {
      CAPTURE(k);
      CHECK(reduce_mod2(singular_series(SingularSpec::four_k(k), 600)) == evaluate(singular_parity_expr(k), 600));
    }
  }

  TEST_CASE("coefficients grow past 64 bits without overflow") {
    const auto c = singular_series(SingularSpec(4, 1), 2000);
    const auto ref = oracle::singular_counts(4, 1, 200);
    CHECK(c[199] == to_big(ref[199]));
    CHECK(c[1999] > BigInt(std::numeric_limits<std::uint64_t>::max()));
  }

  TEST_CASE("reduce_mod2 handles negative coefficients") {
    IntSeries s(4, {BigInt(-3), BigInt(2), BigInt(-4), BigInt(7)});
    CHECK(reduce_mod2(s).to_string(4) == "1001");
  }
}
