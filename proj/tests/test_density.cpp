#include <doctest.h>

#include <json.hpp>

#include "oracles.hpp"
#include "parlab/density.hpp"
#include "parlab/int_series.hpp"
#include "parlab/qexpr.hpp"
#include "parlab/theorems.hpp"

using namespace parlab;

TEST_SUITE("density") {
  TEST_CASE("decimal rendering: half-even, trailing zeros dropped") {
    CHECK(render_decimal(46, 100, 2) == "0.46");
    CHECK(render_decimal(50, 100, 2) == "0.5");
    CHECK(render_decimal(100, 100, 2) == "1");
    CHECK(render_decimal(0, 7, 3) == "0");
    CHECK(render_decimal(1, 8, 2) == "0.12");
    CHECK(render_decimal(3, 8, 2) == "0.38");
    CHECK(render_decimal(1, 3, 6) == "0.333333");
    CHECK(render_decimal(2, 3, 6) == "0.666667");
    CHECK(render_decimal(5, 4, 0) == "1");
    CHECK(render_decimal(7, 4, 0) == "2");
    CHECK_THROWS(render_decimal(1, 0, 2));
    CHECK(render_density({1, 7}) == "0.142857");
  }

  TEST_CASE("the k x M reference grid") {
    // Published values, M = 10^2 .. 10^5.
    const std::vector<std::vector<std::string>> expected = {
        {"0.46", "0.603", "0.688", "0.7455"},     // k = 2
        {"0.5", "0.607", "0.6923", "0.74656"},    // k = 6
        {"0.51", "0.617", "0.6927", "0.74705"},   // k = 10
        {"0.47", "0.48", "0.4937", "0.499"},      // k = 14
        {"0.47", "0.477", "0.5014", "0.50012"},   // k = 18
        {"0.39", "0.477", "0.4986", "0.49813"},   // k = 22
    };
    const auto table = remark_table();
    REQUIRE(table.size() == 6);
    for (std::size_t r = 0; r < 6; ++r) {
      CHECK(table[r].k == kRemarkKs[r]);
      REQUIRE(table[r].samples.size() == 4);
      for (std::size_t c = 0; c < 4; ++c) {
        CAPTURE(table[r].k);
        CAPTURE(table[r].samples[c].M);
        CHECK(table[r].samples[c].decimal == expected[r][c]);
      }
    }
  }

  TEST_CASE("extension values for k = 52, 60, 68") {
    const std::vector<std::int64_t> ks = {52, 60, 68};
    const std::vector<std::size_t> Ms = {100000};
    const auto grid = density_grid(ks, Ms);
    CHECK(grid[0].samples[0].decimal == "0.49684");
    CHECK(grid[1].samples[0].decimal == "0.49725");
    CHECK(grid[2].samples[0].decimal == "0.49929");
  }

  TEST_CASE("small grid against the naive expansion") {
    // f_2^3/f_1 mod 2 to 11 terms, counted by hand-rolled arithmetic.
    const auto p = oracle::eta_quotient({{2, 3}, {1, -1}}, 11);
    std::uint64_t zeros = 0;
    for (std::size_t n = 1; n <= 10; ++n) zeros += p[n] == 0;
    const std::vector<std::int64_t> ks = {2};
    const std::vector<std::size_t> Ms = {10};
    const auto grid = density_grid(ks, Ms);
    CHECK(grid[0].samples[0].density.zeros == zeros);
    CHECK(grid[0].samples[0].density.total == 10);
    CHECK(grid[0].samples[0].decimal == render_decimal(zeros, 10, 1));
  }

  TEST_CASE("integer and eta-quotient paths give the same densities") {
    const std::vector<std::size_t> Ms = {1000};
    for (std::int64_t k = 1; k <= 23; ++k) {
      const std::vector<std::int64_t> ks = {k};
      const auto via_eta = density_grid(ks, Ms)[0].samples[0].density;
      const auto via_int = zero_density(reduce_mod2(singular_series(SingularSpec::four_k(k), 1001)), 1000);
      CAPTURE(k);
      CHECK(via_eta == via_int);
    }
  }

  TEST_CASE("trend report: lacunary k have rising density") {
    const std::vector<std::size_t> Ms = {1000, 100000};
    for (std::int64_t k : {2, 4, 6, 8, 10, 12, 24, 40, 48}) {
      REQUIRE(theorem1_condition(k));
      const std::vector<std::int64_t> ks = {k};
      const auto r = density_grid(ks, Ms)[0];
      CAPTURE(k);
      CHECK(r.samples[1].density.value() > r.samples[0].density.value());
    }
  }

  TEST_CASE("budget and argument checks") {
    const std::vector<std::int64_t> ks = {2};
    const std::vector<std::size_t> big = {200000};
    CHECK_THROWS_AS(density_grid(ks, big), BudgetExceeded);
    CHECK_NOTHROW(density_grid(ks, big, 200001));
    const std::vector<std::size_t> none;
    CHECK_THROWS(density_grid(ks, none));
    const std::vector<std::int64_t> zero = {0};
    const std::vector<std::size_t> Ms = {10};
    CHECK_THROWS(density_grid(zero, Ms));
  }

  TEST_CASE("output formats") {
    const std::vector<std::int64_t> ks = {2, 6};
    const std::vector<std::size_t> Ms = {100, 1000};
    const auto grid = density_grid(ks, Ms);
    const auto csv = format_csv(grid);
    CHECK(csv.rfind("k,M,zero_count,decimal,fraction\n", 0) == 0);
    CHECK(csv.find("2,100,46,0.46,46/100\n") != std::string::npos);
    CHECK(csv.find("6,1000,607,0.607,607/1000\n") != std::string::npos);

    const auto doc = nlohmann::json::parse(format_json(grid));
    CHECK(doc["command"] == "density");
    REQUIRE(doc["rows"].size() == 4);
    CHECK(doc["rows"][0]["k"] == 2);
    CHECK(doc["rows"][0]["zero_count"] == 46);
    CHECK(doc["rows"][0]["fraction"] == "46/100");

    const auto plain = format_plain(grid);
    CHECK(plain.find("delta_6") != std::string::npos);
    CHECK(plain.find("0.607") != std::string::npos);
  }
}
