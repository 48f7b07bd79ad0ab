#include "parlab/properties.hpp"

#include <algorithm>
#include <functional>

namespace parlab {

BitSeries random_series(std::mt19937_64& rng, std::size_t trunc, bool unit) {
  std::vector<BitSeries::Word> w(BitSeries::words_for(trunc));
  for (auto& x : w) x = rng();
  BitSeries s(trunc, std::move(w));
  if (unit) s.set(0);
  return s;
}

namespace {

// Interleaves extract(a, m, r) for r = 0..m-1 back into one series.
BitSeries interleave(const std::vector<BitSeries>& parts, std::size_t trunc) {
  BitSeries out(trunc);
  const std::size_t m = parts.size();
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t n = 0; n < parts[r].trunc(); ++n)
      if (parts[r][n]) out.set(m * n + r);
  return out;
}

}  // namespace

std::vector<PropertyResult> run_property_suite(std::uint64_t seed, std::size_t instances, std::size_t trunc) {
  std::mt19937_64 rng(seed);
  const std::size_t half = (trunc + 1) / 2;

  struct Check {
    std::string name;
    std::function<bool()> holds;
  };
  const std::vector<Check> checks = {
      {"add-involution",
       [&] {
         auto a = random_series(rng, trunc), b = random_series(rng, trunc);
         return add(add(a, b), b) == a && add(a, a).is_zero();
       }},
      {"mul-commutative",
       [&] {
         auto a = random_series(rng, trunc), b = random_series(rng, trunc);
         return mul(a, b) == mul(b, a);
       }},
      {"mul-associative",
       [&] {
         auto a = random_series(rng, trunc), b = random_series(rng, trunc), c = random_series(rng, trunc);
         return mul(mul(a, b), c) == mul(a, mul(b, c));
       }},
      {"distributive",
       [&] {
         auto a = random_series(rng, trunc), b = random_series(rng, trunc), c = random_series(rng, trunc);
         return mul(a, add(b, c)) == add(mul(a, b), mul(a, c));
       }},
      {"frobenius-square",
       [&] {
         auto a = random_series(rng, trunc);
         return mul(a, a) == magnify(a, 2, trunc);
       }},
      {"inverse-two-sided",
       [&] {
         auto a = random_series(rng, trunc, true);
         auto x = inverse(a);
         const auto one = BitSeries::one(trunc);
         return mul(a, x) == one && mul(x, a) == one;
       }},
      {"dissection-complete",
       [&] {
         auto a = random_series(rng, trunc);
         const std::size_t m = 1 + rng() % std::min<std::size_t>(7, trunc);
         std::vector<BitSeries> parts;
         for (std::size_t r = 0; r < m; ++r) parts.push_back(extract(a, m, r));
         return interleave(parts, trunc) == a;
       }},
      {"u2-product-rule",
       [&] {
         auto a = random_series(rng, trunc), b = random_series(rng, half);
         const BitSeries lhs = extract(mul(a, magnify(b, 2, trunc)), 2, 0);
         const BitSeries rhs = mul(extract(a, 2, 0), retrunc(b, lhs.trunc()));
         return lhs == rhs;
       }},
      {"extract-magnify-adjoint",
       [&] {
         auto a = random_series(rng, trunc);
         const std::size_t t = 2 + rng() % 6;
         const BitSeries big = magnify(a, t);
         if (extract(big, t, 0) != a) return false;
         for (std::size_t r = 1; r < t; ++r)
           if (!extract(big, t, r).is_zero()) return false;
         return true;
       }},
      {"karatsuba-matches-shift-xor",
       [&] {
         auto a = random_series(rng, trunc), b = random_series(rng, trunc);
         return mul_karatsuba(a, b) == mul_shift_xor(a, b);
       }},
  };

  std::vector<PropertyResult> out;
  for (const auto& check : checks) {
    PropertyResult r{check.name, instances, 0, std::nullopt};
    for (std::size_t i = 0; i < instances; ++i) {
      if (!check.holds()) {
        ++r.failures;
        if (!r.first_failure) r.first_failure = i;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace parlab
