#include "parlab/int_series.hpp"

#include <algorithm>
#include <string>

namespace parlab {

IntSeries::IntSeries(std::size_t trunc) : coeffs_(trunc) {
  if (trunc == 0) throw std::invalid_argument("series truncation must be positive");
}

IntSeries::IntSeries(std::size_t trunc, std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (trunc == 0) throw std::invalid_argument("series truncation must be positive");
  coeffs_.resize(trunc);
}

SingularSpec::SingularSpec(std::int64_t k, std::int64_t i) : k_(k), i_(i) {
  if (i < 1 || 2 * i >= k)
    throw std::invalid_argument("singular overpartition parameters need 1 <= i < k/2 (got k = " + std::to_string(k) +
                                ", i = " + std::to_string(i) + ")");
}

SingularSpec SingularSpec::four_k(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("(4k, k) family needs k >= 1");
  return {4 * k, k};
}

namespace {

enum class Factor { one_minus, one_plus, geometric };

struct ProductFactor {
  std::size_t exponent;
  Factor kind;
};

}  // namespace

IntSeries singular_series(const SingularSpec& spec, std::size_t trunc) {
  if (trunc == 0) throw std::invalid_argument("series truncation must be positive");
  const auto k = static_cast<std::size_t>(spec.k());
  const auto i = static_cast<std::size_t>(spec.i());

  std::vector<ProductFactor> factors;
  for (std::size_t m = 1; m < trunc; ++m) {
    factors.push_back({m, Factor::geometric});
    if (k * m < trunc) factors.push_back({k * m, Factor::one_minus});
    if (k * (m - 1) + i < trunc) factors.push_back({k * (m - 1) + i, Factor::one_plus});
    if (k * m - i < trunc) factors.push_back({k * m - i, Factor::one_plus});
  }
  std::stable_sort(factors.begin(), factors.end(),
                   [](const ProductFactor& a, const ProductFactor& b) { return a.exponent < b.exponent; });

  std::vector<BigInt> c(trunc);
  c[0] = 1;
  for (const auto& [e, kind] : factors) {
    switch (kind) {
      case Factor::one_minus:
        for (std::size_t n = trunc - 1; n >= e; --n) c[n] -= c[n - e];
        break;
      case Factor::one_plus:
        for (std::size_t n = trunc - 1; n >= e; --n) c[n] += c[n - e];
        break;
      case Factor::geometric:
        // 1/(1 - q^e) = 1 + q^e + q^{2e} + ...
        for (std::size_t n = e; n < trunc; ++n) c[n] += c[n - e];
        break;
    }
  }
  return IntSeries(trunc, std::move(c));
}

namespace {

struct Enumerator {
  std::int64_t k;
  std::int64_t i;

  bool overlinable(std::int64_t part) const {
    const std::int64_t r = part % k;
    return r == i || r == k - i;
  }

  // Lists of parts p_1 >= p_2 >= ... summing to `remaining`, each part at most
  // `cap`; `previous` is the last part placed (0 if none).
  std::uint64_t count(std::int64_t remaining, std::int64_t cap, std::int64_t previous) const {
    if (remaining == 0) return 1;
    std::uint64_t total = 0;
    for (std::int64_t part = std::min(remaining, cap); part >= 1; --part) {
      if (part % k == 0) continue;
      const bool first_occurrence = part != previous;
      const std::uint64_t plain = count(remaining - part, part, part);
      total += plain;
      if (first_occurrence && overlinable(part)) total += count(remaining - part, part, part);
    }
    return total;
  }
};

}  // namespace

BigInt brute_force_count(std::int64_t k, std::int64_t i, std::int64_t n) {
  if (!(0 < i && i < k)) throw std::invalid_argument("brute-force count needs 0 < i < k");
  if (n < 0) throw std::invalid_argument("brute-force count needs n >= 0");
  if (n > kBruteForceMaxN)
    throw std::invalid_argument("brute-force enumeration is limited to n <= " + std::to_string(kBruteForceMaxN));
  return BigInt(Enumerator{k, i}.count(n, n, 0));
}

BitSeries reduce_mod2(const IntSeries& a) {
  BitSeries out(a.trunc());
  for (std::size_t n = 0; n < a.trunc(); ++n)
    if (boost::multiprecision::bit_test(boost::multiprecision::abs(a[n]), 0)) out.set(n);
  return out;
}

}  // namespace parlab
