#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "parlab/bit_series.hpp"

namespace parlab {

using BigInt = boost::multiprecision::cpp_int;

/// Truncated power series with exact integer coefficients.
class IntSeries {
 public:
  explicit IntSeries(std::size_t trunc);
  IntSeries(std::size_t trunc, std::vector<BigInt> coeffs);

  std::size_t trunc() const noexcept { return coeffs_.size(); }
  const BigInt& operator[](std::size_t n) const { return coeffs_[n]; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const IntSeries&, const IntSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Parameters (k, i) of the singular overpartition count C_{k,i}(n).
/// The product expansion needs 1 <= i and 2i < k, so that the classes +-i
/// are distinct.
class SingularSpec {
 public:
  SingularSpec(std::int64_t k, std::int64_t i);
  /// The (4k, k) family.
  static SingularSpec four_k(std::int64_t k);

  std::int64_t k() const noexcept { return k_; }
  std::int64_t i() const noexcept { return i_; }

 private:
  std::int64_t k_;
  std::int64_t i_;
};

/// Coefficients C_{k,i}(0..N-1) from the infinite product
/// prod_m (1 - q^{km})(1 + q^{k(m-1)+i})(1 + q^{km-i}) / (1 - q^m).
IntSeries singular_series(const SingularSpec& spec, std::size_t trunc);

/// C_{k,i}(n) by enumerating overpartitions of n whose parts avoid multiples
/// of k and whose overlined parts are all +-i mod k. Exponential in n.
BigInt brute_force_count(std::int64_t k, std::int64_t i, std::int64_t n);

/// Enumeration guardrail for brute_force_count.
inline constexpr std::int64_t kBruteForceMaxN = 40;

BitSeries reduce_mod2(const IntSeries& a);

}  // namespace parlab
