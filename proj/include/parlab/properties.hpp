#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "parlab/bit_series.hpp"

namespace parlab {

inline constexpr std::uint64_t kDefaultSeed = 20240229;

/// Uniformly random coefficients; `unit` forces c_0 = 1.
BitSeries random_series(std::mt19937_64& rng, std::size_t trunc, bool unit = false);

struct PropertyResult {
  std::string name;
  std::size_t instances;
  std::size_t failures;
  /// Index of the first failing instance.
  std::optional<std::size_t> first_failure;

  bool passed() const noexcept { return failures == 0; }
};

/// Ring axioms, Frobenius squaring, two-sided inverse, dissection
/// completeness, the U_2 product rule and extract/magnify adjunction, each on
/// `instances` random series of length `trunc`.
std::vector<PropertyResult> run_property_suite(std::uint64_t seed = kDefaultSeed, std::size_t instances = 200,
                                               std::size_t trunc = 512);

}  // namespace parlab
