#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "parlab/bit_series.hpp"

namespace parlab {

inline constexpr std::size_t kDefaultExpansionBudget = 200000;

class BudgetExceeded : public std::invalid_argument {
 public:
  BudgetExceeded(std::size_t needed, std::size_t budget);
};

struct DensityCell {
  std::size_t M;
  ZeroDensity density;
  /// Exact decimal when M is a power of ten, else rounded to six places;
  /// trailing zeros dropped.
  std::string decimal;
};

/// delta_k(M) = #{1 <= n <= M : C_{4k,k}(n) even} / M for several M.
struct DensityReport {
  std::int64_t k;
  std::vector<DensityCell> samples;
  std::string source = "f_k^3/f_1 mod 2";
};

/// Expands f_k^3/f_1 once per k to max(Ms)+1 terms.
std::vector<DensityReport> density_grid(std::span<const std::int64_t> ks, std::span<const std::size_t> Ms,
                                        std::size_t budget = kDefaultExpansionBudget);

/// num/den to `places` decimals, round-half-even, trailing zeros dropped.
std::string render_decimal(std::uint64_t num, std::uint64_t den, unsigned places);
std::string render_density(const ZeroDensity& d);

inline const std::vector<std::int64_t> kRemarkKs = {2, 6, 10, 14, 18, 22};
inline const std::vector<std::size_t> kRemarkMs = {100, 1000, 10000, 100000};

/// The 6 x 4 grid k in {2,6,...,22}, M in {10^2,...,10^5}.
std::vector<DensityReport> remark_table();

std::string format_plain(const std::vector<DensityReport>& reports);
std::string format_csv(const std::vector<DensityReport>& reports);
std::string format_json(const std::vector<DensityReport>& reports);

}  // namespace parlab
