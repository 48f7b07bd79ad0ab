#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "parlab/bit_series.hpp"
#include "parlab/qexpr.hpp"

namespace parlab {

// Dissection steps. Extract{m, r} keeps exponents m n + r and reindexes to n.
struct ExtractStep {
  std::size_t m;
  std::size_t r;
};
struct ShiftStep {
  std::size_t c;
};
struct MagnifyStep {
  std::size_t t;
};
struct MulExprStep {
  QExpr expr;
};
struct AddExprStep {
  QExpr expr;
};

using PipelineStep = std::variant<ExtractStep, ShiftStep, MagnifyStep, MulExprStep, AddExprStep>;

/// Selects the mod-2 series of C_{4k,k}(n), i.e. f_k^3 / f_1.
struct SingularSource {
  std::int64_t k;
};

using PipelineStart = std::variant<QExpr, SingularSource>;

struct Pipeline {
  std::string name;
  PipelineStart start;
  std::vector<PipelineStep> steps;
  QExpr claim;
};

inline constexpr std::size_t kMinFinalTrunc = 64;

class InsufficientTruncation : public std::invalid_argument {
 public:
  InsufficientTruncation(const std::string& pipeline, std::size_t given, std::size_t final_trunc,
                         std::size_t required);
  /// Smallest starting truncation that satisfies the minimum.
  std::size_t required() const noexcept { return required_; }

 private:
  std::size_t required_;
};

struct RunResult {
  BitSeries result;
  BitSeries claimed;
  std::optional<std::size_t> first_mismatch;
  /// Series after the start and after each step, in order.
  std::vector<BitSeries> trace;

  bool matches() const noexcept { return !first_mismatch; }
};

PipelineStep extract_step(std::size_t m, std::size_t r);
std::string describe(const PipelineStep& step);

BitSeries evaluate_start(const PipelineStart& start, std::size_t trunc);
BitSeries apply(const PipelineStep& step, const BitSeries& a);

/// Truncation after every step when started at `trunc`; 0 if a step empties it.
std::size_t final_trunc(const Pipeline& p, std::size_t trunc);
std::size_t required_trunc(const Pipeline& p, std::size_t min_final = kMinFinalTrunc);

/// Applies the steps to the start series and compares against the claim.
RunResult run(const Pipeline& p, std::size_t trunc, std::size_t min_final = kMinFinalTrunc);

/// One theta series inside a certificate product.
struct ThetaFactor {
  QuadraticForm form;
  ThetaRange range = ThetaRange::all_integers;

  ThetaFactor(QuadraticForm f, ThetaRange r = ThetaRange::all_integers) : form(f), range(r) {}  // NOLINT
};

/// f_t^3 mod 2 as a theta factor: t s(s+1)/2 over s >= 0.
inline ThetaFactor jacobi_theta(std::int64_t t = 1) {
  return {QuadraticForm::triangular(t), ThetaRange::nonnegative};
}

using ThetaProduct = std::vector<ThetaFactor>;

/// Sum of products of theta series; a Landau certificate is a single product
/// of two thetas.
struct ThetaCertificate {
  std::vector<ThetaProduct> terms;
};

BitSeries evaluate(const ThetaCertificate& cert, std::size_t trunc);

struct DensitySample {
  std::size_t M;
  ZeroDensity density;
};

/// Zero densities at M = 100, 1000, ... below the truncation.
std::vector<DensitySample> density_trend(const BitSeries& a);

struct LandauResult {
  bool equal;
  std::optional<std::size_t> witness;
  std::vector<DensitySample> density_at;
};

inline constexpr std::size_t kLandauMinTrunc = 1000;

/// Compares `result` with theta(left) * theta(right). Needs trunc >= 1000.
LandauResult landau_check(const BitSeries& result, const ThetaFactor& left, const ThetaFactor& right);

}  // namespace parlab
