#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "parlab/operators.hpp"

namespace parlab {

/// k = 2^a * ell with ell odd and a >= 1.
struct PowerDecomposition {
  std::int64_t k;
  std::int64_t a;
  std::int64_t ell;
  friend bool operator==(const PowerDecomposition&, const PowerDecomposition&) = default;
};

PowerDecomposition decompose(std::int64_t k);

/// ell <= 3 * 2^a: the sufficient condition for C_{4k,k}(n) to be lacunary mod 2.
bool theorem1_condition(std::int64_t k);

/// p^a | t and p^a >= sqrt(t/s), compared exactly as p^{2a} s >= t.
/// Requires s odd, 0 < s < t and p prime.
bool cotron_premise(std::int64_t t, std::int64_t s, std::int64_t p, std::int64_t a);

/// The k = 2 base case: f_2^3/f_1 = f_1^2 * f_1^3, a product of two thetas.
struct LandauCase {
  Pipeline pipeline;
  ThetaFactor left;
  ThetaFactor right;
};

LandauCase theorem1_base_case();

/// Support equals {form(n) : n in Z} as a set, without cancellation.
struct SupportCertificate {
  QuadraticForm form;
};

using Certificate = std::variant<ThetaCertificate, SupportCertificate>;

struct CertificateCheck {
  bool equal;
  std::optional<std::size_t> witness;
};

CertificateCheck check_certificate(const Certificate& cert, const BitSeries& series);

/// One lacunary progression C_{4k,k}(m n + r).
struct Subsequence {
  std::size_t m;
  std::size_t r;
  Pipeline pipeline;
  Certificate certificate;

  std::string label() const;
  /// The certificate as a two-theta Landau product, if it is one.
  std::optional<std::pair<ThetaFactor, ThetaFactor>> landau_forms() const;
};

struct Theorem2Case {
  std::int64_t k;
  std::vector<Subsequence> subsequences;
};

/// All cases k in {1,3,...,17,21,23}, fourteen progressions in total.
const std::vector<Theorem2Case>& theorem2_registry();
const Theorem2Case& theorem2_case(std::int64_t k);

struct SubsequenceReport {
  std::int64_t k;
  std::string label;
  std::size_t final_trunc;
  bool pipeline_match;
  std::optional<std::size_t> pipeline_mismatch;
  bool certificate_match;
  std::optional<std::size_t> certificate_witness;
  std::vector<DensitySample> density;

  bool passed() const noexcept { return pipeline_match && certificate_match; }
};

struct Theorem2Report {
  std::int64_t k;
  std::vector<SubsequenceReport> subsequences;

  bool passed() const noexcept;
};

Theorem2Report verify_theorem2(const Theorem2Case& c, std::size_t trunc);

}  // namespace parlab
