#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "parlab/bit_series.hpp"

namespace parlab {

/// f_t^e inside a monomial.
struct EtaFactor {
  std::int64_t t;
  std::int64_t e;
  friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

/// q^c * prod f_t^{e_t}. Each t appears at most once; factors keep source order.
struct Monomial {
  std::size_t qshift = 0;
  std::vector<EtaFactor> factors;

  /// Builds a monomial, merging repeated bases and dropping zero exponents.
  static Monomial eta_quotient(std::size_t qshift, std::vector<EtaFactor> factors);

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Sum of monomials, mod 2.
struct QExpr {
  std::vector<Monomial> terms;
  friend bool operator==(const QExpr&, const QExpr&) = default;
};

inline constexpr std::int64_t kMaxEtaExponent = 64;
inline constexpr std::int64_t kMaxEtaBase = 1024;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t offset, std::vector<std::string> expected);

  /// Byte offset into the source text.
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Grammar:
///   expr   := term ('+' term)*
///   term   := factor (('*' | '/') factor)*
///   factor := 'q' ['^' uint] | 'f' uint ['^' uint] | '(' expr ')'
/// '/' applies only to an f atom and negates its exponent. Parenthesised
/// sums distribute over the surrounding product.
QExpr parse(std::string_view text);

std::string render(const QExpr& e);
std::string render(const Monomial& m);

BitSeries evaluate(const Monomial& m, std::size_t trunc);
BitSeries evaluate(const QExpr& e, std::size_t trunc);

/// f_k^3 / f_1, the mod-2 generating function of C_{4k,k}(n).
QExpr singular_parity_expr(std::int64_t k);

inline QExpr operator+(QExpr a, const QExpr& b) {
  a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
  return a;
}

}  // namespace parlab
