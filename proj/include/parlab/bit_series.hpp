#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace parlab {

/// Truncated power series c_0 + c_1 q + ... + c_{N-1} q^{N-1} over GF(2),
/// known modulo q^N. Coefficients are packed 64 per word, lowest exponent in
/// the least significant bit. Bits at positions >= N in the last word are
/// always zero.
class BitSeries {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  /// The zero series modulo q^trunc. trunc must be positive.
  explicit BitSeries(std::size_t trunc);

  /// Takes ownership of packed words; the vector is resized to the exact
  /// word count and the tail beyond trunc is cleared.
  BitSeries(std::size_t trunc, std::vector<Word> words);

  static BitSeries zero(std::size_t trunc) { return BitSeries(trunc); }
  static BitSeries one(std::size_t trunc);
  /// Sets the listed exponents; exponents >= trunc are ignored.
  static BitSeries from_support(std::size_t trunc, std::span<const std::size_t> exponents);
  /// Parses a string of '0'/'1' characters, c_0 first.
  static BitSeries from_string(std::string_view bits);

  std::size_t trunc() const noexcept { return trunc_; }
  std::span<const Word> words() const noexcept { return words_; }

  bool operator[](std::size_t n) const noexcept {
    return (words_[n / kWordBits] >> (n % kWordBits)) & 1U;
  }
  bool coeff(std::size_t n) const;

  void set(std::size_t n, bool value = true);
  void flip(std::size_t n);

  std::size_t popcount() const noexcept;
  bool is_zero() const noexcept;
  /// Exponents with coefficient 1, ascending.
  std::vector<std::size_t> support() const;
  /// Least exponent where the two series differ, compared up to the smaller
  /// truncation.
  std::optional<std::size_t> first_difference(const BitSeries& other) const;

  /// First `count` coefficients as '0'/'1' characters.
  std::string to_string(std::size_t count) const;

  friend bool operator==(const BitSeries&, const BitSeries&) = default;

  static std::size_t words_for(std::size_t trunc) noexcept {
    return (trunc + kWordBits - 1) / kWordBits;
  }

 private:
  void clear_tail() noexcept;

  std::size_t trunc_;
  std::vector<Word> words_;
};

/// Exponent map n -> (a2 n^2 + a1 n + a0) / d over the integers.
struct QuadraticForm {
  std::int64_t a2;
  std::int64_t a1;
  std::int64_t a0;
  std::int64_t d = 1;

  /// Throws std::invalid_argument unless a2 > 0, d > 0 and the numerator is
  /// divisible by d at n = 0, +-1, +-2.
  QuadraticForm(std::int64_t a2, std::int64_t a1, std::int64_t a0, std::int64_t d = 1);

  /// Exact exponent at n; throws std::domain_error if not integral.
  std::int64_t value(std::int64_t n) const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

  /// t r(3r-1)/2, the support of f_t mod 2.
  static QuadraticForm pentagonal(std::int64_t t = 1) { return {3 * t, -t, 0, 2}; }
  /// t s(s+1)/2. Over s >= 0 this is the support of f_t^3 mod 2; over all of
  /// Z every value appears twice (s and -1-s) and cancels.
  static QuadraticForm triangular(std::int64_t t = 1) { return {t, t, 0, 2}; }
  /// t (3m^2+2m), the support of f_{3t}^3/f_t mod 2.
  static QuadraticForm three_core(std::int64_t t = 1) { return {3 * t, 2 * t, 0, 1}; }

  std::string to_string() const;
};

enum class ThetaRange { all_integers, nonnegative, positive };

enum class MulAlgorithm { automatic, shift_xor, karatsuba };

class TruncationMismatch : public std::invalid_argument {
 public:
  TruncationMismatch(std::size_t a, std::size_t b);
};

BitSeries add(const BitSeries& a, const BitSeries& b);
BitSeries mul(const BitSeries& a, const BitSeries& b, MulAlgorithm algorithm = MulAlgorithm::automatic);
/// Word-level shift-XOR convolution, O(popcount * N / 64). The reference path.
BitSeries mul_shift_xor(const BitSeries& a, const BitSeries& b);
/// Karatsuba on 64-bit word blocks. Bit-identical to mul_shift_xor.
BitSeries mul_karatsuba(const BitSeries& a, const BitSeries& b);

/// Multiplicative inverse by Newton iteration. Requires c_0 = 1.
BitSeries inverse(const BitSeries& a);
/// Quadratic-time inverse from the coefficient recurrence; cross-check only.
BitSeries inverse_schoolbook(const BitSeries& a);

/// f_t^e mod 2, f_t = prod_{m>=1} (1 - q^{tm}). e must be nonzero.
BitSeries eta_power(std::int64_t t, std::int64_t e, std::size_t trunc);

/// Sum over n in range of q^{form(n)} for exponents in [0, trunc).
/// Colliding exponents cancel.
BitSeries theta(const QuadraticForm& form, std::size_t trunc, ThetaRange range = ThetaRange::all_integers);

/// Coefficient n of the result is coefficient m n + r of a.
BitSeries extract(const BitSeries& a, std::size_t m, std::size_t r);
/// q -> q^t. Result truncation is t * a.trunc(), capped at `trunc` if given.
BitSeries magnify(const BitSeries& a, std::size_t t, std::optional<std::size_t> trunc = std::nullopt);
/// Multiplication by q^c in the same window.
BitSeries shift(const BitSeries& a, std::size_t c);
/// Shortens the truncation; new_trunc must not exceed a.trunc().
BitSeries retrunc(const BitSeries& a, std::size_t new_trunc);

/// Count of zero coefficients among c_1..c_M, kept as an exact fraction.
struct ZeroDensity {
  std::uint64_t zeros;
  std::uint64_t total;
  double value() const noexcept { return static_cast<double>(zeros) / static_cast<double>(total); }
  friend bool operator==(const ZeroDensity&, const ZeroDensity&) = default;
};

ZeroDensity zero_density(const BitSeries& a, std::size_t M);

inline BitSeries operator+(const BitSeries& a, const BitSeries& b) { return add(a, b); }
inline BitSeries operator*(const BitSeries& a, const BitSeries& b) { return mul(a, b); }

}  // namespace parlab
