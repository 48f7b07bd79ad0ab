#include "parlab/bit_series.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace parlab {

namespace {

using Word = BitSeries::Word;
constexpr std::size_t kW = BitSeries::kWordBits;

void require_positive(std::size_t trunc) {
  if (trunc == 0) throw std::invalid_argument("series truncation must be positive");
}

}  // namespace

TruncationMismatch::TruncationMismatch(std::size_t a, std::size_t b)
    : std::invalid_argument("truncation mismatch: " + std::to_string(a) + " vs " + std::to_string(b) +
                            " (use retrunc to shorten explicitly)") {}

BitSeries::BitSeries(std::size_t trunc) : trunc_(trunc) {
  require_positive(trunc);
  words_.assign(words_for(trunc), 0);
}

BitSeries::BitSeries(std::size_t trunc, std::vector<Word> words) : trunc_(trunc), words_(std::move(words)) {
  require_positive(trunc);
  words_.resize(words_for(trunc), 0);
  clear_tail();
}

void BitSeries::clear_tail() noexcept {
  const std::size_t used = trunc_ % kW;
  if (used != 0) words_.back() &= (Word{1} << used) - 1;
}

BitSeries BitSeries::one(std::size_t trunc) {
  BitSeries s(trunc);
  s.words_[0] = 1;
  return s;
}

BitSeries BitSeries::from_support(std::size_t trunc, std::span<const std::size_t> exponents) {
  BitSeries s(trunc);
  for (auto e : exponents)
    if (e < trunc) s.set(e);
  return s;
}

BitSeries BitSeries::from_string(std::string_view bits) {
  BitSeries s(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      s.set(i);
    else if (bits[i] != '0')
      throw std::invalid_argument("bit string may only contain '0' and '1'");
  }
  return s;
}

bool BitSeries::coeff(std::size_t n) const {
  if (n >= trunc_) throw std::out_of_range("coefficient index beyond truncation");
  return (*this)[n];
}

void BitSeries::set(std::size_t n, bool value) {
  if (n >= trunc_) throw std::out_of_range("coefficient index beyond truncation");
  const Word mask = Word{1} << (n % kW);
  if (value)
    words_[n / kW] |= mask;
  else
    words_[n / kW] &= ~mask;
}

void BitSeries::flip(std::size_t n) {
  if (n >= trunc_) throw std::out_of_range("coefficient index beyond truncation");
  words_[n / kW] ^= Word{1} << (n % kW);
}

std::size_t BitSeries::popcount() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitSeries::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::vector<std::size_t> BitSeries::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    Word w = words_[i];
    while (w != 0) {
      out.push_back(i * kW + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::optional<std::size_t> BitSeries::first_difference(const BitSeries& other) const {
  const std::size_t n = std::min(trunc_, other.trunc_);
  const std::size_t full = n / kW;
  for (std::size_t i = 0; i <= full && i < words_.size(); ++i) {
    Word diff = words_[i] ^ other.words_[i];
    if (i == full) {
      const std::size_t used = n % kW;
      if (used == 0) break;
      diff &= (Word{1} << used) - 1;
    }
    if (diff != 0) return i * kW + static_cast<std::size_t>(std::countr_zero(diff));
  }
  return std::nullopt;
}

std::string BitSeries::to_string(std::size_t count) const {
  count = std::min(count, trunc_);
  std::string s(count, '0');
  for (std::size_t i = 0; i < count; ++i)
    if ((*this)[i]) s[i] = '1';
  return s;
}

QuadraticForm::QuadraticForm(std::int64_t a2_, std::int64_t a1_, std::int64_t a0_, std::int64_t d_)
    : a2(a2_), a1(a1_), a0(a0_), d(d_) {
  if (a2 <= 0) throw std::invalid_argument("quadratic form needs a positive leading coefficient");
  if (d <= 0) throw std::invalid_argument("quadratic form needs a positive denominator");
  for (std::int64_t n : {0, 1, -1, 2, -2}) {
    if ((a2 * n * n + a1 * n + a0) % d != 0)
      throw std::invalid_argument("quadratic form " + to_string() + " is not integral at n = " + std::to_string(n));
  }
}

std::int64_t QuadraticForm::value(std::int64_t n) const {
  const __int128 num = static_cast<__int128>(a2) * n * n + static_cast<__int128>(a1) * n + a0;
  if (num % d != 0) throw std::domain_error("quadratic form " + to_string() + " not integral");
  return static_cast<std::int64_t>(num / d);
}

std::string QuadraticForm::to_string() const {
  std::ostringstream os;
  os << "(" << a2 << "n^2 " << (a1 < 0 ? "- " : "+ ") << (a1 < 0 ? -a1 : a1) << "n " << (a0 < 0 ? "- " : "+ ")
     << (a0 < 0 ? -a0 : a0) << ")/" << d;
  return os.str();
}

BitSeries theta(const QuadraticForm& form, std::size_t trunc, ThetaRange range) {
  BitSeries out(trunc);
  // Numerator bound: a2 n^2 + a1 n + a0 < trunc * d.
  const long double limit = static_cast<long double>(trunc) * static_cast<long double>(form.d);
  const long double a2 = form.a2, a1 = form.a1, a0 = form.a0;
  const long double disc = a1 * a1 - 4 * a2 * (a0 - limit);
  if (disc < 0) return out;
  const long double root = std::sqrt(disc);
  auto lo = static_cast<std::int64_t>(std::floor((-a1 - root) / (2 * a2))) - 1;
  const auto hi = static_cast<std::int64_t>(std::ceil((-a1 + root) / (2 * a2))) + 1;
  if (range == ThetaRange::nonnegative) lo = std::max<std::int64_t>(lo, 0);
  if (range == ThetaRange::positive) lo = std::max<std::int64_t>(lo, 1);
  std::vector<Word> words(BitSeries::words_for(trunc), 0);
  for (std::int64_t n = lo; n <= hi; ++n) {
    const std::int64_t v = form.value(n);
    if (v < 0 || static_cast<std::uint64_t>(v) >= trunc) continue;
    const auto e = static_cast<std::size_t>(v);
    words[e / kW] ^= Word{1} << (e % kW);
  }
  return BitSeries(trunc, std::move(words));
}

BitSeries add(const BitSeries& a, const BitSeries& b) {
  if (a.trunc() != b.trunc()) throw TruncationMismatch(a.trunc(), b.trunc());
  std::vector<Word> w(a.words().begin(), a.words().end());
  auto bw = b.words();
  for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= bw[i];
  return BitSeries(a.trunc(), std::move(w));
}

BitSeries extract(const BitSeries& a, std::size_t m, std::size_t r) {
  if (m == 0) throw std::invalid_argument("extract modulus must be positive");
  if (r >= m) throw std::invalid_argument("extract residue must satisfy 0 <= r < m");
  if (r >= a.trunc()) throw std::invalid_argument("extract residue lies beyond the truncation; nothing is known");
  if (m == 1) return a;
  const std::size_t trunc = (a.trunc() - r + m - 1) / m;
  std::vector<Word> w(BitSeries::words_for(trunc), 0);
  for (std::size_t n = 0, src = r; n < trunc; ++n, src += m)
    if (a[src]) w[n / kW] |= Word{1} << (n % kW);
  return BitSeries(trunc, std::move(w));
}

BitSeries magnify(const BitSeries& a, std::size_t t, std::optional<std::size_t> trunc) {
  if (t == 0) throw std::invalid_argument("magnification factor must be positive");
  std::size_t out_trunc = a.trunc() * t;
  if (trunc) {
    require_positive(*trunc);
    out_trunc = std::min(out_trunc, *trunc);
  }
  if (t == 1) return retrunc(a, out_trunc);
  std::vector<Word> w(BitSeries::words_for(out_trunc), 0);
  for (auto e : a.support()) {
    const std::size_t dst = e * t;
    if (dst >= out_trunc) break;
    w[dst / kW] |= Word{1} << (dst % kW);
  }
  return BitSeries(out_trunc, std::move(w));
}

BitSeries shift(const BitSeries& a, std::size_t c) {
  if (c == 0) return a;
  const std::size_t trunc = a.trunc();
  std::vector<Word> w(BitSeries::words_for(trunc), 0);
  if (c < trunc) {
    const std::size_t ws = c / kW, bs = c % kW;
    auto src = a.words();
    for (std::size_t j = 0; j + ws < w.size(); ++j) {
      w[j + ws] ^= src[j] << bs;
      if (bs != 0 && j + ws + 1 < w.size()) w[j + ws + 1] ^= src[j] >> (kW - bs);
    }
  }
  return BitSeries(trunc, std::move(w));
}

BitSeries retrunc(const BitSeries& a, std::size_t new_trunc) {
  require_positive(new_trunc);
  if (new_trunc > a.trunc())
    throw std::invalid_argument("retrunc cannot lengthen a series from " + std::to_string(a.trunc()) + " to " +
                                std::to_string(new_trunc));
  if (new_trunc == a.trunc()) return a;
  auto src = a.words();
  return BitSeries(new_trunc, std::vector<Word>(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(
                                                                               BitSeries::words_for(new_trunc))));
}

ZeroDensity zero_density(const BitSeries& a, std::size_t M) {
  if (M == 0) throw std::invalid_argument("density window must be positive");
  if (M >= a.trunc())
    throw std::invalid_argument("density window M = " + std::to_string(M) + " needs a series with more than " +
                                std::to_string(M) + " terms (have " + std::to_string(a.trunc()) + ")");
  std::uint64_t ones = 0;
  for (std::size_t n = 1; n <= M; ++n) ones += a[n] ? 1 : 0;
  return {M - ones, M};
}

}  // namespace parlab
