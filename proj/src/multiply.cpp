#include <bit>
#include <cmath>

#include "parlab/bit_series.hpp"

namespace parlab {

namespace {

using Word = BitSeries::Word;
using u128 = unsigned __int128;
constexpr std::size_t kW = BitSeries::kWordBits;
constexpr std::size_t kKaratsubaBase = 16;

// dst ^= src * q^shift, restricted to dst_words words.
void xor_shifted(Word* dst, std::size_t dst_words, std::span<const Word> src, std::size_t shift) {
  const std::size_t ws = shift / kW, bs = shift % kW;
  if (ws >= dst_words) return;
  const std::size_t n = std::min(src.size(), dst_words - ws);
  if (bs == 0) {
    for (std::size_t j = 0; j < n; ++j) dst[j + ws] ^= src[j];
    return;
  }
  for (std::size_t j = 0; j < n; ++j) {
    dst[j + ws] ^= src[j] << bs;
    if (j + ws + 1 < dst_words) dst[j + ws + 1] ^= src[j] >> (kW - bs);
  }
}

// 64x64 -> 128 carryless product, 4-bit windows.
u128 clmul64(Word a, Word b) {
  u128 table[16];
  table[0] = 0;
  table[1] = a;
  for (int i = 2; i < 16; ++i) table[i] = (i & 1) ? (table[i - 1] ^ a) : (table[i / 2] << 1);
  u128 r = 0;
  for (int s = 60; s >= 0; s -= 4) r = (r << 4) ^ table[(b >> s) & 15];
  return r;
}

void schoolbook(std::span<const Word> a, std::span<const Word> b, Word* out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const u128 p = clmul64(a[i], b[j]);
      out[i + j] ^= static_cast<Word>(p);
      out[i + j + 1] ^= static_cast<Word>(p >> 64);
    }
  }
}

// out (2n words, zeroed by caller) = a * b, both n words.
void karatsuba(std::span<const Word> a, std::span<const Word> b, Word* out) {
  const std::size_t n = a.size();
  if (n <= kKaratsubaBase) {
    schoolbook(a, b, out);
    return;
  }
  const std::size_t lo = n / 2, hi = n - lo;
  std::vector<Word> z0(2 * lo, 0), z2(2 * hi, 0), z1(2 * hi, 0);
  karatsuba(a.first(lo), b.first(lo), z0.data());
  karatsuba(a.subspan(lo), b.subspan(lo), z2.data());

  std::vector<Word> as(a.begin() + static_cast<std::ptrdiff_t>(lo), a.end());
  std::vector<Word> bs(b.begin() + static_cast<std::ptrdiff_t>(lo), b.end());
  for (std::size_t i = 0; i < lo; ++i) {
    as[i] ^= a[i];
    bs[i] ^= b[i];
  }
  karatsuba(as, bs, z1.data());
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] ^= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] ^= z2[i];

  for (std::size_t i = 0; i < z0.size(); ++i) out[i] ^= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[2 * lo + i] ^= z2[i];
  for (std::size_t i = 0; i < z1.size(); ++i) out[lo + i] ^= z1[i];
}

void require_same(const BitSeries& a, const BitSeries& b) {
  if (a.trunc() != b.trunc()) throw TruncationMismatch(a.trunc(), b.trunc());
}

}  // namespace

BitSeries mul_shift_xor(const BitSeries& a, const BitSeries& b) {
  require_same(a, b);
  const BitSeries& sparse = a.popcount() <= b.popcount() ? a : b;
  const BitSeries& dense = &sparse == &a ? b : a;
  std::vector<Word> out(BitSeries::words_for(a.trunc()), 0);
  for (auto e : sparse.support()) xor_shifted(out.data(), out.size(), dense.words(), e);
  return BitSeries(a.trunc(), std::move(out));
}

BitSeries mul_karatsuba(const BitSeries& a, const BitSeries& b) {
  require_same(a, b);
  const std::size_t n = BitSeries::words_for(a.trunc());
  std::vector<Word> out(2 * n, 0);
  karatsuba(a.words(), b.words(), out.data());
  out.resize(n);
  return BitSeries(a.trunc(), std::move(out));
}

BitSeries mul(const BitSeries& a, const BitSeries& b, MulAlgorithm algorithm) {
  switch (algorithm) {
    case MulAlgorithm::shift_xor:
      return mul_shift_xor(a, b);
    case MulAlgorithm::karatsuba:
      return mul_karatsuba(a, b);
    case MulAlgorithm::automatic:
      break;
  }
  require_same(a, b);
  const std::size_t words = BitSeries::words_for(a.trunc());
  if (words < 2 * kKaratsubaBase) return mul_shift_xor(a, b);
  // Rough word-operation counts for each path.
  const double sparse = static_cast<double>(std::min(a.popcount(), b.popcount()));
  const double shift_cost = 2.0 * sparse * static_cast<double>(words);
  const double blocks = static_cast<double>(words) / kKaratsubaBase;
  const double kara_cost = std::pow(blocks, std::log2(3.0)) * kKaratsubaBase * kKaratsubaBase * 24.0;
  return shift_cost <= kara_cost ? mul_shift_xor(a, b) : mul_karatsuba(a, b);
}

}  // namespace parlab
