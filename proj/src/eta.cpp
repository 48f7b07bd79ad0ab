#include <algorithm>
#include <functional>

#include "parlab/bit_series.hpp"

namespace parlab {

namespace {

void require_unit(const BitSeries& a) {
  if (!a[0]) throw std::domain_error("series with zero constant term is not invertible");
}

// base^p to trunc, squaring by index doubling (exact over GF(2)).
BitSeries power(const std::function<BitSeries(std::size_t)>& base, std::int64_t p, std::size_t trunc) {
  if (p == 1) return base(trunc);
  const BitSeries half = power(base, p / 2, (trunc + 1) / 2);
  BitSeries sq = magnify(half, 2, trunc);
  if (p % 2 == 1) sq = mul(sq, base(trunc));
  return sq;
}

}  // namespace

BitSeries inverse(const BitSeries& a) {
  require_unit(a);
  // Over GF(2) the Newton step x(2 - a x) reduces to a x^2, and x^2 is a
  // magnification, so each step is a single multiplication.
  BitSeries x = BitSeries::one(1);
  std::size_t prec = 1;
  while (prec < a.trunc()) {
    const std::size_t next = std::min(2 * prec, a.trunc());
    x = mul(retrunc(a, next), magnify(x, 2, next));
    prec = next;
  }
  return x;
}

BitSeries inverse_schoolbook(const BitSeries& a) {
  require_unit(a);
  const auto supp = a.support();
  BitSeries b(a.trunc());
  b.set(0);
  for (std::size_t n = 1; n < a.trunc(); ++n) {
    bool c = false;
    for (auto j : supp) {
      if (j == 0) continue;
      if (j > n) break;
      c ^= b[n - j];
    }
    if (c) b.set(n);
  }
  return b;
}

BitSeries eta_power(std::int64_t t, std::int64_t e, std::size_t trunc) {
  if (t < 1) throw std::invalid_argument("eta base index t must be positive");
  if (e == 0) throw std::invalid_argument("eta exponent must be nonzero; write the unit series explicitly");
  if (trunc == 0) throw std::invalid_argument("series truncation must be positive");
  if (t > 1) {
    const auto step = static_cast<std::size_t>(t);
    return magnify(eta_power(1, e, (trunc + step - 1) / step), step, trunc);
  }
  if (e > 0) return power([](std::size_t n) { return theta(QuadraticForm::pentagonal(), n); }, e, trunc);
  return power([](std::size_t n) { return inverse(theta(QuadraticForm::pentagonal(), n)); }, -e, trunc);
}

}  // namespace parlab
