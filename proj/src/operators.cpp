#include "parlab/operators.hpp"

#include <limits>

namespace parlab {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

InsufficientTruncation::InsufficientTruncation(const std::string& pipeline, std::size_t given,
                                               std::size_t final_trunc, std::size_t required)
    : std::invalid_argument("pipeline " + pipeline + ": starting truncation " + std::to_string(given) +
                            " leaves only " + std::to_string(final_trunc) + " terms; use N >= " +
                            std::to_string(required)),
      required_(required) {}

PipelineStep extract_step(std::size_t m, std::size_t r) {
  if (m == 0 || r >= m) throw std::invalid_argument("extract step needs 0 <= r < m");
  return ExtractStep{m, r};
}

std::string describe(const PipelineStep& step) {
  return std::visit(Overloaded{
                        [](const ExtractStep& s) {
                          return "extract(" + std::to_string(s.m) + "," + std::to_string(s.r) + ")";
                        },
                        [](const ShiftStep& s) { return "shift(" + std::to_string(s.c) + ")"; },
                        [](const MagnifyStep& s) { return "magnify(" + std::to_string(s.t) + ")"; },
                        [](const MulExprStep& s) { return "mul(" + render(s.expr) + ")"; },
                        [](const AddExprStep& s) { return "add(" + render(s.expr) + ")"; },
                    },
                    step);
}

BitSeries evaluate_start(const PipelineStart& start, std::size_t trunc) {
  return std::visit(Overloaded{
                        [&](const QExpr& e) { return evaluate(e, trunc); },
                        [&](const SingularSource& s) { return evaluate(singular_parity_expr(s.k), trunc); },
                    },
                    start);
}

BitSeries apply(const PipelineStep& step, const BitSeries& a) {
  return std::visit(Overloaded{
                        [&](const ExtractStep& s) { return extract(a, s.m, s.r); },
                        [&](const ShiftStep& s) { return shift(a, s.c); },
                        [&](const MagnifyStep& s) { return magnify(a, s.t); },
                        [&](const MulExprStep& s) { return mul(a, evaluate(s.expr, a.trunc())); },
                        [&](const AddExprStep& s) { return add(a, evaluate(s.expr, a.trunc())); },
                    },
                    step);
}

std::size_t final_trunc(const Pipeline& p, std::size_t trunc) {
  for (const auto& step : p.steps) {
    if (trunc == 0) return 0;
    if (const auto* e = std::get_if<ExtractStep>(&step)) {
      trunc = trunc <= e->r ? 0 : (trunc - e->r + e->m - 1) / e->m;
    } else if (const auto* m = std::get_if<MagnifyStep>(&step)) {
      trunc *= m->t;
    }
  }
  return trunc;
}

std::size_t required_trunc(const Pipeline& p, std::size_t min_final) {
  std::size_t hi = std::max<std::size_t>(min_final, 1);
  while (final_trunc(p, hi) < min_final) {
    if (hi > std::numeric_limits<std::size_t>::max() / 2) throw std::overflow_error("pipeline never reaches minimum");
    hi *= 2;
  }
  std::size_t lo = 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (final_trunc(p, mid) >= min_final)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

RunResult run(const Pipeline& p, std::size_t trunc, std::size_t min_final) {
  const std::size_t last = final_trunc(p, trunc);
  if (last < min_final) throw InsufficientTruncation(p.name, trunc, last, required_trunc(p, min_final));

  std::vector<BitSeries> trace;
  trace.push_back(evaluate_start(p.start, trunc));
  for (const auto& step : p.steps) trace.push_back(parlab::apply(step, trace.back()));
  BitSeries result = trace.back();
  BitSeries claimed = evaluate(p.claim, result.trunc());
  auto mismatch = result.first_difference(claimed);
  return {std::move(result), std::move(claimed), mismatch, std::move(trace)};
}

BitSeries evaluate(const ThetaCertificate& cert, std::size_t trunc) {
  BitSeries acc = BitSeries::zero(trunc);
  for (const auto& product : cert.terms) {
    if (product.empty()) throw std::invalid_argument("theta certificate product needs at least one factor");
    BitSeries term = theta(product.front().form, trunc, product.front().range);
    for (std::size_t i = 1; i < product.size(); ++i) term = mul(term, theta(product[i].form, trunc, product[i].range));
    acc = add(acc, term);
  }
  return acc;
}

std::vector<DensitySample> density_trend(const BitSeries& a) {
  std::vector<DensitySample> out;
  for (std::size_t M = 100; M < a.trunc(); M *= 10) out.push_back({M, zero_density(a, M)});
  return out;
}

LandauResult landau_check(const BitSeries& result, const ThetaFactor& left, const ThetaFactor& right) {
  if (result.trunc() < kLandauMinTrunc)
    throw std::invalid_argument("Landau check needs at least " + std::to_string(kLandauMinTrunc) + " terms");
  const std::size_t n = result.trunc();
  const BitSeries product = mul(theta(left.form, n, left.range), theta(right.form, n, right.range));
  const auto witness = result.first_difference(product);
  return {!witness, witness, density_trend(result)};
}

}  // namespace parlab
