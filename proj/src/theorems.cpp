#include "parlab/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace parlab {

PowerDecomposition decompose(std::int64_t k) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("decompose needs a positive even k (got " + std::to_string(k) + ")");
  std::int64_t a = 0, ell = k;
  while (ell % 2 == 0) {
    ell /= 2;
    ++a;
  }
  return {k, a, ell};
}

bool theorem1_condition(std::int64_t k) {
  const auto d = decompose(k);
  // ell <= 3 * 2^a; a < 63 since k fits in int64.
  return static_cast<__int128>(d.ell) <= 3 * (static_cast<__int128>(1) << d.a);
}

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

bool cotron_premise(std::int64_t t, std::int64_t s, std::int64_t p, std::int64_t a) {
  if (s < 1 || s % 2 == 0) throw std::invalid_argument("cotron premise needs a positive odd s");
  if (s >= t) throw std::invalid_argument("cotron premise needs s < t");
  if (!is_prime(p)) throw std::invalid_argument("cotron premise needs a prime p");
  if (a < 1) throw std::invalid_argument("cotron premise needs a >= 1");
  __int128 pa = 1;
  for (std::int64_t i = 0; i < a; ++i) {
    pa *= p;
    if (pa > t) return false;  // cannot divide t
  }
  if (t % static_cast<std::int64_t>(pa) != 0) return false;
  return pa * pa * s >= t;
}

LandauCase theorem1_base_case() {
  return {Pipeline{"k2", SingularSource{2}, {}, parse("f1^5")}, QuadraticForm::pentagonal(2),
          jacobi_theta(1)};
}

namespace {

BitSeries support_series(const QuadraticForm& form, std::size_t trunc) {
  BitSeries out(trunc);
  const auto vertex = static_cast<std::int64_t>(std::floor(-static_cast<long double>(form.a1) / (2.0L * form.a2)));
  const auto limit = static_cast<std::int64_t>(trunc);
  for (std::int64_t n = vertex;; ++n) {
    const auto v = form.value(n);
    if (v >= limit) break;
    if (v >= 0) out.set(static_cast<std::size_t>(v));
  }
  for (std::int64_t n = vertex - 1;; --n) {
    const auto v = form.value(n);
    if (v >= limit) break;
    if (v >= 0) out.set(static_cast<std::size_t>(v));
  }
  return out;
}

}  // namespace

CertificateCheck check_certificate(const Certificate& cert, const BitSeries& series) {
  const BitSeries expected = std::holds_alternative<ThetaCertificate>(cert)
                                 ? evaluate(std::get<ThetaCertificate>(cert), series.trunc())
                                 : support_series(std::get<SupportCertificate>(cert).form, series.trunc());
  const auto witness = series.first_difference(expected);
  return {!witness, witness};
}

std::string Subsequence::label() const {
  std::string s = "C(";
  if (m != 1) s += std::to_string(m);
  s += "n";
  if (r != 0) s += "+" + std::to_string(r);
  return s + ")";
}

std::optional<std::pair<ThetaFactor, ThetaFactor>> Subsequence::landau_forms() const {
  const auto* theta_cert = std::get_if<ThetaCertificate>(&certificate);
  if (!theta_cert || theta_cert->terms.size() != 1 || theta_cert->terms[0].size() != 2) return std::nullopt;
  const auto& p = theta_cert->terms[0];
  return std::make_pair(p[0], p[1]);
}

namespace {

using QF = QuadraticForm;

ThetaFactor full(QF f) { return {f, ThetaRange::all_integers}; }
ThetaFactor nonnegative(QF f) { return {f, ThetaRange::nonnegative}; }
ThetaFactor positive(QF f) { return {f, ThetaRange::positive}; }

Subsequence make(std::int64_t k, std::size_t m, std::size_t r, std::vector<PipelineStep> steps,
                 std::string_view claim, Certificate cert) {
  std::string name = "k" + std::to_string(k) + ":" + std::to_string(m) + "n+" + std::to_string(r);
  return {m, r, Pipeline{std::move(name), SingularSource{k}, std::move(steps), parse(claim)}, std::move(cert)};
}

ThetaCertificate landau(ThetaFactor left, ThetaFactor right) { return {{{left, right}}}; }

std::vector<Theorem2Case> build_registry() {
  const PipelineStep even = ExtractStep{2, 0};
  const PipelineStep odd = ExtractStep{2, 1};
  std::vector<Theorem2Case> cases;

  cases.push_back({1, {make(1, 1, 0, {}, "f1^2", SupportCertificate{QF(3, -1, 0, 1)})}});

  cases.push_back({3, {make(3, 1, 0, {}, "f3^3/f1", ThetaCertificate{{{full(QF::three_core())}}})}});

  cases.push_back({5, {make(5, 2, 0, {even}, "f2*f5", landau(QF::pentagonal(2), QF::pentagonal(5)))}});

  cases.push_back({7,
                   {make(7, 2, 1, {odd}, "f1*f7^3", landau(QF::pentagonal(1), jacobi_theta(7))),
                    make(7, 4, 0, {even, even}, "f1*f4", landau(QF::pentagonal(1), QF::pentagonal(4)))}});

  cases.push_back({9, {make(9, 2, 1, {odd}, "f1*f9^3/f3", landau(QF::pentagonal(1), QF::three_core(3)))}});

  // q^3 f_33^3/f_11: the q -> q^11 magnification of f_3^3/f_1, shifted by 3.
  cases.push_back({11,
                   {make(11, 2, 0, {even}, "f6^3/f2 + q^3*f33^3/f11",
                         ThetaCertificate{{{full(QF::three_core(2))}, {full(QF(33, 22, 3, 1))}}}),
                    make(11, 4, 1, {odd, even}, "f1^3*f11", landau(jacobi_theta(1), QF::pentagonal(11)))}});

  cases.push_back({13,
                   {make(13, 2, 0, {even}, "f2^3*f13 + q^3*f26^3*f13",
                         ThetaCertificate{{{jacobi_theta(2), full(QF::pentagonal(13))},
                                           {nonnegative(QF(13, 13, 3, 1)), full(QF::pentagonal(13))}}})}});

  // f_5^5/f_1 as four one-sided square sums, times f_10; then q^2 f_2 f_30^3/f_10.
  {
    ThetaCertificate odd15;
    for (std::int64_t c : {1, 2, 5, 10})
      odd15.terms.push_back({positive(QF(c, 0, -1, 1)), full(QF::pentagonal(10))});
    odd15.terms.push_back({full(QF::pentagonal(2)), full(QF(30, 20, 2, 1))});
    cases.push_back({15,
                     {make(15, 2, 1, {odd}, "f5^7/f1 + q^2*f1^2*f15^6/f5^2", std::move(odd15)),
                      make(15, 4, 2, {even, odd}, "q*f2*f15^3",
                           landau(full(QF::pentagonal(2)), nonnegative(QF(15, 15, 2, 2))))}});
  }

  cases.push_back({17,
                   {make(17, 2, 1, {odd}, "f1^3*f34 + q^2*f34^3",
                         ThetaCertificate{{{jacobi_theta(1), full(QF::pentagonal(34))},
                                           {nonnegative(QF(17, 17, 2, 1))}}})}});

  // Claim carries q^{n+1}: multiply the extracted series by q before comparing.
  cases.push_back({21,
                   {make(21, 2, 0, {even, ShiftStep{1}}, "f7 + f1^3*f4 + q^5*f1*f42^3",
                         ThetaCertificate{{{full(QF::pentagonal(7))},
                                           {jacobi_theta(1), full(QF::pentagonal(4))},
                                           {full(QF(3, -1, 10, 2)), jacobi_theta(42)}}})}});

  cases.push_back({23,
                   {make(23, 2, 1, {odd}, "f23^2 + q*f1*f23^3",
                         ThetaCertificate{{{full(QF::pentagonal(46))},
                                           {full(QF(3, -1, 2, 2)), jacobi_theta(23)}}})}});
  return cases;
}

}  // namespace

const std::vector<Theorem2Case>& theorem2_registry() {
  static const std::vector<Theorem2Case> registry = build_registry();
  return registry;
}

const Theorem2Case& theorem2_case(std::int64_t k) {
  for (const auto& c : theorem2_registry())
    if (c.k == k) return c;
  throw std::invalid_argument("no odd-k progression case registered for k = " + std::to_string(k));
}

bool Theorem2Report::passed() const noexcept {
  return std::all_of(subsequences.begin(), subsequences.end(), [](const auto& s) { return s.passed(); });
}

Theorem2Report verify_theorem2(const Theorem2Case& c, std::size_t trunc) {
  Theorem2Report report{c.k, {}};
  for (const auto& sub : c.subsequences) {
    const RunResult run_result = run(sub.pipeline, trunc);
    const CertificateCheck cert = check_certificate(sub.certificate, run_result.result);
    report.subsequences.push_back({c.k, sub.label(), run_result.result.trunc(), run_result.matches(),
                                   run_result.first_mismatch, cert.equal, cert.witness,
                                   density_trend(run_result.result)});
  }
  return report;
}

}  // namespace parlab
