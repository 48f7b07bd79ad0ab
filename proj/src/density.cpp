#include "parlab/density.hpp"

#include <algorithm>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "parlab/qexpr.hpp"

namespace parlab {

BudgetExceeded::BudgetExceeded(std::size_t needed, std::size_t budget)
    : std::invalid_argument("expansion needs " + std::to_string(needed) + " terms but the budget is " +
                            std::to_string(budget) + "; raise it with --budget or PARLAB_MAX_TERMS") {}

std::string render_decimal(std::uint64_t num, std::uint64_t den, unsigned places) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (places > 18) throw std::invalid_argument("at most 18 decimal places");
  unsigned __int128 scale = 1;
  for (unsigned i = 0; i < places; ++i) scale *= 10;
  const unsigned __int128 scaled = static_cast<unsigned __int128>(num) * scale;
  unsigned __int128 q = scaled / den;
  const unsigned __int128 rem = scaled % den;
  // Round half to even.
  if (2 * rem > den || (2 * rem == den && (q & 1) == 1)) ++q;
  const auto int_part = static_cast<std::uint64_t>(q / scale);
  auto frac = static_cast<std::uint64_t>(q % scale);
  std::string s = std::to_string(int_part);
  if (places == 0) return s;
  std::string digits = std::to_string(frac);
  digits.insert(0, places - digits.size(), '0');
  while (!digits.empty() && digits.back() == '0') digits.pop_back();
  if (!digits.empty()) s += "." + digits;
  return s;
}

namespace {

// Number of decimal places that represent 1/M exactly, if M = 10^j.
std::optional<unsigned> power_of_ten(std::uint64_t M) {
  unsigned j = 0;
  while (M > 1 && M % 10 == 0) {
    M /= 10;
    ++j;
  }
  if (M == 1) return j;
  return std::nullopt;
}

}  // namespace

std::string render_density(const ZeroDensity& d) {
  return render_decimal(d.zeros, d.total, power_of_ten(d.total).value_or(6));
}

std::vector<DensityReport> density_grid(std::span<const std::int64_t> ks, std::span<const std::size_t> Ms,
                                        std::size_t budget) {
  if (ks.empty() || Ms.empty()) throw std::invalid_argument("density grid needs at least one k and one M");
  for (auto k : ks)
    if (k < 1) throw std::invalid_argument("density needs k >= 1");
  for (auto M : Ms)
    if (M < 1) throw std::invalid_argument("density needs M >= 1");
  const std::size_t terms = *std::max_element(Ms.begin(), Ms.end()) + 1;
  if (terms > budget) throw BudgetExceeded(terms, budget);

  std::vector<DensityReport> out;
  for (auto k : ks) {
    const BitSeries parity = evaluate(singular_parity_expr(k), terms);
    DensityReport report{k, {}};
    for (auto M : Ms) {
      const ZeroDensity d = zero_density(parity, M);
      report.samples.push_back({M, d, render_density(d)});
    }
    out.push_back(std::move(report));
  }
  return out;
}

std::vector<DensityReport> remark_table() { return density_grid(kRemarkKs, kRemarkMs); }

std::string format_plain(const std::vector<DensityReport>& reports) {
  std::ostringstream os;
  os << std::left << std::setw(10) << "M";
  for (const auto& r : reports) os << std::setw(12) << ("delta_" + std::to_string(r.k));
  os << "\n";
  if (reports.empty()) return os.str();
  for (std::size_t i = 0; i < reports.front().samples.size(); ++i) {
    os << std::setw(10) << reports.front().samples[i].M;
    for (const auto& r : reports) os << std::setw(12) << r.samples[i].decimal;
    os << "\n";
  }
  return os.str();
}

std::string format_csv(const std::vector<DensityReport>& reports) {
  std::ostringstream os;
  os << "k,M,zero_count,decimal,fraction\n";
  for (const auto& r : reports)
    for (const auto& c : r.samples)
      os << r.k << "," << c.M << "," << c.density.zeros << "," << c.decimal << "," << c.density.zeros << "/"
         << c.density.total << "\n";
  return os.str();
}

std::string format_json(const std::vector<DensityReport>& reports) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : reports)
    for (const auto& c : r.samples)
      rows.push_back({{"k", r.k},
                      {"M", c.M},
                      {"zero_count", c.density.zeros},
                      {"decimal", c.decimal},
                      {"fraction", std::to_string(c.density.zeros) + "/" + std::to_string(c.density.total)}});
  nlohmann::json doc = {{"command", "density"}, {"source", "f_k^3/f_1 mod 2"}, {"rows", rows}};
  return doc.dump(2) + "\n";
}

}  // namespace parlab
