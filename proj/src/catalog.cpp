#include "parlab/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace parlab {

using nlohmann::json;

namespace {

PipelineStep parse_step(const json& j) {
  if (!j.is_object() || j.size() != 1) throw std::invalid_argument("step must be an object with exactly one key");
  const auto it = j.begin();
  const std::string key = it.key();
  const json& value = it.value();
  if (key == "extract") {
    if (!value.is_array() || value.size() != 2) throw std::invalid_argument("extract step needs [m, r]");
    return extract_step(value[0].get<std::size_t>(), value[1].get<std::size_t>());
  }
  if (key == "shift") return ShiftStep{value.get<std::size_t>()};
  if (key == "magnify") {
    const auto t = value.get<std::size_t>();
    if (t == 0) throw std::invalid_argument("magnify step needs t >= 1");
    return MagnifyStep{t};
  }
  if (key == "mul") return MulExprStep{parse(value.get<std::string>())};
  if (key == "add") return AddExprStep{parse(value.get<std::string>())};
  throw std::invalid_argument("unknown step kind '" + key + "'");
}

ThetaRange parse_range(const json& j) {
  if (j.is_boolean()) return j.get<bool>() ? ThetaRange::positive : ThetaRange::all_integers;
  const auto name = j.get<std::string>();
  if (name == "all") return ThetaRange::all_integers;
  if (name == "nonnegative") return ThetaRange::nonnegative;
  if (name == "positive") return ThetaRange::positive;
  throw std::invalid_argument("theta range must be a bool or one of all, nonnegative, positive");
}

ThetaProduct parse_theta_product(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("theta product must be a nonempty array");
  ThetaProduct product;
  for (const auto& f : j) {
    if (!f.is_array() || (f.size() != 4 && f.size() != 5))
      throw std::invalid_argument("theta factor must be [a2, a1, a0, d] or [a2, a1, a0, d, range]");
    product.push_back({QuadraticForm(f[0].get<std::int64_t>(), f[1].get<std::int64_t>(), f[2].get<std::int64_t>(),
                                     f[3].get<std::int64_t>()),
                       f.size() == 5 ? parse_range(f[4]) : ThetaRange::all_integers});
  }
  return product;
}

SideTerm parse_term(const json& j) {
  if (j.is_string()) return {parse(j.get<std::string>()), {}};
  if (!j.is_object()) throw std::invalid_argument("identity side must be a string, object or array");
  SideTerm term{QExpr{}, {}};
  int sources = 0;
  if (j.contains("expr")) {
    term.source = parse(j.at("expr").get<std::string>());
    ++sources;
  }
  if (j.contains("theta")) {
    term.source = ThetaCertificate{{parse_theta_product(j.at("theta"))}};
    ++sources;
  }
  if (j.contains("theta_sum")) {
    ThetaCertificate cert;
    for (const auto& p : j.at("theta_sum")) cert.terms.push_back(parse_theta_product(p));
    if (cert.terms.empty()) throw std::invalid_argument("theta_sum must list at least one product");
    term.source = std::move(cert);
    ++sources;
  }
  if (j.contains("singular")) {
    const auto& s = j.at("singular");
    if (!s.is_array() || s.size() != 2) throw std::invalid_argument("singular source needs [k, i]");
    term.source = SingularSpec(s[0].get<std::int64_t>(), s[1].get<std::int64_t>());
    ++sources;
  }
  if (sources != 1) throw std::invalid_argument("identity side needs exactly one of expr, theta, theta_sum, singular");
  if (j.contains("steps"))
    for (const auto& s : j.at("steps")) term.steps.push_back(parse_step(s));
  return term;
}

IdentitySide parse_side(const json& j) {
  IdentitySide side;
  if (j.is_array()) {
    if (j.empty()) throw std::invalid_argument("identity side sum must not be empty");
    for (const auto& t : j) side.terms.push_back(parse_term(t));
  } else {
    side.terms.push_back(parse_term(j));
  }
  return side;
}

IdentityRecord parse_record(const json& j) {
  IdentityRecord r;
  r.id = j.at("id").get<std::string>();
  r.lhs = parse_side(j.at("lhs"));
  r.rhs = parse_side(j.at("rhs"));
  if (j.contains("min_trunc")) r.min_trunc = j.at("min_trunc").get<std::size_t>();
  if (r.min_trunc == 0) throw std::invalid_argument("min_trunc must be positive");
  if (j.contains("anchor")) r.anchor = j.at("anchor").get<std::string>();
  return r;
}

BitSeries evaluate_term(const SideTerm& term, std::size_t trunc) {
  BitSeries s = std::visit(
      [&](const auto& src) -> BitSeries {
        using T = std::decay_t<decltype(src)>;
        if constexpr (std::is_same_v<T, QExpr>)
          return evaluate(src, trunc);
        else if constexpr (std::is_same_v<T, ThetaCertificate>)
          return evaluate(src, trunc);
        else
          return reduce_mod2(singular_series(src, trunc));
      },
      term.source);
  for (const auto& step : term.steps) s = parlab::apply(step, s);
  return s;
}

}  // namespace

Catalog load_catalog(std::string_view json_text) {
  const json doc = json::parse(json_text);
  if (!doc.is_array()) throw std::invalid_argument("catalog must be a JSON array of records");
  Catalog out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& j = doc[i];
    CatalogEntry entry;
    entry.id = j.is_object() && j.contains("id") && j["id"].is_string() ? j["id"].get<std::string>()
                                                                        : "#" + std::to_string(i);
    try {
      entry.record = parse_record(j);
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

Catalog load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_catalog(ss.str());
}

const Catalog& shipped_catalog() {
  static const Catalog catalog = load_catalog(shipped_catalog_json());
  return catalog;
}

BitSeries evaluate(const IdentitySide& side, std::size_t trunc) {
  if (side.terms.empty()) throw std::invalid_argument("identity side has no terms");
  std::vector<BitSeries> parts;
  for (const auto& t : side.terms) parts.push_back(evaluate_term(t, trunc));
  std::size_t common = parts.front().trunc();
  for (const auto& p : parts) common = std::min(common, p.trunc());
  BitSeries acc = BitSeries::zero(common);
  for (const auto& p : parts) acc = add(acc, retrunc(p, common));
  return acc;
}

std::string_view to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::pass: return "pass";
    case VerifyStatus::fail: return "fail";
    case VerifyStatus::error: return "error";
  }
  return "error";
}

CatalogOutcome verify_record(const IdentityRecord& record, std::size_t trunc) {
  const std::size_t n = std::max(trunc, record.min_trunc);
  CatalogOutcome out{record.id, VerifyStatus::error, std::nullopt, n, record.anchor, {}};
  try {
    BitSeries lhs = evaluate(record.lhs, n);
    BitSeries rhs = evaluate(record.rhs, n);
    const std::size_t common = std::min(lhs.trunc(), rhs.trunc());
    out.trunc = common;
    out.first_mismatch = retrunc(lhs, common).first_difference(retrunc(rhs, common));
    out.status = out.first_mismatch ? VerifyStatus::fail : VerifyStatus::pass;
  } catch (const std::exception& e) {
    out.message = e.what();
  }
  return out;
}

std::vector<CatalogOutcome> verify_catalog(const Catalog& catalog, std::size_t trunc) {
  std::vector<CatalogOutcome> out;
  for (const auto& entry : catalog) {
    if (entry.record)
      out.push_back(verify_record(*entry.record, trunc));
    else
      out.push_back({entry.id, VerifyStatus::error, std::nullopt, 0, {}, entry.error});
  }
  return out;
}

std::vector<const CatalogEntry*> select(const Catalog& catalog, std::string_view id) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog) {
    const std::string_view eid = e.id;
    if (eid == id || (eid.size() > id.size() && eid.starts_with(id) && eid[id.size()] == ':')) out.push_back(&e);
  }
  return out;
}

}  // namespace parlab
