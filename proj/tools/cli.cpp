#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "parlab/catalog.hpp"
#include "parlab/density.hpp"
#include "parlab/int_series.hpp"
#include "parlab/properties.hpp"
#include "parlab/qexpr.hpp"
#include "parlab/theorems.hpp"

namespace parlab::cli {

namespace {

using nlohmann::json;

enum class Format { plain, csv, json };

struct Common {
  std::size_t trunc = 2000;
  std::string format = "plain";

  Format fmt() const { return format == "csv" ? Format::csv : format == "json" ? Format::json : Format::plain; }
};

void add_common(CLI::App* cmd, Common& c, bool with_trunc = true) {
  if (with_trunc)
    cmd->add_option("-n,--trunc", c.trunc, "Truncation N (number of coefficients)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

// ---- expand ----

struct ExpandArgs {
  Common common;
  std::string expr;
  std::optional<std::size_t> count;
  std::size_t budget = kDefaultExpansionBudget;
};

int cmd_expand(const ExpandArgs& a, std::ostream& out) {
  if (a.common.trunc > a.budget) throw BudgetExceeded(a.common.trunc, a.budget);
  const QExpr e = parse(a.expr);
  const BitSeries s = evaluate(e, a.common.trunc);
  const std::size_t count = std::min(a.count.value_or(64), s.trunc());
  const auto support = s.support();

  switch (a.common.fmt()) {
    case Format::plain: {
      out << "expr:    " << render(e) << "\n";
      out << "trunc:   " << s.trunc() << "\n";
      out << "bits:    ";
      for (std::size_t n = 0; n < count; ++n) out << (n ? "," : "") << s[n];
      out << "\nsupport:";
      for (auto n : support) out << " " << n;
      out << "\n";
      break;
    }
    case Format::csv:
      out << "n,bit\n";
      for (std::size_t n = 0; n < count; ++n) out << n << "," << s[n] << "\n";
      break;
    case Format::json: {
      json bits = json::array();
      for (std::size_t n = 0; n < count; ++n) bits.push_back(s[n] ? 1 : 0);
      json doc = {{"command", "expand"}, {"expr", render(e)}, {"trunc", s.trunc()},
                  {"bits", bits},        {"support", support}};
      out << doc.dump(2) << "\n";
      break;
    }
  }
  return kExitPass;
}

// ---- verify ----

struct Row {
  std::string id;
  std::string status;
  std::optional<std::size_t> first_mismatch;
  std::size_t trunc = 0;
  std::string detail;
  std::vector<DensitySample> density;
};

struct VerifyArgs {
  Common common;
  bool all = false;
  std::string id;
  std::string case_name;
  bool theorem2 = false;
  bool properties = false;
  std::string catalog_path;
  std::uint64_t seed = kDefaultSeed;
  std::size_t instances = 200;
};

std::vector<Row> catalog_rows(const Catalog& catalog, const std::string& id, std::size_t trunc) {
  std::vector<const CatalogEntry*> entries;
  if (id.empty()) {
    for (const auto& e : catalog) entries.push_back(&e);
  } else {
    entries = select(catalog, id);
    if (entries.empty()) throw UsageError("no catalog record with id '" + id + "'");
  }
  std::vector<Row> rows;
  for (const auto* e : entries) {
    CatalogOutcome o = e->record ? verify_record(*e->record, trunc)
                                 : CatalogOutcome{e->id, VerifyStatus::error, std::nullopt, 0, {}, e->error};
    rows.push_back({o.id, std::string(to_string(o.status)), o.first_mismatch, o.trunc,
                    o.message.empty() ? o.anchor : o.message, {}});
  }
  return rows;
}

std::string claim_of(const Theorem2Case& c, const std::string& label) {
  for (const auto& s : c.subsequences)
    if (s.label() == label) return render(s.pipeline.claim);
  return {};
}

void theorem2_rows(const Theorem2Case& c, std::size_t trunc, std::vector<Row>& rows) {
  const Theorem2Report report = verify_theorem2(c, trunc);
  for (const auto& s : report.subsequences) {
    std::string detail = "claim " + claim_of(c, s.label) + "; pipeline " + (s.pipeline_match ? "match" : "mismatch") +
                         "; certificate " + (s.certificate_match ? "match" : "mismatch");
    auto first = s.pipeline_mismatch ? s.pipeline_mismatch : s.certificate_witness;
    rows.push_back({"k" + std::to_string(s.k) + ":" + s.label, s.passed() ? "pass" : "fail", first, s.final_trunc,
                    std::move(detail), s.density});
  }
}

std::int64_t parse_case(const std::string& name) {
  std::size_t used = 0;
  std::int64_t k = 0;
  try {
    if (name.size() < 2 || name[0] != 'k') throw std::invalid_argument(name);
    k = std::stoll(name.substr(1), &used);
  } catch (const std::exception&) {
    throw UsageError("case must look like k7, got '" + name + "'");
  }
  if (used + 1 != name.size()) throw UsageError("case must look like k7, got '" + name + "'");
  return k;
}

void print_rows(const std::vector<Row>& rows, const std::string& scope, std::size_t trunc, bool passed, Format fmt,
                std::ostream& out) {
  switch (fmt) {
    case Format::plain: {
      std::size_t width = 4;
      for (const auto& r : rows) width = std::max(width, r.id.size());
      for (const auto& r : rows) {
        out << std::left << std::setw(static_cast<int>(width) + 2) << r.id << std::setw(6) << r.status;
        out << "trunc=" << std::setw(7) << r.trunc;
        if (r.first_mismatch) out << "first_mismatch=" << *r.first_mismatch << "  ";
        out << r.detail << "\n";
        if (!r.density.empty()) {
          out << std::string(width + 2, ' ') << "density";
          for (const auto& d : r.density) out << "  M=" << d.M << ":" << render_density(d.density);
          out << "\n";
        }
      }
      const auto failed = std::count_if(rows.begin(), rows.end(), [](const Row& r) { return r.status != "pass"; });
      out << (passed ? "PASS" : "FAIL") << ": " << rows.size() - failed << "/" << rows.size() << " checks passed\n";
      break;
    }
    case Format::csv:
      out << "id,status,first_mismatch,trunc,detail\n";
      for (const auto& r : rows)
        out << csv_quote(r.id) << "," << r.status << ","
            << (r.first_mismatch ? std::to_string(*r.first_mismatch) : std::string()) << "," << r.trunc << ","
            << csv_quote(r.detail) << "\n";
      break;
    case Format::json: {
      json results = json::array();
      for (const auto& r : rows) {
        json j = {{"id", r.id},
                  {"status", r.status},
                  {"first_mismatch", r.first_mismatch ? json(*r.first_mismatch) : json(nullptr)},
                  {"trunc", r.trunc},
                  {"detail", r.detail}};
        if (!r.density.empty()) {
          json d = json::array();
          for (const auto& s : r.density)
            d.push_back({{"M", s.M},
                         {"decimal", render_density(s.density)},
                         {"fraction", std::to_string(s.density.zeros) + "/" + std::to_string(s.density.total)}});
          j["density"] = std::move(d);
        }
        results.push_back(std::move(j));
      }
      json doc = {{"command", "verify"}, {"scope", scope}, {"trunc", trunc}, {"passed", passed}, {"results", results}};
      out << doc.dump(2) << "\n";
      break;
    }
  }
}

int cmd_verify(const VerifyArgs& a, bool trunc_given, std::ostream& out) {
  const int scopes = int(a.all) + int(!a.id.empty()) + int(!a.case_name.empty()) + int(a.theorem2) + int(a.properties);
  if (scopes != 1) throw UsageError("verify needs exactly one of --all, --id, --case, --theorem2, --properties");

  std::vector<Row> rows;
  std::string scope;
  std::size_t trunc = a.common.trunc;
  if (a.all || !a.id.empty()) {
    scope = a.all ? "all" : "id:" + a.id;
    Catalog loaded;
    if (!a.catalog_path.empty()) {
      try {
        loaded = load_catalog_file(a.catalog_path);
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
    }
    rows = catalog_rows(a.catalog_path.empty() ? shipped_catalog() : loaded, a.id, trunc);
  } else if (!a.case_name.empty()) {
    scope = "case:" + a.case_name;
    const auto k = parse_case(a.case_name);
    const Theorem2Case* found = nullptr;
    for (const auto& c : theorem2_registry())
      if (c.k == k) found = &c;
    if (!found) throw UsageError("no lacunary progression case for k = " + std::to_string(k));
    theorem2_rows(*found, trunc, rows);
  } else if (a.theorem2) {
    scope = "theorem2";
    for (const auto& c : theorem2_registry()) theorem2_rows(c, trunc, rows);
  } else {
    scope = "properties";
    if (!trunc_given) trunc = 512;
    for (const auto& p : run_property_suite(a.seed, a.instances, trunc)) {
      rows.push_back({p.name, p.passed() ? "pass" : "fail", p.first_failure, trunc,
                      std::to_string(p.instances) + " instances, " + std::to_string(p.failures) +
                          " failures, seed " + std::to_string(a.seed),
                      {}});
    }
  }

  const bool any_fail = std::any_of(rows.begin(), rows.end(), [](const Row& r) { return r.status == "fail"; });
  const bool any_error = std::any_of(rows.begin(), rows.end(), [](const Row& r) { return r.status == "error"; });
  print_rows(rows, scope, trunc, !any_fail && !any_error, a.common.fmt(), out);
  if (any_fail) return kExitMismatch;
  return any_error ? kExitUsage : kExitPass;
}

// ---- density ----

struct DensityArgs {
  Common common;
  std::vector<std::int64_t> ks;
  std::vector<std::size_t> Ms;
  bool remark_table = false;
  std::size_t budget = kDefaultExpansionBudget;
};

std::string format_plain_with_counts(const std::vector<DensityReport>& reports) {
  std::ostringstream os;
  os << format_plain(reports) << "\nzero counts\n";
  os << std::left << std::setw(10) << "M";
  for (const auto& r : reports) os << std::setw(12) << ("k=" + std::to_string(r.k));
  os << "\n";
  for (std::size_t i = 0; i < reports.front().samples.size(); ++i) {
    os << std::setw(10) << reports.front().samples[i].M;
    for (const auto& r : reports) os << std::setw(12) << r.samples[i].density.zeros;
    os << "\n";
  }
  return os.str();
}

int cmd_density(const DensityArgs& a, std::ostream& out) {
  std::vector<DensityReport> reports;
  if (a.remark_table) {
    if (!a.ks.empty() || !a.Ms.empty()) throw UsageError("--remark-table takes no -k or -M");
    reports = density_grid(kRemarkKs, kRemarkMs, a.budget);
  } else {
    if (a.ks.empty() || a.Ms.empty()) throw UsageError("density needs -k and -M, or --remark-table");
    reports = density_grid(a.ks, a.Ms, a.budget);
  }
  switch (a.common.fmt()) {
    case Format::plain: out << format_plain_with_counts(reports); break;
    case Format::csv: out << format_csv(reports); break;
    case Format::json: out << format_json(reports); break;
  }
  return kExitPass;
}

// ---- oracle ----

struct OracleArgs {
  std::string format = "plain";
  std::int64_t k = 0;
  std::int64_t i = 0;
  std::int64_t n_max = 20;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  if (a.n_max < 0 || a.n_max > kBruteForceMaxN)
    throw UsageError("oracle needs 0 <= n <= " + std::to_string(kBruteForceMaxN));
  std::optional<IntSeries> product;
  try {
    product = singular_series(SingularSpec(a.k, a.i), static_cast<std::size_t>(a.n_max) + 1);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  struct OracleRow {
    std::int64_t n;
    std::string brute, series;
  };
  std::vector<OracleRow> rows;
  bool all_equal = true;
  for (std::int64_t n = 0; n <= a.n_max; ++n) {
    const BigInt b = brute_force_count(a.k, a.i, n);
    const BigInt& p = (*product)[static_cast<std::size_t>(n)];
    all_equal = all_equal && b == p;
    rows.push_back({n, b.str(), p.str()});
  }
  if (a.format == "plain") {
    out << std::left << std::setw(6) << "n" << std::setw(16) << "brute_force" << std::setw(16) << "product"
        << "equal\n";
    for (const auto& r : rows)
      out << std::setw(6) << r.n << std::setw(16) << r.brute << std::setw(16) << r.series
          << (r.brute == r.series ? "yes" : "NO") << "\n";
    out << (all_equal ? "PASS" : "FAIL") << ": C(" << a.k << "," << a.i << ") for n <= " << a.n_max << "\n";
  } else if (a.format == "csv") {
    out << "n,brute_force,product,equal\n";
    for (const auto& r : rows) out << r.n << "," << r.brute << "," << r.series << "," << (r.brute == r.series) << "\n";
  } else {
    json jr = json::array();
    for (const auto& r : rows)
      jr.push_back({{"n", r.n}, {"brute_force", r.brute}, {"product", r.series}, {"equal", r.brute == r.series}});
    json doc = {{"command", "oracle"}, {"k", a.k}, {"i", a.i}, {"passed", all_equal}, {"rows", jr}};
    out << doc.dump(2) << "\n";
  }
  return all_equal ? kExitPass : kExitMismatch;
}

// ---- thm1 ----

struct Thm1Args {
  std::string format = "plain";
  std::vector<std::int64_t> ks;
};

int cmd_thm1(const Thm1Args& a, std::ostream& out) {
  struct Thm1Row {
    PowerDecomposition d;
    std::int64_t bound;
    bool condition;
    std::optional<bool> cotron;
  };
  std::vector<Thm1Row> rows;
  for (auto k : a.ks) {
    if (k < 2 || k % 2 != 0) throw UsageError("thm1 needs even k >= 2, got " + std::to_string(k));
    const PowerDecomposition d = decompose(k);
    std::optional<bool> cotron;
    if (k >= 4) cotron = cotron_premise(k, 3, 2, d.a);
    const std::int64_t bound = d.a < 62 ? (std::int64_t{3} << d.a) : std::numeric_limits<std::int64_t>::max();
    rows.push_back({d, bound, theorem1_condition(k), cotron});
  }
  if (a.format == "plain") {
    out << std::left << std::setw(8) << "k" << std::setw(5) << "a" << std::setw(10) << "ell" << std::setw(10)
        << "3*2^a" << std::setw(10) << "lacunary" << "cotron(k,3,2,a)\n";
    for (const auto& r : rows)
      out << std::setw(8) << r.d.k << std::setw(5) << r.d.a << std::setw(10) << r.d.ell << std::setw(10) << r.bound
          << std::setw(10) << (r.condition ? "yes" : "no") << (r.cotron ? (*r.cotron ? "yes" : "no") : "-") << "\n";
  } else if (a.format == "csv") {
    out << "k,a,ell,bound,condition,cotron\n";
    for (const auto& r : rows)
      out << r.d.k << "," << r.d.a << "," << r.d.ell << "," << r.bound << "," << r.condition << ","
          << (r.cotron ? std::to_string(int(*r.cotron)) : std::string()) << "\n";
  } else {
    json jr = json::array();
    for (const auto& r : rows)
      jr.push_back({{"k", r.d.k},
                    {"a", r.d.a},
                    {"ell", r.d.ell},
                    {"bound", r.bound},
                    {"condition", r.condition},
                    {"cotron", r.cotron ? json(*r.cotron) : json(nullptr)}});
    out << json{{"command", "thm1"}, {"rows", jr}}.dump(2) << "\n";
  }
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parity checks for singular overpartitions and eta quotients mod 2", "parlab"};
  app.require_subcommand(1);

  ExpandArgs expand;
  auto* c_expand = app.add_subcommand("expand", "Expand a q-expression mod 2");
  add_common(c_expand, expand.common);
  c_expand->add_option("expr", expand.expr, "Expression such as \"f3^3/f1\"")->required();
  c_expand->add_option("-c,--count", expand.count, "Number of leading bits to print (default 64)");
  c_expand->add_option("--budget", expand.budget, "Maximum number of terms")
      ->envname("PARLAB_MAX_TERMS")
      ->capture_default_str();

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Verify catalog records, progression cases or property suites");
  add_common(c_verify, verify.common);
  c_verify->add_flag("--all", verify.all, "Every catalog record");
  c_verify->add_option("--id", verify.id, "One catalog record, or a group such as jacobi-t");
  c_verify->add_option("--case", verify.case_name, "One odd-k progression case, e.g. k7");
  c_verify->add_flag("--theorem2", verify.theorem2, "Every odd-k progression case");
  c_verify->add_flag("--properties", verify.properties, "Randomized GF(2) property suite (N defaults to 512)");
  c_verify->add_option("--catalog", verify.catalog_path, "Catalog JSON file instead of the shipped one");
  c_verify->add_option("--seed", verify.seed, "Seed for --properties")->capture_default_str();
  c_verify->add_option("--instances", verify.instances, "Instances per property")->capture_default_str();

  DensityArgs density;
  auto* c_density = app.add_subcommand("density", "Zero densities of f_k^3/f_1 mod 2");
  add_common(c_density, density.common, false);
  c_density->add_option("-k", density.ks, "Values of k")->delimiter(',')->check(CLI::PositiveNumber);
  c_density->add_option("-M", density.Ms, "Values of M")->delimiter(',')->check(CLI::PositiveNumber);
  c_density->add_flag("--remark-table", density.remark_table, "The 6 x 4 reference grid");
  c_density->add_option("--budget", density.budget, "Maximum number of terms")
      ->envname("PARLAB_MAX_TERMS")
      ->capture_default_str();

  OracleArgs oracle;
  auto* c_oracle = app.add_subcommand("oracle", "Brute-force count against the product expansion");
  c_oracle->add_option("-k", oracle.k, "Modulus k")->required();
  c_oracle->add_option("-i", oracle.i, "Residue i")->required();
  c_oracle->add_option("-n", oracle.n_max, "Largest n (at most 40)")->capture_default_str();
  c_oracle->add_option("--format", oracle.format)->check(CLI::IsMember({"plain", "csv", "json"}));

  Thm1Args thm1;
  auto* c_thm1 = app.add_subcommand("thm1", "k = 2^a ell and the condition ell <= 3*2^a");
  c_thm1->add_option("-k", thm1.ks, "Even values of k")->delimiter(',')->required();
  c_thm1->add_option("--format", thm1.format)->check(CLI::IsMember({"plain", "csv", "json"}));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (c_expand->parsed()) return cmd_expand(expand, out);
    if (c_verify->parsed()) return cmd_verify(verify, c_verify->count("-n") > 0, out);
    if (c_density->parsed()) return cmd_density(density, out);
    if (c_oracle->parsed()) return cmd_oracle(oracle, out);
    if (c_thm1->parsed()) return cmd_thm1(thm1, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (c_expand->parsed() && e.offset() <= expand.expr.size()) {
      std::string expected;
      for (const auto& x : e.expected()) expected += (expected.empty() ? "" : " or ") + x;
      err << "  " << expand.expr << "\n  " << std::string(e.offset(), ' ') << "^";
      if (!expected.empty()) err << " expected " << expected;
      err << "\n";
    }
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace parlab::cli
