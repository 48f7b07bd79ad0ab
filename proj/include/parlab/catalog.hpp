#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "parlab/int_series.hpp"
#include "parlab/operators.hpp"

namespace parlab {

/// One summand of an identity side: a source series followed by dissection
/// steps.
struct SideTerm {
  std::variant<QExpr, ThetaCertificate, SingularSpec> source;
  std::vector<PipelineStep> steps;
};

/// Sum of terms; terms are compared at their common (smallest) truncation.
struct IdentitySide {
  std::vector<SideTerm> terms;
};

struct IdentityRecord {
  std::string id;
  IdentitySide lhs;
  IdentitySide rhs;
  std::size_t min_trunc = 2000;
  std::string anchor;
};

/// A catalog slot: either a record or the reason it failed to load.
struct CatalogEntry {
  std::string id;
  std::optional<IdentityRecord> record;
  std::string error;
};

using Catalog = std::vector<CatalogEntry>;

/// Parses a JSON catalog. Malformed JSON or a non-array document throws;
/// a malformed record becomes an entry with an error.
Catalog load_catalog(std::string_view json_text);
Catalog load_catalog_file(const std::string& path);
/// The catalog compiled into the library.
const Catalog& shipped_catalog();
std::string_view shipped_catalog_json();

BitSeries evaluate(const IdentitySide& side, std::size_t trunc);

enum class VerifyStatus { pass, fail, error };

std::string_view to_string(VerifyStatus s);

struct CatalogOutcome {
  std::string id;
  VerifyStatus status;
  std::optional<std::size_t> first_mismatch;
  /// Truncation the two sides were compared at.
  std::size_t trunc = 0;
  std::string anchor;
  std::string message;
};

/// Each record is evaluated at max(trunc, min_trunc).
CatalogOutcome verify_record(const IdentityRecord& record, std::size_t trunc);
std::vector<CatalogOutcome> verify_catalog(const Catalog& catalog, std::size_t trunc);

/// Entries whose id equals `id` or starts with `id` followed by ':'.
std::vector<const CatalogEntry*> select(const Catalog& catalog, std::string_view id);

}  // namespace parlab
