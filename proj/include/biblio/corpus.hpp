#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "biblio/types.hpp"

namespace biblio {

/// Structural problem in an input file (bad syntax, missing field,
/// broken referential integrity). Carries a record/line locator in what().
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Maps raw document-type strings to the standard groups. Multi-valued
/// inputs ("article; proceedings paper") resolve by fixed precedence.
class DocTypeAliases {
 public:
  /// Built-in table covering common WoS/Scopus/CRIS spellings.
  static DocTypeAliases defaults();

  /// Merges a two-column CSV `raw,canonical` over the current table.
  void load_csv(const std::filesystem::path& path);

  void add(std::string raw, DocType canonical);

  /// Total function; unmapped inputs yield Other (and set *unmapped).
  DocType normalize(std::string_view raw, bool* unmapped = nullptr) const;

 private:
  std::map<std::string, DocType> table_;  // keyed by normalized raw string
};

/// normalize via the default alias table.
DocType normalize_doc_type(std::string_view raw);

struct CoverageResult {
  std::string source_name;
  int total_master = 0;
  int matched = 0;
  double percent = 0.0;
  std::vector<std::string> unmatched_ids;
};

Corpus parse_corpus(const nlohmann::json& j, const DocTypeAliases& aliases);
Corpus load_corpus(const std::filesystem::path& path,
                   const DocTypeAliases& aliases = DocTypeAliases::defaults());

/// Canonical serialization; parse_corpus(to_json(c)) == c.
nlohmann::ordered_json to_json(const Corpus& c);

/// Stable content hash of the canonical serialization, hex string.
std::string corpus_hash(const Corpus& c);

/// Non-fatal data-quality checks (year ranges, country codes, cited-count
/// vs edge-count consistency for `primary_source` when non-empty).
std::vector<Issue> validate_corpus(const Corpus& c,
                                   const std::string& primary_source = "");

/// DOI-then-normalized-title matching of a researcher-provided list
/// against one database export. One-to-one; ties take the smallest
/// export id; ambiguities are reported through `warnings`.
CoverageResult match_publication_list(
    const std::vector<PublicationRecord>& master,
    const std::vector<PublicationRecord>& export_records,
    const std::string& source_name, std::vector<Issue>* warnings = nullptr);

}  // namespace biblio
