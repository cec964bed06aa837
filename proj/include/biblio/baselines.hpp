#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "biblio/types.hpp"

namespace biblio {

/// Lookup failed against a loaded table (unknown journal, category or
/// baseline cell). The message names the missing key.
struct LookupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Metric { IF, IF5, AIS, SJR, SNIP };
std::string_view to_string(Metric m);
std::optional<Metric> metric_from_string(std::string_view name);

enum class Quartile { Q1 = 1, Q2 = 2, Q3 = 3, Q4 = 4 };
std::string_view to_string(Quartile q);

struct JournalMetricRow {
  std::string journal_id;
  int edition_year = 0;
  Metric metric = Metric::IF;
  double value = 0.0;
  std::vector<std::string> categories;
};

/// Per-edition journal impact values with category assignments.
/// (journal_id, edition_year, metric) is unique.
class JournalMetricsTable {
 public:
  /// CSV columns: journal_id,edition_year,metric,value,categories
  /// (categories ';'-separated).
  static JournalMetricsTable load_csv(const std::filesystem::path& path);

  void add(JournalMetricRow row);

  const JournalMetricRow* find(const std::string& journal_id, Metric metric,
                               int edition_year) const;
  bool has_journal(const std::string& journal_id) const;

  /// Categories of the journal at (metric, edition); empty when unknown.
  std::vector<std::string> categories_of(const std::string& journal_id,
                                         Metric metric, int edition_year) const;
  /// Union of category assignments across all rows of the journal.
  std::vector<std::string> categories_any(const std::string& journal_id) const;

  /// (journal_id, value) pairs of every journal in `category` at the
  /// given metric and edition.
  std::vector<std::pair<std::string, double>> category_values(
      const std::string& category, Metric metric, int edition_year) const;

  /// Most recent edition year present for the metric; 0 when none.
  int latest_edition(Metric metric) const;

  const std::vector<JournalMetricRow>& rows() const { return rows_; }

 private:
  std::vector<JournalMetricRow> rows_;
  std::map<std::string, std::vector<std::size_t>> by_journal_;
};

struct QuartileAssignment {
  std::string journal_id;
  std::string category;
  Metric metric = Metric::IF;
  int edition_year = 0;
  int rank = 0;  // 1-based; ties share the best rank of the tied block
  int category_size = 0;
  Quartile quartile = Quartile::Q4;
};

/// Rank-based quartile within one category: journals sorted by value
/// descending, quartile = ceil(4*rank / category_size).
QuartileAssignment quartile_of(const std::string& journal_id,
                               const std::string& category, Metric metric,
                               int edition_year,
                               const JournalMetricsTable& table);

/// Minimal quartile across the journal's categories; ties broken by
/// smaller rank/category_size ratio, then category name.
QuartileAssignment best_quartile(const std::string& journal_id, Metric metric,
                                 int edition_year,
                                 const JournalMetricsTable& table);

struct BaselineRow {
  std::string category;
  int pub_year = 0;
  DocType doc_type = DocType::JournalArticle;
  double expected = 0.0;
  double p90 = 0.0;
  double p99 = 0.0;
};

/// Expected citations and percentile thresholds per
/// (category, pub_year, doc_type). Supplied as data, never derived from
/// the corpus.
class BaselineTable {
 public:
  /// CSV columns: category,pub_year,doc_type,expected,p90,p99
  static BaselineTable load_csv(const std::filesystem::path& path);

  void add(BaselineRow row);
  const BaselineRow* find(const std::string& category, int pub_year,
                          DocType doc_type) const;
  bool empty() const { return rows_.empty(); }

 private:
  std::vector<BaselineRow> rows_;
  std::map<std::tuple<std::string, int, int>, std::size_t> index_;
};

/// Arithmetic mean of per-category expected citations (fractional
/// counting across multiple category assignments).
double expected_citations(const std::vector<std::string>& categories,
                          int pub_year, DocType doc_type,
                          const BaselineTable& table);

struct PercentileFlags {
  bool top10 = false;
  bool top1 = false;
};

/// citations >= the minimum (most favorable) category threshold.
PercentileFlags percentile_flags(int citations,
                                 const std::vector<std::string>& categories,
                                 int pub_year, DocType doc_type,
                                 const BaselineTable& table);

struct TopJournalList {
  std::string name;
  std::set<std::string> journal_ids;

  /// One journal id per line, '#' comments allowed.
  static TopJournalList load(const std::filesystem::path& path,
                             const std::string& name);
};

}  // namespace biblio
