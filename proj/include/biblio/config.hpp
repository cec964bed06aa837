#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "biblio/baselines.hpp"
#include "biblio/types.hpp"

namespace biblio {

/// A required table or configuration value is absent. CLI exit code 2.
struct MissingTableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class TermSource { TitleAbstract, Keywords };

/// Analysis configuration. Loaded from a JSON file; keys may be nested
/// objects or flat dotted strings ("window.start"). Relative table paths
/// resolve against the config file's directory.
struct Config {
  Window window{0, 0};
  std::vector<int> i_thresholds{10, 50, 100};

  Metric visibility_metric = Metric::IF;
  int visibility_edition_year = 0;   // 0: latest edition in the table
  bool visibility_multi_edition = false;  // edition = pub_year instead

  std::string citation_primary_source;  // empty: first source in the corpus

  double selfcite_usual_max = 0.20;
  double dependence_flag_min = 0.75;
  double alphabetical_suppress_min = 0.80;
  int cooperation_max_rows = 50;

  int focus_min_occurrences = 2;
  double focus_keep_fraction = 0.6;
  TermSource focus_source = TermSource::TitleAbstract;

  std::optional<double> field_half_life;
  int knowledge_top_n = 10;
  bool impact_report_stddev = false;

  std::set<std::string> stopwords;  // loaded from focus.stoplist
  std::map<std::string, bool> sections;  // absent section name: enabled

  std::filesystem::path metrics_path;
  std::filesystem::path baselines_path;
  std::filesystem::path aliases_path;
  std::filesystem::path stoplist_path;
  std::map<std::string, std::filesystem::path> top_list_paths;

  bool section_enabled(const std::string& name) const;

  /// Primary citation source for this corpus: the configured one, else
  /// the alphabetically first source the corpus mentions.
  std::string primary_source_for(const Corpus& corpus) const;

  /// Edition year used for a publication of `pub_year`.
  int edition_for(int pub_year, const JournalMetricsTable& table) const;

  static Config load(const std::filesystem::path& path);
  static Config from_json(const nlohmann::json& j,
                          const std::filesystem::path& base_dir = {});

  /// Snapshot of the effective settings, for the report metadata.
  nlohmann::ordered_json to_json() const;

  /// Built-in English stoplist used when no stoplist file is given.
  static const std::set<std::string>& default_stopwords();
};

}  // namespace biblio
