#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "biblio/config.hpp"
#include "biblio/networks.hpp"
#include "biblio/types.hpp"

namespace biblio {

struct Section {
  std::string name;
  nlohmann::ordered_json payload;
  std::vector<std::string> notes;
};

/// Assembled multi-section profile. Section order is fixed:
/// Methodology, Coverage, Activity, AffiliationFunding, Coauthorship,
/// Visibility, Impact, CitingAnalysis, Cooperation, ReferenceAnalysis,
/// ResearchFocus, Summary, Annex.
struct ReportDocument {
  nlohmann::ordered_json metadata;  // researcher, corpus_hash, config, timestamp
  std::vector<Section> sections;

  const Section* find_section(const std::string& name) const;
  nlohmann::ordered_json to_json() const;
  static ReportDocument from_json(const nlohmann::ordered_json& j);
};

struct ReportInputs {
  const JournalMetricsTable* metrics = nullptr;
  const BaselineTable* baselines = nullptr;
  std::vector<TopJournalList> top_lists;
};

/// Short deterministic identifier used in output file names.
std::string report_id(const Corpus& corpus);

/// All analysis graphs for a corpus, keyed by graph name
/// (coauthor, country_copub, citing_country, coupling, term_map).
std::map<std::string, Graph> report_graphs(const Corpus& corpus,
                                           const Config& config);

/// Runs every enabled analysis section. Throws MissingTableError when an
/// enabled section needs an absent table. Deterministic apart from the
/// metadata timestamp.
ReportDocument build_report(const Corpus& corpus, const ReportInputs& inputs,
                            const Config& config);

enum class RenderFormat { Structured, Markdown };

/// Structured: canonical JSON, stable key order. Markdown: human-readable
/// tables referencing the sibling graph files.
std::string render(const ReportDocument& report, RenderFormat format);

/// Per-peer visibility/impact/focus comparison over a shared config,
/// including the reference-overlap analysis.
nlohmann::ordered_json compare_peers(
    const Corpus& focal,
    const std::vector<std::pair<std::string, Corpus>>& peers,
    const ReportInputs& inputs, const Config& config);

/// Static questionnaire emitted by the CLI, filled in by hand.
std::string interview_template();

}  // namespace biblio
