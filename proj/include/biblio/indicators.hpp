#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "biblio/baselines.hpp"
#include "biblio/config.hpp"
#include "biblio/types.hpp"

namespace biblio {

// ---- index family ---------------------------------------------------------

/// Largest h such that at least h items have >= h citations.
int h_index(std::span<const int> citation_counts);

/// Largest g (capped at the item count) such that the g most-cited items
/// together have >= g^2 citations.
int g_index(std::span<const int> citation_counts);

/// Number of items with at least `threshold` citations.
int i_index(std::span<const int> citation_counts, int threshold);

/// h divided by inclusive career length in years.
double m_quotient(int h, int first_pub_year, int reference_year);

// ---- activity -------------------------------------------------------------

struct ActivityProfile {
  Window window;
  std::map<int, std::map<DocType, int>> per_year_by_type;  // window years only
  std::map<int, int> per_year_total;                       // window years only
  int window_total = 0;
  double trend_slope = 0.0;  // OLS over yearly totals; 0 when undefined
  int earlier_count = 0;     // pubs before the window
  int current_incomplete_year_count = 0;  // pubs after the window
};

ActivityProfile activity_profile(const Corpus& corpus, Window window);

// ---- co-authorship --------------------------------------------------------

struct CoauthorWindowStats {
  Window window;
  int pubs = 0;
  double mean_coauthors = 0.0;    // authors minus one, over pubs in window
  double median_coauthors = 0.0;
  int max_coauthors = 0;
  CountPercent single_authored;
};

struct CoauthorProfile {
  std::vector<CoauthorWindowStats> per_window;  // first entry = full window
  CountPercent single_authored;                 // full window
  CountPercent first_role;
  CountPercent last_role;  // final index, multi-author pubs only
  CountPercent corresponding_role;
  std::string dependence_key;    // co-author identity with the top share
  std::string dependence_name;
  double dependence_share = 0.0;
  bool dependence_flagged = false;  // share > dependence.flag_min
  double alphabetical_share = 0.0;  // multi-author pubs in key order
  bool suppress_role_interpretation = false;
};

CoauthorProfile coauthor_profile(const Corpus& corpus,
                                 std::span<const Window> windows,
                                 const Config& config);

// ---- funding --------------------------------------------------------------

struct FundingProfile {
  CountPercent funded;
  std::vector<std::pair<std::string, int>> funder_ranking;  // count desc, name
};

FundingProfile funding_profile(const Corpus& corpus, Window window);

// ---- visibility -----------------------------------------------------------

/// Counts keyed "Q1".."Q4" and "Unranked"; every key always present.
struct QuartileDistribution {
  std::map<std::string, int> counts;
  QuartileDistribution();
  int total() const;
};

struct JournalTableRow {
  std::string journal_id;  // venue_id, or normalized name when absent
  std::string journal_name;
  int items = 0;
  int citations = 0;
  std::optional<double> metric_value;
  std::optional<Quartile> quartile;
};

struct VisibilityProfile {
  std::map<std::string, CountPercent> coverage;  // per source name
  CountPercent english;
  CountPercent open_access;
  QuartileDistribution full_window;
  QuartileDistribution first_half;
  QuartileDistribution second_half;
  std::vector<JournalTableRow> journal_table;
  std::map<std::string, int> top_list_counts;
};

VisibilityProfile visibility_profile(const Corpus& corpus,
                                     const JournalMetricsTable& metrics,
                                     const std::vector<TopJournalList>& lists,
                                     const Config& config);

// ---- impact ---------------------------------------------------------------

enum class Scope { CitableItems, AllItems };
std::string_view to_string(Scope s);

struct SelfCitationResult {
  double rate = 0.0;
  bool elevated = false;  // rate > usual_max
  int self_edges = 0;
  int total_edges = 0;
};

/// Share of citation edges whose citing record shares an author identity
/// with the cited record (ORCID match or normalized-key match).
SelfCitationResult self_citation_rate(const Corpus& corpus, Scope scope,
                                      double usual_max = 0.20);

/// citations / expected_citations for the publication's categories, year
/// and doc type. Throws LookupError when a baseline row is missing.
double cnci(const PublicationRecord& pub, int citations,
            const std::vector<std::string>& categories,
            const BaselineTable& baselines);

struct ImpactProfile {
  Scope scope = Scope::AllItems;
  int pub_count = 0;
  long total_citations = 0;
  int max_citations = 0;
  double mean_citations = 0.0;
  std::optional<double> stddev_citations;  // only when configured
  CountPercent cited;
  double citations_per_cited_doc = 0.0;  // headline indicator
  int h = 0;
  int g = 0;
  double m_quotient = 0.0;
  std::optional<int> first_pub_year;
  std::map<int, int> i_indices;  // threshold -> count
  SelfCitationResult self_citation;
  double cnci_mean = 0.0;
  int cnci_evaluated = 0;
  CountPercent top10;  // percents over the CNCI-evaluable subset
  CountPercent top1;
  std::vector<std::string> excluded_from_cnci;  // ids lacking baselines
  std::vector<Issue> warnings;
};

ImpactProfile impact_profile(const Corpus& corpus,
                             const JournalMetricsTable* metrics,
                             const BaselineTable* baselines,
                             const Config& config, Scope scope);

// ---- affiliation & funding helpers ---------------------------------------

/// Categories used for a publication's normalization: the metrics-table
/// assignment of its venue at the configured metric/edition. Empty when
/// the venue is unknown.
std::vector<std::string> categories_for(const PublicationRecord& pub,
                                        const JournalMetricsTable* metrics,
                                        const Config& config);

}  // namespace biblio
