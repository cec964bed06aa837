#pragma once

#include <span>
#include <string>
#include <vector>

#include "biblio/config.hpp"
#include "biblio/indicators.hpp"
#include "biblio/types.hpp"

namespace biblio {

struct GraphNode {
  std::string key;
  std::string label;
  double weight = 0.0;  // publication count by convention
};

struct GraphEdge {
  std::string a;  // a < b after canonicalization
  std::string b;
  double weight = 0.0;
};

/// Undirected weighted graph. Nodes sorted by key, edges by (a, b);
/// no self-loops, one edge per unordered pair.
struct Graph {
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;

  const GraphNode* find_node(const std::string& key) const;
  const GraphEdge* find_edge(const std::string& a, const std::string& b) const;
};

/// Accumulates node/edge weights, then emits a canonical Graph.
class GraphBuilder {
 public:
  void add_node(const std::string& key, const std::string& label,
                double weight = 0.0);
  void bump_node(const std::string& key, const std::string& label,
                 double delta = 1.0);
  void bump_edge(const std::string& a, const std::string& b,
                 double delta = 1.0);
  Graph build() const;

 private:
  std::map<std::string, std::pair<std::string, double>> nodes_;
  std::map<std::pair<std::string, std::string>, double> edges_;
};

enum class GraphFormat { DOT, GraphML };

/// Deterministic, byte-stable serialization. Node attribute `weight`,
/// edge attribute `weight`; nodes sorted by key.
std::string export_graph(const Graph& g, GraphFormat format);

/// Node per author identity (weight = pubs), edge weight = co-publications.
Graph coauthor_network(const Corpus& corpus, Window window);

/// Node per country on focal-pub affiliations, edge weight = pubs where
/// both countries appear.
Graph country_copub_network(const Corpus& corpus, Window window);

/// Country network over the citing publications.
Graph citing_country_network(const Corpus& corpus);

/// Node per publication; edge weight = shared cited references.
Graph bibliographic_coupling(std::span<const PublicationRecord> pubs);

struct CooperationRow {
  std::string institution;
  std::string country;
  CountPercent copubs;
  int citations = 0;
  double cnci = 0.0;
  int cnci_evaluated = 0;
  double top10_pct = 0.0;
  double top1_pct = 0.0;
  double intl_pct = 0.0;
  double industry_pct = 0.0;
};

/// One row per non-home institution on >= 1 focal pub, metrics over the
/// shared subset; sorted by co-publications desc, citations desc, name.
std::vector<CooperationRow> institution_cooperation_table(
    const Corpus& corpus, const JournalMetricsTable* metrics,
    const BaselineTable* baselines, const Config& config);

enum class CollaborationClass { International, National, Domestic, Unclassified };

/// International if any foreign affiliation, else National if >= 2
/// distinct domestic institutions, else Domestic. No affiliations:
/// Unclassified.
CollaborationClass classify_collaboration(const PublicationRecord& pub,
                                          const std::string& home_country);

struct CollaborationShares {
  struct Entry {
    Window window;
    int classified = 0;
    int unclassified = 0;
    double international = 0.0;
    double national = 0.0;
    double domestic = 0.0;
  };
  std::vector<Entry> per_window;
};

CollaborationShares collaboration_shares(const Corpus& corpus,
                                         std::span<const Window> windows);

struct CitingDocsProfile {
  int citing_count = 0;
  QuartileDistribution venue_quartiles;  // never drops a citing pub
  double cnci_mean = 0.0;
  int cnci_evaluated = 0;
  CountPercent top10;
  CountPercent top1;
  std::map<std::string, int> top_list_counts;
};

CitingDocsProfile citing_docs_profile(const Corpus& corpus,
                                      const JournalMetricsTable* metrics,
                                      const BaselineTable* baselines,
                                      const std::vector<TopJournalList>& lists,
                                      const Config& config);

struct KeyActors {
  std::vector<std::pair<std::string, int>> authors;       // count desc, name
  std::vector<std::pair<std::string, int>> institutions;
  std::vector<std::pair<std::string, int>> funders;
  struct RankedPub {
    std::string id;
    std::string title;
    int citations = 0;
    bool has_flags = false;
    bool top10 = false;
    bool top1 = false;
  };
  std::vector<RankedPub> publications;  // citations desc, id
};

KeyActors key_actors(std::span<const PublicationRecord> pubs,
                     const JournalMetricsTable* metrics,
                     const BaselineTable* baselines, const Config& config);

}  // namespace biblio
