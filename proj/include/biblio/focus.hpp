#pragma once

#include <set>
#include <span>
#include <string>
#include <vector>

#include "biblio/config.hpp"
#include "biblio/networks.hpp"
#include "biblio/types.hpp"

namespace biblio {

struct TermStats {
  std::string term;  // normalized n-gram, n <= 3
  int occurrences = 0;  // publications containing it, once per publication
  double relevance = 0.0;  // mean times-cited of containing publications
  bool selected = false;
  std::set<std::string> pub_ids;
};

/// 1..3-grams over title+abstract tokens (stopwords act as boundaries),
/// or normalized keywords when source = Keywords.
std::vector<TermStats> extract_terms(std::span<const PublicationRecord> pubs,
                                     TermSource source,
                                     const std::set<std::string>& stopwords);

/// Occurrence-threshold filter, then the top ceil(keep_fraction * N) by
/// relevance (ties: occurrences desc, term asc). Returns the selected
/// terms, relevance filled, sorted by the selection order.
std::vector<TermStats> select_terms(std::vector<TermStats> terms,
                                    std::span<const PublicationRecord> pubs,
                                    const std::string& primary_source,
                                    int min_occurrences, double keep_fraction);

/// Node per selected term (weight = occurrences), edge weight = number of
/// publications containing both terms.
Graph term_cooccurrence_map(std::span<const PublicationRecord> pubs,
                            std::span<const TermStats> selected);

struct InterdisciplinarityProfile {
  std::map<std::string, int> category_counts;  // every venue category counts
  int distinct_categories = 0;
  int unclassified = 0;  // pubs whose venue resolves to no category
};

InterdisciplinarityProfile interdisciplinarity(const Corpus& corpus,
                                               const JournalMetricsTable* metrics);

}  // namespace biblio
