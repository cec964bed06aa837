#include "biblio/focus.hpp"

#include <algorithm>
#include <cmath>

#include "biblio/text.hpp"

namespace biblio {

namespace {

// Terms of one publication: 1..3-grams within stopword-free token runs.
std::set<std::string> terms_of(const PublicationRecord& pub, TermSource source,
                               const std::set<std::string>& stopwords) {
  std::set<std::string> terms;
  if (source == TermSource::Keywords) {
    for (const auto& k : pub.keywords) {
      std::string t = text::normalize(k);
      if (!t.empty()) terms.insert(t);
    }
    return terms;
  }
  std::string fulltext = pub.title;
  if (pub.abstract) fulltext += ". " + *pub.abstract;
  std::vector<std::string> tokens = text::tokenize(fulltext);
  std::vector<std::vector<std::string>> runs(1);
  for (auto& tok : tokens) {
    if (stopwords.count(tok)) {
      if (!runs.back().empty()) runs.emplace_back();
    } else {
      runs.back().push_back(std::move(tok));
    }
  }
  for (const auto& run : runs)
    for (std::size_t i = 0; i < run.size(); ++i)
      for (std::size_t n = 1; n <= 3 && i + n <= run.size(); ++n) {
        std::string gram = run[i];
        for (std::size_t k = 1; k < n; ++k) gram += " " + run[i + k];
        terms.insert(std::move(gram));
      }
  return terms;
}

}  // namespace

std::vector<TermStats> extract_terms(std::span<const PublicationRecord> pubs,
                                     TermSource source,
                                     const std::set<std::string>& stopwords) {
  std::map<std::string, TermStats> by_term;
  for (const auto& pub : pubs) {
    for (auto& term : terms_of(pub, source, stopwords)) {
      auto& ts = by_term[term];
      ts.term = term;
      ++ts.occurrences;
      ts.pub_ids.insert(pub.id);
    }
  }
  std::vector<TermStats> out;
  out.reserve(by_term.size());
  for (auto& [term, ts] : by_term) out.push_back(std::move(ts));
  return out;  // map order: alphabetical, deterministic
}

std::vector<TermStats> select_terms(std::vector<TermStats> terms,
                                    std::span<const PublicationRecord> pubs,
                                    const std::string& primary_source,
                                    int min_occurrences, double keep_fraction) {
  if (keep_fraction <= 0.0 || keep_fraction > 1.0)
    throw std::invalid_argument("keep_fraction must be in (0, 1]");
  if (min_occurrences < 1)
    throw std::invalid_argument("min_occurrences must be >= 1");

  std::map<std::string, int> citations_by_pub;
  for (const auto& pub : pubs)
    citations_by_pub[pub.id] = pub.citations(primary_source);

  std::vector<TermStats> passing;
  for (auto& ts : terms) {
    if (ts.occurrences < min_occurrences) continue;
    double sum = 0.0;
    for (const auto& id : ts.pub_ids) sum += citations_by_pub[id];
    ts.relevance = ts.pub_ids.empty() ? 0.0 : sum / ts.pub_ids.size();
    passing.push_back(std::move(ts));
  }
  std::sort(passing.begin(), passing.end(),
            [](const TermStats& a, const TermStats& b) {
              if (a.relevance != b.relevance) return a.relevance > b.relevance;
              if (a.occurrences != b.occurrences)
                return a.occurrences > b.occurrences;
              return a.term < b.term;
            });
  std::size_t keep =
      std::size_t(std::ceil(keep_fraction * double(passing.size())));
  passing.resize(std::min(passing.size(), keep));
  for (auto& ts : passing) ts.selected = true;
  return passing;
}

Graph term_cooccurrence_map(std::span<const PublicationRecord> pubs,
                            std::span<const TermStats> selected) {
  GraphBuilder b;
  for (const auto& ts : selected) b.add_node(ts.term, ts.term, ts.occurrences);
  for (const auto& pub : pubs) {
    std::vector<const TermStats*> present;
    for (const auto& ts : selected)
      if (ts.pub_ids.count(pub.id)) present.push_back(&ts);
    for (std::size_t i = 0; i < present.size(); ++i)
      for (std::size_t j = i + 1; j < present.size(); ++j)
        b.bump_edge(present[i]->term, present[j]->term);
  }
  return b.build();
}

InterdisciplinarityProfile interdisciplinarity(
    const Corpus& corpus, const JournalMetricsTable* metrics) {
  InterdisciplinarityProfile p;
  for (const auto& pub : corpus.focal_pubs) {
    std::vector<std::string> categories;
    if (metrics && pub.venue_id)
      categories = metrics->categories_any(*pub.venue_id);
    if (categories.empty()) {
      ++p.unclassified;
      continue;
    }
    for (const auto& c : categories) ++p.category_counts[c];
  }
  p.distinct_categories = int(p.category_counts.size());
  return p;
}

}  // namespace biblio
