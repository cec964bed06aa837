#include <doctest.h>

#include <algorithm>
#include <random>

#include "biblio/focus.hpp"
#include "helpers.hpp"

using namespace biblio;
using testutil::author;
using testutil::pub;

namespace {

PublicationRecord titled(const std::string& id, const std::string& title,
                         int citations = 0) {
  auto p = pub(id, 2010, citations, {author("Doe, Jane", true)});
  p.title = title;
  return p;
}

const std::set<std::string>& stops() { return Config::default_stopwords(); }

const TermStats* find_term(const std::vector<TermStats>& terms,
                           const std::string& t) {
  for (const auto& ts : terms)
    if (ts.term == t) return &ts;
  return nullptr;
}

}  // namespace

TEST_CASE("empty corpus extracts no terms") {
  std::vector<PublicationRecord> pubs;
  CHECK(extract_terms(pubs, TermSource::TitleAbstract, stops()).empty());
}

TEST_CASE("identical titles accumulate occurrences per publication") {
  std::vector<PublicationRecord> pubs{
      titled("P1", "quantum dot synthesis"),
      titled("P2", "quantum dot synthesis")};
  auto terms = extract_terms(pubs, TermSource::TitleAbstract, stops());
  const auto* t = find_term(terms, "quantum dot");
  REQUIRE(t != nullptr);
  CHECK(t->occurrences == 2);
  CHECK(t->pub_ids == std::set<std::string>{"P1", "P2"});
  // all 1..3-grams of the run are present
  CHECK(find_term(terms, "quantum") != nullptr);
  CHECK(find_term(terms, "dot synthesis") != nullptr);
  CHECK(find_term(terms, "quantum dot synthesis") != nullptr);
}

TEST_CASE("a term counts once per publication even when repeated") {
  std::vector<PublicationRecord> pubs{
      titled("P1", "graphene on graphene layers")};
  auto terms = extract_terms(pubs, TermSource::TitleAbstract, stops());
  const auto* t = find_term(terms, "graphene");
  REQUIRE(t != nullptr);
  CHECK(t->occurrences == 1);
}

TEST_CASE("stopwords break n-gram runs") {
  std::vector<PublicationRecord> pubs{titled("P1", "effects of graphene")};
  auto terms = extract_terms(pubs, TermSource::TitleAbstract, stops());
  CHECK(find_term(terms, "effects") != nullptr);
  CHECK(find_term(terms, "graphene") != nullptr);
  CHECK(find_term(terms, "of") == nullptr);
  CHECK(find_term(terms, "effects of graphene") == nullptr);
  CHECK(find_term(terms, "effects graphene") == nullptr);
}

TEST_CASE("abstract contributes terms alongside the title") {
  auto p = titled("P1", "short note");
  p.abstract = "spintronics applications";
  std::vector<PublicationRecord> pubs{p};
  auto terms = extract_terms(pubs, TermSource::TitleAbstract, stops());
  CHECK(find_term(terms, "spintronics") != nullptr);
}

TEST_CASE("keyword source uses normalized keywords verbatim") {
  auto p = titled("P1", "whatever title");
  p.keywords = {"Machine Learning", "graph  theory"};
  std::vector<PublicationRecord> pubs{p};
  auto terms = extract_terms(pubs, TermSource::Keywords, stops());
  CHECK(find_term(terms, "machine learning") != nullptr);
  CHECK(find_term(terms, "graph theory") != nullptr);
  CHECK(find_term(terms, "whatever") == nullptr);
}

TEST_CASE("extraction is invariant under publication order") {
  std::vector<PublicationRecord> pubs{
      titled("P1", "alpha beta gamma"), titled("P2", "beta gamma delta"),
      titled("P3", "gamma delta epsilon")};
  auto t1 = extract_terms(pubs, TermSource::TitleAbstract, stops());
  std::reverse(pubs.begin(), pubs.end());
  auto t2 = extract_terms(pubs, TermSource::TitleAbstract, stops());
  REQUIRE(t1.size() == t2.size());
  for (std::size_t i = 0; i < t1.size(); ++i) {
    CHECK(t1[i].term == t2[i].term);
    CHECK(t1[i].occurrences == t2[i].occurrences);
  }
}

// ---- selection ------------------------------------------------------------

TEST_CASE("selection keeps ceil(fraction * passing) terms") {
  // 10 distinct terms, each on two pubs
  std::vector<PublicationRecord> pubs;
  std::string words;
  for (int i = 0; i < 10; ++i) words += "term" + std::to_string(i) + " ";
  pubs.push_back(titled("P1", words, 4));
  pubs.push_back(titled("P2", words, 0));
  auto all = extract_terms(pubs, TermSource::TitleAbstract, stops());
  // restrict to unigrams for a clean count
  std::vector<TermStats> unigrams;
  for (auto& t : all)
    if (t.term.find(' ') == std::string::npos) unigrams.push_back(t);
  REQUIRE(unigrams.size() == 10);
  auto sel = select_terms(unigrams, pubs, "wos", 2, 0.6);
  CHECK(sel.size() == 6);
  for (const auto& t : sel) {
    CHECK(t.selected);
    CHECK(t.relevance == doctest::Approx(2.0));  // mean of {4, 0}
  }
  // keep_fraction 1.0 keeps all threshold-passing terms
  CHECK(select_terms(unigrams, pubs, "wos", 2, 1.0).size() == 10);
}

TEST_CASE("selection size follows the ceiling rule across fractions") {
  std::vector<PublicationRecord> pubs;
  std::string words;
  for (int i = 0; i < 7; ++i) words += "w" + std::to_string(i) + " ";
  pubs.push_back(titled("P1", words));
  pubs.push_back(titled("P2", words));
  auto all = extract_terms(pubs, TermSource::TitleAbstract, stops());
  std::vector<TermStats> unigrams;
  for (auto& t : all)
    if (t.term.find(' ') == std::string::npos) unigrams.push_back(t);
  REQUIRE(unigrams.size() == 7);
  for (double f : {0.1, 0.3, 0.5, 0.6, 0.9, 1.0}) {
    auto sel = select_terms(unigrams, pubs, "wos", 1, f);
    CHECK(sel.size() == std::size_t(std::ceil(f * 7)));
  }
}

TEST_CASE("occurrence threshold filters singletons") {
  std::vector<PublicationRecord> pubs{titled("P1", "common rare"),
                                      titled("P2", "common")};
  auto all = extract_terms(pubs, TermSource::TitleAbstract, stops());
  auto sel = select_terms(all, pubs, "wos", 2, 1.0);
  CHECK(find_term(sel, "common") != nullptr);
  CHECK(find_term(sel, "rare") == nullptr);
}

TEST_CASE("relevance is the mean citation count of containing pubs") {
  std::vector<PublicationRecord> pubs{titled("P1", "signal", 0),
                                      titled("P2", "signal", 10)};
  auto sel = select_terms(extract_terms(pubs, TermSource::TitleAbstract,
                                        stops()),
                          pubs, "wos", 2, 1.0);
  const auto* t = find_term(sel, "signal");
  REQUIRE(t != nullptr);
  CHECK(t->relevance == doctest::Approx(5.0));
}

TEST_CASE("selection rejects invalid parameters") {
  std::vector<PublicationRecord> pubs{titled("P1", "x")};
  auto terms = extract_terms(pubs, TermSource::TitleAbstract, stops());
  CHECK_THROWS_AS(select_terms(terms, pubs, "wos", 0, 0.6),
                  std::invalid_argument);
  CHECK_THROWS_AS(select_terms(terms, pubs, "wos", 2, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(select_terms(terms, pubs, "wos", 2, 1.5),
                  std::invalid_argument);
}

// ---- co-occurrence map ----------------------------------------------------

TEST_CASE("one selected term -> single node, no edges") {
  std::vector<PublicationRecord> pubs{titled("P1", "solo"), titled("P2", "solo")};
  auto sel = select_terms(extract_terms(pubs, TermSource::TitleAbstract,
                                        stops()),
                          pubs, "wos", 2, 1.0);
  REQUIRE(sel.size() == 1);
  Graph g = term_cooccurrence_map(pubs, sel);
  CHECK(g.nodes.size() == 1);
  CHECK(g.edges.empty());
  CHECK(g.nodes[0].weight == doctest::Approx(2.0));  // occurrences
}

TEST_CASE("terms co-occurring in 4 pubs -> edge weight 4") {
  std::vector<PublicationRecord> pubs;
  for (int i = 1; i <= 4; ++i)
    pubs.push_back(titled("P" + std::to_string(i), "apple banana"));
  auto all = extract_terms(pubs, TermSource::TitleAbstract, stops());
  std::vector<TermStats> two;
  for (auto& t : all)
    if (t.term == "apple" || t.term == "banana") two.push_back(t);
  auto sel = select_terms(two, pubs, "wos", 2, 1.0);
  Graph g = term_cooccurrence_map(pubs, sel);
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].weight == doctest::Approx(4.0));
}

TEST_CASE("terms never co-occurring have no edge") {
  std::vector<PublicationRecord> pubs{titled("P1", "apple"),
                                      titled("P2", "apple"),
                                      titled("P3", "banana"),
                                      titled("P4", "banana")};
  auto sel = select_terms(extract_terms(pubs, TermSource::TitleAbstract,
                                        stops()),
                          pubs, "wos", 2, 1.0);
  Graph g = term_cooccurrence_map(pubs, sel);
  CHECK(g.nodes.size() == 2);
  CHECK(g.edges.empty());
}

TEST_CASE("co-occurrence edge weight never exceeds endpoint occurrences") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<PublicationRecord> pubs;
    const char* words[] = {"red", "green", "blue", "cyan", "pink"};
    for (int i = 0; i < 8; ++i) {
      std::string title;
      for (const char* w : words)
        if (rng() % 2) title += std::string(w) + " ";
      if (title.empty()) title = "red";
      pubs.push_back(titled("P" + std::to_string(i), title));
    }
    auto sel = select_terms(extract_terms(pubs, TermSource::TitleAbstract,
                                          stops()),
                            pubs, "wos", 1, 1.0);
    Graph g = term_cooccurrence_map(pubs, sel);
    for (const auto& e : g.edges) {
      CHECK(e.weight <= g.find_node(e.a)->weight);
      CHECK(e.weight <= g.find_node(e.b)->weight);
    }
  }
}

// ---- interdisciplinarity --------------------------------------------------

TEST_CASE("single-category venues give one distinct category") {
  JournalMetricsTable t;
  JournalMetricRow r;
  r.journal_id = "J1";
  r.edition_year = 2014;
  r.metric = Metric::IF;
  r.value = 1.0;
  r.categories = {"only"};
  t.add(r);
  std::vector<PublicationRecord> pubs;
  for (int i = 1; i <= 3; ++i) {
    auto p = titled("P" + std::to_string(i), "x");
    p.venue_id = "J1";
    pubs.push_back(p);
  }
  Corpus c = testutil::corpus_of(pubs);
  auto prof = interdisciplinarity(c, &t);
  CHECK(prof.distinct_categories == 1);
  CHECK(prof.category_counts.at("only") == 3);
  CHECK(prof.unclassified == 0);
}

TEST_CASE("category counts span {A:6, B:4} with unclassified remainder") {
  JournalMetricsTable t;
  auto add = [&](const std::string& id, std::vector<std::string> cats) {
    JournalMetricRow r;
    r.journal_id = id;
    r.edition_year = 2014;
    r.metric = Metric::IF;
    r.value = 1.0;
    r.categories = std::move(cats);
    t.add(r);
  };
  add("JA", {"A"});
  add("JB", {"B"});
  add("JAB", {"A", "B"});
  std::vector<PublicationRecord> pubs;
  int id = 0;
  auto push = [&](const std::string& venue) {
    auto p = titled("P" + std::to_string(++id), "x");
    if (!venue.empty()) p.venue_id = venue;
    pubs.push_back(p);
  };
  for (int i = 0; i < 3; ++i) push("JA");   // A +3
  for (int i = 0; i < 1; ++i) push("JB");   // B +1
  for (int i = 0; i < 3; ++i) push("JAB");  // A +3, B +3
  push("");                                 // unclassified
  Corpus c = testutil::corpus_of(pubs);
  auto prof = interdisciplinarity(c, &t);
  CHECK(prof.category_counts.at("A") == 6);
  CHECK(prof.category_counts.at("B") == 4);
  CHECK(prof.distinct_categories == 2);
  CHECK(prof.unclassified == 1);
  // multi-assignment counts fully
  int sum = 0;
  for (const auto& [k, n] : prof.category_counts) sum += n;
  CHECK(sum == 3 * 1 + 1 * 1 + 3 * 2);
}
