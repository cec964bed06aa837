#include <doctest.h>

#include <cmath>
#include <fstream>

#include "biblio/baselines.hpp"
#include "biblio/corpus.hpp"

using namespace biblio;

namespace {

JournalMetricsTable eight_journal_category() {
  // one category "phys" with 8 journals, IF 8.0 .. 1.0
  JournalMetricsTable t;
  for (int i = 1; i <= 8; ++i) {
    JournalMetricRow r;
    r.journal_id = "J" + std::to_string(i);
    r.edition_year = 2015;
    r.metric = Metric::IF;
    r.value = 9.0 - i;  // J1 highest
    r.categories = {"phys"};
    t.add(r);
  }
  return t;
}

}  // namespace

TEST_CASE("quartile from rank within a category") {
  auto t = eight_journal_category();
  // second-highest IF -> rank 2 of 8 -> Q1
  auto q = quartile_of("J2", "phys", Metric::IF, 2015, t);
  CHECK(q.rank == 2);
  CHECK(q.category_size == 8);
  CHECK(q.quartile == Quartile::Q1);
  // rank 5 of 8 -> Q3
  CHECK(quartile_of("J5", "phys", Metric::IF, 2015, t).quartile == Quartile::Q3);
  CHECK(quartile_of("J8", "phys", Metric::IF, 2015, t).quartile == Quartile::Q4);
}

TEST_CASE("tied values share the best rank") {
  JournalMetricsTable t;
  for (int i = 1; i <= 4; ++i) {
    JournalMetricRow r;
    r.journal_id = "J" + std::to_string(i);
    r.edition_year = 2015;
    r.metric = Metric::IF;
    r.value = (i <= 2) ? 5.0 : 1.0;
    r.categories = {"c"};
    t.add(r);
  }
  CHECK(quartile_of("J1", "c", Metric::IF, 2015, t).rank == 1);
  CHECK(quartile_of("J2", "c", Metric::IF, 2015, t).rank == 1);
  CHECK(quartile_of("J3", "c", Metric::IF, 2015, t).rank == 3);
}

TEST_CASE("quartile bands match the ceiling formula for every size") {
  for (int n = 1; n <= 40; ++n) {
    JournalMetricsTable t;
    for (int i = 1; i <= n; ++i) {
      JournalMetricRow r;
      r.journal_id = "J" + std::to_string(i);
      r.edition_year = 2000;
      r.metric = Metric::IF;
      r.value = double(n - i + 1);
      r.categories = {"c"};
      t.add(r);
    }
    int prev = 0;
    for (int i = 1; i <= n; ++i) {
      auto q = quartile_of("J" + std::to_string(i), "c", Metric::IF, 2000, t);
      CHECK(q.rank == i);
      int expected = int(std::ceil(4.0 * i / n));
      CHECK(int(q.quartile) == expected);
      CHECK(int(q.quartile) >= prev);  // non-decreasing in rank
      prev = int(q.quartile);
    }
    if (n % 4 == 0) {
      int q1_count = 0;
      for (int i = 1; i <= n; ++i)
        if (quartile_of("J" + std::to_string(i), "c", Metric::IF, 2000, t)
                .quartile == Quartile::Q1)
          ++q1_count;
      CHECK(q1_count == n / 4);
    }
  }
}

namespace {
JournalMetricsTable two_category_fixture() {
  JournalMetricsTable t;
  auto add = [&](const std::string& id, double value,
                 std::vector<std::string> cats) {
    JournalMetricRow r;
    r.journal_id = id;
    r.edition_year = 2015;
    r.metric = Metric::IF;
    r.value = value;
    r.categories = std::move(cats);
    t.add(r);
  };
  add("J", 5.0, {"narrow", "broad"});
  // narrow: 4 journals, J rank 2 -> Q2
  add("N1", 9.0, {"narrow"});
  add("N2", 4.0, {"narrow"});
  add("N3", 3.0, {"narrow"});
  // broad: 8 journals, J rank 2 -> Q1
  for (int i = 1; i <= 7; ++i)
    add("B" + std::to_string(i), i == 1 ? 9.0 : 4.0 - 0.1 * i, {"broad"});
  return t;
}
}  // namespace

TEST_CASE("best quartile: {Q2, Q1} -> Q1") {
  auto t = two_category_fixture();
  CHECK(quartile_of("J", "narrow", Metric::IF, 2015, t).quartile ==
        Quartile::Q2);
  CHECK(quartile_of("J", "broad", Metric::IF, 2015, t).quartile ==
        Quartile::Q1);
  auto best = best_quartile("J", Metric::IF, 2015, t);
  CHECK(best.quartile == Quartile::Q1);
  CHECK(best.category == "broad");
}

TEST_CASE("best quartile <= every per-category quartile") {
  auto t = two_category_fixture();
  for (const auto& id : {"J", "N1", "B1", "B3"}) {
    auto best = best_quartile(id, Metric::IF, 2015, t);
    for (const auto& cat : t.categories_any(id))
      CHECK(int(best.quartile) <=
            int(quartile_of(id, cat, Metric::IF, 2015, t).quartile));
  }
}

TEST_CASE("best quartile tie-break prefers the smaller rank ratio") {
  JournalMetricsTable t;
  auto add = [&](const std::string& id, double value,
                 std::vector<std::string> cats) {
    JournalMetricRow r;
    r.journal_id = id;
    r.edition_year = 2015;
    r.metric = Metric::IF;
    r.value = value;
    r.categories = std::move(cats);
    t.add(r);
  };
  // cat "a": J rank 3 of 10 (ratio 0.30) -> Q2
  add("J", 5.0, {"a", "b"});
  add("A1", 9.0, {"a"});
  add("A2", 8.0, {"a"});
  for (int i = 3; i <= 9; ++i) add("A" + std::to_string(i), 1.0, {"a"});
  // cat "b": J rank 9 of 20 (ratio 0.45) -> Q2
  for (int i = 1; i <= 8; ++i) add("B" + std::to_string(i), 9.0, {"b"});
  for (int i = 9; i <= 19; ++i) add("B" + std::to_string(i), 1.0, {"b"});

  auto qa = quartile_of("J", "a", Metric::IF, 2015, t);
  auto qb = quartile_of("J", "b", Metric::IF, 2015, t);
  REQUIRE(qa.quartile == Quartile::Q2);
  REQUIRE(qb.quartile == Quartile::Q2);
  auto best = best_quartile("J", Metric::IF, 2015, t);
  CHECK(best.category == "a");
  CHECK(best.rank == 3);
}

TEST_CASE("unknown journal or category raises a lookup error") {
  auto t = eight_journal_category();
  CHECK_THROWS_AS(quartile_of("nope", "phys", Metric::IF, 2015, t),
                  LookupError);
  CHECK_THROWS_AS(quartile_of("J1", "nope", Metric::IF, 2015, t), LookupError);
  CHECK_THROWS_AS(best_quartile("nope", Metric::IF, 2015, t), LookupError);
}

TEST_CASE("metrics table loads from CSV") {
  auto path = std::filesystem::temp_directory_path() / "metrics_test.csv";
  {
    std::ofstream out(path);
    out << "journal_id,edition_year,metric,value,categories\n"
        << "J1,2015,IF,3.5,phys;chem\n"
        << "J2,2015,IF,1.2,phys\n"
        << "J1,2014,SJR,0.9,phys\n";
  }
  auto t = JournalMetricsTable::load_csv(path);
  std::filesystem::remove(path);
  REQUIRE(t.rows().size() == 3);
  const auto* r = t.find("J1", Metric::IF, 2015);
  REQUIRE(r != nullptr);
  CHECK(r->value == doctest::Approx(3.5));
  REQUIRE(r->categories.size() == 2);
  CHECK(t.has_journal("J2"));
  CHECK_FALSE(t.has_journal("J9"));
  CHECK(t.latest_edition(Metric::IF) == 2015);
  CHECK(t.latest_edition(Metric::SJR) == 2014);
  CHECK(t.latest_edition(Metric::SNIP) == 0);
  auto cats = t.categories_any("J1");
  REQUIRE(cats.size() == 2);
  CHECK(cats[0] == "chem");
  auto vals = t.category_values("phys", Metric::IF, 2015);
  CHECK(vals.size() == 2);
}

TEST_CASE("duplicate metric rows are rejected") {
  JournalMetricsTable t;
  JournalMetricRow r;
  r.journal_id = "J1";
  r.edition_year = 2015;
  r.metric = Metric::IF;
  r.value = 1.0;
  r.categories = {"c"};
  t.add(r);
  CHECK_THROWS_AS(t.add(r), ParseError);
}

// ---- baselines ------------------------------------------------------------

namespace {
BaselineTable baseline_fixture() {
  BaselineTable t;
  auto add = [&](const std::string& cat, double expected, double p90,
                 double p99) {
    BaselineRow r;
    r.category = cat;
    r.pub_year = 2012;
    r.doc_type = DocType::JournalArticle;
    r.expected = expected;
    r.p90 = p90;
    r.p99 = p99;
    t.add(r);
  };
  add("a", 4.0, 10.0, 30.0);
  add("b", 8.0, 15.0, 40.0);
  return t;
}
}  // namespace

TEST_CASE("expected citations averages over categories") {
  auto t = baseline_fixture();
  CHECK(expected_citations({"a"}, 2012, DocType::JournalArticle, t) ==
        doctest::Approx(4.0));
  CHECK(expected_citations({"a", "b"}, 2012, DocType::JournalArticle, t) ==
        doctest::Approx(6.0));
  CHECK_THROWS_AS(
      expected_citations({"missing"}, 2012, DocType::JournalArticle, t),
      LookupError);
  CHECK_THROWS_AS(expected_citations({"a"}, 1999, DocType::JournalArticle, t),
                  LookupError);
}

TEST_CASE("mean of identical values is that value") {
  BaselineTable t;
  for (const char* cat : {"x", "y", "z"}) {
    BaselineRow r;
    r.category = cat;
    r.pub_year = 2010;
    r.doc_type = DocType::Review;
    r.expected = 7.5;
    r.p90 = 1;
    r.p99 = 2;
    t.add(r);
  }
  CHECK(expected_citations({"x", "y", "z"}, 2010, DocType::Review, t) ==
        doctest::Approx(7.5));
}

TEST_CASE("percentile flags use the most favorable threshold") {
  auto t = baseline_fixture();
  // thresholds p90 {10, 15}: citations 12 passes the minimum
  auto f = percentile_flags(12, {"a", "b"}, 2012, DocType::JournalArticle, t);
  CHECK(f.top10);
  CHECK_FALSE(f.top1);
  f = percentile_flags(9, {"a", "b"}, 2012, DocType::JournalArticle, t);
  CHECK_FALSE(f.top10);
  f = percentile_flags(35, {"a", "b"}, 2012, DocType::JournalArticle, t);
  CHECK(f.top10);
  CHECK(f.top1);
}

TEST_CASE("top1 implies top10 over a sweep of counts") {
  auto t = baseline_fixture();
  for (int c = 0; c <= 60; ++c) {
    auto f = percentile_flags(c, {"a", "b"}, 2012, DocType::JournalArticle, t);
    if (f.top1) CHECK(f.top10);
  }
}

TEST_CASE("baseline CSV loads and validates ordering") {
  auto path = std::filesystem::temp_directory_path() / "baseline_test.csv";
  {
    std::ofstream out(path);
    out << "category,pub_year,doc_type,expected,p90,p99\n"
        << "phys,2012,JournalArticle,4.5,12,40\n"
        << "phys,2012,Review,9.0,20,60\n";
  }
  auto t = BaselineTable::load_csv(path);
  const auto* r = t.find("phys", 2012, DocType::Review);
  REQUIRE(r != nullptr);
  CHECK(r->expected == doctest::Approx(9.0));
  CHECK(t.find("phys", 2012, DocType::Conference) == nullptr);
  {
    std::ofstream out(path);
    out << "category,pub_year,doc_type,expected,p90,p99\n"
        << "phys,2012,JournalArticle,4.5,40,12\n";  // p90 > p99
  }
  CHECK_THROWS_AS(BaselineTable::load_csv(path), ParseError);
  std::filesystem::remove(path);
}

TEST_CASE("top journal list loads, rejects empty") {
  auto path = std::filesystem::temp_directory_path() / "toplist_test.txt";
  {
    std::ofstream out(path);
    out << "# the shortlist\nJ1\nJ2\n\nJ3\n";
  }
  auto list = TopJournalList::load(path, "shortlist");
  CHECK(list.name == "shortlist");
  CHECK(list.journal_ids == std::set<std::string>{"J1", "J2", "J3"});
  {
    std::ofstream out(path);
    out << "# nothing\n";
  }
  CHECK_THROWS_AS(TopJournalList::load(path, "empty"), ParseError);
  std::filesystem::remove(path);
}
