#include <doctest.h>

#include <algorithm>
#include <random>

#include "biblio/knowledge.hpp"
#include "helpers.hpp"

using namespace biblio;
using testutil::author;
using testutil::pub;
using testutil::ref;

namespace {

PublicationRecord with_refs(const std::string& id, int year,
                            std::vector<CitedReference> refs) {
  auto p = pub(id, year, 0, {author("Doe, Jane", true)});
  p.references = std::move(refs);
  return p;
}

}  // namespace

TEST_CASE("reference stats: no references") {
  std::vector<PublicationRecord> pubs{with_refs("P1", 2010, {})};
  auto s = reference_stats(pubs, std::nullopt);
  CHECK(s.total_refs == 0);
  CHECK(s.year_histogram.empty());
  CHECK_FALSE(s.median_age.has_value());
  CHECK(s.type_shares.empty());
}

TEST_CASE("reference stats: all journal refs share 1.0") {
  auto r1 = ref("a", 2005);
  r1.ref_type = RefType::Journal;
  auto r2 = ref("b", 2006);
  r2.ref_type = RefType::Journal;
  std::vector<PublicationRecord> pubs{with_refs("P1", 2010, {r1, r2})};
  auto s = reference_stats(pubs, std::nullopt);
  CHECK(s.total_refs == 2);
  CHECK(s.type_shares.at(RefType::Journal) == doctest::Approx(1.0));
}

TEST_CASE("reference stats: median age of [1,2,3,4,100] is 3") {
  std::vector<CitedReference> refs;
  for (int age : {1, 2, 3, 4, 100}) refs.push_back(ref("r" + std::to_string(age), 2010 - age));
  std::vector<PublicationRecord> pubs{with_refs("P1", 2010, refs)};
  auto s = reference_stats(pubs, std::nullopt);
  REQUIRE(s.median_age.has_value());
  CHECK(*s.median_age == doctest::Approx(3.0));
}

TEST_CASE("reference stats: undated refs stay in totals, leave age stats") {
  std::vector<CitedReference> refs{ref("dated", 2005), ref("undated")};
  std::vector<PublicationRecord> pubs{with_refs("P1", 2010, refs)};
  auto s = reference_stats(pubs, 7.5);
  CHECK(s.total_refs == 2);
  CHECK(s.undated == 1);
  CHECK(s.year_histogram.size() == 1);
  REQUIRE(s.median_age.has_value());
  CHECK(*s.median_age == doctest::Approx(5.0));
  REQUIRE(s.field_half_life.has_value());
  CHECK(*s.field_half_life == doctest::Approx(7.5));
}

TEST_CASE("reference stats: totals do not deduplicate") {
  std::vector<PublicationRecord> pubs{
      with_refs("P1", 2010, {ref("same", 2000)}),
      with_refs("P2", 2011, {ref("same", 2000)})};
  auto s = reference_stats(pubs, std::nullopt);
  CHECK(s.total_refs == 2);
}

TEST_CASE("reference stats: type shares sum to 1 and sources rank by count") {
  std::vector<CitedReference> refs;
  for (int i = 0; i < 3; ++i) {
    auto r = ref("j" + std::to_string(i), 2005, "Journal A");
    r.ref_type = RefType::Journal;
    refs.push_back(r);
  }
  auto rb = ref("b", 2004, "Big Handbook");
  rb.ref_type = RefType::Book;
  refs.push_back(rb);
  std::vector<PublicationRecord> pubs{with_refs("P1", 2010, refs)};
  auto s = reference_stats(pubs, std::nullopt);
  double sum = 0;
  for (const auto& [t, share] : s.type_shares) sum += share;
  CHECK(sum == doctest::Approx(1.0));
  REQUIRE(!s.source_ranking.empty());
  CHECK(s.source_ranking[0] == std::pair<std::string, int>{"Journal A", 3});
}

TEST_CASE("median age is permutation invariant") {
  std::vector<PublicationRecord> pubs{
      with_refs("P1", 2010, {ref("a", 2001), ref("b", 2009)}),
      with_refs("P2", 2012, {ref("c", 2002)})};
  auto s1 = reference_stats(pubs, std::nullopt);
  std::swap(pubs[0], pubs[1]);
  auto s2 = reference_stats(pubs, std::nullopt);
  CHECK(s1.median_age == s2.median_age);
  CHECK(s1.total_refs == s2.total_refs);
}

// ---- venue overlap --------------------------------------------------------

TEST_CASE("venue overlap: publishing only in the single top venue") {
  auto p = pub("P1", 2010, 0, {author("Doe, Jane", true)});
  p.venue_name = "Journal of Things";
  p.references = {ref("r1", 2005, "Journal of Things"),
                  ref("r2", 2006, "Journal of Things"),
                  ref("r3", 2007, "Other Venue")};
  Corpus c = testutil::corpus_of({p});
  auto v = venue_overlap(c, 1);
  CHECK(v.top_cited_venues.size() == 1);
  CHECK(v.overlap_ratio == doctest::Approx(1.0));
}

TEST_CASE("venue overlap: no references -> ratio 0") {
  auto p = pub("P1", 2010, 0, {author("Doe, Jane", true)});
  p.venue_name = "Journal of Things";
  Corpus c = testutil::corpus_of({p});
  auto v = venue_overlap(c, 10);
  CHECK(v.top_cited_venues.empty());
  CHECK(v.overlap_ratio == doctest::Approx(0.0));
}

TEST_CASE("venue overlap: 3 of top 10 cited venues are publishing venues") {
  std::vector<PublicationRecord> pubs;
  // publish in venues V1..V3 (overlapping) and O1..O2 (not cited)
  int id = 0;
  for (const char* v : {"V1", "V2", "V3", "O1", "O2"}) {
    auto p = pub("P" + std::to_string(++id), 2010, 0,
                 {author("Doe, Jane", true)});
    p.venue_name = v;
    pubs.push_back(p);
  }
  // cite venues V1..V3 and C4..C10, with distinct counts so the top-10 set
  // is exactly these ten
  std::vector<CitedReference> refs;
  std::vector<std::string> cited{"V1", "V2", "V3", "C4", "C5",
                                 "C6", "C7", "C8", "C9", "C10"};
  for (std::size_t i = 0; i < cited.size(); ++i)
    for (std::size_t k = 0; k <= cited.size() - i; ++k)
      refs.push_back(ref(cited[i] + "-" + std::to_string(k), 2005, cited[i]));
  pubs[0].references = refs;
  Corpus c = testutil::corpus_of(pubs);
  auto v = venue_overlap(c, 10);
  CHECK(v.top_cited_venues.size() == 10);
  CHECK(v.overlap.size() == 3);
  CHECK(v.overlap_ratio == doctest::Approx(0.3));
  // overlap is a subset of both sets
  for (const auto& name : v.overlap) {
    CHECK(v.publishing_venues.count(name) == 1);
    CHECK(v.top_cited_venues.count(name) == 1);
  }
}

// ---- peer reference comparison --------------------------------------------

namespace {
std::vector<CitedReference> refs_named(std::vector<std::string> names,
                                       int copies = 1) {
  std::vector<CitedReference> out;
  for (int k = 0; k < copies; ++k)
    for (const auto& n : names) out.push_back(ref(n, 2005));
  return out;
}
}  // namespace

TEST_CASE("peer comparison: disjoint references have empty intersection") {
  auto focal = refs_named({"alpha", "beta"});
  auto peer = refs_named({"gamma", "delta"});
  auto cmp = peer_reference_comparison(focal, {{"Peer One", peer}}, 5);
  REQUIRE(cmp.size() == 1);
  CHECK(cmp[0].peer == "Peer One");
  CHECK(cmp[0].intersection.empty());
  CHECK(cmp[0].focal_only.size() == 2);
  CHECK(cmp[0].peer_only.size() == 2);
}

TEST_CASE("peer comparison: engineered 40% overlap") {
  // focal top-5 = f1..f3 + shared s1..s2; peer top-5 = p1..p3 + s1..s2
  std::vector<CitedReference> focal, peer;
  for (const char* n : {"s1", "s2"}) {
    auto r = refs_named({n}, 5);
    focal.insert(focal.end(), r.begin(), r.end());
    peer.insert(peer.end(), r.begin(), r.end());
  }
  for (const char* n : {"f1", "f2", "f3"}) {
    auto r = refs_named({n}, 3);
    focal.insert(focal.end(), r.begin(), r.end());
  }
  for (const char* n : {"p1", "p2", "p3"}) {
    auto r = refs_named({n}, 3);
    peer.insert(peer.end(), r.begin(), r.end());
  }
  auto cmp = peer_reference_comparison(focal, {{"Peer", peer}}, 5);
  REQUIRE(cmp.size() == 1);
  CHECK(cmp[0].focal_top.size() == 5);
  CHECK(cmp[0].peer_top.size() == 5);
  CHECK(cmp[0].intersection.size() == 2);  // 0.4 * top_n
  CHECK(cmp[0].focal_only.size() == 3);
  CHECK(cmp[0].peer_only.size() == 3);
}

TEST_CASE("peer comparison is symmetric") {
  std::mt19937 rng(7);
  std::vector<std::string> universe;
  for (int i = 0; i < 12; ++i) universe.push_back("u" + std::to_string(i));
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<CitedReference> a, b;
    for (const auto& u : universe) {
      int ca = int(rng() % 4), cb = int(rng() % 4);
      auto ra = refs_named({u}, ca);
      auto rb = refs_named({u}, cb);
      a.insert(a.end(), ra.begin(), ra.end());
      b.insert(b.end(), rb.begin(), rb.end());
    }
    auto ab = peer_reference_comparison(a, {{"B", b}}, 6);
    auto ba = peer_reference_comparison(b, {{"A", a}}, 6);
    REQUIRE(ab.size() == 1);
    REQUIRE(ba.size() == 1);
    CHECK(ab[0].intersection.size() == ba[0].intersection.size());
    auto sorted = [](std::vector<std::string> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    CHECK(sorted(ab[0].focal_only) == sorted(ba[0].peer_only));
    CHECK(sorted(ab[0].peer_only) == sorted(ba[0].focal_only));
  }
}
