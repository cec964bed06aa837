#include <doctest.h>

#include "biblio/text.hpp"

using namespace biblio::text;

TEST_CASE("lowercasing is ascii-only") {
  CHECK(to_lower("Hello World") == "hello world");
  CHECK(to_lower("ABC123xyz") == "abc123xyz");
}

TEST_CASE("diacritics fold to ascii base letters") {
  CHECK(strip_diacritics("café") == "cafe");
  CHECK(strip_diacritics("Müller") == "Muller");
  CHECK(strip_diacritics("Škoda Łódź") == "Skoda Lodz");
  CHECK(strip_diacritics("naïve résumé") == "naive resume");
  CHECK(strip_diacritics("plain") == "plain");
}

TEST_CASE("normalize lowercases, folds, strips punctuation, collapses space") {
  CHECK(normalize("  The  Quick—Brown,   Fox!  ") == "the quick brown fox");
  CHECK(normalize("Études d'optique: a review") == "etudes d optique a review");
  CHECK(normalize("") == "");
  CHECK(normalize("...") == "");
}

TEST_CASE("normalize is idempotent") {
  for (const char* s : {"Über-Title: Part II", "plain words", "Ångström"}) {
    std::string once = normalize(s);
    CHECK(normalize(once) == once);
  }
}

TEST_CASE("tokenize splits normalized text on whitespace") {
  auto t = tokenize("Quantum-Dot Synthesis, revisited");
  REQUIRE(t.size() == 4);
  CHECK(t[0] == "quantum");
  CHECK(t[1] == "dot");
  CHECK(t[2] == "synthesis");
  CHECK(t[3] == "revisited");
  CHECK(tokenize("").empty());
}

TEST_CASE("author keys from both name shapes") {
  CHECK(author_key("Müller, Hans Peter") == "muller, hp");
  CHECK(author_key("Hans Peter Müller") == "muller, hp");
  CHECK(author_key("Doe, Jane") == "doe, j");
  CHECK(author_key("Jane Doe") == "doe, j");
  // single-token names
  CHECK(author_key("Plato") == author_key("plato"));
}

TEST_CASE("author key is deterministic and case-insensitive") {
  CHECK(author_key("DOE, JANE") == author_key("doe, jane"));
}

TEST_CASE("fnv1a is stable") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a("abc") != fnv1a("acb"));
}

TEST_CASE("iso country codes") {
  CHECK(is_iso_country("AT"));
  CHECK(is_iso_country("DE"));
  CHECK(is_iso_country("US"));
  CHECK_FALSE(is_iso_country("XX"));
  CHECK_FALSE(is_iso_country("Austria"));
  CHECK_FALSE(is_iso_country(""));
}
