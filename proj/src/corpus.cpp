#include "biblio/corpus.hpp"

#include <algorithm>
#include <ctime>
#include <fstream>
#include <set>
#include <sstream>

#include "biblio/csv.hpp"
#include "biblio/text.hpp"

namespace biblio {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

int current_year() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
#if defined(_WIN32)
  gmtime_s(&tm, &now);
#else
  gmtime_r(&now, &tm);
#endif
  return tm.tm_year + 1900;
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where.empty() ? what : where + ": " + what);
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) fail(where, "unknown key '" + it.key() + "'");
}

std::string get_string(const json& j, const char* key,
                       const std::string& where) {
  if (!j.contains(key)) fail(where, std::string("missing field '") + key + "'");
  if (!j[key].is_string())
    fail(where, std::string("field '") + key + "' must be a string");
  return j[key].get<std::string>();
}

AuthorRef parse_author(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "author must be an object");
  reject_unknown_keys(j, {"display_name", "normalized_key", "orcid", "is_focal"},
                      where);
  AuthorRef a;
  a.display_name = get_string(j, "display_name", where);
  a.normalized_key = j.contains("normalized_key")
                         ? j["normalized_key"].get<std::string>()
                         : text::author_key(a.display_name);
  if (j.contains("orcid")) a.orcid = j["orcid"].get<std::string>();
  if (j.contains("is_focal")) a.is_focal = j["is_focal"].get<bool>();
  return a;
}

Affiliation parse_affiliation(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "affiliation must be an object");
  reject_unknown_keys(j, {"institution", "country", "sector", "is_home"}, where);
  Affiliation a;
  a.institution = get_string(j, "institution", where);
  a.country = get_string(j, "country", where);
  if (j.contains("sector")) {
    auto s = sector_from_string(j["sector"].get<std::string>());
    if (!s) fail(where, "unknown sector '" + j["sector"].get<std::string>() + "'");
    a.sector = *s;
  }
  if (j.contains("is_home")) a.is_home = j["is_home"].get<bool>();
  return a;
}

CitedReference parse_reference(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "reference must be an object");
  reject_unknown_keys(
      j, {"raw", "year", "source_name", "ref_type", "matched_pub_id"}, where);
  CitedReference r;
  r.raw = get_string(j, "raw", where);
  if (r.raw.empty()) fail(where, "reference 'raw' must be non-empty");
  if (j.contains("year")) r.year = j["year"].get<int>();
  if (j.contains("source_name"))
    r.source_name = j["source_name"].get<std::string>();
  if (j.contains("ref_type")) {
    auto t = ref_type_from_string(j["ref_type"].get<std::string>());
    if (!t)
      fail(where, "unknown ref_type '" + j["ref_type"].get<std::string>() + "'");
    r.ref_type = *t;
  }
  if (j.contains("matched_pub_id"))
    r.matched_pub_id = j["matched_pub_id"].get<std::string>();
  return r;
}

PublicationRecord parse_record(const json& j, const DocTypeAliases& aliases,
                               const std::string& list_name, std::size_t index) {
  std::string where = list_name + "[" + std::to_string(index) + "]";
  if (!j.is_object()) fail(where, "record must be an object");
  reject_unknown_keys(
      j,
      {"id", "source_ids", "title", "abstract", "year", "doc_type", "language",
       "authors", "corresponding_author_index", "affiliations", "venue_id",
       "venue_name", "open_access", "funders", "keywords", "times_cited",
       "references"},
      where);

  PublicationRecord p;
  p.id = get_string(j, "id", where);
  if (p.id.empty()) fail(where, "record id must be non-empty");
  where = list_name + " record '" + p.id + "'";

  p.title = get_string(j, "title", where);
  if (!j.contains("year")) fail(where, "missing field 'year'");
  p.year = j["year"].get<int>();
  p.doc_type = aliases.normalize(get_string(j, "doc_type", where));

  if (j.contains("source_ids"))
    for (auto it = j["source_ids"].begin(); it != j["source_ids"].end(); ++it)
      p.source_ids[it.key()] = it.value().get<std::string>();
  if (j.contains("abstract")) p.abstract = j["abstract"].get<std::string>();
  if (j.contains("language")) p.language = j["language"].get<std::string>();

  if (!j.contains("authors") || !j["authors"].is_array() ||
      j["authors"].empty())
    fail(where, "record must list at least one author");
  for (const auto& a : j["authors"]) p.authors.push_back(parse_author(a, where));

  if (j.contains("corresponding_author_index")) {
    p.corresponding_author_index = j["corresponding_author_index"].get<int>();
    if (*p.corresponding_author_index < 0 ||
        *p.corresponding_author_index >= int(p.authors.size()))
      fail(where, "corresponding_author_index out of range");
  }
  if (j.contains("affiliations"))
    for (const auto& a : j["affiliations"])
      p.affiliations.push_back(parse_affiliation(a, where));
  if (j.contains("venue_id")) p.venue_id = j["venue_id"].get<std::string>();
  if (j.contains("venue_name")) p.venue_name = j["venue_name"].get<std::string>();
  if (j.contains("open_access")) p.open_access = j["open_access"].get<bool>();
  if (j.contains("funders"))
    for (const auto& f : j["funders"]) p.funders.push_back(f.get<std::string>());
  if (j.contains("keywords"))
    for (const auto& k : j["keywords"])
      p.keywords.push_back(k.get<std::string>());
  if (j.contains("times_cited"))
    for (auto it = j["times_cited"].begin(); it != j["times_cited"].end();
         ++it) {
      int n = it.value().get<int>();
      if (n < 0) fail(where, "times_cited['" + it.key() + "'] is negative");
      p.times_cited[it.key()] = n;
    }
  if (j.contains("references"))
    for (const auto& r : j["references"])
      p.references.push_back(parse_reference(r, where));
  return p;
}

ordered_json author_to_json(const AuthorRef& a) {
  ordered_json j;
  j["display_name"] = a.display_name;
  j["normalized_key"] = a.normalized_key;
  if (a.orcid) j["orcid"] = *a.orcid;
  if (a.is_focal) j["is_focal"] = true;
  return j;
}

ordered_json record_to_json(const PublicationRecord& p) {
  ordered_json j;
  j["id"] = p.id;
  if (!p.source_ids.empty()) j["source_ids"] = p.source_ids;
  j["title"] = p.title;
  if (p.abstract) j["abstract"] = *p.abstract;
  j["year"] = p.year;
  j["doc_type"] = std::string(to_string(p.doc_type));
  if (!p.language.empty()) j["language"] = p.language;
  j["authors"] = ordered_json::array();
  for (const auto& a : p.authors) j["authors"].push_back(author_to_json(a));
  if (p.corresponding_author_index)
    j["corresponding_author_index"] = *p.corresponding_author_index;
  if (!p.affiliations.empty()) {
    j["affiliations"] = ordered_json::array();
    for (const auto& a : p.affiliations) {
      ordered_json aj;
      aj["institution"] = a.institution;
      aj["country"] = a.country;
      aj["sector"] = std::string(to_string(a.sector));
      if (a.is_home) aj["is_home"] = true;
      j["affiliations"].push_back(aj);
    }
  }
  if (p.venue_id) j["venue_id"] = *p.venue_id;
  if (!p.venue_name.empty()) j["venue_name"] = p.venue_name;
  if (p.open_access) j["open_access"] = true;
  if (!p.funders.empty()) j["funders"] = p.funders;
  if (!p.keywords.empty()) j["keywords"] = p.keywords;
  if (!p.times_cited.empty()) j["times_cited"] = p.times_cited;
  if (!p.references.empty()) {
    j["references"] = ordered_json::array();
    for (const auto& r : p.references) {
      ordered_json rj;
      rj["raw"] = r.raw;
      if (r.year) rj["year"] = *r.year;
      if (r.source_name) rj["source_name"] = *r.source_name;
      if (r.ref_type != RefType::Unknown)
        rj["ref_type"] = std::string(to_string(r.ref_type));
      if (r.matched_pub_id) rj["matched_pub_id"] = *r.matched_pub_id;
      j["references"].push_back(rj);
    }
  }
  return j;
}

}  // namespace

DocTypeAliases DocTypeAliases::defaults() {
  DocTypeAliases a;
  auto add = [&](std::initializer_list<const char*> raws, DocType t) {
    for (const char* r : raws) a.add(r, t);
  };
  add({"article", "journal article", "original article", "research article"},
      DocType::JournalArticle);
  add({"review", "review article", "survey"}, DocType::Review);
  add({"proceedings paper", "conference paper", "paper in proceedings"},
      DocType::ProceedingsPaper);
  add({"conference", "meeting abstract", "conference abstract", "talk",
       "poster", "oral presentation", "meeting"},
      DocType::Conference);
  add({"book", "monograph"}, DocType::Monograph);
  add({"book chapter", "chapter", "chapter in book"}, DocType::BookChapter);
  add({"book review"}, DocType::BookReview);
  add({"edited book", "edited volume", "journal issue", "edited journal issue"},
      DocType::EditedVolume);
  add({"report", "working paper", "technical report"}, DocType::Report);
  add({"patent"}, DocType::Patent);
  add({"other", "misc", "miscellaneous", "letter", "editorial material",
       "note", "correction"},
      DocType::Other);
  // canonical names map to themselves
  for (DocType t :
       {DocType::Monograph, DocType::BookChapter, DocType::JournalArticle,
        DocType::Review, DocType::ProceedingsPaper, DocType::Conference,
        DocType::BookReview, DocType::EditedVolume, DocType::Report,
        DocType::Patent, DocType::Other})
    a.add(std::string(to_string(t)), t);
  return a;
}

void DocTypeAliases::add(std::string raw, DocType canonical) {
  table_[text::normalize(raw)] = canonical;
}

void DocTypeAliases::load_csv(const std::filesystem::path& path) {
  csv::for_each_row(path, ',', [&](const std::vector<std::string>& f, int line) {
    if (f.size() != 2)
      throw ParseError(path.string() + ":" + std::to_string(line) +
                       ": expected 'raw,canonical'");
    if (f[0] == "raw" && f[1] == "canonical") return;  // header
    auto t = doc_type_from_string(f[1]);
    if (!t)
      throw ParseError(path.string() + ":" + std::to_string(line) +
                       ": unknown canonical doc type '" + f[1] + "'");
    add(f[0], *t);
  });
}

DocType DocTypeAliases::normalize(std::string_view raw, bool* unmapped) const {
  if (unmapped) *unmapped = false;
  // precedence order for multi-valued raw strings
  static const DocType kPrecedence[] = {
      DocType::Patent,     DocType::Monograph,  DocType::EditedVolume,
      DocType::ProceedingsPaper, DocType::Review, DocType::JournalArticle,
      DocType::BookChapter, DocType::BookReview, DocType::Conference,
      DocType::Report,     DocType::Other};
  std::set<DocType> found;
  std::string s(raw);
  for (char& c : s)
    if (c == ';' || c == '|') c = ',';
  for (const auto& part : csv::split(s, ',')) {
    if (part.empty()) continue;
    auto it = table_.find(text::normalize(part));
    if (it != table_.end()) found.insert(it->second);
  }
  if (found.empty()) {
    if (unmapped) *unmapped = !text::normalize(raw).empty();
    return DocType::Other;
  }
  for (DocType t : kPrecedence)
    if (found.count(t)) return t;
  return DocType::Other;
}

DocType normalize_doc_type(std::string_view raw) {
  static const DocTypeAliases kDefaults = DocTypeAliases::defaults();
  return kDefaults.normalize(raw);
}

Corpus parse_corpus(const json& j, const DocTypeAliases& aliases) {
  if (!j.is_object()) fail("", "corpus file must contain a JSON object");
  reject_unknown_keys(j,
                      {"focal_author", "home_institution", "home_country",
                       "focal_pubs", "citing_pubs", "edges"},
                      "corpus");
  Corpus c;
  if (!j.contains("focal_author")) fail("corpus", "missing 'focal_author'");
  c.focal_author = parse_author(j["focal_author"], "focal_author");
  c.focal_author.is_focal = true;
  c.home_institution =
      j.contains("home_institution") ? j["home_institution"].get<std::string>()
                                     : std::string();
  c.home_country = j.contains("home_country")
                       ? j["home_country"].get<std::string>()
                       : std::string();

  if (j.contains("focal_pubs"))
    for (std::size_t i = 0; i < j["focal_pubs"].size(); ++i)
      c.focal_pubs.push_back(
          parse_record(j["focal_pubs"][i], aliases, "focal_pubs", i));
  if (j.contains("citing_pubs"))
    for (std::size_t i = 0; i < j["citing_pubs"].size(); ++i)
      c.citing_pubs.push_back(
          parse_record(j["citing_pubs"][i], aliases, "citing_pubs", i));
  if (c.focal_pubs.empty()) fail("", "corpus has no focal publications");

  std::set<std::string> focal_ids, all_ids;
  for (const auto& p : c.focal_pubs) {
    if (!all_ids.insert(p.id).second)
      fail("", "duplicate record id '" + p.id + "'");
    focal_ids.insert(p.id);
  }
  for (const auto& p : c.citing_pubs)
    if (!all_ids.insert(p.id).second)
      fail("", "duplicate record id '" + p.id + "'");

  if (j.contains("edges")) {
    std::set<std::pair<std::string, std::string>> seen;
    for (std::size_t i = 0; i < j["edges"].size(); ++i) {
      const auto& ej = j["edges"][i];
      std::string where = "edges[" + std::to_string(i) + "]";
      reject_unknown_keys(ej, {"citing_id", "cited_id"}, where);
      CitationEdge e;
      e.citing_id = get_string(ej, "citing_id", where);
      e.cited_id = get_string(ej, "cited_id", where);
      if (e.citing_id == e.cited_id)
        fail(where, "self-referential edge '" + e.citing_id + "'");
      if (!focal_ids.count(e.cited_id))
        fail(where, "edge cites unknown focal id '" + e.cited_id + "'");
      if (!all_ids.count(e.citing_id))
        fail(where, "edge has unknown citing id '" + e.citing_id + "'");
      if (!seen.insert({e.citing_id, e.cited_id}).second)
        fail(where, "duplicate edge " + e.citing_id + " -> " + e.cited_id);
      c.edges.push_back(e);
    }
  }
  return c;
}

Corpus load_corpus(const std::filesystem::path& path,
                   const DocTypeAliases& aliases) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus file: " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return parse_corpus(j, aliases);
}

ordered_json to_json(const Corpus& c) {
  ordered_json j;
  j["focal_author"] = author_to_json(c.focal_author);
  j["home_institution"] = c.home_institution;
  j["home_country"] = c.home_country;
  j["focal_pubs"] = ordered_json::array();
  for (const auto& p : c.focal_pubs) j["focal_pubs"].push_back(record_to_json(p));
  j["citing_pubs"] = ordered_json::array();
  for (const auto& p : c.citing_pubs)
    j["citing_pubs"].push_back(record_to_json(p));
  j["edges"] = ordered_json::array();
  for (const auto& e : c.edges)
    j["edges"].push_back({{"citing_id", e.citing_id}, {"cited_id", e.cited_id}});
  return j;
}

std::string corpus_hash(const Corpus& c) {
  std::uint64_t h = text::fnv1a(to_json(c).dump());
  std::ostringstream os;
  os << std::hex << h;
  std::string s = os.str();
  while (s.size() < 16) s.insert(s.begin(), '0');
  return s;
}

std::vector<Issue> validate_corpus(const Corpus& c,
                                   const std::string& primary_source) {
  std::vector<Issue> issues;
  int year_max = current_year();
  auto check_record = [&](const PublicationRecord& p, bool focal) {
    if (p.year < 1900 || p.year > year_max)
      issues.push_back({"year-out-of-range", p.id,
                        "year out of range: " + std::to_string(p.year)});
    int focal_marks = 0;
    for (const auto& a : p.authors)
      if (a.is_focal) ++focal_marks;
    if (focal_marks > 1)
      issues.push_back(
          {"multiple-focal-authors", p.id, "more than one author flagged focal"});
    if (focal) {
      bool found = false;
      for (const auto& a : p.authors)
        if (same_author(a, c.focal_author)) found = true;
      if (!found)
        issues.push_back({"focal-author-missing", p.id,
                          "focal author not on the publication's author list"});
    }
    for (const auto& a : p.affiliations)
      if (!text::is_iso_country(a.country))
        issues.push_back({"invalid-country", p.id,
                          "invalid ISO-3166 country code '" + a.country + "'"});
    for (const auto& r : p.references)
      if (r.year && *r.year > p.year + 1)
        issues.push_back({"reference-year-ahead", p.id,
                          "reference year " + std::to_string(*r.year) +
                              " later than citing year + 1"});
  };
  for (const auto& p : c.focal_pubs) check_record(p, true);
  for (const auto& p : c.citing_pubs) check_record(p, false);

  if (!primary_source.empty()) {
    std::map<std::string, int> edge_counts;
    for (const auto& e : c.edges) ++edge_counts[e.cited_id];
    for (const auto& p : c.focal_pubs) {
      auto it = p.times_cited.find(primary_source);
      if (it == p.times_cited.end() || c.edges.empty()) continue;
      int from_edges = edge_counts.count(p.id) ? edge_counts[p.id] : 0;
      if (it->second != from_edges)
        issues.push_back({"cited-count-mismatch", p.id,
                          "cited-count mismatch id=" + p.id + " (" +
                              std::to_string(it->second) + " vs " +
                              std::to_string(from_edges) + ")"});
    }
  }
  return issues;
}

CoverageResult match_publication_list(
    const std::vector<PublicationRecord>& master,
    const std::vector<PublicationRecord>& export_records,
    const std::string& source_name, std::vector<Issue>* warnings) {
  CoverageResult r;
  r.source_name = source_name;
  r.total_master = int(master.size());

  std::vector<bool> used(export_records.size(), false);
  std::vector<bool> matched(master.size(), false);

  auto pick = [&](std::size_t mi, auto&& candidate_filter) {
    std::vector<std::size_t> candidates;
    for (std::size_t ei = 0; ei < export_records.size(); ++ei)
      if (!used[ei] && candidate_filter(master[mi], export_records[ei]))
        candidates.push_back(ei);
    if (candidates.empty()) return false;
    std::sort(candidates.begin(), candidates.end(),
              [&](std::size_t a, std::size_t b) {
                return export_records[a].id < export_records[b].id;
              });
    if (candidates.size() > 1 && warnings)
      warnings->push_back({"ambiguous-match", master[mi].id,
                           "multiple export candidates for '" + master[mi].id +
                               "', took '" +
                               export_records[candidates[0]].id + "'"});
    used[candidates[0]] = true;
    matched[mi] = true;
    return true;
  };

  // pass 1: DOI equality
  for (std::size_t mi = 0; mi < master.size(); ++mi) {
    auto doi = master[mi].doi();
    if (!doi) continue;
    pick(mi, [&](const PublicationRecord&, const PublicationRecord& e) {
      return e.doi() && *e.doi() == *doi;
    });
  }
  // pass 2: normalized title + |delta year| <= 1
  for (std::size_t mi = 0; mi < master.size(); ++mi) {
    if (matched[mi]) continue;
    std::string title = text::normalize(master[mi].title);
    if (title.empty()) continue;
    pick(mi, [&](const PublicationRecord& m, const PublicationRecord& e) {
      return text::normalize(e.title) == title &&
             std::abs(e.year - m.year) <= 1;
    });
  }

  for (std::size_t mi = 0; mi < master.size(); ++mi) {
    if (matched[mi])
      ++r.matched;
    else
      r.unmatched_ids.push_back(master[mi].id);
  }
  r.percent = r.total_master > 0 ? double(r.matched) / r.total_master : 0.0;
  return r;
}

}  // namespace biblio
