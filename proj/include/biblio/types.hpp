#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace biblio {

enum class DocType {
  Monograph,
  BookChapter,
  JournalArticle,
  Review,
  ProceedingsPaper,
  Conference,  // incl. meeting abstracts and talks
  BookReview,
  EditedVolume,
  Report,
  Patent,
  Other,
};

/// Citable subset: journal articles, reviews, proceedings papers.
bool is_citable(DocType t);

std::string_view to_string(DocType t);
std::optional<DocType> doc_type_from_string(std::string_view name);

enum class Sector { Academic, Industry, Government, Other };
std::string_view to_string(Sector s);
std::optional<Sector> sector_from_string(std::string_view name);

enum class RefType { Journal, Book, Proceedings, Other, Unknown };
std::string_view to_string(RefType t);
std::optional<RefType> ref_type_from_string(std::string_view name);

struct AuthorRef {
  std::string display_name;
  std::string normalized_key;  // "surname, initials", lowercase, folded
  std::optional<std::string> orcid;
  bool is_focal = false;

  /// ORCID when present, else the normalized key.
  std::string identity() const;
};

/// ORCID equality when both sides carry one, else normalized-key equality.
bool same_author(const AuthorRef& a, const AuthorRef& b);

struct Affiliation {
  std::string institution;
  std::string country;  // ISO-3166 alpha-2
  Sector sector = Sector::Academic;
  bool is_home = false;
};

struct CitedReference {
  std::string raw;
  std::optional<int> year;
  std::optional<std::string> source_name;
  RefType ref_type = RefType::Unknown;
  std::optional<std::string> matched_pub_id;

  /// Identity for coupling/comparison: matched id when present, else the
  /// normalized raw string.
  std::string identity() const;
};

struct PublicationRecord {
  std::string id;
  std::map<std::string, std::string> source_ids;  // source name -> native id
  std::string title;
  std::optional<std::string> abstract;
  int year = 0;
  DocType doc_type = DocType::Other;
  std::string language;  // ISO tag, e.g. "en"
  std::vector<AuthorRef> authors;
  std::optional<int> corresponding_author_index;  // 0-based
  std::vector<Affiliation> affiliations;
  std::optional<std::string> venue_id;
  std::string venue_name;
  bool open_access = false;
  std::vector<std::string> funders;
  std::vector<std::string> keywords;
  std::map<std::string, int> times_cited;  // source name -> count
  std::vector<CitedReference> references;

  /// Citation count in `source`, 0 when the source is absent.
  int citations(const std::string& source) const;
  std::optional<std::string> doi() const;  // source_ids["doi"]
  bool has_venue() const;
  const AuthorRef* focal_author() const;
};

struct CitationEdge {
  std::string citing_id;
  std::string cited_id;
};

struct Corpus {
  AuthorRef focal_author;
  std::string home_institution;
  std::string home_country;
  std::vector<PublicationRecord> focal_pubs;
  std::vector<PublicationRecord> citing_pubs;
  std::vector<CitationEdge> edges;

  /// Lookup by id across focal then citing pubs; nullptr when absent.
  const PublicationRecord* find(const std::string& id) const;

  /// Source names appearing in any focal record, sorted.
  std::vector<std::string> source_names() const;
};

/// Inclusive year range.
struct Window {
  int start = 0;
  int end = 0;
  bool contains(int y) const { return y >= start && y <= end; }
  int years() const { return end - start + 1; }
};

/// Splits [start, end] into two consecutive halves (first gets the extra
/// year when the span is odd).
std::pair<Window, Window> halves(Window w);

struct Issue {
  std::string code;
  std::string record_id;  // empty for corpus-level issues
  std::string message;
};

struct CountPercent {
  int count = 0;
  double percent = 0.0;  // in [0,1]
};

CountPercent make_count_percent(int count, int total);

}  // namespace biblio
