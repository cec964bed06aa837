#include "biblio/types.hpp"

#include <algorithm>
#include <set>

#include "biblio/text.hpp"

namespace biblio {

bool is_citable(DocType t) {
  return t == DocType::JournalArticle || t == DocType::Review ||
         t == DocType::ProceedingsPaper;
}

std::string_view to_string(DocType t) {
  switch (t) {
    case DocType::Monograph: return "Monograph";
    case DocType::BookChapter: return "BookChapter";
    case DocType::JournalArticle: return "JournalArticle";
    case DocType::Review: return "Review";
    case DocType::ProceedingsPaper: return "ProceedingsPaper";
    case DocType::Conference: return "Conference";
    case DocType::BookReview: return "BookReview";
    case DocType::EditedVolume: return "EditedVolume";
    case DocType::Report: return "Report";
    case DocType::Patent: return "Patent";
    case DocType::Other: return "Other";
  }
  return "Other";
}

std::optional<DocType> doc_type_from_string(std::string_view name) {
  static const std::map<std::string_view, DocType> kNames = {
      {"Monograph", DocType::Monograph},
      {"BookChapter", DocType::BookChapter},
      {"JournalArticle", DocType::JournalArticle},
      {"Review", DocType::Review},
      {"ProceedingsPaper", DocType::ProceedingsPaper},
      {"Conference", DocType::Conference},
      {"BookReview", DocType::BookReview},
      {"EditedVolume", DocType::EditedVolume},
      {"Report", DocType::Report},
      {"Patent", DocType::Patent},
      {"Other", DocType::Other}};
  auto it = kNames.find(name);
  if (it == kNames.end()) return std::nullopt;
  return it->second;
}

std::string_view to_string(Sector s) {
  switch (s) {
    case Sector::Academic: return "Academic";
    case Sector::Industry: return "Industry";
    case Sector::Government: return "Government";
    case Sector::Other: return "Other";
  }
  return "Other";
}

std::optional<Sector> sector_from_string(std::string_view name) {
  if (name == "Academic") return Sector::Academic;
  if (name == "Industry") return Sector::Industry;
  if (name == "Government") return Sector::Government;
  if (name == "Other") return Sector::Other;
  return std::nullopt;
}

std::string_view to_string(RefType t) {
  switch (t) {
    case RefType::Journal: return "Journal";
    case RefType::Book: return "Book";
    case RefType::Proceedings: return "Proceedings";
    case RefType::Other: return "Other";
    case RefType::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::optional<RefType> ref_type_from_string(std::string_view name) {
  if (name == "Journal") return RefType::Journal;
  if (name == "Book") return RefType::Book;
  if (name == "Proceedings") return RefType::Proceedings;
  if (name == "Other") return RefType::Other;
  if (name == "Unknown") return RefType::Unknown;
  return std::nullopt;
}

std::string AuthorRef::identity() const {
  return orcid && !orcid->empty() ? *orcid : normalized_key;
}

bool same_author(const AuthorRef& a, const AuthorRef& b) {
  if (a.orcid && b.orcid && !a.orcid->empty() && !b.orcid->empty())
    return *a.orcid == *b.orcid;
  return !a.normalized_key.empty() && a.normalized_key == b.normalized_key;
}

std::string CitedReference::identity() const {
  if (matched_pub_id && !matched_pub_id->empty()) return "#" + *matched_pub_id;
  return text::normalize(raw);
}

int PublicationRecord::citations(const std::string& source) const {
  auto it = times_cited.find(source);
  return it == times_cited.end() ? 0 : it->second;
}

std::optional<std::string> PublicationRecord::doi() const {
  auto it = source_ids.find("doi");
  if (it == source_ids.end() || it->second.empty()) return std::nullopt;
  return it->second;
}

bool PublicationRecord::has_venue() const {
  return (venue_id && !venue_id->empty()) || !venue_name.empty();
}

const AuthorRef* PublicationRecord::focal_author() const {
  for (const auto& a : authors)
    if (a.is_focal) return &a;
  return nullptr;
}

const PublicationRecord* Corpus::find(const std::string& id) const {
  for (const auto& p : focal_pubs)
    if (p.id == id) return &p;
  for (const auto& p : citing_pubs)
    if (p.id == id) return &p;
  return nullptr;
}

std::vector<std::string> Corpus::source_names() const {
  std::set<std::string> names;
  for (const auto& p : focal_pubs)
    for (const auto& [k, v] : p.times_cited) names.insert(k);
  return {names.begin(), names.end()};
}

std::pair<Window, Window> halves(Window w) {
  int mid = w.start + (w.end - w.start) / 2;
  return {Window{w.start, mid}, Window{mid + 1, w.end}};
}

CountPercent make_count_percent(int count, int total) {
  return CountPercent{count, total > 0 ? double(count) / total : 0.0};
}

}  // namespace biblio
