#pragma once

// Shared builders for in-code test corpora.

#include <string>
#include <vector>

#include "biblio/text.hpp"
#include "biblio/types.hpp"

namespace testutil {

inline biblio::AuthorRef author(const std::string& name, bool focal = false,
                                const std::string& orcid = "") {
  biblio::AuthorRef a;
  a.display_name = name;
  a.normalized_key = biblio::text::author_key(name);
  if (!orcid.empty()) a.orcid = orcid;
  a.is_focal = focal;
  return a;
}

inline biblio::PublicationRecord pub(const std::string& id, int year,
                                     int citations,
                                     std::vector<biblio::AuthorRef> authors) {
  biblio::PublicationRecord p;
  p.id = id;
  p.title = "title " + id;
  p.year = year;
  p.doc_type = biblio::DocType::JournalArticle;
  p.language = "en";
  p.authors = std::move(authors);
  p.times_cited["wos"] = citations;
  return p;
}

inline biblio::Affiliation aff(const std::string& inst,
                               const std::string& country,
                               bool home = false,
                               biblio::Sector sector =
                                   biblio::Sector::Academic) {
  biblio::Affiliation a;
  a.institution = inst;
  a.country = country;
  a.sector = sector;
  a.is_home = home;
  return a;
}

inline biblio::CitedReference ref(const std::string& raw, int year = 0,
                                  const std::string& source = "") {
  biblio::CitedReference r;
  r.raw = raw;
  if (year) r.year = year;
  if (!source.empty()) r.source_name = source;
  return r;
}

inline biblio::Corpus corpus_of(std::vector<biblio::PublicationRecord> pubs,
                                const std::string& focal_name = "Doe, Jane") {
  biblio::Corpus c;
  c.focal_author = author(focal_name, true);
  c.home_institution = "Home University";
  c.home_country = "AT";
  c.focal_pubs = std::move(pubs);
  return c;
}

}  // namespace testutil
