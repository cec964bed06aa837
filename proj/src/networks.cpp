#include "biblio/networks.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "biblio/text.hpp"

namespace biblio {

namespace {

// Byte-stable number format: integers without a decimal point.
std::string fmt_num(double v) {
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", v);
    return buf;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

const GraphNode* Graph::find_node(const std::string& key) const {
  for (const auto& n : nodes)
    if (n.key == key) return &n;
  return nullptr;
}

const GraphEdge* Graph::find_edge(const std::string& a,
                                  const std::string& b) const {
  const std::string& lo = a < b ? a : b;
  const std::string& hi = a < b ? b : a;
  for (const auto& e : edges)
    if (e.a == lo && e.b == hi) return &e;
  return nullptr;
}

void GraphBuilder::add_node(const std::string& key, const std::string& label,
                            double weight) {
  auto [it, inserted] = nodes_.try_emplace(key, label, weight);
  if (!inserted) it->second.second = weight;
}

void GraphBuilder::bump_node(const std::string& key, const std::string& label,
                             double delta) {
  auto [it, inserted] = nodes_.try_emplace(key, label, 0.0);
  it->second.second += delta;
}

void GraphBuilder::bump_edge(const std::string& a, const std::string& b,
                             double delta) {
  if (a == b) return;  // no self-loops
  auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  edges_[key] += delta;
}

Graph GraphBuilder::build() const {
  Graph g;
  for (const auto& [key, lw] : nodes_)
    g.nodes.push_back({key, lw.first, lw.second});
  for (const auto& [ab, w] : edges_)
    if (w > 0.0) g.edges.push_back({ab.first, ab.second, w});
  return g;  // maps iterate sorted, so the graph is already canonical
}

std::string export_graph(const Graph& g, GraphFormat format) {
  std::ostringstream os;
  if (format == GraphFormat::DOT) {
    os << "graph G {\n";
    for (const auto& n : g.nodes)
      os << "  \"" << dot_escape(n.key) << "\" [label=\"" << dot_escape(n.label)
         << "\", weight=" << fmt_num(n.weight) << "];\n";
    for (const auto& e : g.edges)
      os << "  \"" << dot_escape(e.a) << "\" -- \"" << dot_escape(e.b)
         << "\" [weight=" << fmt_num(e.weight) << "];\n";
    os << "}\n";
    return os.str();
  }
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
     << "  <key id=\"label\" for=\"node\" attr.name=\"label\" "
        "attr.type=\"string\"/>\n"
     << "  <key id=\"weight\" for=\"node\" attr.name=\"weight\" "
        "attr.type=\"double\"/>\n"
     << "  <key id=\"eweight\" for=\"edge\" attr.name=\"weight\" "
        "attr.type=\"double\"/>\n"
     << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
  for (const auto& n : g.nodes)
    os << "    <node id=\"" << xml_escape(n.key) << "\"><data "
       << "key=\"label\">" << xml_escape(n.label)
       << "</data><data key=\"weight\">" << fmt_num(n.weight)
       << "</data></node>\n";
  for (const auto& e : g.edges)
    os << "    <edge source=\"" << xml_escape(e.a) << "\" target=\""
       << xml_escape(e.b) << "\"><data key=\"eweight\">" << fmt_num(e.weight)
       << "</data></edge>\n";
  os << "  </graph>\n</graphml>\n";
  return os.str();
}

Graph coauthor_network(const Corpus& corpus, Window window) {
  GraphBuilder b;
  for (const auto& pub : corpus.focal_pubs) {
    if (window.start != 0 && !window.contains(pub.year)) continue;
    std::map<std::string, std::string> identities;  // identity -> name
    for (const auto& a : pub.authors) {
      std::string id = a.identity();
      if (!id.empty()) identities.emplace(id, a.display_name);
    }
    for (const auto& [id, name] : identities) b.bump_node(id, name);
    for (auto it = identities.begin(); it != identities.end(); ++it)
      for (auto jt = std::next(it); jt != identities.end(); ++jt)
        b.bump_edge(it->first, jt->first);
  }
  return b.build();
}

namespace {

Graph country_network(const std::vector<PublicationRecord>& pubs,
                      Window window) {
  GraphBuilder b;
  for (const auto& pub : pubs) {
    if (window.start != 0 && !window.contains(pub.year)) continue;
    std::set<std::string> countries;
    for (const auto& a : pub.affiliations)
      if (!a.country.empty()) countries.insert(a.country);
    for (const auto& c : countries) b.bump_node(c, c);
    for (auto it = countries.begin(); it != countries.end(); ++it)
      for (auto jt = std::next(it); jt != countries.end(); ++jt)
        b.bump_edge(*it, *jt);
  }
  return b.build();
}

}  // namespace

Graph country_copub_network(const Corpus& corpus, Window window) {
  return country_network(corpus.focal_pubs, window);
}

Graph citing_country_network(const Corpus& corpus) {
  return country_network(corpus.citing_pubs, Window{0, 0});
}

Graph bibliographic_coupling(std::span<const PublicationRecord> pubs) {
  GraphBuilder b;
  std::vector<std::set<std::string>> refsets;
  refsets.reserve(pubs.size());
  for (const auto& pub : pubs) {
    b.add_node(pub.id, pub.title, 1.0);
    std::set<std::string> refs;
    for (const auto& r : pub.references) refs.insert(r.identity());
    refsets.push_back(std::move(refs));
  }
  for (std::size_t i = 0; i < pubs.size(); ++i)
    for (std::size_t j = i + 1; j < pubs.size(); ++j) {
      int shared = 0;
      for (const auto& r : refsets[i])
        if (refsets[j].count(r)) ++shared;
      if (shared > 0) b.bump_edge(pubs[i].id, pubs[j].id, shared);
    }
  return b.build();
}

CollaborationClass classify_collaboration(const PublicationRecord& pub,
                                          const std::string& home_country) {
  if (pub.affiliations.empty()) return CollaborationClass::Unclassified;
  bool foreign = false;
  std::set<std::string> domestic_institutions;
  for (const auto& a : pub.affiliations) {
    if (a.country != home_country)
      foreign = true;
    else
      domestic_institutions.insert(text::normalize(a.institution));
  }
  if (foreign) return CollaborationClass::International;
  if (domestic_institutions.size() >= 2) return CollaborationClass::National;
  return CollaborationClass::Domestic;
}

CollaborationShares collaboration_shares(const Corpus& corpus,
                                         std::span<const Window> windows) {
  CollaborationShares shares;
  for (const Window& w : windows) {
    CollaborationShares::Entry e;
    e.window = w;
    int intl = 0, national = 0, domestic = 0;
    for (const auto& pub : corpus.focal_pubs) {
      if (w.start != 0 && !w.contains(pub.year)) continue;
      switch (classify_collaboration(pub, corpus.home_country)) {
        case CollaborationClass::International: ++intl; break;
        case CollaborationClass::National: ++national; break;
        case CollaborationClass::Domestic: ++domestic; break;
        case CollaborationClass::Unclassified: ++e.unclassified; break;
      }
    }
    e.classified = intl + national + domestic;
    if (e.classified > 0) {
      e.international = double(intl) / e.classified;
      e.national = double(national) / e.classified;
      e.domestic = double(domestic) / e.classified;
    }
    shares.per_window.push_back(e);
  }
  return shares;
}

std::vector<CooperationRow> institution_cooperation_table(
    const Corpus& corpus, const JournalMetricsTable* metrics,
    const BaselineTable* baselines, const Config& config) {
  std::string home_key = text::normalize(corpus.home_institution);
  std::string primary = config.primary_source_for(corpus);

  struct Acc {
    std::string name;
    std::string country;
    std::vector<const PublicationRecord*> pubs;
  };
  std::map<std::string, Acc> by_institution;

  int total = int(corpus.focal_pubs.size());
  for (const auto& pub : corpus.focal_pubs) {
    std::set<std::string> seen;
    for (const auto& a : pub.affiliations) {
      std::string key = text::normalize(a.institution);
      if (a.is_home || key == home_key || key.empty()) continue;
      if (!seen.insert(key).second) continue;
      auto& acc = by_institution[key];
      if (acc.name.empty()) {
        acc.name = a.institution;
        acc.country = a.country;
      }
      acc.pubs.push_back(&pub);
    }
  }

  std::vector<CooperationRow> rows;
  for (const auto& [key, acc] : by_institution) {
    CooperationRow row;
    row.institution = acc.name;
    row.country = acc.country;
    row.copubs = make_count_percent(int(acc.pubs.size()), total);
    int intl = 0, industry = 0, top10 = 0, top1 = 0;
    double cnci_sum = 0.0;
    for (const auto* pub : acc.pubs) {
      row.citations += pub->citations(primary);
      if (classify_collaboration(*pub, corpus.home_country) ==
          CollaborationClass::International)
        ++intl;
      for (const auto& a : pub->affiliations)
        if (a.sector == Sector::Industry) {
          ++industry;
          break;
        }
      if (baselines && !baselines->empty()) {
        auto categories = categories_for(*pub, metrics, config);
        if (categories.empty()) continue;
        try {
          cnci_sum += cnci(*pub, pub->citations(primary), categories,
                           *baselines);
          auto flags = percentile_flags(pub->citations(primary), categories,
                                        pub->year, pub->doc_type, *baselines);
          if (flags.top10) ++top10;
          if (flags.top1) ++top1;
          ++row.cnci_evaluated;
        } catch (const LookupError&) {
        }
      }
    }
    int n = int(acc.pubs.size());
    row.intl_pct = n > 0 ? double(intl) / n : 0.0;
    row.industry_pct = n > 0 ? double(industry) / n : 0.0;
    if (row.cnci_evaluated > 0) {
      row.cnci = cnci_sum / row.cnci_evaluated;
      row.top10_pct = double(top10) / row.cnci_evaluated;
      row.top1_pct = double(top1) / row.cnci_evaluated;
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(),
            [](const CooperationRow& a, const CooperationRow& b) {
              if (a.copubs.count != b.copubs.count)
                return a.copubs.count > b.copubs.count;
              if (a.citations != b.citations) return a.citations > b.citations;
              return a.institution < b.institution;
            });
  return rows;
}

CitingDocsProfile citing_docs_profile(const Corpus& corpus,
                                      const JournalMetricsTable* metrics,
                                      const BaselineTable* baselines,
                                      const std::vector<TopJournalList>& lists,
                                      const Config& config) {
  CitingDocsProfile p;
  std::string primary = config.primary_source_for(corpus);
  for (const auto& list : lists) p.top_list_counts.emplace(list.name, 0);

  double cnci_sum = 0.0;
  int top10 = 0, top1 = 0;
  for (const auto& pub : corpus.citing_pubs) {
    ++p.citing_count;
    std::string bucket = "Unranked";
    if (metrics && pub.has_venue()) {
      std::string jid =
          pub.venue_id ? *pub.venue_id : text::normalize(pub.venue_name);
      int edition = config.edition_for(pub.year, *metrics);
      try {
        bucket = std::string(to_string(
            best_quartile(jid, config.visibility_metric, edition, *metrics)
                .quartile));
      } catch (const LookupError&) {
      }
      for (const auto& list : lists)
        if (list.journal_ids.count(jid)) ++p.top_list_counts[list.name];
    }
    ++p.venue_quartiles.counts[bucket];

    if (baselines && !baselines->empty()) {
      auto categories = categories_for(pub, metrics, config);
      if (categories.empty()) continue;
      try {
        int c = pub.citations(primary);
        cnci_sum += cnci(pub, c, categories, *baselines);
        auto flags = percentile_flags(c, categories, pub.year, pub.doc_type,
                                      *baselines);
        if (flags.top10) ++top10;
        if (flags.top1) ++top1;
        ++p.cnci_evaluated;
      } catch (const LookupError&) {
      }
    }
  }
  p.cnci_mean = p.cnci_evaluated > 0 ? cnci_sum / p.cnci_evaluated : 0.0;
  p.top10 = make_count_percent(top10, p.cnci_evaluated);
  p.top1 = make_count_percent(top1, p.cnci_evaluated);
  return p;
}

KeyActors key_actors(std::span<const PublicationRecord> pubs,
                     const JournalMetricsTable* metrics,
                     const BaselineTable* baselines, const Config& config) {
  KeyActors k;
  std::map<std::string, std::pair<std::string, int>> authors;  // id -> name,n
  std::map<std::string, int> institutions;
  std::map<std::string, int> funders;

  Config cfg = config;  // categories_for needs the configured metric
  for (const auto& pub : pubs) {
    std::set<std::string> seen_auth, seen_inst, seen_fund;
    for (const auto& a : pub.authors) {
      std::string id = a.identity();
      if (id.empty() || !seen_auth.insert(id).second) continue;
      auto [it, inserted] = authors.try_emplace(id, a.display_name, 0);
      ++it->second.second;
    }
    for (const auto& a : pub.affiliations)
      if (!a.institution.empty() && seen_inst.insert(a.institution).second)
        ++institutions[a.institution];
    for (const auto& f : pub.funders)
      if (seen_fund.insert(f).second) ++funders[f];
  }

  auto ranked = [](const std::map<std::string, int>& m) {
    std::vector<std::pair<std::string, int>> v(m.begin(), m.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
      return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    return v;
  };
  std::map<std::string, int> author_counts;
  for (const auto& [id, nc] : authors) author_counts[nc.first] += nc.second;
  k.authors = ranked(author_counts);
  k.institutions = ranked(institutions);
  k.funders = ranked(funders);

  std::string primary;
  for (const auto& pub : pubs)
    for (const auto& [src, n] : pub.times_cited) {
      if (primary.empty() || src < primary) primary = src;
    }
  if (!config.citation_primary_source.empty())
    primary = config.citation_primary_source;

  for (const auto& pub : pubs) {
    KeyActors::RankedPub rp;
    rp.id = pub.id;
    rp.title = pub.title;
    rp.citations = pub.citations(primary);
    if (baselines && !baselines->empty()) {
      auto categories = categories_for(pub, metrics, cfg);
      if (!categories.empty()) {
        try {
          auto flags = percentile_flags(rp.citations, categories, pub.year,
                                        pub.doc_type, *baselines);
          rp.has_flags = true;
          rp.top10 = flags.top10;
          rp.top1 = flags.top1;
        } catch (const LookupError&) {
        }
      }
    }
    k.publications.push_back(std::move(rp));
  }
  std::sort(k.publications.begin(), k.publications.end(),
            [](const auto& a, const auto& b) {
              return a.citations != b.citations ? a.citations > b.citations
                                                : a.id < b.id;
            });
  return k;
}

}  // namespace biblio
