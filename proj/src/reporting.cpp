#include "biblio/reporting.hpp"

#include <algorithm>
#include <ctime>
#include <set>
#include <sstream>

#include "biblio/corpus.hpp"
#include "biblio/focus.hpp"
#include "biblio/indicators.hpp"
#include "biblio/knowledge.hpp"
#include "biblio/text.hpp"

namespace biblio {

namespace {

using nlohmann::ordered_json;

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
#if defined(_WIN32)
  gmtime_s(&tm, &now);
#else
  gmtime_r(&now, &tm);
#endif
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ordered_json to_json(const CountPercent& cp) {
  return {{"count", cp.count}, {"percent", cp.percent}};
}

ordered_json to_json(const QuartileDistribution& d) {
  ordered_json j;
  for (const char* k : {"Q1", "Q2", "Q3", "Q4", "Unranked"})
    j[k] = d.counts.at(k);
  return j;
}

ordered_json issues_json(const std::vector<Issue>& issues) {
  ordered_json arr = ordered_json::array();
  for (const auto& i : issues)
    arr.push_back({{"code", i.code},
                   {"record_id", i.record_id},
                   {"message", i.message}});
  return arr;
}

ordered_json ranking_json(const std::vector<std::pair<std::string, int>>& r) {
  ordered_json arr = ordered_json::array();
  for (const auto& [name, count] : r)
    arr.push_back({{"name", name}, {"count", count}});
  return arr;
}

ordered_json to_json(const ActivityProfile& p) {
  ordered_json j;
  j["window"] = {{"start", p.window.start}, {"end", p.window.end}};
  ordered_json per_year = ordered_json::array();
  for (const auto& [year, total] : p.per_year_total) {
    ordered_json row;
    row["year"] = year;
    row["total"] = total;
    ordered_json by_type;
    auto it = p.per_year_by_type.find(year);
    if (it != p.per_year_by_type.end())
      for (const auto& [t, n] : it->second)
        by_type[std::string(to_string(t))] = n;
    row["by_type"] = by_type;
    per_year.push_back(row);
  }
  j["per_year"] = per_year;
  j["window_total"] = p.window_total;
  j["trend_slope"] = p.trend_slope;
  j["earlier_count"] = p.earlier_count;
  j["current_incomplete_year_count"] = p.current_incomplete_year_count;
  return j;
}

ordered_json to_json(const CoauthorProfile& p) {
  ordered_json j;
  ordered_json per_window = ordered_json::array();
  for (const auto& s : p.per_window) {
    per_window.push_back({{"window", {{"start", s.window.start},
                                      {"end", s.window.end}}},
                          {"pubs", s.pubs},
                          {"mean_coauthors", s.mean_coauthors},
                          {"median_coauthors", s.median_coauthors},
                          {"max_coauthors", s.max_coauthors},
                          {"single_authored", to_json(s.single_authored)}});
  }
  j["per_window"] = per_window;
  j["single_authored"] = to_json(p.single_authored);
  j["roles"] = {{"first", to_json(p.first_role)},
                {"last", to_json(p.last_role)},
                {"corresponding", to_json(p.corresponding_role)}};
  j["dependence"] = {{"coauthor", p.dependence_name},
                     {"key", p.dependence_key},
                     {"share", p.dependence_share},
                     {"flagged", p.dependence_flagged}};
  j["alphabetical_share"] = p.alphabetical_share;
  j["suppress_role_interpretation"] = p.suppress_role_interpretation;
  return j;
}

ordered_json to_json(const FundingProfile& p) {
  ordered_json j;
  j["funded"] = to_json(p.funded);
  j["funder_ranking"] = ranking_json(p.funder_ranking);
  return j;
}

ordered_json to_json(const VisibilityProfile& p) {
  ordered_json j;
  ordered_json cov;
  for (const auto& [src, cp] : p.coverage) cov[src] = to_json(cp);
  j["coverage"] = cov;
  j["english"] = to_json(p.english);
  j["open_access"] = to_json(p.open_access);
  j["quartiles"] = {{"full_window", to_json(p.full_window)},
                    {"first_half", to_json(p.first_half)},
                    {"second_half", to_json(p.second_half)}};
  ordered_json table = ordered_json::array();
  for (const auto& row : p.journal_table) {
    ordered_json r;
    r["journal_id"] = row.journal_id;
    r["journal"] = row.journal_name;
    r["items"] = row.items;
    r["citations"] = row.citations;
    if (row.metric_value) r["metric_value"] = *row.metric_value;
    r["quartile"] =
        row.quartile ? std::string(to_string(*row.quartile)) : "Unranked";
    table.push_back(r);
  }
  j["journal_table"] = table;
  ordered_json tops;
  for (const auto& [name, n] : p.top_list_counts) tops[name] = n;
  j["top_list_counts"] = tops;
  return j;
}

ordered_json to_json(const SelfCitationResult& s) {
  return {{"rate", s.rate},
          {"flag", s.elevated ? "elevated" : "usual"},
          {"self_edges", s.self_edges},
          {"total_edges", s.total_edges}};
}

ordered_json to_json(const ImpactProfile& p) {
  ordered_json j;
  j["scope"] = std::string(to_string(p.scope));
  j["pub_count"] = p.pub_count;
  j["total_citations"] = p.total_citations;
  j["max_citations"] = p.max_citations;
  j["mean_citations"] = p.mean_citations;
  if (p.stddev_citations) j["stddev_citations"] = *p.stddev_citations;
  j["cited"] = to_json(p.cited);
  j["citations_per_cited_doc"] = p.citations_per_cited_doc;
  j["h_index"] = p.h;
  j["g_index"] = p.g;
  j["m_quotient"] = p.m_quotient;
  if (p.first_pub_year) j["first_pub_year"] = *p.first_pub_year;
  ordered_json iidx;
  for (const auto& [t, n] : p.i_indices) iidx["i" + std::to_string(t)] = n;
  j["i_indices"] = iidx;
  j["self_citation"] = to_json(p.self_citation);
  j["cnci_mean"] = p.cnci_mean;
  j["cnci_evaluated"] = p.cnci_evaluated;
  j["top10"] = to_json(p.top10);
  j["top1"] = to_json(p.top1);
  j["excluded_from_cnci"] = p.excluded_from_cnci;
  return j;
}

ordered_json to_json(const CitingDocsProfile& p) {
  ordered_json j;
  j["citing_count"] = p.citing_count;
  j["venue_quartiles"] = to_json(p.venue_quartiles);
  j["cnci_mean"] = p.cnci_mean;
  j["cnci_evaluated"] = p.cnci_evaluated;
  j["top10"] = to_json(p.top10);
  j["top1"] = to_json(p.top1);
  ordered_json tops;
  for (const auto& [name, n] : p.top_list_counts) tops[name] = n;
  j["top_list_counts"] = tops;
  return j;
}

ordered_json to_json(const CollaborationShares& s) {
  ordered_json arr = ordered_json::array();
  for (const auto& e : s.per_window)
    arr.push_back({{"window", {{"start", e.window.start},
                               {"end", e.window.end}}},
                   {"classified", e.classified},
                   {"unclassified", e.unclassified},
                   {"international", e.international},
                   {"national", e.national},
                   {"domestic", e.domestic}});
  return arr;
}

ordered_json cooperation_rows_json(const std::vector<CooperationRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows)
    arr.push_back({{"institution", r.institution},
                   {"country", r.country},
                   {"copubs", to_json(r.copubs)},
                   {"citations", r.citations},
                   {"cnci", r.cnci},
                   {"cnci_evaluated", r.cnci_evaluated},
                   {"top10_pct", r.top10_pct},
                   {"top1_pct", r.top1_pct},
                   {"intl_pct", r.intl_pct},
                   {"industry_pct", r.industry_pct}});
  return arr;
}

ordered_json to_json(const ReferenceStats& s) {
  ordered_json j;
  j["total_refs"] = s.total_refs;
  j["undated"] = s.undated;
  ordered_json shares;
  for (const auto& [t, v] : s.type_shares)
    shares[std::string(to_string(t))] = v;
  j["type_shares"] = shares;
  ordered_json hist = ordered_json::array();
  for (const auto& [y, n] : s.year_histogram)
    hist.push_back({{"year", y}, {"count", n}});
  j["year_histogram"] = hist;
  if (s.median_age)
    j["median_age"] = *s.median_age;
  else
    j["median_age"] = nullptr;
  if (s.field_half_life) j["field_half_life"] = *s.field_half_life;
  j["source_ranking"] = ranking_json(s.source_ranking);
  return j;
}

ordered_json to_json(const VenueOverlap& v) {
  ordered_json j;
  j["publishing_venues"] = v.publishing_venues;
  j["top_cited_venues"] = v.top_cited_venues;
  j["overlap"] = v.overlap;
  j["overlap_ratio"] = v.overlap_ratio;
  return j;
}

ordered_json to_json(const InterdisciplinarityProfile& p) {
  ordered_json j;
  ordered_json counts;
  for (const auto& [c, n] : p.category_counts) counts[c] = n;
  j["category_counts"] = counts;
  j["distinct_categories"] = p.distinct_categories;
  j["unclassified"] = p.unclassified;
  return j;
}

ordered_json graph_summary(const Graph& g, const std::string& file_stem) {
  return {{"nodes", g.nodes.size()},
          {"edges", g.edges.size()},
          {"file", file_stem}};
}

std::vector<CitedReference> all_refs_copy(const Corpus& c) {
  std::vector<CitedReference> refs;
  for (const auto& p : c.focal_pubs)
    for (const auto& r : p.references) refs.push_back(r);
  return refs;
}

}  // namespace

const Section* ReportDocument::find_section(const std::string& name) const {
  for (const auto& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

ordered_json ReportDocument::to_json() const {
  ordered_json j;
  j["metadata"] = metadata;
  ordered_json secs = ordered_json::array();
  for (const auto& s : sections) {
    ordered_json sj;
    sj["name"] = s.name;
    sj["payload"] = s.payload;
    sj["notes"] = s.notes;
    secs.push_back(sj);
  }
  j["sections"] = secs;
  return j;
}

ReportDocument ReportDocument::from_json(const ordered_json& j) {
  ReportDocument doc;
  doc.metadata = j.at("metadata");
  for (const auto& sj : j.at("sections")) {
    Section s;
    s.name = sj.at("name").get<std::string>();
    s.payload = sj.at("payload");
    for (const auto& n : sj.at("notes")) s.notes.push_back(n.get<std::string>());
    doc.sections.push_back(std::move(s));
  }
  return doc;
}

std::string report_id(const Corpus& corpus) {
  return corpus_hash(corpus).substr(0, 12);
}

std::map<std::string, Graph> report_graphs(const Corpus& corpus,
                                           const Config& config) {
  std::map<std::string, Graph> graphs;
  graphs["coauthor"] = coauthor_network(corpus, config.window);
  graphs["country_copub"] = country_copub_network(corpus, config.window);
  graphs["citing_country"] = citing_country_network(corpus);
  graphs["coupling"] = bibliographic_coupling(corpus.focal_pubs);
  auto terms = extract_terms(corpus.focal_pubs, config.focus_source,
                             config.stopwords);
  auto selected = select_terms(std::move(terms), corpus.focal_pubs,
                               config.primary_source_for(corpus),
                               config.focus_min_occurrences,
                               config.focus_keep_fraction);
  graphs["term_map"] = term_cooccurrence_map(corpus.focal_pubs, selected);
  return graphs;
}

ReportDocument build_report(const Corpus& corpus, const ReportInputs& inputs,
                            const Config& config) {
  if (config.window.start == 0 || config.window.end < config.window.start)
    throw MissingTableError(
        "config must define a publication window (window.start/window.end)");
  if (config.section_enabled("Visibility") && !inputs.metrics)
    throw MissingTableError(
        "journal metrics table required for the Visibility section");
  if (config.section_enabled("Impact") &&
      (!inputs.baselines || inputs.baselines->empty()))
    throw MissingTableError(
        "baseline table required for the Impact section");
  if (config.section_enabled("CitingAnalysis") && !inputs.metrics)
    throw MissingTableError(
        "journal metrics table required for the CitingAnalysis section");

  const Window full = config.window;
  auto [h1, h2] = halves(full);
  const std::vector<Window> windows = {full, h1, h2};
  const std::string primary = config.primary_source_for(corpus);
  const std::string rid = report_id(corpus);

  ReportDocument doc;
  doc.metadata["researcher"] = corpus.focal_author.display_name;
  doc.metadata["home_institution"] = corpus.home_institution;
  doc.metadata["home_country"] = corpus.home_country;
  doc.metadata["report_id"] = rid;
  doc.metadata["corpus_hash"] = corpus_hash(corpus);
  doc.metadata["primary_source"] = primary;
  doc.metadata["config"] = config.to_json();
  doc.metadata["generated_at"] = utc_timestamp();

  std::vector<Issue> warnings = validate_corpus(corpus, primary);

  // Methodology
  if (config.section_enabled("Methodology")) {
    Section s{"Methodology", ordered_json::object(), {}};
    s.payload["sources"] = corpus.source_names();
    s.payload["primary_source"] = primary;
    s.payload["window"] = {{"start", full.start}, {"end", full.end}};
    s.payload["config"] = config.to_json();
    s.payload["summary_fields"] = {
        "publications", "citations_total", "h_index", "g_index",
        "cnci_mean", "top10_count", "top1_count", "q1_share",
        "collaboration", "self_citation"};
    s.notes = {
        "Counts are normal (whole) counts per publication.",
        "Quartiles are rank-based within each subject category; when a "
        "journal sits in several categories the best quartile is used.",
        "Normalized citation impact divides citations by the expected value "
        "for the publication's categories, year and document type; multiple "
        "categories average their expectations.",
        "Top-10%/Top-1% flags use the most favorable category threshold.",
        "Per-source coverage counts publications carrying an identifier or "
        "citation count from that source."};
    doc.sections.push_back(std::move(s));
  }

  // Coverage (over the whole focal list, not windowed)
  if (config.section_enabled("Coverage")) {
    Section s{"Coverage", ordered_json::object(), {}};
    int total = int(corpus.focal_pubs.size());
    ordered_json per_source;
    for (const auto& src : corpus.source_names()) {
      int n = 0;
      for (const auto& p : corpus.focal_pubs)
        if (p.source_ids.count(src) || p.times_cited.count(src)) ++n;
      per_source[src] = to_json(make_count_percent(n, total));
    }
    s.payload["total_publications"] = total;
    s.payload["per_source"] = per_source;
    doc.sections.push_back(std::move(s));
  }

  // Activity
  ActivityProfile activity;
  if (config.section_enabled("Activity")) {
    activity = activity_profile(corpus, full);
    doc.sections.push_back({"Activity", to_json(activity), {}});
  }

  // Affiliation & funding
  if (config.section_enabled("AffiliationFunding")) {
    Section s{"AffiliationFunding", ordered_json::object(), {}};
    FundingProfile funding = funding_profile(corpus, full);
    s.payload["funding"] = to_json(funding);
    std::set<std::string> institutions, countries;
    for (const auto& p : corpus.focal_pubs)
      for (const auto& a : p.affiliations) {
        if (!a.institution.empty()) institutions.insert(a.institution);
        if (!a.country.empty()) countries.insert(a.country);
      }
    s.payload["distinct_institutions"] = institutions.size();
    s.payload["distinct_countries"] = countries.size();
    doc.sections.push_back(std::move(s));
  }

  // Co-authorship
  CoauthorProfile coauthors;
  if (config.section_enabled("Coauthorship")) {
    coauthors = coauthor_profile(corpus, windows, config);
    Section s{"Coauthorship", to_json(coauthors), {}};
    if (coauthors.suppress_role_interpretation)
      s.notes.push_back(
          "Author lists are predominantly alphabetical; first/last role "
          "percentages are reported but not interpreted.");
    if (coauthors.dependence_flagged)
      s.notes.push_back("Co-author dependence exceeds the configured flag "
                        "threshold.");
    doc.sections.push_back(std::move(s));
  }

  // Visibility
  VisibilityProfile visibility;
  bool have_visibility = false;
  if (config.section_enabled("Visibility")) {
    visibility = visibility_profile(corpus, *inputs.metrics, inputs.top_lists,
                                    config);
    have_visibility = true;
    doc.sections.push_back({"Visibility", to_json(visibility), {}});
  }

  // Impact (citable items and all items)
  ImpactProfile impact_citable, impact_all;
  bool have_impact = false;
  if (config.section_enabled("Impact")) {
    impact_citable = impact_profile(corpus, inputs.metrics, inputs.baselines,
                                    config, Scope::CitableItems);
    impact_all = impact_profile(corpus, inputs.metrics, inputs.baselines,
                                config, Scope::AllItems);
    have_impact = true;
    Section s{"Impact", ordered_json::object(), {}};
    s.payload["citable_items"] = to_json(impact_citable);
    s.payload["all_items"] = to_json(impact_all);
    for (const auto& w : impact_citable.warnings) warnings.push_back(w);
    for (const auto& w : impact_all.warnings) warnings.push_back(w);
    if (!impact_all.excluded_from_cnci.empty())
      s.notes.push_back(
          "Publications without baseline coverage are excluded from CNCI and "
          "Top-k denominators; see the Annex for the list.");
    doc.sections.push_back(std::move(s));
  }

  // Citing analysis
  CitingDocsProfile citing;
  bool have_citing = false;
  if (config.section_enabled("CitingAnalysis")) {
    citing = citing_docs_profile(corpus, inputs.metrics, inputs.baselines,
                                 inputs.top_lists, config);
    have_citing = true;
    Section s{"CitingAnalysis", to_json(citing), {}};
    s.payload["citing_country_graph"] =
        graph_summary(citing_country_network(corpus),
                      rid + ".citing_country");
    doc.sections.push_back(std::move(s));
  }

  // Cooperation
  CollaborationShares shares;
  bool have_cooperation = false;
  if (config.section_enabled("Cooperation")) {
    shares = collaboration_shares(corpus, windows);
    have_cooperation = true;
    auto coop_rows = institution_cooperation_table(corpus, inputs.metrics,
                                                   inputs.baselines, config);
    Section s{"Cooperation", ordered_json::object(), {}};
    s.payload["collaboration_shares"] = to_json(shares);
    std::vector<CooperationRow> shown = coop_rows;
    if (int(shown.size()) > config.cooperation_max_rows)
      shown.resize(config.cooperation_max_rows);
    s.payload["institution_table"] = cooperation_rows_json(shown);
    s.payload["institution_table_total_rows"] = coop_rows.size();
    Graph coop_graph = country_copub_network(corpus, full);
    Graph citing_graph = citing_country_network(corpus);
    s.payload["country_graph"] =
        graph_summary(coop_graph, rid + ".country_copub");
    s.payload["coauthor_graph"] =
        graph_summary(coauthor_network(corpus, full), rid + ".coauthor");
    if (citing_graph.nodes.size() > coop_graph.nodes.size())
      s.notes.push_back(
          "The citing-country map spans more countries than the cooperation "
          "map: impact reaches beyond direct collaboration.");
    doc.sections.push_back(std::move(s));
  }

  // Reference analysis
  ReferenceStats refs;
  bool have_refs = false;
  if (config.section_enabled("ReferenceAnalysis")) {
    refs = reference_stats(corpus.focal_pubs, config.field_half_life);
    have_refs = true;
    VenueOverlap overlap = venue_overlap(corpus, config.knowledge_top_n);
    Section s{"ReferenceAnalysis", ordered_json::object(), {}};
    s.payload["reference_stats"] = to_json(refs);
    s.payload["venue_overlap"] = to_json(overlap);
    doc.sections.push_back(std::move(s));
  }

  // Research focus
  if (config.section_enabled("ResearchFocus")) {
    auto terms = extract_terms(corpus.focal_pubs, config.focus_source,
                               config.stopwords);
    auto selected = select_terms(std::move(terms), corpus.focal_pubs, primary,
                                 config.focus_min_occurrences,
                                 config.focus_keep_fraction);
    Section s{"ResearchFocus", ordered_json::object(), {}};
    ordered_json term_arr = ordered_json::array();
    for (const auto& t : selected)
      term_arr.push_back({{"term", t.term},
                          {"occurrences", t.occurrences},
                          {"relevance", t.relevance}});
    s.payload["selected_terms"] = term_arr;
    s.payload["term_map"] =
        graph_summary(term_cooccurrence_map(corpus.focal_pubs, selected),
                      rid + ".term_map");
    s.payload["interdisciplinarity"] =
        to_json(interdisciplinarity(corpus, inputs.metrics));
    doc.sections.push_back(std::move(s));
  }

  // Summary: copies of headline numbers from the section payloads
  if (config.section_enabled("Summary")) {
    Section s{"Summary", ordered_json::object(), {}};
    s.payload["publications"] = corpus.focal_pubs.size();
    if (config.section_enabled("Activity")) {
      s.payload["publications_in_window"] = activity.window_total;
      s.payload["trend_slope"] = activity.trend_slope;
    }
    if (have_impact) {
      s.payload["citations_total"] = impact_all.total_citations;
      s.payload["citations_max"] = impact_all.max_citations;
      s.payload["citations_per_cited_doc"] =
          impact_all.citations_per_cited_doc;
      s.payload["h_index"] = impact_all.h;
      s.payload["g_index"] = impact_all.g;
      s.payload["m_quotient"] = impact_all.m_quotient;
      s.payload["cnci_mean"] = impact_citable.cnci_mean;
      s.payload["top10_count"] = impact_citable.top10.count;
      s.payload["top1_count"] = impact_citable.top1.count;
      s.payload["self_citation_rate"] = impact_all.self_citation.rate;
      s.payload["self_citation_flag"] =
          impact_all.self_citation.elevated ? "elevated" : "usual";
    }
    if (have_visibility) {
      int total = visibility.full_window.total();
      s.payload["q1_share"] =
          total > 0 ? double(visibility.full_window.counts.at("Q1")) / total
                    : 0.0;
    }
    if (have_cooperation && !shares.per_window.empty()) {
      const auto& e = shares.per_window.front();
      s.payload["collaboration"] = {{"international", e.international},
                                    {"national", e.national},
                                    {"domestic", e.domestic}};
    }
    if (config.section_enabled("Coauthorship")) {
      s.payload["coauthor_dependence_share"] = coauthors.dependence_share;
    }
    if (have_refs) s.payload["reference_total"] = refs.total_refs;
    if (have_citing) s.payload["citing_documents"] = citing.citing_count;
    doc.sections.push_back(std::move(s));
  }

  // Annex: full tables and the lossless warning channel
  if (config.section_enabled("Annex")) {
    Section s{"Annex", ordered_json::object(), {}};
    if (have_visibility)
      s.payload["journal_table"] =
          doc.find_section("Visibility")->payload["journal_table"];
    if (have_cooperation)
      s.payload["cooperation_table"] = cooperation_rows_json(
          institution_cooperation_table(corpus, inputs.metrics,
                                        inputs.baselines, config));
    if (have_impact) {
      s.payload["excluded_from_cnci"] = impact_all.excluded_from_cnci;
      // per-source citation totals and h-indices
      ordered_json per_source;
      for (const auto& src : corpus.source_names()) {
        std::vector<int> counts;
        long total = 0;
        for (const auto& p : corpus.focal_pubs) {
          int c = p.citations(src);
          counts.push_back(c);
          total += c;
        }
        per_source[src] = {{"total_citations", total},
                           {"h_index", h_index(counts)}};
      }
      s.payload["per_source_impact"] = per_source;
    }
    s.payload["warnings"] = issues_json(warnings);
    doc.sections.push_back(std::move(s));
  }

  return doc;
}

namespace {

std::string fmt3(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string md_value(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return fmt3(v.get<double>());
  if (v.is_null()) return "-";
  return v.dump();
}

void render_markdown_payload(std::ostringstream& os, const ordered_json& j,
                             int depth) {
  std::string indent(std::size_t(depth) * 2, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object() || it.value().is_array()) {
        os << indent << "- **" << it.key() << "**:\n";
        render_markdown_payload(os, it.value(), depth + 1);
      } else {
        os << indent << "- " << it.key() << ": " << md_value(it.value())
           << "\n";
      }
    }
  } else if (j.is_array()) {
    // homogeneous object arrays render as tables
    if (!j.empty() && j.front().is_object()) {
      std::vector<std::string> cols;
      for (auto it = j.front().begin(); it != j.front().end(); ++it)
        if (!it.value().is_object() && !it.value().is_array())
          cols.push_back(it.key());
      if (!cols.empty()) {
        os << indent << "|";
        for (const auto& c : cols) os << " " << c << " |";
        os << "\n" << indent << "|";
        for (std::size_t i = 0; i < cols.size(); ++i) os << " --- |";
        os << "\n";
        for (const auto& row : j) {
          os << indent << "|";
          for (const auto& c : cols)
            os << " " << (row.contains(c) ? md_value(row[c]) : "-") << " |";
          os << "\n";
        }
        return;
      }
    }
    for (const auto& item : j) {
      if (item.is_object() || item.is_array()) {
        render_markdown_payload(os, item, depth);
      } else {
        os << indent << "- " << md_value(item) << "\n";
      }
    }
  }
}

}  // namespace

std::string render(const ReportDocument& report, RenderFormat format) {
  if (format == RenderFormat::Structured) return report.to_json().dump(2) + "\n";

  std::ostringstream os;
  os << "# Bibliometric profile: "
     << report.metadata.value("researcher", std::string("(unknown)")) << "\n\n";
  os << "- report id: " << report.metadata.value("report_id", std::string())
     << "\n";
  os << "- generated: " << report.metadata.value("generated_at", std::string())
     << "\n";
  os << "- primary citation source: "
     << report.metadata.value("primary_source", std::string()) << "\n\n";
  for (const auto& s : report.sections) {
    os << "## " << s.name << "\n\n";
    for (const auto& note : s.notes) os << "> " << note << "\n";
    if (!s.notes.empty()) os << "\n";
    render_markdown_payload(os, s.payload, 0);
    os << "\n";
  }
  return os.str();
}

ordered_json compare_peers(
    const Corpus& focal,
    const std::vector<std::pair<std::string, Corpus>>& peers,
    const ReportInputs& inputs, const Config& config) {
  auto party_block = [&](const Corpus& corpus) {
    ordered_json j;
    ImpactProfile impact = impact_profile(corpus, inputs.metrics,
                                          inputs.baselines, config,
                                          Scope::AllItems);
    j["impact"] = to_json(impact);
    if (inputs.metrics) {
      VisibilityProfile vis = visibility_profile(corpus, *inputs.metrics,
                                                 inputs.top_lists, config);
      j["quartiles"] = to_json(vis.full_window);
    }
    j["venue_overlap"] =
        to_json(venue_overlap(corpus, config.knowledge_top_n));
    auto terms = extract_terms(corpus.focal_pubs, config.focus_source,
                               config.stopwords);
    auto selected = select_terms(std::move(terms), corpus.focal_pubs,
                                 config.primary_source_for(corpus),
                                 config.focus_min_occurrences,
                                 config.focus_keep_fraction);
    ordered_json top_terms = ordered_json::array();
    for (std::size_t i = 0; i < selected.size() && i < 10; ++i)
      top_terms.push_back(selected[i].term);
    j["top_terms"] = top_terms;
    return j;
  };

  ordered_json out;
  out["window"] = {{"start", config.window.start}, {"end", config.window.end}};
  out["focal"] = party_block(focal);
  out["focal"]["researcher"] = focal.focal_author.display_name;

  std::vector<std::pair<std::string, std::vector<CitedReference>>> peer_refs;
  for (const auto& [name, corpus] : peers)
    peer_refs.emplace_back(name, all_refs_copy(corpus));
  auto focal_refs = all_refs_copy(focal);
  auto ref_cmp = peer_reference_comparison(focal_refs, peer_refs,
                                           config.knowledge_top_n);

  ordered_json peer_arr = ordered_json::array();
  for (std::size_t i = 0; i < peers.size(); ++i) {
    ordered_json pj = party_block(peers[i].second);
    pj["peer"] = peers[i].first;
    const auto& cmp = ref_cmp[i];
    pj["reference_comparison"] = {{"focal_top", cmp.focal_top},
                                  {"peer_top", cmp.peer_top},
                                  {"intersection", cmp.intersection},
                                  {"focal_only", cmp.focal_only},
                                  {"peer_only", cmp.peer_only}};
    peer_arr.push_back(std::move(pj));
  }
  out["peers"] = peer_arr;
  return out;
}

std::string interview_template() {
  return R"(# Pre-assessment interview
# Fill in the answers by hand; they inform the report configuration
# (data sources, windows, role analysis, visibility settings).

 1. Which databases or search services do you rely on to follow the
    literature in your field, and do you use any alerting?
 2. Do you maintain a persistent researcher identifier (ORCID or similar)?
 3. Is your record in the institutional research information system
    complete and current?
 4. Do you deposit your work in institutional or subject repositories?
 5. Do you post preprints to establish priority?
 6. Which output channels matter most in your field (journals, books,
    chapters, proceedings, patents)?
 7. Does author position (first, last, corresponding) carry meaning in
    your field? If not, why?
 8. What criteria guide where you submit your work?
 9. Does open access factor into your publishing decisions?
10. Do you regularly present at conferences?
11. Do you serve as an editor for any journals? Which ones?
12. Do you review for journals, and roughly how often?
13. Do you maintain a personal website or public scholarly profile?
14. Do you use a reference manager? Which one, and why does it help?
15. Do you take part in scholarly mailing lists or blogs?
16. Do you use other social media in a professional capacity?
17. What is your view of download statistics and web-based metrics?
18. Do you produce research data, and how do you manage and archive it?
19. How do you assess potential collaborators, and do quantitative
    indicators play a part?
20. Is there anything else about your publication practice we should
    know?
)";
}

}  // namespace biblio
