#include "biblio/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "biblio/text.hpp"

namespace biblio {

int h_index(std::span<const int> citation_counts) {
  std::vector<int> sorted(citation_counts.begin(), citation_counts.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  int h = 0;
  while (h < int(sorted.size()) && sorted[h] >= h + 1) ++h;
  return h;
}

int g_index(std::span<const int> citation_counts) {
  std::vector<int> sorted(citation_counts.begin(), citation_counts.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  long cum = 0;
  int g = 0;
  for (int i = 0; i < int(sorted.size()); ++i) {
    cum += sorted[i];
    long k = i + 1;
    if (cum >= k * k) g = int(k);
  }
  return g;
}

int i_index(std::span<const int> citation_counts, int threshold) {
  return int(std::count_if(citation_counts.begin(), citation_counts.end(),
                           [&](int c) { return c >= threshold; }));
}

double m_quotient(int h, int first_pub_year, int reference_year) {
  int years = reference_year - first_pub_year + 1;
  return years > 0 ? double(h) / years : 0.0;
}

ActivityProfile activity_profile(const Corpus& corpus, Window window) {
  if (window.start > window.end || window.start == 0)
    throw std::invalid_argument("activity window is empty");
  ActivityProfile p;
  p.window = window;
  for (int y = window.start; y <= window.end; ++y) p.per_year_total[y] = 0;
  for (const auto& pub : corpus.focal_pubs) {
    if (pub.year < window.start) {
      ++p.earlier_count;
    } else if (pub.year > window.end) {
      ++p.current_incomplete_year_count;
    } else {
      ++p.per_year_total[pub.year];
      ++p.per_year_by_type[pub.year][pub.doc_type];
      ++p.window_total;
    }
  }
  // OLS slope over (year, total) pairs
  int n = window.years();
  if (n >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [y, count] : p.per_year_total) {
      sx += y;
      sy += count;
      sxx += double(y) * y;
      sxy += double(y) * count;
    }
    double denom = n * sxx - sx * sx;
    p.trend_slope = denom != 0.0 ? (n * sxy - sx * sy) / denom : 0.0;
  }
  return p;
}

namespace {

double median_of(std::vector<int> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

}  // namespace

CoauthorProfile coauthor_profile(const Corpus& corpus,
                                 std::span<const Window> windows,
                                 const Config& config) {
  CoauthorProfile prof;
  if (windows.empty()) return prof;

  for (const Window& w : windows) {
    CoauthorWindowStats s;
    s.window = w;
    std::vector<int> coauthor_counts;
    int single = 0;
    for (const auto& pub : corpus.focal_pubs) {
      if (!w.contains(pub.year)) continue;
      ++s.pubs;
      int co = int(pub.authors.size()) - 1;
      coauthor_counts.push_back(co);
      if (co == 0) ++single;
    }
    if (!coauthor_counts.empty()) {
      s.mean_coauthors =
          std::accumulate(coauthor_counts.begin(), coauthor_counts.end(), 0.0) /
          coauthor_counts.size();
      s.median_coauthors = median_of(coauthor_counts);
      s.max_coauthors =
          *std::max_element(coauthor_counts.begin(), coauthor_counts.end());
    }
    s.single_authored = make_count_percent(single, s.pubs);
    prof.per_window.push_back(s);
  }

  const Window full = windows.front();
  int total = 0, first = 0, last = 0, corresponding = 0, single = 0;
  int multi = 0, alphabetical = 0;
  std::map<std::string, int> coauthor_pubs;          // identity -> shared pubs
  std::map<std::string, std::string> coauthor_names;

  for (const auto& pub : corpus.focal_pubs) {
    if (!full.contains(pub.year)) continue;
    ++total;
    int focal_idx = -1;
    for (int i = 0; i < int(pub.authors.size()); ++i)
      if (same_author(pub.authors[i], corpus.focal_author)) {
        focal_idx = i;
        break;
      }
    bool is_single = pub.authors.size() == 1;
    if (is_single) ++single;
    if (focal_idx == 0) ++first;
    if (!is_single && focal_idx == int(pub.authors.size()) - 1) ++last;
    if (pub.corresponding_author_index) {
      if (*pub.corresponding_author_index == focal_idx) ++corresponding;
    } else if (is_single) {
      ++corresponding;  // a lone author is their own corresponding author
    }

    std::set<std::string> seen;
    for (const auto& a : pub.authors) {
      if (same_author(a, corpus.focal_author)) continue;
      std::string id = a.identity();
      if (id.empty() || !seen.insert(id).second) continue;
      ++coauthor_pubs[id];
      coauthor_names.emplace(id, a.display_name);
    }

    if (!is_single) {
      ++multi;
      bool sorted = true;
      for (std::size_t i = 1; i < pub.authors.size(); ++i)
        if (pub.authors[i - 1].normalized_key > pub.authors[i].normalized_key)
          sorted = false;
      if (sorted) ++alphabetical;
    }
  }

  prof.single_authored = make_count_percent(single, total);
  prof.first_role = make_count_percent(first, total);
  prof.last_role = make_count_percent(last, total);
  prof.corresponding_role = make_count_percent(corresponding, total);

  for (const auto& [id, count] : coauthor_pubs) {
    double share = total > 0 ? double(count) / total : 0.0;
    if (share > prof.dependence_share) {
      prof.dependence_share = share;
      prof.dependence_key = id;
      prof.dependence_name = coauthor_names[id];
    }
  }
  prof.dependence_flagged = prof.dependence_share > config.dependence_flag_min;
  prof.alphabetical_share = multi > 0 ? double(alphabetical) / multi : 0.0;
  prof.suppress_role_interpretation =
      multi > 0 && prof.alphabetical_share >= config.alphabetical_suppress_min;
  return prof;
}

FundingProfile funding_profile(const Corpus& corpus, Window window) {
  FundingProfile p;
  int total = 0, funded = 0;
  std::map<std::string, int> counts;
  for (const auto& pub : corpus.focal_pubs) {
    if (!window.contains(pub.year)) continue;
    ++total;
    if (!pub.funders.empty()) ++funded;
    std::set<std::string> seen;
    for (const auto& f : pub.funders)
      if (seen.insert(f).second) ++counts[f];
  }
  p.funded = make_count_percent(funded, total);
  p.funder_ranking.assign(counts.begin(), counts.end());
  std::sort(p.funder_ranking.begin(), p.funder_ranking.end(),
            [](const auto& a, const auto& b) {
              return a.second != b.second ? a.second > b.second
                                          : a.first < b.first;
            });
  return p;
}

QuartileDistribution::QuartileDistribution() {
  counts = {{"Q1", 0}, {"Q2", 0}, {"Q3", 0}, {"Q4", 0}, {"Unranked", 0}};
}

int QuartileDistribution::total() const {
  int t = 0;
  for (const auto& [k, v] : counts) t += v;
  return t;
}

std::vector<std::string> categories_for(const PublicationRecord& pub,
                                        const JournalMetricsTable* metrics,
                                        const Config& config) {
  if (!metrics || !pub.venue_id) return {};
  int edition = config.edition_for(pub.year, *metrics);
  return metrics->categories_of(*pub.venue_id, config.visibility_metric,
                                edition);
}

VisibilityProfile visibility_profile(const Corpus& corpus,
                                     const JournalMetricsTable& metrics,
                                     const std::vector<TopJournalList>& lists,
                                     const Config& config) {
  VisibilityProfile p;
  const Window full = config.window;
  auto [h1, h2] = halves(full);

  int total = 0, english = 0, open_access = 0;
  std::map<std::string, int> per_source;
  struct JAcc {
    std::string name;
    int items = 0;
    int citations = 0;
  };
  std::map<std::string, JAcc> journals;
  std::string primary = config.primary_source_for(corpus);

  for (const auto& pub : corpus.focal_pubs) {
    if (!full.contains(pub.year)) continue;
    ++total;
    if (text::to_lower(pub.language).rfind("en", 0) == 0) ++english;
    if (pub.open_access) ++open_access;
    for (const auto& [src, id] : pub.source_ids) ++per_source[src];
    for (const auto& [src, n] : pub.times_cited)
      if (!pub.source_ids.count(src)) ++per_source[src];

    std::optional<Quartile> q;
    if (pub.has_venue()) {
      std::string jid =
          pub.venue_id ? *pub.venue_id : text::normalize(pub.venue_name);
      auto& acc = journals[jid];
      if (acc.name.empty())
        acc.name = pub.venue_name.empty() ? jid : pub.venue_name;
      ++acc.items;
      acc.citations += pub.citations(primary);

      int edition = config.edition_for(pub.year, metrics);
      try {
        q = best_quartile(jid, config.visibility_metric, edition, metrics)
                .quartile;
      } catch (const LookupError&) {
        q = std::nullopt;  // Unranked
      }
      std::string bucket = q ? std::string(to_string(*q)) : "Unranked";
      ++p.full_window.counts[bucket];
      if (h1.contains(pub.year)) ++p.first_half.counts[bucket];
      if (h2.contains(pub.year)) ++p.second_half.counts[bucket];

      for (const auto& list : lists)
        if (list.journal_ids.count(jid)) ++p.top_list_counts[list.name];
    }
  }

  for (const auto& [src, n] : per_source)
    p.coverage[src] = make_count_percent(n, total);
  p.english = make_count_percent(english, total);
  p.open_access = make_count_percent(open_access, total);
  for (const auto& list : lists)
    p.top_list_counts.emplace(list.name, 0);  // keep zero-count lists visible

  for (const auto& [jid, acc] : journals) {
    JournalTableRow row;
    row.journal_id = jid;
    row.journal_name = acc.name;
    row.items = acc.items;
    row.citations = acc.citations;
    int edition = config.edition_for(full.end, metrics);
    if (const auto* mr =
            metrics.find(jid, config.visibility_metric, edition)) {
      row.metric_value = mr->value;
      row.quartile =
          best_quartile(jid, config.visibility_metric, edition, metrics)
              .quartile;
    }
    p.journal_table.push_back(row);
  }
  std::sort(p.journal_table.begin(), p.journal_table.end(),
            [](const JournalTableRow& a, const JournalTableRow& b) {
              if (a.items != b.items) return a.items > b.items;
              if (a.citations != b.citations) return a.citations > b.citations;
              return a.journal_id < b.journal_id;
            });
  return p;
}

std::string_view to_string(Scope s) {
  return s == Scope::CitableItems ? "CitableItems" : "AllItems";
}

SelfCitationResult self_citation_rate(const Corpus& corpus, Scope scope,
                                      double usual_max) {
  SelfCitationResult r;
  for (const auto& e : corpus.edges) {
    const PublicationRecord* cited = corpus.find(e.cited_id);
    const PublicationRecord* citing = corpus.find(e.citing_id);
    if (!cited || !citing) continue;
    if (scope == Scope::CitableItems && !is_citable(cited->doc_type)) continue;
    ++r.total_edges;
    bool self = false;
    for (const auto& a : citing->authors) {
      for (const auto& b : cited->authors)
        if (same_author(a, b)) {
          self = true;
          break;
        }
      if (self) break;
    }
    if (self) ++r.self_edges;
  }
  r.rate = r.total_edges > 0 ? double(r.self_edges) / r.total_edges : 0.0;
  r.elevated = r.rate > usual_max;
  return r;
}

double cnci(const PublicationRecord& pub, int citations,
            const std::vector<std::string>& categories,
            const BaselineTable& baselines) {
  double expected =
      expected_citations(categories, pub.year, pub.doc_type, baselines);
  if (expected <= 0.0)
    throw LookupError("baseline expectation is zero for record '" + pub.id +
                      "'");
  return double(citations) / expected;
}

ImpactProfile impact_profile(const Corpus& corpus,
                             const JournalMetricsTable* metrics,
                             const BaselineTable* baselines,
                             const Config& config, Scope scope) {
  ImpactProfile p;
  p.scope = scope;
  std::string primary = config.primary_source_for(corpus);

  std::vector<const PublicationRecord*> pubs;
  for (const auto& pub : corpus.focal_pubs) {
    if (scope == Scope::CitableItems && !is_citable(pub.doc_type)) continue;
    if (config.window.start != 0 && !config.window.contains(pub.year)) continue;
    pubs.push_back(&pub);
  }
  p.pub_count = int(pubs.size());

  std::vector<int> counts;
  counts.reserve(pubs.size());
  int cited = 0;
  for (const auto* pub : pubs) {
    int c = pub->citations(primary);
    counts.push_back(c);
    p.total_citations += c;
    p.max_citations = std::max(p.max_citations, c);
    if (c > 0) ++cited;
    if (!p.first_pub_year || pub->year < *p.first_pub_year)
      p.first_pub_year = pub->year;
  }
  p.cited = make_count_percent(cited, p.pub_count);
  p.mean_citations =
      p.pub_count > 0 ? double(p.total_citations) / p.pub_count : 0.0;
  p.citations_per_cited_doc =
      cited > 0 ? double(p.total_citations) / cited : 0.0;
  if (config.impact_report_stddev && p.pub_count > 0) {
    double var = 0.0;
    for (int c : counts) var += (c - p.mean_citations) * (c - p.mean_citations);
    p.stddev_citations = std::sqrt(var / p.pub_count);
  }

  p.h = h_index(counts);
  p.g = g_index(counts);
  for (int t : config.i_thresholds) p.i_indices[t] = i_index(counts, t);
  int ref_year = config.window.end != 0 ? config.window.end
                                        : (p.first_pub_year ? *p.first_pub_year
                                                            : 0);
  if (p.first_pub_year) p.m_quotient = m_quotient(p.h, *p.first_pub_year, ref_year);
  p.self_citation = self_citation_rate(corpus, scope, config.selfcite_usual_max);

  if (baselines && !baselines->empty()) {
    double cnci_sum = 0.0;
    int top10 = 0, top1 = 0;
    for (std::size_t i = 0; i < pubs.size(); ++i) {
      const auto* pub = pubs[i];
      auto categories = categories_for(*pub, metrics, config);
      if (categories.empty()) {
        p.excluded_from_cnci.push_back(pub->id);
        p.warnings.push_back({"cnci-excluded", pub->id,
                              "no category assignment for venue; excluded "
                              "from CNCI and Top-k"});
        continue;
      }
      try {
        cnci_sum += cnci(*pub, counts[i], categories, *baselines);
        auto flags = percentile_flags(counts[i], categories, pub->year,
                                      pub->doc_type, *baselines);
        if (flags.top10) ++top10;
        if (flags.top1) ++top1;
        ++p.cnci_evaluated;
      } catch (const LookupError& e) {
        p.excluded_from_cnci.push_back(pub->id);
        p.warnings.push_back({"cnci-excluded", pub->id, e.what()});
      }
    }
    p.cnci_mean = p.cnci_evaluated > 0 ? cnci_sum / p.cnci_evaluated : 0.0;
    p.top10 = make_count_percent(top10, p.cnci_evaluated);
    p.top1 = make_count_percent(top1, p.cnci_evaluated);
  }
  return p;
}

}  // namespace biblio
