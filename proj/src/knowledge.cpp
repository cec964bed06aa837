#include "biblio/knowledge.hpp"

#include <algorithm>

#include "biblio/text.hpp"

namespace biblio {

namespace {

double median_of(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

std::vector<std::string> top_identities(std::span<const CitedReference> refs,
                                        int top_n) {
  std::map<std::string, int> counts;
  for (const auto& r : refs) {
    std::string id = r.identity();
    if (!id.empty()) ++counts[id];
  }
  std::vector<std::pair<std::string, int>> ranked(counts.begin(), counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  std::vector<std::string> top;
  for (const auto& [id, n] : ranked) {
    if (int(top.size()) >= top_n) break;
    top.push_back(id);
  }
  return top;
}

}  // namespace

ReferenceStats reference_stats(std::span<const PublicationRecord> pubs,
                               std::optional<double> field_half_life) {
  ReferenceStats s;
  s.field_half_life = field_half_life;
  std::map<RefType, int> type_counts;
  std::map<std::string, int> source_counts;
  std::vector<int> ages;
  for (const auto& pub : pubs) {
    for (const auto& r : pub.references) {
      ++s.total_refs;
      ++type_counts[r.ref_type];
      if (r.year) {
        ++s.year_histogram[*r.year];
        ages.push_back(pub.year - *r.year);
      } else {
        ++s.undated;
      }
      if (r.source_name && !r.source_name->empty())
        ++source_counts[*r.source_name];
    }
  }
  if (s.total_refs > 0)
    for (const auto& [t, n] : type_counts)
      s.type_shares[t] = double(n) / s.total_refs;
  if (!ages.empty()) s.median_age = median_of(std::move(ages));
  s.source_ranking.assign(source_counts.begin(), source_counts.end());
  std::sort(s.source_ranking.begin(), s.source_ranking.end(),
            [](const auto& a, const auto& b) {
              return a.second != b.second ? a.second > b.second
                                          : a.first < b.first;
            });
  return s;
}

VenueOverlap venue_overlap(const Corpus& corpus, int top_n) {
  VenueOverlap v;
  for (const auto& pub : corpus.focal_pubs) {
    std::string name = text::normalize(pub.venue_name);
    if (!name.empty()) v.publishing_venues.insert(name);
  }
  std::map<std::string, int> cited_counts;
  for (const auto& pub : corpus.focal_pubs)
    for (const auto& r : pub.references)
      if (r.source_name) {
        std::string name = text::normalize(*r.source_name);
        if (!name.empty()) ++cited_counts[name];
      }
  std::vector<std::pair<std::string, int>> ranked(cited_counts.begin(),
                                                  cited_counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  for (const auto& [name, n] : ranked) {
    if (int(v.top_cited_venues.size()) >= top_n) break;
    v.top_cited_venues.insert(name);
  }
  for (const auto& name : v.top_cited_venues)
    if (v.publishing_venues.count(name)) v.overlap.insert(name);
  v.overlap_ratio = v.top_cited_venues.empty()
                        ? 0.0
                        : double(v.overlap.size()) / v.top_cited_venues.size();
  return v;
}

std::vector<PeerReferenceComparison> peer_reference_comparison(
    std::span<const CitedReference> focal_refs,
    const std::vector<std::pair<std::string, std::vector<CitedReference>>>&
        peer_refs,
    int top_n) {
  std::vector<std::string> focal_top = top_identities(focal_refs, top_n);
  std::set<std::string> focal_set(focal_top.begin(), focal_top.end());

  std::vector<PeerReferenceComparison> out;
  for (const auto& [peer, refs] : peer_refs) {
    PeerReferenceComparison cmp;
    cmp.peer = peer;
    cmp.focal_top = focal_top;
    cmp.peer_top = top_identities(refs, top_n);
    std::set<std::string> peer_set(cmp.peer_top.begin(), cmp.peer_top.end());
    for (const auto& id : focal_top) {
      if (peer_set.count(id))
        cmp.intersection.push_back(id);
      else
        cmp.focal_only.push_back(id);
    }
    for (const auto& id : cmp.peer_top)
      if (!focal_set.count(id)) cmp.peer_only.push_back(id);
    out.push_back(std::move(cmp));
  }
  return out;
}

}  // namespace biblio
