#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "biblio/types.hpp"

namespace biblio {

struct ReferenceStats {
  int total_refs = 0;
  int undated = 0;  // refs without a year; counted in totals only
  std::map<RefType, double> type_shares;     // sum to 1 when total_refs > 0
  std::map<int, int> year_histogram;         // reference publication years
  std::optional<double> median_age;          // citing year - reference year
  std::optional<double> field_half_life;     // config-supplied comparison value
  std::vector<std::pair<std::string, int>> source_ranking;  // count desc, name
};

ReferenceStats reference_stats(std::span<const PublicationRecord> pubs,
                               std::optional<double> field_half_life);

struct VenueOverlap {
  std::set<std::string> publishing_venues;  // normalized names
  std::set<std::string> top_cited_venues;   // top N cited sources, normalized
  std::set<std::string> overlap;
  double overlap_ratio = 0.0;  // |overlap| / |top_cited_venues|
};

VenueOverlap venue_overlap(const Corpus& corpus, int top_n);

struct PeerReferenceComparison {
  std::string peer;
  std::vector<std::string> focal_top;   // top_n most-cited focal references
  std::vector<std::string> peer_top;
  std::vector<std::string> intersection;
  std::vector<std::string> focal_only;
  std::vector<std::string> peer_only;
};

/// Top-cited reference identities of each side compared per peer.
std::vector<PeerReferenceComparison> peer_reference_comparison(
    std::span<const CitedReference> focal_refs,
    const std::vector<std::pair<std::string, std::vector<CitedReference>>>&
        peer_refs,
    int top_n);

}  // namespace biblio
