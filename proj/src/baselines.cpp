#include "biblio/baselines.hpp"

#include <algorithm>
#include <fstream>

#include "biblio/corpus.hpp"
#include "biblio/csv.hpp"

namespace biblio {

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::IF: return "IF";
    case Metric::IF5: return "IF5";
    case Metric::AIS: return "AIS";
    case Metric::SJR: return "SJR";
    case Metric::SNIP: return "SNIP";
  }
  return "IF";
}

std::optional<Metric> metric_from_string(std::string_view name) {
  if (name == "IF") return Metric::IF;
  if (name == "IF5") return Metric::IF5;
  if (name == "AIS") return Metric::AIS;
  if (name == "SJR") return Metric::SJR;
  if (name == "SNIP") return Metric::SNIP;
  return std::nullopt;
}

std::string_view to_string(Quartile q) {
  switch (q) {
    case Quartile::Q1: return "Q1";
    case Quartile::Q2: return "Q2";
    case Quartile::Q3: return "Q3";
    case Quartile::Q4: return "Q4";
  }
  return "Q4";
}

JournalMetricsTable JournalMetricsTable::load_csv(
    const std::filesystem::path& path) {
  JournalMetricsTable t;
  csv::for_each_row(path, ',', [&](const std::vector<std::string>& f, int line) {
    auto where = path.string() + ":" + std::to_string(line);
    if (f.size() != 5)
      throw ParseError(
          where + ": expected journal_id,edition_year,metric,value,categories");
    if (f[0] == "journal_id") return;  // header
    JournalMetricRow row;
    row.journal_id = f[0];
    row.edition_year = std::stoi(f[1]);
    auto m = metric_from_string(f[2]);
    if (!m) throw ParseError(where + ": unknown metric '" + f[2] + "'");
    row.metric = *m;
    row.value = std::stod(f[3]);
    if (row.value < 0) throw ParseError(where + ": negative metric value");
    for (const auto& c : csv::split(f[4], ';'))
      if (!c.empty()) row.categories.push_back(c);
    if (row.categories.empty())
      throw ParseError(where + ": row needs at least one category");
    t.add(std::move(row));
  });
  return t;
}

void JournalMetricsTable::add(JournalMetricRow row) {
  if (find(row.journal_id, row.metric, row.edition_year))
    throw ParseError("duplicate journal metrics row for '" + row.journal_id +
                     "'");
  by_journal_[row.journal_id].push_back(rows_.size());
  rows_.push_back(std::move(row));
}

const JournalMetricRow* JournalMetricsTable::find(const std::string& journal_id,
                                                  Metric metric,
                                                  int edition_year) const {
  auto it = by_journal_.find(journal_id);
  if (it == by_journal_.end()) return nullptr;
  for (std::size_t i : it->second) {
    const auto& r = rows_[i];
    if (r.metric == metric && r.edition_year == edition_year) return &r;
  }
  return nullptr;
}

bool JournalMetricsTable::has_journal(const std::string& journal_id) const {
  return by_journal_.count(journal_id) > 0;
}

std::vector<std::string> JournalMetricsTable::categories_of(
    const std::string& journal_id, Metric metric, int edition_year) const {
  const auto* r = find(journal_id, metric, edition_year);
  return r ? r->categories : std::vector<std::string>{};
}

std::vector<std::string> JournalMetricsTable::categories_any(
    const std::string& journal_id) const {
  std::set<std::string> cats;
  auto it = by_journal_.find(journal_id);
  if (it == by_journal_.end()) return {};
  for (std::size_t i : it->second)
    cats.insert(rows_[i].categories.begin(), rows_[i].categories.end());
  return {cats.begin(), cats.end()};
}

std::vector<std::pair<std::string, double>> JournalMetricsTable::category_values(
    const std::string& category, Metric metric, int edition_year) const {
  std::vector<std::pair<std::string, double>> out;
  for (const auto& r : rows_) {
    if (r.metric != metric || r.edition_year != edition_year) continue;
    if (std::find(r.categories.begin(), r.categories.end(), category) !=
        r.categories.end())
      out.emplace_back(r.journal_id, r.value);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int JournalMetricsTable::latest_edition(Metric metric) const {
  int latest = 0;
  for (const auto& r : rows_)
    if (r.metric == metric) latest = std::max(latest, r.edition_year);
  return latest;
}

QuartileAssignment quartile_of(const std::string& journal_id,
                               const std::string& category, Metric metric,
                               int edition_year,
                               const JournalMetricsTable& table) {
  const auto* row = table.find(journal_id, metric, edition_year);
  if (!row)
    throw LookupError("journal '" + journal_id + "' has no " +
                      std::string(to_string(metric)) + " row for edition " +
                      std::to_string(edition_year));
  if (std::find(row->categories.begin(), row->categories.end(), category) ==
      row->categories.end())
    throw LookupError("journal '" + journal_id + "' not in category '" +
                      category + "'");
  auto values = table.category_values(category, metric, edition_year);
  int n = int(values.size());
  // competition ranking: tied values share the best rank of the block
  int rank = 1;
  for (const auto& [id, v] : values)
    if (v > row->value) ++rank;
  QuartileAssignment a;
  a.journal_id = journal_id;
  a.category = category;
  a.metric = metric;
  a.edition_year = edition_year;
  a.rank = rank;
  a.category_size = n;
  a.quartile = Quartile((4 * rank + n - 1) / n);
  return a;
}

QuartileAssignment best_quartile(const std::string& journal_id, Metric metric,
                                 int edition_year,
                                 const JournalMetricsTable& table) {
  auto categories = table.categories_of(journal_id, metric, edition_year);
  if (categories.empty())
    throw LookupError("journal '" + journal_id + "' unknown for " +
                      std::string(to_string(metric)) + " edition " +
                      std::to_string(edition_year));
  std::optional<QuartileAssignment> best;
  for (const auto& cat : categories) {
    QuartileAssignment a = quartile_of(journal_id, cat, metric, edition_year,
                                       table);
    if (!best) {
      best = a;
      continue;
    }
    double ra = double(a.rank) / a.category_size;
    double rb = double(best->rank) / best->category_size;
    if (a.quartile < best->quartile ||
        (a.quartile == best->quartile &&
         (ra < rb || (ra == rb && a.category < best->category))))
      best = a;
  }
  return *best;
}

BaselineTable BaselineTable::load_csv(const std::filesystem::path& path) {
  BaselineTable t;
  csv::for_each_row(path, ',', [&](const std::vector<std::string>& f, int line) {
    auto where = path.string() + ":" + std::to_string(line);
    if (f.size() != 6)
      throw ParseError(where +
                       ": expected category,pub_year,doc_type,expected,p90,p99");
    if (f[0] == "category") return;  // header
    BaselineRow row;
    row.category = f[0];
    row.pub_year = std::stoi(f[1]);
    row.doc_type = normalize_doc_type(f[2]);
    row.expected = std::stod(f[3]);
    row.p90 = std::stod(f[4]);
    row.p99 = std::stod(f[5]);
    if (row.expected < 0 || row.p90 < 0 || row.p99 < row.p90)
      throw ParseError(where + ": thresholds must satisfy 0 <= p90 <= p99");
    t.add(std::move(row));
  });
  return t;
}

void BaselineTable::add(BaselineRow row) {
  auto key = std::make_tuple(row.category, row.pub_year, int(row.doc_type));
  if (index_.count(key))
    throw ParseError("duplicate baseline row for category '" + row.category +
                     "' year " + std::to_string(row.pub_year));
  index_[key] = rows_.size();
  rows_.push_back(std::move(row));
}

const BaselineRow* BaselineTable::find(const std::string& category,
                                       int pub_year, DocType doc_type) const {
  auto it = index_.find(std::make_tuple(category, pub_year, int(doc_type)));
  return it == index_.end() ? nullptr : &rows_[it->second];
}

double expected_citations(const std::vector<std::string>& categories,
                          int pub_year, DocType doc_type,
                          const BaselineTable& table) {
  if (categories.empty())
    throw LookupError("expected_citations needs at least one category");
  double sum = 0.0;
  for (const auto& cat : categories) {
    const auto* row = table.find(cat, pub_year, doc_type);
    if (!row)
      throw LookupError("missing baseline row (" + cat + ", " +
                        std::to_string(pub_year) + ", " +
                        std::string(to_string(doc_type)) + ")");
    sum += row->expected;
  }
  return sum / double(categories.size());
}

PercentileFlags percentile_flags(int citations,
                                 const std::vector<std::string>& categories,
                                 int pub_year, DocType doc_type,
                                 const BaselineTable& table) {
  if (categories.empty())
    throw LookupError("percentile_flags needs at least one category");
  double min_p90 = 0.0, min_p99 = 0.0;
  bool first = true;
  for (const auto& cat : categories) {
    const auto* row = table.find(cat, pub_year, doc_type);
    if (!row)
      throw LookupError("missing baseline row (" + cat + ", " +
                        std::to_string(pub_year) + ", " +
                        std::string(to_string(doc_type)) + ")");
    if (first || row->p90 < min_p90) min_p90 = row->p90;
    if (first || row->p99 < min_p99) min_p99 = row->p99;
    first = false;
  }
  PercentileFlags f;
  f.top10 = double(citations) >= min_p90;
  f.top1 = double(citations) >= min_p99;
  if (f.top1) f.top10 = true;  // enforced even with inconsistent thresholds
  return f;
}

TopJournalList TopJournalList::load(const std::filesystem::path& path,
                                    const std::string& name) {
  TopJournalList list;
  list.name = name;
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open top-journal list: " + path.string());
  std::string line;
  while (std::getline(in, line)) {
    std::string t = csv::trim(line);
    if (t.empty() || t[0] == '#') continue;
    list.journal_ids.insert(t);
  }
  if (list.journal_ids.empty())
    throw ParseError("top-journal list '" + name + "' is empty");
  return list;
}

}  // namespace biblio
