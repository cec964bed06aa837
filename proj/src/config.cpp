#include "biblio/config.hpp"

#include <fstream>

#include "biblio/corpus.hpp"
#include "biblio/csv.hpp"
#include "biblio/text.hpp"

namespace biblio {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Flattens nested objects to dotted keys so both config spellings work.
void flatten(const json& j, const std::string& prefix,
             std::map<std::string, json>& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it.value().is_object())
      flatten(it.value(), key, out);
    else
      out[key] = it.value();
  }
}

std::filesystem::path resolve(const std::filesystem::path& base,
                              const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() || base.empty() ? path : base / path;
}

}  // namespace

bool Config::section_enabled(const std::string& name) const {
  auto it = sections.find(name);
  return it == sections.end() ? true : it->second;
}

std::string Config::primary_source_for(const Corpus& corpus) const {
  if (!citation_primary_source.empty()) return citation_primary_source;
  auto names = corpus.source_names();
  return names.empty() ? std::string() : names.front();
}

int Config::edition_for(int pub_year, const JournalMetricsTable& table) const {
  if (visibility_multi_edition) return pub_year;
  if (visibility_edition_year > 0) return visibility_edition_year;
  return table.latest_edition(visibility_metric);
}

Config Config::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MissingTableError("cannot open config file: " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return from_json(j, path.parent_path());
}

Config Config::from_json(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  std::map<std::string, json> flat;
  flatten(j, "", flat);

  Config c;
  auto take = [&](const char* key) -> std::optional<json> {
    auto it = flat.find(key);
    if (it == flat.end()) return std::nullopt;
    json v = it->second;
    flat.erase(it);
    return v;
  };

  if (auto v = take("window.start")) c.window.start = v->get<int>();
  if (auto v = take("window.end")) c.window.end = v->get<int>();
  if (auto v = take("i_thresholds")) {
    c.i_thresholds.clear();
    for (const auto& t : *v) c.i_thresholds.push_back(t.get<int>());
  }
  if (auto v = take("visibility.metric")) {
    auto m = metric_from_string(v->get<std::string>());
    if (!m)
      throw ParseError("unknown visibility.metric '" + v->get<std::string>() +
                       "'");
    c.visibility_metric = *m;
  }
  if (auto v = take("visibility.edition_year"))
    c.visibility_edition_year = v->get<int>();
  if (auto v = take("visibility.multi_edition"))
    c.visibility_multi_edition = v->get<bool>();
  if (auto v = take("citation.primary_source"))
    c.citation_primary_source = v->get<std::string>();
  if (auto v = take("selfcite.usual_max")) c.selfcite_usual_max = v->get<double>();
  if (auto v = take("dependence.flag_min"))
    c.dependence_flag_min = v->get<double>();
  if (auto v = take("alphabetical.suppress_min"))
    c.alphabetical_suppress_min = v->get<double>();
  if (auto v = take("cooperation.max_rows"))
    c.cooperation_max_rows = v->get<int>();
  if (auto v = take("focus.min_occurrences"))
    c.focus_min_occurrences = v->get<int>();
  if (auto v = take("focus.keep_fraction"))
    c.focus_keep_fraction = v->get<double>();
  if (auto v = take("focus.source")) {
    std::string s = v->get<std::string>();
    if (s == "TitleAbstract")
      c.focus_source = TermSource::TitleAbstract;
    else if (s == "Keywords")
      c.focus_source = TermSource::Keywords;
    else
      throw ParseError("unknown focus.source '" + s + "'");
  }
  if (auto v = take("field_half_life")) c.field_half_life = v->get<double>();
  if (auto v = take("knowledge.top_n")) c.knowledge_top_n = v->get<int>();
  if (auto v = take("impact.report_stddev"))
    c.impact_report_stddev = v->get<bool>();

  if (auto v = take("tables.metrics"))
    c.metrics_path = resolve(base_dir, v->get<std::string>());
  if (auto v = take("tables.baselines"))
    c.baselines_path = resolve(base_dir, v->get<std::string>());
  if (auto v = take("tables.doctype_aliases"))
    c.aliases_path = resolve(base_dir, v->get<std::string>());
  if (auto v = take("focus.stoplist"))
    c.stoplist_path = resolve(base_dir, v->get<std::string>());

  // sections.<name> and tables.top_lists.<name> remain in `flat`
  for (auto it = flat.begin(); it != flat.end();) {
    const std::string& key = it->first;
    if (key.rfind("sections.", 0) == 0) {
      c.sections[key.substr(9)] = it->second.get<bool>();
      it = flat.erase(it);
    } else if (key.rfind("tables.top_lists.", 0) == 0) {
      c.top_list_paths[key.substr(17)] =
          resolve(base_dir, it->second.get<std::string>());
      it = flat.erase(it);
    } else {
      throw ParseError("unknown config key '" + key + "'");
    }
  }

  if (!c.stoplist_path.empty()) {
    std::ifstream in(c.stoplist_path);
    if (!in)
      throw MissingTableError("cannot open stoplist: " +
                              c.stoplist_path.string());
    std::string line;
    while (std::getline(in, line)) {
      std::string t = csv::trim(line);
      if (!t.empty() && t[0] != '#') c.stopwords.insert(text::normalize(t));
    }
  } else {
    c.stopwords = default_stopwords();
  }
  return c;
}

ordered_json Config::to_json() const {
  ordered_json j;
  j["window"] = {{"start", window.start}, {"end", window.end}};
  j["i_thresholds"] = i_thresholds;
  j["visibility"] = {{"metric", std::string(to_string(visibility_metric))},
                     {"edition_year", visibility_edition_year},
                     {"multi_edition", visibility_multi_edition}};
  j["citation"] = {{"primary_source", citation_primary_source}};
  j["selfcite"] = {{"usual_max", selfcite_usual_max}};
  j["dependence"] = {{"flag_min", dependence_flag_min}};
  j["alphabetical"] = {{"suppress_min", alphabetical_suppress_min}};
  j["cooperation"] = {{"max_rows", cooperation_max_rows}};
  j["focus"] = {{"min_occurrences", focus_min_occurrences},
                {"keep_fraction", focus_keep_fraction},
                {"source", focus_source == TermSource::Keywords
                               ? "Keywords"
                               : "TitleAbstract"}};
  if (field_half_life) j["field_half_life"] = *field_half_life;
  j["knowledge"] = {{"top_n", knowledge_top_n}};
  if (!sections.empty()) {
    ordered_json s;
    for (const auto& [name, on] : sections) s[name] = on;
    j["sections"] = s;
  }
  return j;
}

const std::set<std::string>& Config::default_stopwords() {
  static const std::set<std::string> kWords = {
      "a",    "an",   "and",  "are",  "as",    "at",    "be",   "been",
      "but",  "by",   "can",  "for",  "from",  "has",   "have", "in",
      "into", "is",   "it",   "its",  "more",  "most",  "new",  "no",
      "not",  "of",   "on",   "or",   "our",   "over",  "such", "than",
      "that", "the",  "their", "these", "this", "those", "to",  "under",
      "use",  "used", "using", "was",  "we",    "were",  "which", "with"};
  return kWords;
}

}  // namespace biblio
