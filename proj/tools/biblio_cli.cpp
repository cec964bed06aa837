// Command-line front end: validation, coverage matching, report
// generation, graph export, focus/field/peer analyses.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "biblio/corpus.hpp"
#include "biblio/focus.hpp"
#include "biblio/knowledge.hpp"
#include "biblio/reporting.hpp"

namespace fs = std::filesystem;
using namespace biblio;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitMissingTable = 2;

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path().empty() ? "."
                                                    : path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

DocTypeAliases aliases_for(const Config& config) {
  DocTypeAliases aliases = DocTypeAliases::defaults();
  if (!config.aliases_path.empty()) aliases.load_csv(config.aliases_path);
  return aliases;
}

struct LoadedInputs {
  JournalMetricsTable metrics;
  bool have_metrics = false;
  BaselineTable baselines;
  std::vector<TopJournalList> top_lists;

  ReportInputs view() const {
    ReportInputs in;
    in.metrics = have_metrics ? &metrics : nullptr;
    in.baselines = baselines.empty() ? nullptr : &baselines;
    in.top_lists = top_lists;
    return in;
  }
};

LoadedInputs load_tables(const Config& config) {
  LoadedInputs in;
  if (!config.metrics_path.empty()) {
    in.metrics = JournalMetricsTable::load_csv(config.metrics_path);
    in.have_metrics = true;
  }
  if (!config.baselines_path.empty())
    in.baselines = BaselineTable::load_csv(config.baselines_path);
  for (const auto& [name, path] : config.top_list_paths)
    in.top_lists.push_back(TopJournalList::load(path, name));
  return in;
}

void write_graphs(const std::map<std::string, Graph>& graphs,
                  const fs::path& out_dir, const std::string& rid,
                  GraphFormat format) {
  std::string ext = format == GraphFormat::DOT ? ".dot" : ".graphml";
  for (const auto& [name, g] : graphs)
    write_file(out_dir / (rid + "." + name + ext), export_graph(g, format));
}

nlohmann::ordered_json coverage_json(const CoverageResult& r,
                                     const std::vector<Issue>& warnings) {
  nlohmann::ordered_json j;
  j["source_name"] = r.source_name;
  j["total_master"] = r.total_master;
  j["matched"] = r.matched;
  j["percent"] = r.percent;
  j["unmatched_ids"] = r.unmatched_ids;
  nlohmann::ordered_json warn = nlohmann::ordered_json::array();
  for (const auto& w : warnings)
    warn.push_back({{"code", w.code},
                    {"record_id", w.record_id},
                    {"message", w.message}});
  j["warnings"] = warn;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Individual bibliometric profile engine"};
  app.require_subcommand(1);

  std::string corpus_path, config_path, out_dir, format_name, source_name;
  std::string master_path, export_path, primary_source, out_file;
  std::vector<std::string> peer_paths;

  auto* validate_cmd = app.add_subcommand("validate", "Parse and check a corpus");
  validate_cmd->add_option("corpus", corpus_path)->required();
  validate_cmd->add_option("--primary-source", primary_source,
                           "Source for cited-count consistency checks");

  auto* coverage_cmd =
      app.add_subcommand("coverage", "Match a publication list to an export");
  coverage_cmd->add_option("master", master_path)->required();
  coverage_cmd->add_option("export", export_path)->required();
  coverage_cmd->add_option("--source", source_name)->required();

  auto* report_cmd = app.add_subcommand("report", "Build the full report");
  report_cmd->add_option("corpus", corpus_path)->required();
  report_cmd->add_option("--config", config_path)->required();
  report_cmd->add_option("--out", out_dir)->required();
  report_cmd->add_option("--format", format_name)
      ->default_val("structured")
      ->check(CLI::IsMember({"structured", "markdown"}));

  auto* graphs_cmd = app.add_subcommand("graphs", "Export the analysis graphs");
  graphs_cmd->add_option("corpus", corpus_path)->required();
  graphs_cmd->add_option("--config", config_path);
  graphs_cmd->add_option("--out", out_dir)->required();
  graphs_cmd->add_option("--format", format_name)
      ->default_val("dot")
      ->check(CLI::IsMember({"dot", "graphml"}));

  auto* focus_cmd = app.add_subcommand("focus", "Term extraction and term map");
  focus_cmd->add_option("corpus", corpus_path)->required();
  focus_cmd->add_option("--config", config_path);
  focus_cmd->add_option("--out", out_dir)->required();

  auto* compare_cmd = app.add_subcommand("compare", "Peer comparison");
  compare_cmd->add_option("corpus", corpus_path)->required();
  compare_cmd->add_option("--peer", peer_paths)->required();
  compare_cmd->add_option("--config", config_path);
  compare_cmd->add_option("--out", out_dir)->required();

  auto* field_cmd =
      app.add_subcommand("field", "Key actors and bibliographic coupling");
  field_cmd->add_option("corpus", corpus_path)->required();
  field_cmd->add_option("--config", config_path);
  field_cmd->add_option("--out", out_dir)->required();

  auto* interview_cmd =
      app.add_subcommand("interview-template", "Write the questionnaire");
  interview_cmd->add_option("--out", out_file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    Config config;
    if (!config_path.empty()) config = Config::load(config_path);

    if (interview_cmd->parsed()) {
      write_file(out_file, interview_template());
      std::cout << "wrote " << out_file << "\n";
      return kExitOk;
    }

    if (validate_cmd->parsed()) {
      Corpus corpus = load_corpus(corpus_path, aliases_for(config));
      std::string src = primary_source;
      if (src.empty()) {
        auto names = corpus.source_names();
        if (!names.empty()) src = names.front();
      }
      auto issues = validate_corpus(corpus, src);
      for (const auto& i : issues)
        std::cout << "[" << i.code << "] "
                  << (i.record_id.empty() ? "" : i.record_id + ": ")
                  << i.message << "\n";
      std::cout << "corpus ok: " << corpus.focal_pubs.size() << " focal, "
                << corpus.citing_pubs.size() << " citing, "
                << corpus.edges.size() << " edges, " << issues.size()
                << " warning(s)\n";
      return kExitOk;
    }

    if (coverage_cmd->parsed()) {
      auto aliases = aliases_for(config);
      Corpus master = load_corpus(master_path, aliases);
      Corpus exported = load_corpus(export_path, aliases);
      std::vector<Issue> warnings;
      CoverageResult r = match_publication_list(
          master.focal_pubs, exported.focal_pubs, source_name, &warnings);
      std::cout << coverage_json(r, warnings).dump(2) << "\n";
      return kExitOk;
    }

    Corpus corpus = load_corpus(corpus_path, aliases_for(config));
    std::string rid = report_id(corpus);

    if (report_cmd->parsed()) {
      LoadedInputs tables = load_tables(config);
      ReportDocument report = build_report(corpus, tables.view(), config);
      bool markdown = format_name == "markdown";
      fs::path out = fs::path(out_dir) /
                     (rid + (markdown ? ".report.md" : ".report.json"));
      write_file(out, render(report, markdown ? RenderFormat::Markdown
                                              : RenderFormat::Structured));
      write_graphs(report_graphs(corpus, config), out_dir, rid,
                   GraphFormat::DOT);
      std::cout << "wrote " << out.string() << "\n";
      return kExitOk;
    }

    if (graphs_cmd->parsed()) {
      GraphFormat fmt =
          format_name == "graphml" ? GraphFormat::GraphML : GraphFormat::DOT;
      write_graphs(report_graphs(corpus, config), out_dir, rid, fmt);
      std::cout << "wrote graphs for " << rid << " to " << out_dir << "\n";
      return kExitOk;
    }

    if (focus_cmd->parsed()) {
      auto terms = extract_terms(corpus.focal_pubs, config.focus_source,
                                 config.stopwords);
      auto selected = select_terms(std::move(terms), corpus.focal_pubs,
                                   config.primary_source_for(corpus),
                                   config.focus_min_occurrences,
                                   config.focus_keep_fraction);
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& t : selected)
        arr.push_back({{"term", t.term},
                       {"occurrences", t.occurrences},
                       {"relevance", t.relevance}});
      write_file(fs::path(out_dir) / (rid + ".terms.json"),
                 arr.dump(2) + "\n");
      write_file(fs::path(out_dir) / (rid + ".term_map.dot"),
                 export_graph(term_cooccurrence_map(corpus.focal_pubs,
                                                    selected),
                              GraphFormat::DOT));
      std::cout << "wrote focus outputs for " << rid << "\n";
      return kExitOk;
    }

    if (field_cmd->parsed()) {
      LoadedInputs tables = load_tables(config);
      auto in = tables.view();
      KeyActors actors =
          key_actors(corpus.focal_pubs, in.metrics, in.baselines, config);
      nlohmann::ordered_json j;
      j["authors"] = nlohmann::ordered_json::array();
      for (const auto& [n, c] : actors.authors)
        j["authors"].push_back({{"name", n}, {"count", c}});
      j["institutions"] = nlohmann::ordered_json::array();
      for (const auto& [n, c] : actors.institutions)
        j["institutions"].push_back({{"name", n}, {"count", c}});
      j["funders"] = nlohmann::ordered_json::array();
      for (const auto& [n, c] : actors.funders)
        j["funders"].push_back({{"name", n}, {"count", c}});
      j["publications"] = nlohmann::ordered_json::array();
      for (const auto& p : actors.publications) {
        nlohmann::ordered_json r{{"id", p.id},
                                 {"title", p.title},
                                 {"citations", p.citations}};
        if (p.has_flags) {
          r["top10"] = p.top10;
          r["top1"] = p.top1;
        }
        j["publications"].push_back(r);
      }
      write_file(fs::path(out_dir) / (rid + ".key_actors.json"),
                 j.dump(2) + "\n");
      write_file(fs::path(out_dir) / (rid + ".coupling.dot"),
                 export_graph(bibliographic_coupling(corpus.focal_pubs),
                              GraphFormat::DOT));
      std::cout << "wrote field outputs for " << rid << "\n";
      return kExitOk;
    }

    if (compare_cmd->parsed()) {
      LoadedInputs tables = load_tables(config);
      std::vector<std::pair<std::string, Corpus>> peers;
      auto aliases = aliases_for(config);
      for (const auto& p : peer_paths) {
        Corpus peer = load_corpus(p, aliases);
        peers.emplace_back(peer.focal_author.display_name, std::move(peer));
      }
      auto cmp = compare_peers(corpus, peers, tables.view(), config);
      write_file(fs::path(out_dir) / (rid + ".peer_comparison.json"),
                 cmp.dump(2) + "\n");
      std::cout << "wrote peer comparison for " << rid << "\n";
      return kExitOk;
    }
  } catch (const MissingTableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMissingTable;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
