#include "cli.hpp"

#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "refgraph/error.hpp"
#include "refgraph/history.hpp"
#include "refgraph/pipeline.hpp"
#include "refgraph/report.hpp"

namespace refgraph::cli {
namespace {

namespace fs = std::filesystem;

class ConfigError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::vector<std::string> records;
  std::vector<std::string> commit_logs;
  std::size_t min_commits = 2;
  std::optional<std::string> exclude_keywords;
  bool keep_constructors = false;
  std::string out = "refgraph-out";
  bool strict = false;
  std::optional<std::string> project_ages;
  std::optional<std::string> graph;
  std::optional<std::string> select;
  bool all = false;
};

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    out.push_back(item.substr(first, item.find_last_not_of(" \t") - first + 1));
  }
  return out;
}

RunConfig to_config(const Options& o) {
  if (o.min_commits < 1) throw ConfigError("--min-commits must be at least 1");
  RunConfig config;
  for (const auto& r : o.records) config.record_paths.emplace_back(r);
  for (const auto& spec : o.commit_logs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
      throw ConfigError("--commit-log expects <project>=<path>, got '" + spec + "'");
    }
    if (!config.commit_logs.emplace(spec.substr(0, eq), spec.substr(eq + 1)).second) {
      throw ConfigError("--commit-log given twice for project '" + spec.substr(0, eq) + "'");
    }
  }
  if (o.exclude_keywords) config.filters.excluded_package_keywords = split_csv(*o.exclude_keywords);
  config.filters.drop_constructors = !o.keep_constructors;
  config.min_commits = o.min_commits;
  config.out_dir = o.out;
  config.strict = o.strict;
  if (o.project_ages) config.project_ages = fs::path(*o.project_ages);
  return config;
}

PipelineRun load_run(const Options& o, const RunConfig& config) {
  if (o.graph && !o.records.empty()) throw ConfigError("use either --graph or --records, not both");
  if (o.graph) return run_from_dump(*o.graph, config.min_commits);
  if (o.records.empty()) throw ConfigError("one of --graph or --records is required");
  return run_pipeline(config);
}

void report_errors(const PipelineRun& run, std::ostream& err) {
  for (const auto& e : run.errors) err << "warning: " << e.source << ":" << e.line << ": " << e.message << "\n";
}

int cmd_build(const Options& o, std::ostream& out, std::ostream& err) {
  const auto config = to_config(o);
  if (o.records.empty()) throw ConfigError("--records is required");
  const auto run = run_pipeline(config);
  report_errors(run, err);
  const auto log = format_run_log(run);
  write_files(config.out_dir, {{"graph.json", write_graph_dump(project_graphs(run))}, {"run_log.txt", log}});
  out << log;
  return kSuccess;
}

int cmd_stats(const Options& o, std::ostream& out, std::ostream& err) {
  const auto config = to_config(o);
  const auto run = load_run(o, config);
  report_errors(run, err);

  AggregateOptions options;
  options.min_commits = config.min_commits;
  if (config.project_ages) options.project_ages = read_project_ages(*config.project_ages);
  const auto stats = aggregate(measure_projects(run), options);

  auto files = emit_tables(stats);
  files.push_back({"summary.json", emit_json_summary(stats)});
  if (run.from_records) files.push_back({"run_log.txt", format_run_log(run)});
  write_files(config.out_dir, files);

  out << "subgraphs=" << stats.subgraph_total.all << " kept=" << stats.kept_subgraphs << "\n";
  for (const auto& f : files) out << "wrote " << (config.out_dir / f.name).string() << "\n";
  return kSuccess;
}

int cmd_export(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.all == o.select.has_value()) throw ConfigError("export needs exactly one of --select or --all");
  const auto config = to_config(o);
  const auto run = load_run(o, config);
  report_errors(run, err);

  std::vector<OutputFile> files;
  for (const auto& project : run.projects) {
    std::set<std::string> used;
    const auto dir = fs::path("dot") / safe_file_name(project.project);
    for (const auto& sg : filter_multi_commit(project.subgraphs, config.min_commits).kept) {
      bool match = o.all || sg.id == *o.select;
      for (std::size_t i = 0; !match && i < sg.vertices.size(); ++i) {
        match = sg.vertices[i].canonical().find(*o.select) != std::string::npos;
      }
      if (!match) continue;
      auto name = safe_file_name(sg.id);
      for (int n = 2; !used.insert(name).second; ++n) name = safe_file_name(sg.id) + "~" + std::to_string(n);
      files.push_back({dir / (name + ".dot"), emit_dot(sg)});
    }
  }
  if (files.empty()) {
    throw ConfigError(o.all ? std::string("no subgraphs to export")
                            : "selector '" + *o.select + "' matches no subgraph");
  }
  write_files(config.out_dir, files);
  for (const auto& f : files) out << "wrote " << (config.out_dir / f.name).string() << "\n";
  return kSuccess;
}

void add_input_flags(CLI::App& cmd, Options& o, bool allow_graph) {
  cmd.add_option("--records", o.records, "Line-delimited refactoring records (one JSON object per line)");
  if (allow_graph) cmd.add_option("--graph", o.graph, "Graph dump written by `build` (instead of --records)");
  cmd.add_option("--commit-log", o.commit_logs,
                 "<project>=<path> first-parent commit log; produce it with\n"
                 "git log --first-parent --format='" + std::string(kGitLogFormat) + "'");
  cmd.add_option("--min-commits", o.min_commits, "Keep subgraphs spanning at least this many commits")
      ->capture_default_str();
  cmd.add_option("--exclude-keywords", o.exclude_keywords,
                 "Comma-separated package segments to exclude (default: test,tests,example,examples,sample,samples)");
  cmd.add_flag("--keep-constructors", o.keep_constructors, "Do not drop refactorings that touch constructors");
  cmd.add_option("--out", o.out, "Output directory")->capture_default_str();
  cmd.add_flag("--strict", o.strict, "Fail on the first malformed record line");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Build and characterize refactoring graphs from method-level refactoring records"};
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "Build refactoring graphs and write graph.json plus run_log.txt");
  add_input_flags(*build, o, false);

  auto* stats = app.add_subcommand("stats", "Write CSV tables and summary.json for the corpus");
  add_input_flags(*stats, o, true);
  stats->add_option("--project-ages", o.project_ages, "File of '<project>,<age>' lines for the age correlation");

  auto* exp = app.add_subcommand("export", "Write one Graphviz DOT file per selected subgraph");
  add_input_flags(*exp, o, true);
  exp->add_option("--select", o.select, "Subgraph id, or text contained in any vertex signature");
  exp->add_flag("--all", o.all, "Export every subgraph that passes --min-commits");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kConfigError;
  }

  try {
    if (build->parsed()) return cmd_build(o, out, err);
    if (stats->parsed()) return cmd_stats(o, out, err);
    return cmd_export(o, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace refgraph::cli
