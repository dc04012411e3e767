#include "refgraph/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <future>
#include <sstream>

#include "refgraph/error.hpp"
#include "refgraph/history.hpp"

namespace refgraph {
namespace {

ProjectRun process_project(std::string project, std::vector<RefactoringRecord> records,
                           const RunConfig& config, const CommitLog* log) {
  ProjectRun run;
  run.project = std::move(project);
  auto& counts = run.counts;
  counts.parsed = records.size();

  auto filtered = apply_filters(records, config.filters);
  counts.excluded = filtered.report;
  counts.after_filters = filtered.kept.size();

  std::vector<RefactoringRecord> on_branch;
  if (log != nullptr) {
    counts.has_commit_log = true;
    auto restricted = restrict_to_log(filtered.kept, *log);
    counts.off_branch = restricted.dropped_off_branch;
    counts.ambiguous_commit = restricted.errors.size();
    on_branch = std::move(restricted.kept);
  } else {
    on_branch = std::move(filtered.kept);
  }
  counts.on_branch = on_branch.size();

  run.graph = build(on_branch);
  run.subgraphs = partition(run.graph);
  counts.vertices = run.graph.vertex_count();
  counts.edges = run.graph.edge_count();
  counts.subgraphs = run.subgraphs.size();
  counts.kept = filter_multi_commit(run.subgraphs, config.min_commits).kept.size();
  return run;
}

void write_counts(std::ostream& out, const StageCounts& c, bool from_records) {
  if (from_records) {
    out << "parsed=" << c.parsed << "\n"
        << "excluded_package_keyword=" << c.excluded.package_keyword << "\n"
        << "excluded_constructor=" << c.excluded.constructor << "\n"
        << "excluded_self_loop=" << c.excluded.self_loop << "\n"
        << "after_filters=" << c.after_filters << "\n"
        << "commit_log=" << (c.has_commit_log ? "yes" : "no") << "\n"
        << "off_branch_dropped=" << c.off_branch << "\n"
        << "ambiguous_commit=" << c.ambiguous_commit << "\n"
        << "on_branch=" << c.on_branch << "\n";
  }
  out << "vertices=" << c.vertices << "\n"
      << "edges=" << c.edges << "\n"
      << "subgraphs=" << c.subgraphs << "\n"
      << "kept=" << c.kept << "\n";
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

StageCounts& StageCounts::operator+=(const StageCounts& o) {
  parsed += o.parsed;
  excluded.package_keyword += o.excluded.package_keyword;
  excluded.constructor += o.excluded.constructor;
  excluded.self_loop += o.excluded.self_loop;
  after_filters += o.after_filters;
  has_commit_log = has_commit_log || o.has_commit_log;
  off_branch += o.off_branch;
  ambiguous_commit += o.ambiguous_commit;
  on_branch += o.on_branch;
  vertices += o.vertices;
  edges += o.edges;
  subgraphs += o.subgraphs;
  kept += o.kept;
  return *this;
}

StageCounts PipelineRun::totals() const {
  StageCounts total;
  for (const auto& p : projects) total += p.counts;
  return total;
}

PipelineRun run_pipeline(const RunConfig& config) {
  PipelineRun run;
  std::vector<std::string> order;
  std::map<std::string, std::vector<RefactoringRecord>> by_project;

  for (const auto& path : config.record_paths) {
    auto parsed = parse_records_file(path, ParseOptions{config.strict});
    for (auto& e : parsed.errors) run.errors.push_back({path.string(), e.line, std::move(e.message)});
    for (auto& record : parsed.records) {
      auto [it, inserted] = by_project.try_emplace(record.project);
      if (inserted) order.push_back(record.project);
      it->second.push_back(std::move(record));
    }
  }

  std::map<std::string, CommitLog> logs;
  for (const auto& [project, path] : config.commit_logs) logs.emplace(project, parse_commit_log_file(path));

  std::vector<std::future<ProjectRun>> pending;
  for (const auto& project : order) {
    const auto log = logs.find(project);
    const CommitLog* log_ptr = log == logs.end() ? nullptr : &log->second;
    pending.push_back(std::async(std::launch::async, process_project, project,
                                 std::move(by_project[project]), std::cref(config), log_ptr));
  }
  for (auto& f : pending) run.projects.push_back(f.get());
  return run;
}

PipelineRun run_from_dump(const std::filesystem::path& dump, std::size_t min_commits) {
  PipelineRun run;
  run.from_records = false;
  for (auto& [project, graph] : read_graph_dump_file(dump)) {
    ProjectRun p;
    p.project = std::move(project);
    p.graph = std::move(graph);
    p.subgraphs = partition(p.graph);
    p.counts.vertices = p.graph.vertex_count();
    p.counts.edges = p.graph.edge_count();
    p.counts.subgraphs = p.subgraphs.size();
    p.counts.kept = filter_multi_commit(p.subgraphs, min_commits).kept.size();
    run.projects.push_back(std::move(p));
  }
  return run;
}

std::vector<ProjectGraph> project_graphs(const PipelineRun& run) {
  std::vector<ProjectGraph> out;
  for (const auto& p : run.projects) out.push_back({p.project, p.graph});
  return out;
}

std::vector<ProjectMetrics> measure_projects(const PipelineRun& run) {
  std::vector<std::future<ProjectMetrics>> pending;
  for (const auto& p : run.projects) {
    pending.push_back(std::async(std::launch::async, [&p] {
      ProjectMetrics pm{p.project, {}};
      for (const auto& sg : p.subgraphs) pm.subgraphs.push_back(measure(sg));
      return pm;
    }));
  }
  std::vector<ProjectMetrics> out;
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

std::string format_run_log(const PipelineRun& run) {
  std::ostringstream out;
  out << "[input]\n"
      << "source=" << (run.from_records ? "records" : "graph-dump") << "\n"
      << "projects=" << run.projects.size() << "\n";
  if (run.from_records) out << "parse_errors=" << run.errors.size() << "\n";
  for (const auto& p : run.projects) {
    out << "\n[project " << p.project << "]\n";
    write_counts(out, p.counts, run.from_records);
  }
  out << "\n[total]\n";
  write_counts(out, run.totals(), run.from_records);
  if (!run.errors.empty()) {
    out << "\n[errors]\n";
    for (const auto& e : run.errors) out << e.source << ":" << e.line << ": " << e.message << "\n";
  }
  return out.str();
}

ProjectAges read_project_ages(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open project ages '" + path.string() + "'");
  ProjectAges ages;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto sep = text.find_last_of(",\t");
    if (sep == std::string::npos) throw ParseError("expected '<project>,<age>'", line_no);
    const auto name = trim(std::string_view(text).substr(0, sep));
    const auto value = trim(std::string_view(text).substr(sep + 1));
    double age = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), age);
    if (name.empty() || ec != std::errc{} || ptr != value.data() + value.size()) {
      throw ParseError("expected '<project>,<age>'", line_no);
    }
    ages[name] = age;
  }
  return ages;
}

std::string safe_file_name(std::string_view name) {
  std::string out;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '.' ||
                    c == '_' || c == '-' || c == '#' || c == '$';
    out += ok ? c : '_';
  }
  if (out.empty() || out == "." || out == "..") out = "_" + out;
  return out;
}

}  // namespace refgraph
