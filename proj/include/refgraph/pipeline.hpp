#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "refgraph/graph.hpp"
#include "refgraph/graph_io.hpp"
#include "refgraph/ingest.hpp"
#include "refgraph/metrics.hpp"

namespace refgraph {

struct RunConfig {
  std::vector<std::filesystem::path> record_paths;
  std::map<std::string, std::filesystem::path> commit_logs;  ///< project -> log file
  FilterConfig filters;
  std::size_t min_commits = 2;
  std::filesystem::path out_dir = "refgraph-out";
  bool strict = false;
  std::optional<std::filesystem::path> project_ages;
};

/// Per-project counts after each stage. Each stage's input is the previous
/// stage's output: parsed = after_filters + excluded.total(),
/// after_filters = on_branch + off_branch + ambiguous_commit.
struct StageCounts {
  std::size_t parsed = 0;
  ExclusionReport excluded;
  std::size_t after_filters = 0;
  bool has_commit_log = false;
  std::size_t off_branch = 0;
  std::size_t ambiguous_commit = 0;
  std::size_t on_branch = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t subgraphs = 0;
  std::size_t kept = 0;

  StageCounts& operator+=(const StageCounts& other);
};

struct ProjectRun {
  std::string project;
  StageCounts counts;
  RefactoringGraph graph;
  std::vector<Subgraph> subgraphs;  ///< all components, before the threshold
};

struct InputError {
  std::string source;  ///< file name
  std::size_t line = 0;
  std::string message;
};

struct PipelineRun {
  bool from_records = true;
  std::vector<InputError> errors;
  std::vector<ProjectRun> projects;  ///< order of first appearance in the inputs

  StageCounts totals() const;
};

/// Parses every records file (in order), groups records by project, and runs
/// filter -> commit-log restriction -> build -> partition per project, with
/// projects processed concurrently. Throws IoError for unreadable inputs,
/// ParseError for a malformed commit log or, in strict mode, a bad record.
PipelineRun run_pipeline(const RunConfig& config);

/// Rebuilds a run from a graph dump; only graph-level counts are filled in.
PipelineRun run_from_dump(const std::filesystem::path& dump, std::size_t min_commits);

std::vector<ProjectGraph> project_graphs(const PipelineRun& run);

/// Measures every subgraph of every project (projects in parallel).
std::vector<ProjectMetrics> measure_projects(const PipelineRun& run);

/// Deterministic `key=value` text with a section per project and a total.
std::string format_run_log(const PipelineRun& run);

/// Lines of `<project>,<age>` (a tab also works); blank lines and `#`
/// comments are ignored. Throws IoError / ParseError.
ProjectAges read_project_ages(const std::filesystem::path& path);

/// Directory- and file-name-safe version of an id or project name.
std::string safe_file_name(std::string_view name);

}  // namespace refgraph
