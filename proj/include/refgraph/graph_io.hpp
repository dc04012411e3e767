#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "refgraph/graph.hpp"

namespace refgraph {

inline constexpr std::string_view kGraphDumpVersion = "refgraph-dump/1";

struct ProjectGraph {
  std::string project;
  RefactoringGraph graph;
};

/// JSON document with one entry per project, each holding `vertices`
/// (canonical signatures) and `edges` (source, target, type, commit,
/// timestamp, author_name, author_email). Output is deterministic.
std::string write_graph_dump(const std::vector<ProjectGraph>& projects);

/// Inverse of write_graph_dump. Throws ParseError on a malformed document or a
/// version mismatch. Edges may carry an empty author email; metrics reject
/// those later with the offending edge named.
std::vector<ProjectGraph> read_graph_dump(std::istream& in);

std::vector<ProjectGraph> read_graph_dump_file(const std::filesystem::path& path);

}  // namespace refgraph
