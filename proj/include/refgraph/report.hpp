#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "refgraph/graph.hpp"
#include "refgraph/metrics.hpp"

namespace refgraph {

inline constexpr std::string_view kSummaryVersion = "refgraph-summary/1";

struct OutputFile {
  std::filesystem::path name;  ///< relative to the output directory
  std::string content;
};

/// `count / total` as a percentage rounded half-up to one decimal ("25.0").
/// A zero total yields "0.0".
std::string format_percent(std::size_t count, std::size_t total);

/// Rounded half-up to one decimal.
std::string format_decimal(double value);

/// One CSV file per table (subgraph split, refactoring types, composition,
/// developers, ages, each histogram, correlations). Every table but
/// correlations ends with an "All" row.
std::vector<OutputFile> emit_tables(const CorpusStats& stats);

/// Graphviz digraph with one quoted node per vertex and one edge per
/// refactoring, labeled `<type>\n<commit[:7]>\n<YYYY-MM-DD>`. Node and edge
/// statements are sorted, so output is byte-stable.
std::string emit_dot(const Subgraph& subgraph);

/// Versioned JSON dump of every count in CorpusStats, stable key order.
std::string emit_json_summary(const CorpusStats& stats);

/// Writes every file under `dir`, creating directories as needed. On failure
/// files already written by this call are removed and IoError is thrown.
void write_files(const std::filesystem::path& dir, const std::vector<OutputFile>& files);

}  // namespace refgraph
