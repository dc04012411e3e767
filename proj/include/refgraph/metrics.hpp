#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "refgraph/error.hpp"
#include "refgraph/graph.hpp"
#include "refgraph/spearman.hpp"

namespace refgraph {

class MetricsError : public Error {
 public:
  using Error::Error;
};

enum class Composition { Homogeneous, Heterogeneous };
enum class Authorship { Single, Multiple };

std::string_view to_string(Composition c);
std::string_view to_string(Authorship a);

struct SubgraphMetrics {
  std::string subgraph_id;
  std::size_t n_vertices = 0;
  std::size_t n_edges = 0;
  std::size_t n_commits = 0;  ///< distinct commit hashes
  double age_days = 0.0;      ///< newest minus oldest edge timestamp, in days
  std::map<RefactoringType, std::size_t> type_counts;
  std::size_t n_distinct_types = 0;
  Composition composition = Composition::Homogeneous;
  std::size_t n_developers = 0;  ///< distinct normalized author emails
  Authorship authorship = Authorship::Single;

  friend bool operator==(const SubgraphMetrics&, const SubgraphMetrics&) = default;
};

/// Trimmed, lowercased email; this is the developer identity.
std::string normalize_email(std::string_view email);

/// Throws MetricsError for an empty subgraph or an edge without an author
/// email (the message names the edge).
SubgraphMetrics measure(const Subgraph& subgraph);

/// Every subgraph of one project, before any commit threshold.
struct ProjectMetrics {
  std::string project;
  std::vector<SubgraphMetrics> subgraphs;
};

/// Project name -> system age, in any consistent unit.
using ProjectAges = std::map<std::string, double>;

struct CorrelationOutcome {
  enum class Status { Computed, NotComputed, Failed };

  Status status = Status::NotComputed;
  SpearmanResult result;  ///< meaningful only when Computed
  std::string note;       ///< reason when NotComputed or Failed
};

std::string_view to_string(CorrelationOutcome::Status s);

struct CorpusCorrelations {
  /// Developers vs commits, pooled over every kept subgraph.
  CorrelationOutcome developers_vs_commits;
  /// System age vs median subgraph age, one point per project.
  CorrelationOutcome project_age_vs_median_age;
};

/// `kept` holds the thresholded subgraphs per project. The age study is
/// NotComputed when `ages` is absent; it uses only projects that appear in
/// `ages` and have at least one kept subgraph.
CorpusCorrelations correlate_corpus(const std::vector<ProjectMetrics>& kept,
                                    const std::optional<ProjectAges>& ages);

/// Value -> number of subgraphs with that value.
using Histogram = std::map<std::size_t, std::size_t>;

struct SizeRow {
  std::string project;
  std::size_t all = 0;
  std::size_t single_commit = 0;  ///< len = 1
  std::size_t multi_commit = 0;   ///< len >= 2
};

struct CompositionRow {
  std::string project;
  std::size_t homogeneous = 0;
  std::size_t heterogeneous = 0;
};

struct AuthorshipRow {
  std::string project;
  std::size_t single = 0;
  std::size_t multiple = 0;
};

struct Quartiles {
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
};

/// Quartiles are medians of the lower and upper halves, excluding the
/// overall median when the count is odd. Throws std::invalid_argument when empty.
Quartiles quartiles(std::vector<double> values);

struct AgeSummary {
  std::string project;
  std::size_t n = 0;
  std::optional<Quartiles> days;  ///< empty when n == 0
};

struct TypeFrequency {
  RefactoringType type = RefactoringType::Rename;
  std::size_t count = 0;
};

inline constexpr std::string_view kAllRowLabel = "All";

/// Corpus-level tables. Everything except `subgraph_rows` is computed over the
/// kept subgraphs (commit count >= min_commits).
struct CorpusStats {
  std::size_t min_commits = 2;
  std::vector<std::string> projects;

  std::vector<SizeRow> subgraph_rows;
  SizeRow subgraph_total{std::string(kAllRowLabel)};

  std::size_t kept_subgraphs = 0;
  std::size_t total_edges = 0;
  std::vector<TypeFrequency> type_frequency;  ///< count desc, then wire name

  std::vector<CompositionRow> composition;
  CompositionRow composition_total{std::string(kAllRowLabel)};
  std::vector<AuthorshipRow> authorship;
  AuthorshipRow authorship_total{std::string(kAllRowLabel)};
  std::vector<AgeSummary> ages;
  AgeSummary age_total{std::string(kAllRowLabel), 0, std::nullopt};

  Histogram vertices_histogram;
  Histogram edges_histogram;
  Histogram commits_histogram;
  Histogram distinct_types_histogram;  ///< bucket 1 is the homogeneous share

  CorpusCorrelations correlations;
};

struct AggregateOptions {
  std::size_t min_commits = 2;
  std::optional<ProjectAges> project_ages;
};

/// Builds every corpus table. Projects keep the order given.
CorpusStats aggregate(const std::vector<ProjectMetrics>& projects, const AggregateOptions& options = {});

}  // namespace refgraph
