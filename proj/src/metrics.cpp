#include "refgraph/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <set>
#include <stdexcept>

namespace refgraph {
namespace {

constexpr double kSecondsPerDay = 86400.0;

std::string describe(const Edge& e) {
  return e.source.canonical() + " -> " + e.target.canonical() + " (" + std::string(to_string(e.type)) +
         ", " + e.commit + ")";
}

std::vector<double> collect(const std::vector<SubgraphMetrics>& ms, double (*get)(const SubgraphMetrics&)) {
  std::vector<double> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(get(m));
  return out;
}

AgeSummary summarize_ages(std::string label, const std::vector<SubgraphMetrics>& ms) {
  AgeSummary summary{std::move(label), ms.size(), std::nullopt};
  if (!ms.empty()) {
    summary.days = quartiles(collect(ms, [](const SubgraphMetrics& m) { return m.age_days; }));
  }
  return summary;
}

}  // namespace

std::string_view to_string(Composition c) {
  return c == Composition::Homogeneous ? "homogeneous" : "heterogeneous";
}

std::string_view to_string(Authorship a) { return a == Authorship::Single ? "single" : "multiple"; }

std::string_view to_string(CorrelationOutcome::Status s) {
  switch (s) {
    case CorrelationOutcome::Status::Computed: return "computed";
    case CorrelationOutcome::Status::NotComputed: return "not computed";
    case CorrelationOutcome::Status::Failed: return "failed";
  }
  return "unknown";
}

std::string normalize_email(std::string_view email) {
  while (!email.empty() && std::isspace(static_cast<unsigned char>(email.front()))) email.remove_prefix(1);
  while (!email.empty() && std::isspace(static_cast<unsigned char>(email.back()))) email.remove_suffix(1);
  std::string out(email);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

SubgraphMetrics measure(const Subgraph& subgraph) {
  if (subgraph.edges.empty()) throw MetricsError("subgraph '" + subgraph.id + "' has no edges");

  SubgraphMetrics m;
  m.subgraph_id = subgraph.id;
  m.n_vertices = subgraph.vertices.size();
  m.n_edges = subgraph.edges.size();

  std::set<std::string_view> commits;
  std::set<std::string> developers;
  auto oldest = subgraph.edges.front().timestamp;
  auto newest = oldest;
  for (const auto& e : subgraph.edges) {
    auto email = normalize_email(e.author_email);
    if (email.empty()) throw MetricsError("edge " + describe(e) + " has no author email");
    developers.insert(std::move(email));
    commits.insert(e.commit);
    ++m.type_counts[e.type];
    oldest = std::min(oldest, e.timestamp);
    newest = std::max(newest, e.timestamp);
  }

  m.n_commits = commits.size();
  m.age_days = static_cast<double>((newest - oldest).count()) / kSecondsPerDay;
  m.n_distinct_types = m.type_counts.size();
  m.composition = m.n_distinct_types == 1 ? Composition::Homogeneous : Composition::Heterogeneous;
  m.n_developers = developers.size();
  m.authorship = m.n_developers == 1 ? Authorship::Single : Authorship::Multiple;
  return m;
}

Quartiles quartiles(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("quartiles of an empty range");
  std::sort(values.begin(), values.end());
  const std::size_t half = values.size() / 2;
  Quartiles q;
  q.min = values.front();
  q.max = values.back();
  q.median = median(values);
  if (half == 0) {
    q.q1 = q.q3 = q.median;
  } else {
    q.q1 = median(std::vector<double>(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(half)));
    q.q3 = median(std::vector<double>(values.end() - static_cast<std::ptrdiff_t>(half), values.end()));
  }
  return q;
}

CorpusCorrelations correlate_corpus(const std::vector<ProjectMetrics>& kept,
                                    const std::optional<ProjectAges>& ages) {
  using Status = CorrelationOutcome::Status;
  CorpusCorrelations out;

  std::vector<double> commits, developers;
  for (const auto& p : kept) {
    for (const auto& m : p.subgraphs) {
      commits.push_back(static_cast<double>(m.n_commits));
      developers.push_back(static_cast<double>(m.n_developers));
    }
  }
  try {
    out.developers_vs_commits = {Status::Computed, spearman(commits, developers), {}};
  } catch (const CorrelationError& e) {
    out.developers_vs_commits = {Status::Failed, {}, e.what()};
  }

  if (!ages) {
    out.project_age_vs_median_age = {Status::NotComputed, {}, "no project ages supplied"};
    return out;
  }
  std::vector<double> system_age, median_age;
  for (const auto& p : kept) {
    const auto it = ages->find(p.project);
    if (it == ages->end() || p.subgraphs.empty()) continue;
    system_age.push_back(it->second);
    median_age.push_back(median(collect(p.subgraphs, [](const SubgraphMetrics& m) { return m.age_days; })));
  }
  try {
    out.project_age_vs_median_age = {Status::Computed, spearman(system_age, median_age), {}};
  } catch (const CorrelationError& e) {
    out.project_age_vs_median_age = {Status::Failed, {}, e.what()};
  }
  return out;
}

CorpusStats aggregate(const std::vector<ProjectMetrics>& projects, const AggregateOptions& options) {
  CorpusStats stats;
  stats.min_commits = options.min_commits;

  std::vector<ProjectMetrics> kept;
  std::vector<SubgraphMetrics> all_kept;
  std::map<RefactoringType, std::size_t> type_totals;

  for (const auto& project : projects) {
    stats.projects.push_back(project.project);

    SizeRow size{project.project};
    ProjectMetrics project_kept{project.project, {}};
    for (const auto& m : project.subgraphs) {
      ++size.all;
      if (m.n_commits <= 1) ++size.single_commit;
      else ++size.multi_commit;
      if (m.n_commits >= options.min_commits) project_kept.subgraphs.push_back(m);
    }
    stats.subgraph_rows.push_back(size);
    stats.subgraph_total.all += size.all;
    stats.subgraph_total.single_commit += size.single_commit;
    stats.subgraph_total.multi_commit += size.multi_commit;

    CompositionRow composition{project.project};
    AuthorshipRow authorship{project.project};
    for (const auto& m : project_kept.subgraphs) {
      if (m.composition == Composition::Homogeneous) ++composition.homogeneous;
      else ++composition.heterogeneous;
      if (m.authorship == Authorship::Single) ++authorship.single;
      else ++authorship.multiple;

      ++stats.vertices_histogram[m.n_vertices];
      ++stats.edges_histogram[m.n_edges];
      ++stats.commits_histogram[m.n_commits];
      ++stats.distinct_types_histogram[m.n_distinct_types];
      stats.total_edges += m.n_edges;
      for (const auto& [type, count] : m.type_counts) type_totals[type] += count;
      all_kept.push_back(m);
    }
    stats.composition.push_back(composition);
    stats.composition_total.homogeneous += composition.homogeneous;
    stats.composition_total.heterogeneous += composition.heterogeneous;
    stats.authorship.push_back(authorship);
    stats.authorship_total.single += authorship.single;
    stats.authorship_total.multiple += authorship.multiple;
    stats.ages.push_back(summarize_ages(project.project, project_kept.subgraphs));

    kept.push_back(std::move(project_kept));
  }

  stats.kept_subgraphs = all_kept.size();
  stats.age_total = summarize_ages(std::string(kAllRowLabel), all_kept);

  for (const auto& [type, count] : type_totals) stats.type_frequency.push_back({type, count});
  std::sort(stats.type_frequency.begin(), stats.type_frequency.end(),
            [](const TypeFrequency& a, const TypeFrequency& b) {
              if (a.count != b.count) return a.count > b.count;
              return to_string(a.type) < to_string(b.type);
            });

  stats.correlations = correlate_corpus(kept, options.project_ages);
  return stats;
}

}  // namespace refgraph
