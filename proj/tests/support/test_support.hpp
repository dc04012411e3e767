#pragma once

// Shared fixtures, generators, and independent oracles for the test suites.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "refgraph/graph.hpp"
#include "refgraph/ingest.hpp"
#include "refgraph/record.hpp"

namespace testing {

inline std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(REFGRAPH_FIXTURE_DIR) / name;
}

inline std::vector<refgraph::RefactoringRecord> load_fixture(const std::string& name) {
  auto parsed = refgraph::parse_records_file(fixture_path(name), refgraph::ParseOptions{true});
  return parsed.records;
}

inline refgraph::RefactoringRecord make_record(const std::string& source, const std::string& target,
                                              refgraph::RefactoringType type, const std::string& commit,
                                              const std::string& timestamp = "2019-01-01T00:00:00Z",
                                              const std::string& email = "a@x.org",
                                              const std::string& project = "p") {
  refgraph::RefactoringRecord r;
  r.project = project;
  r.source = refgraph::parse_signature(source);
  r.target = refgraph::parse_signature(target);
  r.type = type;
  r.commit = refgraph::normalize_commit(commit);
  r.timestamp = refgraph::parse_timestamp(timestamp);
  r.author_name = email.substr(0, email.find('@'));
  r.author_email = email;
  return r;
}

inline std::string hex_commit(std::uint64_t n) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(n));
  return std::string(buf) + "aaaaaaaaaaaaaaaaaaaaaaaa";
}

/// `n` records over a pool of `pool` method names, with no self-loops.
inline std::vector<refgraph::RefactoringRecord> random_records(std::mt19937_64& rng, std::size_t n,
                                                              std::size_t pool, std::size_t commits = 30) {
  std::uniform_int_distribution<std::size_t> pick(0, pool - 1);
  std::uniform_int_distribution<std::size_t> pick_type(0, refgraph::kAllRefactoringTypes.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_commit(0, commits - 1);
  std::uniform_int_distribution<int> pick_dev(0, 4);
  std::vector<refgraph::RefactoringRecord> out;
  while (out.size() < n) {
    const auto a = pick(rng), b = pick(rng);
    if (a == b) continue;
    const auto c = pick_commit(rng);
    refgraph::RefactoringRecord r;
    r.project = "rand";
    r.source = refgraph::parse_signature("pkg.C" + std::to_string(a % 7) + "#m" + std::to_string(a) + "(int)");
    r.target = refgraph::parse_signature("pkg.C" + std::to_string(b % 7) + "#m" + std::to_string(b) + "(int)");
    r.type = refgraph::kAllRefactoringTypes[pick_type(rng)];
    r.commit = hex_commit(c);
    r.timestamp = refgraph::Timestamp{std::chrono::seconds{1500000000 + static_cast<long>(c) * 3607}};
    r.author_email = "dev" + std::to_string(pick_dev(rng)) + "@x.org";
    r.author_name = "dev";
    out.push_back(std::move(r));
  }
  return out;
}

struct GeneratedCorpus {
  std::vector<refgraph::RefactoringRecord> records;
  std::vector<std::size_t> commits_per_component;  ///< ground truth, one per component
};

/// Disjoint components, each a random tree over its own vertex names, whose
/// edges use exactly the drawn number of distinct commits.
inline GeneratedCorpus random_corpus(std::mt19937_64& rng, std::size_t components, const std::string& project = "gen") {
  GeneratedCorpus corpus;
  std::uniform_int_distribution<std::size_t> pick_commits(1, 4);
  std::uniform_int_distribution<std::size_t> pick_extra(0, 5);
  std::uniform_int_distribution<std::size_t> pick_type(0, refgraph::kAllRefactoringTypes.size() - 1);
  std::uint64_t next_commit = 1;
  for (std::size_t k = 0; k < components; ++k) {
    const auto n_commits = pick_commits(rng);
    const auto n_edges = n_commits + pick_extra(rng);
    std::vector<std::string> commits;
    for (std::size_t c = 0; c < n_commits; ++c) commits.push_back(hex_commit(next_commit++));
    for (std::size_t e = 0; e < n_edges; ++e) {
      const std::size_t target = e + 1;
      const std::size_t source = std::uniform_int_distribution<std::size_t>(0, e)(rng);
      // the first n_commits edges cover every commit once
      const std::size_t ci = e < n_commits ? e : std::uniform_int_distribution<std::size_t>(0, n_commits - 1)(rng);
      refgraph::RefactoringRecord r;
      r.project = project;
      r.source = refgraph::parse_signature("g.K" + std::to_string(k) + "#v" + std::to_string(source) + "()");
      r.target = refgraph::parse_signature("g.K" + std::to_string(k) + "#v" + std::to_string(target) + "()");
      r.type = refgraph::kAllRefactoringTypes[pick_type(rng)];
      r.commit = commits[ci];
      r.timestamp = refgraph::Timestamp{std::chrono::seconds{1400000000 + static_cast<long>(ci) * 86400}};
      r.author_email = "dev" + std::to_string(ci % 3) + "@x.org";
      r.author_name = "dev";
      corpus.records.push_back(std::move(r));
    }
    corpus.commits_per_component.push_back(n_commits);
  }
  return corpus;
}

/// Components of the undirected view, found by breadth-first search over an
/// adjacency list. Each component is the sorted set of canonical labels.
inline std::set<std::set<std::string>> bfs_components(const std::vector<refgraph::RefactoringRecord>& records) {
  std::map<std::string, std::vector<std::string>> adjacency;
  for (const auto& r : records) {
    const auto a = r.source.canonical(), b = r.target.canonical();
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  std::set<std::string> seen;
  std::set<std::set<std::string>> components;
  for (const auto& [start, ignored] : adjacency) {
    if (seen.count(start)) continue;
    std::set<std::string> component;
    std::queue<std::string> frontier;
    frontier.push(start);
    seen.insert(start);
    while (!frontier.empty()) {
      auto v = frontier.front();
      frontier.pop();
      component.insert(v);
      for (const auto& w : adjacency[v]) {
        if (seen.insert(w).second) frontier.push(w);
      }
    }
    components.insert(std::move(component));
  }
  return components;
}

/// Spearman rho by brute force: each rank is 1 + (#smaller) + (#equal - 1) / 2,
/// then the textbook two-pass Pearson formula in long double.
inline double spearman_oracle(const std::vector<double>& xs, const std::vector<double>& ys) {
  auto ranks = [](const std::vector<double>& v) {
    std::vector<long double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::size_t less = 0, equal = 0;
      for (double w : v) {
        if (w < v[i]) ++less;
        else if (w == v[i]) ++equal;
      }
      r[i] = 1.0L + less + (equal - 1) / 2.0L;
    }
    return r;
  };
  const auto rx = ranks(xs), ry = ranks(ys);
  const auto n = static_cast<long double>(xs.size());
  long double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= n;
  my /= n;
  long double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return static_cast<double>(sxy / std::sqrt(sxx * syy));
}

/// Series of length `n` drawn from a small value range so ties are common.
inline std::vector<double> tied_series(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> value(0, static_cast<int>(std::max<std::size_t>(2, n / 3)));
  std::vector<double> out(n);
  for (auto& v : out) v = value(rng) * 0.5;
  return out;
}

}  // namespace testing
