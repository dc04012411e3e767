// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "refgraph/graph.hpp"
#include "refgraph/metrics.hpp"
#include "refgraph/report.hpp"
#include "refgraph/spearman.hpp"
#include "support/dot_grammar.hpp"
#include "support/test_support.hpp"

using namespace refgraph;
namespace fs = std::filesystem;

namespace {

// Collects the first few failure messages of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  bool ok() const { return failures_ == 0; }
  std::string detail() const {
    return failures_ == 0 ? "" : std::to_string(failures_) + " failure(s): " + notes_;
  }

 private:
  int failures_ = 0;
  std::string notes_;
};

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string eq(std::size_t actual, std::size_t expected, const std::string& what) {
  return what + " = " + std::to_string(actual) + ", expected " + std::to_string(expected);
}

Subgraph single(const std::vector<Subgraph>& subgraphs, Check& check, const std::string& fixture) {
  check.expect(subgraphs.size() == 1, eq(subgraphs.size(), 1, fixture + " subgraphs"));
  return subgraphs.empty() ? Subgraph{} : subgraphs.front();
}

Outcome worked_fixtures() {
  const auto start = Clock::now();
  Check c;
  auto load = [&](const std::string& name) { return partition(build(testing::load_fixture(name))); };

  {
    const auto sg = single(load("extract_fanout.jsonl"), c, "extract_fanout");
    c.expect(sg.vertices.size() == 4 && sg.edges.size() == 3, "extract_fanout shape");
  }
  {
    const auto sg = single(load("rename_cycle.jsonl"), c, "rename_cycle");
    c.expect(sg.vertices.size() == 4 && sg.edges.size() == 4, "rename_cycle shape");
    bool forward = false, backward = false;
    for (const auto& e : sg.edges) {
      forward = forward || (e.source.canonical() == "util.Bar#b()" && e.target.canonical() == "util.Bar#c()");
      backward = backward || (e.source.canonical() == "util.Bar#c()" && e.target.canonical() == "util.Bar#b()");
    }
    c.expect(forward && backward, "rename_cycle 2-cycle");
  }
  auto metrics_of = [&](const std::string& name) {
    const auto sg = single(load(name), c, name);
    return sg.edges.empty() ? SubgraphMetrics{} : measure(sg);
  };
  {
    const auto m = metrics_of("chart_labels.jsonl");
    c.expect(m.n_vertices == 5 && m.n_edges == 4, "chart_labels shape");
    c.expect(m.n_commits == 3, eq(m.n_commits, 3, "chart_labels commits"));
    c.expect(m.n_distinct_types == 3, eq(m.n_distinct_types, 3, "chart_labels types"));
    c.expect(m.n_developers == 1, eq(m.n_developers, 1, "chart_labels developers"));
    c.expect(m.age_days == 15.0, "chart_labels age " + std::to_string(m.age_days));
  }
  {
    const auto m = metrics_of("nio_selector.jsonl");
    c.expect(m.n_vertices == 6 && m.n_edges == 5, "nio_selector shape");
    c.expect(m.n_commits == 2, eq(m.n_commits, 2, "nio_selector commits"));
    c.expect(m.n_developers == 2, eq(m.n_developers, 2, "nio_selector developers"));
  }
  {
    const auto m = metrics_of("router_revert.jsonl");
    c.expect(m.n_vertices == 2 && m.n_edges == 2, "router_revert shape");
    c.expect(m.age_days == 6.0, "router_revert age " + std::to_string(m.age_days));
    c.expect(m.composition == Composition::Homogeneous, "router_revert composition");
  }
  {
    const auto m = metrics_of("image_pipeline.jsonl");
    c.expect(m.composition == Composition::Homogeneous && m.type_counts.count(RefactoringType::Extract) == 1,
             "image_pipeline extract-only");
    c.expect(m.n_commits == 3, eq(m.n_commits, 3, "image_pipeline commits"));
  }
  {
    const auto m = metrics_of("http_timeouts.jsonl");
    c.expect(m.n_vertices == 8 && m.n_edges == 7, "http_timeouts shape");
    c.expect(m.n_commits == 3, eq(m.n_commits, 3, "http_timeouts commits"));
    c.expect(m.n_developers == 2, eq(m.n_developers, 2, "http_timeouts developers"));
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
  char buf[64];
  std::snprintf(buf, sizeof buf, "7 fixtures in %.3f s", elapsed);
  return {c.ok(), c.ok() ? buf : c.detail()};
}

std::set<std::set<std::string>> component_sets(const std::vector<Subgraph>& subgraphs) {
  std::set<std::set<std::string>> out;
  for (const auto& sg : subgraphs) {
    std::set<std::string> labels;
    for (const auto& v : sg.vertices) labels.insert(v.canonical());
    out.insert(std::move(labels));
  }
  return out;
}

Outcome component_oracle() {
  const auto start = Clock::now();
  Check c;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> edge_count(1, 500);
  std::uniform_int_distribution<std::size_t> pool_size(2, 600);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto records = testing::random_records(rng, edge_count(rng), pool_size(rng));
    c.expect(component_sets(partition(build(records))) == testing::bfs_components(records),
             "trial " + std::to_string(trial));
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 30.0, "runtime " + std::to_string(elapsed) + " s");
  char buf[64];
  std::snprintf(buf, sizeof buf, "1000 record sets in %.2f s", elapsed);
  return {c.ok(), c.ok() ? buf : c.detail()};
}

std::vector<ProjectMetrics> metrics_for(const std::string& project, const std::vector<RefactoringRecord>& records) {
  ProjectMetrics pm{project, {}};
  for (const auto& sg : partition(build(records))) pm.subgraphs.push_back(measure(sg));
  return {pm};
}

std::string downstream(const std::vector<RefactoringRecord>& records) {
  const auto stats = aggregate(metrics_for("p", records), {1, std::nullopt});
  std::string text = emit_json_summary(stats);
  for (const auto& f : emit_tables(stats)) text += f.content;
  for (const auto& sg : partition(build(records))) text += emit_dot(sg);
  return text;
}

Outcome set_semantics() {
  Check c;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> size(1, 200);
  for (int trial = 0; trial < 200; ++trial) {
    const auto records = testing::random_records(rng, size(rng), 60);
    auto doubled = records;
    std::uniform_int_distribution<std::size_t> pick(0, records.size() - 1);
    const auto extra = std::uniform_int_distribution<std::size_t>(1, records.size())(rng);
    for (std::size_t i = 0; i < extra; ++i) doubled.push_back(records[pick(rng)]);
    std::shuffle(doubled.begin(), doubled.end(), rng);
    const auto g1 = build(records), g2 = build(doubled);
    c.expect(g1.vertex_count() == g2.vertex_count() && g1.edge_count() == g2.edge_count(),
             "|V|/|E| changed in trial " + std::to_string(trial));
    c.expect(downstream(records) == downstream(doubled), "metrics changed in trial " + std::to_string(trial));
  }
  return {c.ok(), c.ok() ? "200 record sets with repeated records" : c.detail()};
}

Outcome threshold_accounting() {
  Check c;
  std::mt19937_64 rng(99);
  std::size_t subgraphs_seen = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto corpus = testing::random_corpus(rng, 1 + trial * 3);
    const auto subgraphs = partition(build(corpus.records));
    std::size_t truth_single = 0, truth_multi = 0;
    for (auto n : corpus.commits_per_component) (n == 1 ? truth_single : truth_multi)++;
    const auto stats = aggregate(metrics_for("gen", corpus.records));
    const auto& t = stats.subgraph_total;
    c.expect(t.single_commit + t.multi_commit == t.all, "split does not sum in trial " + std::to_string(trial));
    c.expect(t.all == corpus.commits_per_component.size(), eq(t.all, corpus.commits_per_component.size(), "total"));
    c.expect(t.single_commit == truth_single, eq(t.single_commit, truth_single, "len=1"));
    c.expect(t.multi_commit == truth_multi, eq(t.multi_commit, truth_multi, "len>=2"));
    const auto split = filter_multi_commit(subgraphs);
    c.expect(split.kept.size() == truth_multi && split.below_threshold == truth_single, "filter_multi_commit split");
    c.expect(stats.kept_subgraphs == truth_multi, eq(stats.kept_subgraphs, truth_multi, "kept"));
    subgraphs_seen += t.all;
  }
  return {c.ok(), c.ok() ? std::to_string(subgraphs_seen) + " generated subgraphs" : c.detail()};
}

Outcome metric_invariance() {
  Check c;
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<long> shift(-2000000000L, 2000000000L);
  for (int trial = 0; trial < 500; ++trial) {
    const auto corpus = testing::random_corpus(rng, 1);
    const auto sg = partition(build(corpus.records)).front();
    const auto base = measure(sg);
    auto permuted = sg;
    std::shuffle(permuted.edges.begin(), permuted.edges.end(), rng);
    c.expect(measure(permuted) == base, "permutation changed metrics in trial " + std::to_string(trial));
    auto shifted = permuted;
    const std::chrono::seconds delta{shift(rng)};
    for (auto& e : shifted.edges) e.timestamp += delta;
    c.expect(measure(shifted) == base, "translation changed metrics in trial " + std::to_string(trial));
  }
  return {c.ok(), c.ok() ? "500 subgraphs permuted and translated" : c.detail()};
}

Outcome spearman_criterion() {
  Check c;
  std::mt19937_64 rng(31415);
  std::uniform_int_distribution<std::size_t> length(3, 50);
  std::uniform_real_distribution<double> step(0.001, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = length(rng);
    std::vector<double> xs(n), up(n), down(n);
    double x = step(rng) - 5, y = step(rng);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = x += step(rng);
      up[i] = y += step(rng);
      down[i] = -up[i] * 3;
    }
    c.expect(spearman(xs, up).rho == 1.0, "monotone increasing not exactly 1");
    c.expect(spearman(xs, down).rho == -1.0, "monotone decreasing not exactly -1");
  }
  int compared = 0;
  double worst = 0;
  while (compared < 1000) {
    const auto n = length(rng);
    const auto xs = testing::tied_series(rng, n), ys = testing::tied_series(rng, n);
    const bool has_ties = std::set<double>(xs.begin(), xs.end()).size() < n ||
                          std::set<double>(ys.begin(), ys.end()).size() < n;
    const bool constant = std::set<double>(xs.begin(), xs.end()).size() == 1 ||
                          std::set<double>(ys.begin(), ys.end()).size() == 1;
    if (!has_ties || constant) continue;
    const double diff = std::abs(spearman(xs, ys).rho - testing::spearman_oracle(xs, ys));
    worst = std::max(worst, diff);
    c.expect(diff <= 1e-9, "oracle mismatch " + std::to_string(diff));
    ++compared;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "exact +/-1 on 100 monotone pairs; 1000 tied series, max |diff| %.3g", worst);
  return {c.ok(), c.ok() ? buf : c.detail()};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  if (!fs::exists(dir)) return files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file()) files[fs::relative(entry.path(), dir).generic_string()] = read_file(entry.path());
  }
  return files;
}

int run_tool(const std::string& args) {
  const std::string command = std::string("\"") + REFGRAPH_TOOL + "\" " + args + " > /dev/null 2>&1";
  return std::system(command.c_str());
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

// Runs every subcommand on the fixture corpus into `out`.
bool full_run(const fs::path& out) {
  const auto records = "--records " + q(testing::fixture_path("corpus.jsonl")) + " --records " +
                       q(testing::fixture_path("extract_fanout.jsonl")) + " --records " +
                       q(testing::fixture_path("rename_cycle.jsonl")) + " --records " +
                       q(testing::fixture_path("image_pipeline.jsonl"));
  const auto log = " --commit-log " + q("MPAndroidChart=" + testing::fixture_path("mpandroidchart.log").string());
  return run_tool("build " + records + log + " --out " + q(out)) == 0 &&
         run_tool("stats " + records + log + " --project-ages " + q(testing::fixture_path("project_ages.csv")) +
                  " --out " + q(out)) == 0 &&
         run_tool("export " + records + log + " --all --min-commits 1 --out " + q(out)) == 0;
}

struct Scratch {
  fs::path root = fs::temp_directory_path() / ("refgraph-acceptance-" + std::to_string(std::random_device{}()));
  Scratch() { fs::create_directories(root); }
  ~Scratch() { fs::remove_all(root); }
};

Outcome determinism(const Scratch& scratch) {
  Check c;
  const auto a = scratch.root / "run1", b = scratch.root / "run2";
  c.expect(full_run(a), "first run failed");
  c.expect(full_run(b), "second run failed");
  const auto sa = snapshot(a), sb = snapshot(b);
  c.expect(!sa.empty(), "no output written");
  c.expect(sa == sb, "output directories differ");
  return {c.ok(), c.ok() ? std::to_string(sa.size()) + " files byte-identical across two runs" : c.detail()};
}

Outcome dot_validity(const Scratch& scratch) {
  Check c;
  const auto dir = scratch.root / "run1" / "dot";
  std::size_t parsed = 0;
  bool cycle_checked = false;
  for (const auto& [name, text] : snapshot(dir)) {
    try {
      const auto graph = dot_grammar::parse(text);
      c.expect(graph.directed, name + " is not a digraph");
      ++parsed;
      if (graph.name == "util.Bar#a()") {
        bool forward = false, backward = false;
        for (const auto& e : graph.edges) {
          forward = forward || (e.source == "util.Bar#b()" && e.target == "util.Bar#c()");
          backward = backward || (e.source == "util.Bar#c()" && e.target == "util.Bar#b()");
        }
        c.expect(forward && backward, "rename cycle missing an edge in " + name);
        cycle_checked = true;
      }
    } catch (const dot_grammar::SyntaxError& e) {
      c.expect(false, name + ": " + e.what());
    }
  }
  c.expect(parsed > 0, "no DOT files exported");
  c.expect(cycle_checked, "rename-cycle subgraph not exported");

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    for (const auto& sg : partition(build(testing::random_records(rng, 200, 400)))) {
      try {
        dot_grammar::parse(emit_dot(sg));
        ++parsed;
      } catch (const dot_grammar::SyntaxError& e) {
        c.expect(false, sg.id + ": " + e.what());
      }
    }
  }
  return {c.ok(), c.ok() ? std::to_string(parsed) + " DOT documents parsed" : c.detail()};
}

}  // namespace

int main() {
  Scratch scratch;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"worked fixtures", worked_fixtures},
      {"component oracle", component_oracle},
      {"set semantics", set_semantics},
      {"threshold accounting", threshold_accounting},
      {"metric invariance", metric_invariance},
      {"spearman", spearman_criterion},
      {"determinism", [&] { return determinism(scratch); }},
      {"dot validity", [&] { return dot_validity(scratch); }},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, body] : criteria) {
    ++index;
    Outcome outcome;
    try {
      outcome = body();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failed;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << index << "  " << name << "  (" << outcome.detail
              << ")\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
