#include "refgraph/graph.hpp"

#include <set>
#include <stdexcept>
#include <tuple>

#include "refgraph/disjoint_sets.hpp"

namespace refgraph {
namespace {

MethodRef canonicalized(MethodRef ref) {
  ref.raw = ref.canonical();
  return ref;
}

auto metadata_rank(const Edge& e) { return std::tie(e.timestamp, e.author_email, e.author_name); }

}  // namespace

bool operator==(const Edge& a, const Edge& b) {
  return a.key() == b.key() && metadata_rank(a) == metadata_rank(b);
}

Edge edge_from_record(const RefactoringRecord& record) {
  return Edge{record.source,    record.target,      record.type,        record.commit,
              record.timestamp, record.author_name, record.author_email};
}

void RefactoringGraph::add(Edge edge) {
  edge.source = canonicalized(std::move(edge.source));
  edge.target = canonicalized(std::move(edge.target));
  if (edge.source.raw == edge.target.raw) {
    throw std::invalid_argument("self-loop on " + edge.source.raw);
  }
  vertices_.try_emplace(edge.source.raw, edge.source);
  vertices_.try_emplace(edge.target.raw, edge.target);

  auto key = edge.key();
  auto [it, inserted] = edges_.try_emplace(std::move(key), edge);
  if (!inserted && metadata_rank(edge) < metadata_rank(it->second)) it->second = std::move(edge);
}

bool operator==(const RefactoringGraph& a, const RefactoringGraph& b) {
  if (a.vertices_.size() != b.vertices_.size() || a.edges_ != b.edges_) return false;
  auto ia = a.vertices_.begin();
  for (auto ib = b.vertices_.begin(); ib != b.vertices_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
  }
  return true;
}

RefactoringGraph build(const std::vector<RefactoringRecord>& records) {
  RefactoringGraph graph;
  for (const auto& record : records) graph.add(record);
  return graph;
}

std::size_t Subgraph::commit_count() const {
  std::set<std::string_view> commits;
  for (const auto& e : edges) commits.insert(e.commit);
  return commits.size();
}

std::vector<Subgraph> partition(const RefactoringGraph& graph) {
  std::map<std::string_view, std::size_t> index;
  for (const auto& [label, ref] : graph.vertices()) index.emplace(label, index.size());

  DisjointSets sets(index.size());
  for (const auto& [key, edge] : graph.edges()) sets.unite(index.at(key.source), index.at(key.target));

  // Vertices are visited in label order, so the first vertex seen for each
  // root is the component's smallest label and components come out sorted.
  std::vector<Subgraph> subgraphs;
  std::vector<std::size_t> component_of_root(index.size(), static_cast<std::size_t>(-1));
  std::vector<std::size_t> component_of_vertex(index.size());
  std::size_t i = 0;
  for (const auto& [label, ref] : graph.vertices()) {
    const auto root = sets.find(i);
    if (component_of_root[root] == static_cast<std::size_t>(-1)) {
      component_of_root[root] = subgraphs.size();
      subgraphs.push_back(Subgraph{label, {}, {}});
    }
    component_of_vertex[i] = component_of_root[root];
    subgraphs[component_of_vertex[i]].vertices.push_back(ref);
    ++i;
  }
  for (const auto& [key, edge] : graph.edges()) {
    subgraphs[component_of_vertex[index.at(key.source)]].edges.push_back(edge);
  }
  return subgraphs;
}

CommitSplit filter_multi_commit(const std::vector<Subgraph>& subgraphs, std::size_t min_commits) {
  CommitSplit split;
  for (const auto& sg : subgraphs) {
    if (sg.commit_count() >= min_commits) split.kept.push_back(sg);
    else ++split.below_threshold;
  }
  return split;
}

}  // namespace refgraph
