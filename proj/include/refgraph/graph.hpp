#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "refgraph/method_ref.hpp"
#include "refgraph/record.hpp"
#include "refgraph/refactoring_type.hpp"
#include "refgraph/time.hpp"

namespace refgraph {

/// Identity of an edge. The commit is part of the key so the same refactoring
/// repeated in two commits stays two edges.
struct EdgeKey {
  std::string source;  ///< canonical signature
  std::string target;  ///< canonical signature
  RefactoringType type = RefactoringType::Rename;
  std::string commit;

  auto operator<=>(const EdgeKey&) const = default;
  bool operator==(const EdgeKey&) const = default;
};

/// A refactoring between two methods, directed from the code's state before
/// the operation to its state after: rename old->new, move old->new location,
/// extract origin->extracted, inline inlined->absorbing, pull up
/// subclass->superclass, push down superclass->subclass.
struct Edge {
  MethodRef source;
  MethodRef target;
  RefactoringType type = RefactoringType::Rename;
  std::string commit;
  Timestamp timestamp{};
  std::string author_name;
  std::string author_email;

  EdgeKey key() const { return {source.canonical(), target.canonical(), type, commit}; }
};

bool operator==(const Edge& a, const Edge& b);

Edge edge_from_record(const RefactoringRecord& record);

/// Vertex and edge sets keyed by canonical signature and EdgeKey.
class RefactoringGraph {
 public:
  /// Adds both endpoints and the edge. Re-adding an existing key keeps the
  /// copy with the smallest (timestamp, author email, author name), so the
  /// result does not depend on insertion order. Throws std::invalid_argument
  /// for a self-loop.
  void add(Edge edge);
  void add(const RefactoringRecord& record) { add(edge_from_record(record)); }

  const std::map<std::string, MethodRef>& vertices() const { return vertices_; }
  const std::map<EdgeKey, Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return vertices_.empty(); }

  friend bool operator==(const RefactoringGraph& a, const RefactoringGraph& b);

 private:
  std::map<std::string, MethodRef> vertices_;
  std::map<EdgeKey, Edge> edges_;
};

RefactoringGraph build(const std::vector<RefactoringRecord>& records);

/// One weakly connected component of a refactoring graph.
struct Subgraph {
  std::string id;                 ///< smallest canonical vertex label
  std::vector<MethodRef> vertices;  ///< sorted by canonical signature
  std::vector<Edge> edges;          ///< sorted by EdgeKey

  /// Number of distinct commit hashes over the edges.
  std::size_t commit_count() const;

  friend bool operator==(const Subgraph&, const Subgraph&) = default;
};

/// Splits the graph into weakly connected components, sorted by id. Every
/// vertex and edge lands in exactly one subgraph.
std::vector<Subgraph> partition(const RefactoringGraph& graph);

struct CommitSplit {
  std::vector<Subgraph> kept;  ///< commit_count() >= min_commits, order preserved
  std::size_t below_threshold = 0;
};

/// Keeps subgraphs spanning at least `min_commits` distinct commits.
CommitSplit filter_multi_commit(const std::vector<Subgraph>& subgraphs, std::size_t min_commits = 2);

}  // namespace refgraph
