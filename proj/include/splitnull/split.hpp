#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splitnull/graph.hpp"

namespace splitnull {

/// A clique / independent-set bipartition (K, S) of the vertex set.
struct SPartition {
  VertexSet clique;
  VertexSet independent;

  friend bool operator==(const SPartition&, const SPartition&) = default;
  friend auto operator<=>(const SPartition&, const SPartition&) = default;

  std::string str() const;
};

bool is_s_partition(const Graph& g, const SPartition& p);

/// A split graph together with one of its s-partitions and the derived
/// |K|×|S| biadjacency matrix R (rows by sorted K, columns by sorted S).
class SplitGraph {
 public:
  /// Throws DomainError when p is not an s-partition of g or g has no vertices.
  SplitGraph(Graph g, SPartition p);

  const Graph& graph() const { return graph_; }
  const SPartition& partition() const { return partition_; }
  const VertexSet& clique() const { return partition_.clique; }
  const VertexSet& independent() const { return partition_.independent; }
  Index clique_size() const { return static_cast<Index>(partition_.clique.size()); }
  Index independent_size() const { return static_cast<Index>(partition_.independent.size()); }
  Vertex order() const { return graph_.order(); }

  const QMatrix& biadjacency() const { return biadjacency_; }

  /// Vertex ids in (K, S) order: coordinate i of a kernel vector refers to
  /// vertex ordering()[i].
  const std::vector<Vertex>& ordering() const { return ordering_; }

  /// A(Sp) under the (K, S) ordering, i.e. [[J - I, R], [R^t, 0]].
  QMatrix adjacency() const;

  /// Maps coordinate positions in (K, S) order back to vertex ids.
  VertexSet vertices_at(const std::vector<Index>& positions) const;

 private:
  Graph graph_;
  SPartition partition_;
  QMatrix biadjacency_;
  std::vector<Vertex> ordering_;
};

QMatrix biadjacency(const Graph& g, const SPartition& p);

/// Degree-sequence (splittance) recognition.
std::optional<SplitGraph> recognize_split(const Graph& g);

/// Every s-partition of the graph, sorted. Two s-partitions exchange at most
/// one vertex in each direction, so the candidates are single moves and swaps
/// away from sp's own partition.
std::vector<SPartition> all_s_partitions(const SplitGraph& sp);

/// ω(Sp): |K| + 1 when some independent vertex sees all of K, else |K|.
Index clique_number(const SplitGraph& sp);
/// α(Sp): |S| + 1 when some clique vertex has no independent neighbour, else |S|.
Index independence_number(const SplitGraph& sp);

enum class Balance { balanced, unbalanced };

Balance balance_class(const SplitGraph& sp);

enum class SwingClass { empty, singleton, clique, independent_set };

std::string_view to_string(Balance b);
std::string_view to_string(SwingClass c);

struct SwingReport {
  VertexSet swing;              // W(Sp)
  VertexSet always_clique;      // K*(Sp)
  VertexSet always_independent; // S*(Sp)
  SwingClass classification = SwingClass::empty;
  std::vector<SPartition> all_partitions;
};

SwingReport swing_report(const SplitGraph& sp);

/// The s-partitions predicted from (K*, W, S*) and the shape of W.
std::vector<SPartition> closed_form_partitions(const SwingReport& report);

std::vector<VertexSet> maximum_cliques(const SplitGraph& sp);
std::vector<VertexSet> maximum_independent_sets(const SplitGraph& sp);

/// Complement graph with the roles of K and S exchanged.
SplitGraph complement(const SplitGraph& sp);

/// Threshold graph from a creation sequence over {'0','1'} that starts with
/// '0': '0' adds an isolated vertex, '1' a dominating one. Vertex i is the
/// i-th added; K collects the '1' vertices and S the '0' vertices.
SplitGraph threshold_graph(std::string_view bits);

/// True when g can be dismantled by repeatedly removing an isolated or a
/// dominating vertex.
bool is_threshold(const Graph& g);

}  // namespace splitnull
