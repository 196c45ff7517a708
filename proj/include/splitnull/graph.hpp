#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "splitnull/linalg.hpp"

namespace splitnull {

using Vertex = int;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}
  explicit VertexSet(std::vector<Vertex> vs);

  static VertexSet range(Vertex n);

  bool contains(Vertex v) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  Vertex front() const { return members_.front(); }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<Vertex>& members() const { return members_; }

  bool is_subset_of(const VertexSet& other) const;

  friend VertexSet operator|(const VertexSet& a, const VertexSet& b);  // union
  friend VertexSet operator&(const VertexSet& a, const VertexSet& b);  // intersection
  friend VertexSet operator-(const VertexSet& a, const VertexSet& b);  // difference

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

  std::string str() const;

 private:
  std::vector<Vertex> members_;
};

/// Simple undirected graph on vertices 0..n-1, adjacency kept as bit rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n);

  static Graph from_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges);

  Vertex order() const { return n_; }
  std::size_t size() const;  // edge count

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[row_offset(u) + static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
  }
  /// Throws DimensionError on out-of-range ids or u == v.
  void add_edge(Vertex u, Vertex v);

  VertexSet neighbors(Vertex v) const;
  int degree(Vertex v) const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;  // u < v, lexicographic

  /// Neighbourhood as a bitmask; only valid for graphs with at most 64 vertices.
  std::uint64_t neighbor_mask(Vertex v) const { return bits_[row_offset(v)]; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t row_offset(Vertex v) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(words_);
  }
  void check_vertex(Vertex v) const;

  Vertex n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// A(g) with rows/columns permuted so that row i is vertex order[i].
QMatrix adjacency_matrix(const Graph& g, std::span<const Vertex> order);
QMatrix adjacency_matrix(const Graph& g);

Graph complement(const Graph& g);

/// Subgraph induced by keep, relabelled 0..|keep|-1 in increasing vertex order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);
Graph delete_vertex(const Graph& g, Vertex v);

bool twins(const Graph& g, Vertex u, Vertex v);

/// Classes of the twin relation N(u)\v = N(v)\u, ordered by smallest member.
std::vector<VertexSet> twin_classes(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& vs);
bool is_independent(const Graph& g, const VertexSet& vs);
bool is_connected(const Graph& g);
bool has_isolated_vertex(const Graph& g);

}  // namespace splitnull
