#include "splitnull/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace splitnull {

VertexSet::VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(Vertex n) {
  VertexSet out;
  out.members_.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) out.members_[static_cast<std::size_t>(v)] = v;
  return out;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

VertexSet operator|(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.members_));
  return out;
}

VertexSet operator&(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out.members_));
  return out;
}

VertexSet operator-(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.members_));
  return out;
}

std::string VertexSet::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) os << (i ? "," : "") << members_[i];
  os << '}';
  return os.str();
}

Graph::Graph(Vertex n) : n_(n), words_(static_cast<int>((n + 63) / 64)) {
  if (n < 0) throw DimensionError("Graph: negative vertex count");
  bits_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_), 0);
}

Graph Graph::from_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw DimensionError("vertex " + std::to_string(v) + " out of range 0.." +
                         std::to_string(n_ - 1));
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DimensionError("self-loop at vertex " + std::to_string(u));
  bits_[row_offset(u) + static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
  bits_[row_offset(v) + static_cast<std::size_t>(u) / 64] |= std::uint64_t{1} << (u % 64);
}

std::size_t Graph::size() const {
  std::size_t twice = 0;
  for (auto w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
  return twice / 2;
}

VertexSet Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  for (Vertex u = 0; u < n_; ++u)
    if (adjacent(v, u)) out.push_back(u);
  return VertexSet(std::move(out));
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(bits_[row_offset(v) + static_cast<std::size_t>(w)]);
  return d;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

QMatrix adjacency_matrix(const Graph& g, std::span<const Vertex> order) {
  const Vertex n = g.order();
  if (static_cast<Vertex>(order.size()) != n)
    throw DimensionError("adjacency_matrix: order is not a permutation of the vertices");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Vertex v : order) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw DimensionError("adjacency_matrix: order is not a permutation of the vertices");
    seen[static_cast<std::size_t>(v)] = true;
  }
  QMatrix a = QMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (g.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)])) {
        a(i, j) = 1;
        a(j, i) = 1;
      }
  return a;
}

QMatrix adjacency_matrix(const Graph& g) {
  const auto all = VertexSet::range(g.order());
  return adjacency_matrix(g, all.members());
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  for (Vertex v : keep)
    if (v < 0 || v >= g.order())
      throw DimensionError("induced_subgraph: vertex " + std::to_string(v) + " out of range");
  const auto k = static_cast<Vertex>(keep.size());
  Graph out(k);
  for (Vertex i = 0; i < k; ++i)
    for (Vertex j = i + 1; j < k; ++j)
      if (g.adjacent(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]))
        out.add_edge(i, j);
  return out;
}

Graph delete_vertex(const Graph& g, Vertex v) {
  return induced_subgraph(g, VertexSet::range(g.order()) - VertexSet{v});
}

bool twins(const Graph& g, Vertex u, Vertex v) {
  if (u == v) return true;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (w == u || w == v) continue;
    if (g.adjacent(u, w) != g.adjacent(v, w)) return false;
  }
  return true;
}

std::vector<VertexSet> twin_classes(const Graph& g) {
  std::vector<std::vector<Vertex>> classes;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const auto& c) { return twins(g, c.front(), v); });
    if (it == classes.end())
      classes.push_back({v});
    else
      it->push_back(v);
  }
  std::vector<VertexSet> out;
  out.reserve(classes.size());
  for (auto& c : classes) out.emplace_back(std::move(c));
  return out;
}

bool is_clique(const Graph& g, const VertexSet& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

bool is_independent(const Graph& g, const VertexSet& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) return false;
  return true;
}

bool is_connected(const Graph& g) {
  const Vertex n = g.order();
  if (n <= 1) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  Vertex reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u = 0; u < n; ++u) {
      if (!seen[static_cast<std::size_t>(u)] && g.adjacent(v, u)) {
        seen[static_cast<std::size_t>(u)] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

bool has_isolated_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

}  // namespace splitnull
