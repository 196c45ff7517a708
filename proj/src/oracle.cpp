#include "splitnull/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace splitnull {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> neighbor_masks(const Graph& g) {
  if (g.order() > kBruteForceMaxOrder)
    throw DomainError("brute-force oracle limited to n <= " + std::to_string(kBruteForceMaxOrder));
  std::vector<Mask> nb(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex u = 0; u < g.order(); ++u)
      if (g.adjacent(u, v)) nb[static_cast<std::size_t>(v)] |= Mask{1} << u;
  return nb;
}

bool mask_is_clique(const std::vector<Mask>& nb, Mask m) {
  for (Mask rest = m; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if ((m & ~(Mask{1} << v) & ~nb[static_cast<std::size_t>(v)]) != 0) return false;
  }
  return true;
}

bool mask_is_independent(const std::vector<Mask>& nb, Mask m) {
  for (Mask rest = m; rest; rest &= rest - 1)
    if (m & nb[static_cast<std::size_t>(std::countr_zero(rest))]) return false;
  return true;
}

VertexSet to_set(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return VertexSet(std::move(out));
}

template <typename Pred>
std::vector<VertexSet> largest_where(const Graph& g, Pred pred) {
  const auto nb = neighbor_masks(g);
  const Mask all = g.order() == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << g.order()) - 1);
  int best = -1;
  std::vector<Mask> hits;
  for (std::uint64_t m = 0; m <= all; ++m) {
    const auto mm = static_cast<Mask>(m);
    const int size = std::popcount(mm);
    if (size < best || !pred(nb, mm)) continue;
    if (size > best) {
      best = size;
      hits.clear();
    }
    hits.push_back(mm);
  }
  std::vector<VertexSet> out;
  for (Mask m : hits) out.push_back(to_set(m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

QSubspace brute_nullspace(const Graph& g) { return nullspace_basis(adjacency_matrix(g)); }

std::vector<SPartition> brute_s_partitions(const Graph& g) {
  const auto nb = neighbor_masks(g);
  const Mask all = g.order() == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << g.order()) - 1);
  std::vector<SPartition> out;
  for (std::uint64_t m = 0; m <= all; ++m) {
    const auto k = static_cast<Mask>(m);
    if (mask_is_clique(nb, k) && mask_is_independent(nb, all & ~k))
      out.push_back({to_set(k), to_set(all & ~k)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool brute_is_split(const Graph& g) { return !brute_s_partitions(g).empty(); }

std::vector<VertexSet> brute_maximum_cliques(const Graph& g) {
  return largest_where(g, mask_is_clique);
}

std::vector<VertexSet> brute_maximum_independent_sets(const Graph& g) {
  return largest_where(g, mask_is_independent);
}

Rational cofactor_determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("cofactor_determinant: matrix is not square");
  const Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational det = 0;
  for (Index j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    Rational term = m(0, j) * cofactor_determinant(minor_matrix(m, 0, j));
    if (j % 2) term = -term;
    det += term;
  }
  return det;
}

}  // namespace splitnull
