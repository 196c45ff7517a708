#include "splitnull/composition.hpp"

namespace splitnull {

Graph tyshkevich_compose(const SplitGraph& sp, const Graph& g) {
  const Vertex off = sp.order();
  Graph h(off + g.order());
  for (auto [u, v] : sp.graph().edges()) h.add_edge(u, v);
  for (auto [u, v] : g.edges()) h.add_edge(u + off, v + off);
  for (Vertex x : sp.clique())
    for (Vertex y = 0; y < g.order(); ++y) h.add_edge(x, y + off);
  return h;
}

SplitGraph tyshkevich_compose(const SplitGraph& sp, const SplitGraph& sp2) {
  const Vertex off = sp.order();
  auto shift = [off](const VertexSet& vs) {
    std::vector<Vertex> out;
    for (Vertex v : vs) out.push_back(v + off);
    return VertexSet(std::move(out));
  };
  SPartition p{sp.clique() | shift(sp2.clique()), sp.independent() | shift(sp2.independent())};
  Graph h = tyshkevich_compose(sp, sp2.graph());
  if (!is_s_partition(h, p))
    throw TheoremViolation("composition-split", p.str() + " is not an s-partition of Sp∘Sp'");
  return SplitGraph(std::move(h), std::move(p));
}

std::vector<Vertex> composition_ordering(const SplitGraph& sp, const Graph& g) {
  std::vector<Vertex> order = sp.ordering();
  for (Vertex v = 0; v < g.order(); ++v) order.push_back(v + sp.order());
  return order;
}

QSubspace embedded_kernel_vectors(const SplitGraph& sp, const Graph& g) {
  const Index k = sp.clique_size();
  const Index n = sp.order() + g.order();
  const auto nul_r = nullspace_basis(sp.biadjacency());
  QMatrix m = QMatrix::Zero(n, nul_r.dim());
  m.block(k, 0, sp.independent_size(), nul_r.dim()) = nul_r.matrix();
  const QMatrix a = adjacency_matrix(tyshkevich_compose(sp, g), composition_ordering(sp, g));
  if (!is_zero_matrix(a * m))
    throw TheoremViolation("composition-embedding", "an embedded vector is not annihilated by A(Sp∘G)");
  return QSubspace::from_independent(std::move(m));
}

SquareComposition square_composition_nonsingularity(const SplitGraph& sp, const SplitGraph& sp2) {
  if (sp.clique_size() != sp.independent_size() || sp2.clique_size() != sp2.independent_size())
    throw DomainError("square_composition_nonsingularity: both factors need |K| = |S|");
  const SplitGraph h = tyshkevich_compose(sp, sp2);
  const QMatrix& p = h.biadjacency();
  const Index k = sp.clique_size();
  const Index k2 = sp2.clique_size();
  // P = [[R, J], [0, R']] because K, K' and S, S' stay contiguous after sorting.
  const bool block_form = p.topLeftCorner(k, k) == sp.biadjacency() &&
                          p.bottomRightCorner(k2, k2) == sp2.biadjacency() &&
                          is_zero_matrix(p.bottomLeftCorner(k2, k)) &&
                          p.topRightCorner(k, k2) == QMatrix::Constant(k, k2, Rational(1));
  if (!block_form) throw TheoremViolation("square-nonsingular", "P is not [[R, J], [0, R']]");
  const Rational det_r = det_bareiss(sp.biadjacency());
  const Rational det_r2 = det_bareiss(sp2.biadjacency());
  if (det_bareiss(p) != det_r * det_r2)
    throw TheoremViolation("square-nonsingular", "det(P) != det(R) det(R')");

  SquareComposition out{!(det_r * det_r2).is_zero(), !det_r.is_zero(), !det_r2.is_zero()};
  // With |K| = |S|, Sp is singular exactly when R is.
  if (det_bareiss(h.adjacency()).is_zero() == out.composite ||
      det_bareiss(sp.adjacency()).is_zero() == out.left ||
      det_bareiss(sp2.adjacency()).is_zero() == out.right)
    throw TheoremViolation("square-blocks", "nonsingularity of A(Sp) disagrees with that of R");
  if (out.composite != (out.left && out.right))
    throw TheoremViolation("square-nonsingular", "composite nonsingularity mismatch");
  return out;
}

}  // namespace splitnull
