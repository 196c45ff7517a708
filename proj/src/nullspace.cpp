#include "splitnull/nullspace.hpp"

#include <algorithm>

namespace splitnull {

namespace {

QVector clique_block_apply(const QVector& z) {
  // (I - J) z
  Rational sum = 0;
  for (Index i = 0; i < z.size(); ++i) sum += z(i);
  QVector out = z;
  for (Index i = 0; i < z.size(); ++i) out(i) -= sum;
  return out;
}

KernelBasis assemble_basis(const SplitGraph& sp, const std::optional<CliqueKernel>& ck) {
  const QMatrix& r = sp.biadjacency();
  const Index k = r.rows();
  const Index s = r.cols();
  const Index n = k + s;
  const auto red = rref(r);

  KernelBasis out;
  out.ordering = sp.ordering();
  out.rank_R = red.rank();
  const auto& svs = sp.independent();
  std::vector<Index> free_idx;
  for (Index j = 0, p = 0; j < s; ++j) {
    if (p < red.rank() && red.pivots[static_cast<std::size_t>(p)] == j) {
      out.pivot_columns.push_back(svs[static_cast<std::size_t>(j)]);
      ++p;
    } else {
      out.free_columns.push_back(svs[static_cast<std::size_t>(j)]);
      free_idx.push_back(j);
    }
  }
  QMatrix p(k, red.rank());
  for (Index c = 0; c < red.rank(); ++c) p.col(c) = r.col(red.pivots[static_cast<std::size_t>(c)]);

  std::vector<QVector> cols;
  if (ck && ck->generator) {
    const QVector& z = *ck->generator;
    auto y0 = solve_particular(p, clique_block_apply(z));
    if (!y0) throw TheoremViolation("structured-basis", "(I - J)z is not in the image of P");
    QVector v = QVector::Zero(n);
    v.head(k) = z;
    for (Index c = 0; c < red.rank(); ++c) v(k + red.pivots[static_cast<std::size_t>(c)]) = (*y0)(c);
    cols.push_back(v);
    out.kinds.push_back(KernelVectorKind::clique_supported);
    out.z = z;
    out.y0 = *y0;
  } else if (k == 1 && is_zero_matrix(r)) {
    // Lone isolated clique vertex: (I - J) vanishes and e_a is in the kernel.
    QVector v = QVector::Zero(n);
    v(0) = 1;
    cols.push_back(v);
    out.kinds.push_back(KernelVectorKind::clique_supported);
    out.z = QVector::Constant(1, Rational(1));
    out.y0 = QVector::Zero(red.rank());
  }
  for (Index j : free_idx) {
    auto y = solve_particular(p, r.col(j));
    if (!y) throw TheoremViolation("structured-basis", "a non-pivot column of R is outside im(P)");
    QVector v = QVector::Zero(n);
    for (Index c = 0; c < red.rank(); ++c) v(k + red.pivots[static_cast<std::size_t>(c)]) = -(*y)(c);
    v(k + j) = 1;
    cols.push_back(v);
    out.kinds.push_back(KernelVectorKind::independent);
  }

  QMatrix m(n, static_cast<Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) m.col(static_cast<Index>(c)) = cols[c];
  if (!is_zero_matrix(sp.adjacency() * m))
    throw TheoremViolation("structured-basis", "a structured basis vector is not annihilated by A(Sp)");
  try {
    out.vectors = QSubspace::from_independent(std::move(m));
  } catch (const DimensionError&) {
    throw TheoremViolation("structured-basis", "structured basis vectors are linearly dependent");
  }
  out.rank_sp = n - out.vectors.dim();
  return out;
}

VertexSet support_vertices(const SplitGraph& sp, const QSubspace& basis) {
  return sp.vertices_at(support_of(basis));
}

}  // namespace

QSubspace clique_kernel_space(const SplitGraph& sp) {
  const Index k = sp.clique_size();
  if (k < 2) throw DomainError("clique kernel is defined only for |K| >= 2");
  const QMatrix& r = sp.biadjacency();
  const auto left = nullspace_basis(r.transpose());
  const auto right = image_basis(clique_block_inverse(k) * r);
  return subspace_intersect(left, right);
}

CliqueKernel clique_kernel(const SplitGraph& sp) {
  const auto space = clique_kernel_space(sp);
  if (space.dim() > 1)
    throw TheoremViolation("clique-kernel-dim",
                           "clique kernel has dimension " + std::to_string(space.dim()));
  CliqueKernel ck;
  ck.dimension = space.dim();
  if (ck.dimension == 1) ck.generator = primitive_integer_vector(space.vector(0));
  return ck;
}

NullityReport nullity(const SplitGraph& sp) {
  NullityReport rep;
  const QMatrix& r = sp.biadjacency();
  rep.rank_R = rank(r);
  rep.nul_R = r.cols() - rep.rank_R;
  if (sp.clique_size() >= 2) {
    rep.clique_kernel = clique_kernel(sp);
    rep.nullity = rep.nul_R + rep.clique_kernel->dimension;
    const auto basis = assemble_basis(sp, rep.clique_kernel);
    rep.support = support_vertices(sp, basis.vectors);
  } else {
    const auto basis = nullspace_basis(sp.adjacency());
    rep.nullity = basis.dim();
    rep.support = support_vertices(sp, basis);
  }
  rep.support_meets_clique = !(rep.support & sp.clique()).empty();
  if (rep.clique_kernel && rep.support_meets_clique != (rep.clique_kernel->dimension == 1))
    throw TheoremViolation("clique-support",
                           "support meets K but the clique kernel dimension disagrees");
  return rep;
}

VertexSet support(const SplitGraph& sp) { return nullity(sp).support; }

KernelBasis structured_kernel_basis(const SplitGraph& sp) {
  std::optional<CliqueKernel> ck;
  if (sp.clique_size() >= 2) ck = clique_kernel(sp);
  return assemble_basis(sp, ck);
}

NullityOneReport nullity_one_report(const Graph& g) {
  const QMatrix a = adjacency_matrix(g);
  const Index n = a.rows();
  const Index nul = n - rank(a);
  if (nul != 1)
    throw DomainError("nullity_one_report requires nullity 1, found " + std::to_string(nul));

  NullityOneReport rep;
  const QMatrix adj = adjugate(a);
  rep.adjugate_rank = rank(adj);
  if (rep.adjugate_rank != 1)
    throw TheoremViolation("adjugate-rank",
                           "adj(A) has rank " + std::to_string(rep.adjugate_rank));
  if (!is_zero_matrix(a * adj))
    throw TheoremViolation("adjugate-kernel", "a column of adj(A) is not in nulo(A)");

  std::vector<Vertex> supp;
  rep.vertex_deleted_dets.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < g.order(); ++v) {
    Rational d = det_bareiss(adjacency_matrix(delete_vertex(g, v)));
    if (d != adj(v, v))
      throw TheoremViolation("nullity-one", "det(G - v) differs from adj(A)_vv");
    if (!d.is_zero()) supp.push_back(v);
    rep.vertex_deleted_dets.push_back(std::move(d));
  }
  rep.support_from_adjugate = VertexSet(std::move(supp));

  rep.kernel_vector = primitive_integer_vector(nullspace_basis(a).vector(0));
  std::vector<Vertex> kernel_supp;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!rep.kernel_vector(v).is_zero()) kernel_supp.push_back(v);
  if (VertexSet(std::move(kernel_supp)) != rep.support_from_adjugate)
    throw TheoremViolation("nullity-one", "Supp(G) differs from {v : G - v nonsingular}");

  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < g.order(); ++v)
      if (adj(u, v).is_zero() ==
          (rep.support_from_adjugate.contains(u) && rep.support_from_adjugate.contains(v)))
        throw TheoremViolation("nullity-one", "adj(A)_uv != 0 does not match u, v in Supp(G)");

  const Vertex u = rep.support_from_adjugate.front();
  rep.reference_vertex = u;
  rep.adjugate_column = adj.col(u);
  const Rational& du = rep.vertex_deleted_dets[static_cast<std::size_t>(u)];
  const Rational& xu = rep.kernel_vector(u);
  for (Vertex v = 0; v < g.order(); ++v) {
    const Rational& dv = rep.vertex_deleted_dets[static_cast<std::size_t>(v)];
    if (rep.adjugate_column(v) * rep.adjugate_column(v) != dv * du)
      throw TheoremViolation("nullity-one", "x_v^2 != det(G - v) det(G - u) at v = " +
                                                   std::to_string(v));
    // Same identity for the primitive kernel vector, up to the common scale.
    if (rep.kernel_vector(v) * rep.kernel_vector(v) * du != xu * xu * dv)
      throw TheoremViolation("nullity-one", "kernel vector ratio identity fails at v = " +
                                                   std::to_string(v));
  }
  return rep;
}

bool image_basis_by_deletion(const Graph& g, Vertex s) {
  if (s < 0 || s >= g.order())
    throw DimensionError("image_basis_by_deletion: vertex " + std::to_string(s) + " out of range");
  if (has_isolated_vertex(g))
    throw DomainError("image_basis_by_deletion: graph has an isolated vertex");
  const QMatrix a = adjacency_matrix(g);
  const Index n = a.rows();
  const Index r = rank(a);
  if (n - r != 1)
    throw DomainError("image_basis_by_deletion: nullity is " + std::to_string(n - r) + ", not 1");
  const auto kernel = nullspace_basis(a);
  if (kernel.vector(0)(s).is_zero())
    throw DomainError("image_basis_by_deletion: vertex " + std::to_string(s) +
                      " is not in the support");
  QMatrix cols(n, n - 1);
  for (Index j = 0, c = 0; j < n; ++j)
    if (j != s) cols.col(c++) = a.col(j);
  return rank(cols) == r;
}

bool PredicateReport::all_hold() const {
  return std::all_of(implications.begin(), implications.end(),
                     [](const Implication& i) { return i.holds(); });
}

const Implication& PredicateReport::at(const std::string& id) const {
  for (const auto& i : implications)
    if (i.id == id) return i;
  throw std::out_of_range("no implication '" + id + "'");
}

PredicateReport support_location_predicates(const SplitGraph& sp) {
  const Graph& g = sp.graph();
  const QMatrix& r = sp.biadjacency();
  const Index k = sp.clique_size();
  const Index s = sp.independent_size();
  const NullityReport nr = nullity(sp);

  PredicateReport rep;
  rep.support = nr.support;
  rep.ones_in_image_R = image_contains(r, ones(k));
  rep.support_in_S = nr.support.is_subset_of(sp.independent());
  auto add = [&](std::string id, bool hyp, bool concl) {
    rep.implications.push_back({std::move(id), hyp, concl});
  };

  add("ones-in-image-R", rep.ones_in_image_R, rep.support_in_S);

  const bool connected = is_connected(g) && k >= 1 && s >= 1;
  auto equal_degrees = [&](const VertexSet& vs) {
    return std::all_of(vs.begin(), vs.end(),
                       [&](Vertex v) { return g.degree(v) == g.degree(vs.front()); });
  };
  add("equal-clique-degrees", connected && equal_degrees(sp.clique()), rep.support_in_S);

  bool kernel_in_nulo_J = true;
  const auto nul_r = nullspace_basis(r);
  for (Index c = 0; c < nul_r.dim(); ++c) {
    Rational sum = 0;
    for (Index i = 0; i < s; ++i) sum += nul_r.matrix()(i, c);
    kernel_in_nulo_J = kernel_in_nulo_J && sum.is_zero();
  }
  add("equal-independent-degrees", connected && equal_degrees(sp.independent()), kernel_in_nulo_J);

  // K as a disjoint union of the S-neighbourhoods, every block nonempty.
  bool covering = s >= 1;
  std::vector<int> hits(static_cast<std::size_t>(k), 0);
  for (Index j = 0; j < s && covering; ++j) {
    Index deg = 0;
    for (Index i = 0; i < k; ++i) {
      if (!r(i, j).is_zero()) {
        ++deg;
        ++hits[static_cast<std::size_t>(i)];
      }
    }
    covering = deg > 0;
  }
  covering = covering && std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  add("neighborhood-partition", covering, nr.nullity == 0);

  add("clique-smaller", k < s, nr.nullity > 0);
  add("square-blocks", k == s, (nr.nullity > 0) == (nr.rank_R < s));

  VertexSet core = VertexSet::range(g.order());
  for (const auto& m : maximum_independent_sets(sp)) core = core & m;
  const bool in_core = nr.support.is_subset_of(core);
  const bool unbalanced = balance_class(sp) == Balance::unbalanced;
  add("unbalanced-support", unbalanced, in_core);
  add("threshold-support", is_threshold(g), in_core);

  const SwingReport sw = swing_report(sp);
  const VertexSet& w = sw.swing;
  const VertexSet& s_star = sw.always_independent;
  add("swing-singleton", unbalanced && sw.classification == SwingClass::singleton,
      nr.support.is_subset_of(s_star | w));
  add("swing-clique", unbalanced && sw.classification == SwingClass::clique,
      nr.support.is_subset_of(s_star) && (nr.support & w).empty());
  add("swing-independent", unbalanced && sw.classification == SwingClass::independent_set,
      w.is_subset_of(nr.support) && nr.support.is_subset_of(s_star | w));
  return rep;
}

}  // namespace splitnull
