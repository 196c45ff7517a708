// Randomised invariants, each checked against elimination on the full
// adjacency matrix.
#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "splitnull/composition.hpp"
#include "splitnull/determinant.hpp"
#include "splitnull/generators.hpp"
#include "splitnull/graph_io.hpp"
#include "splitnull/nullspace.hpp"
#include "splitnull/oracle.hpp"

using namespace splitnull;

namespace {

constexpr int kRounds = 300;

// Sparse, dense and half-density edge sets between K and S.
Rational density(Rng& rng) {
  static const Rational choices[] = {Rational(1, 5), Rational(1, 2), Rational(4, 5), Rational(1)};
  return choices[rng.below(4)];
}

SplitGraph draw(Rng& rng, Index max_k, Index max_s, Index min_k = 1) {
  const Index k = rng.between(min_k, max_k);
  const Index s = rng.between(0, max_s);
  return random_split_graph(k, s, density(rng), rng);
}

// Random relabelling, so that K is not always a prefix.
Graph shuffled(const Graph& g, Rng& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

QMatrix in_order(const QMatrix& m, const std::vector<Vertex>& ordering) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < ordering.size(); ++i) out.row(static_cast<Index>(i)) = m.row(ordering[i]);
  return out;
}

}  // namespace

TEST(Properties, RecognitionMatchesBruteForce) {
  Rng rng(11);
  for (int round = 0; round < kRounds; ++round) {
    const Graph g = random_graph(static_cast<Vertex>(rng.between(1, 9)), Rational(1, 2), rng);
    const auto sp = recognize_split(g);
    ASSERT_EQ(sp.has_value(), brute_is_split(g)) << write_graph6(g);
    if (sp) {
      EXPECT_TRUE(is_s_partition(g, sp->partition()));
      EXPECT_EQ(all_s_partitions(*sp).size(), brute_s_partitions(g).size()) << write_graph6(g);
    }
  }
}

TEST(Properties, RelabelledSplitGraphsStaySplit) {
  Rng rng(12);
  for (int round = 0; round < kRounds; ++round) {
    const Graph g = shuffled(draw(rng, 8, 8).graph(), rng);
    const auto sp = recognize_split(g);
    ASSERT_TRUE(sp) << write_graph6(g);
    EXPECT_EQ(clique_number(*sp), static_cast<Index>(brute_maximum_cliques(g).front().size()));
    EXPECT_EQ(independence_number(*sp), static_cast<Index>(brute_maximum_independent_sets(g).front().size()));
  }
}

TEST(Properties, NullityFormula) {
  Rng rng(13);
  for (int round = 0; round < kRounds; ++round) {
    const SplitGraph sp = draw(rng, 10, 12, 2);
    const NullityReport r = nullity(sp);
    const QSubspace oracle = brute_nullspace(sp.graph());
    ASSERT_EQ(r.nullity, oracle.dim()) << write_graph6(sp.graph());
    ASSERT_TRUE(r.clique_kernel);
    EXPECT_LE(r.clique_kernel->dimension, 1);
    EXPECT_EQ(r.nullity, r.nul_R + r.clique_kernel->dimension);
    EXPECT_EQ(r.nul_R, sp.independent_size() - r.rank_R);
    EXPECT_EQ(r.support.members().size(), support_of(oracle).size());
  }
}

TEST(Properties, StructuredBasisSpansKernel) {
  Rng rng(14);
  for (int round = 0; round < kRounds; ++round) {
    const SplitGraph sp = draw(rng, 9, 12);
    const KernelBasis kb = structured_kernel_basis(sp);
    const QMatrix a = sp.adjacency();
    EXPECT_TRUE(is_zero_matrix(a * kb.vectors.matrix())) << write_graph6(sp.graph());
    const QSubspace oracle = QSubspace::spanned_by(in_order(brute_nullspace(sp.graph()).matrix(), sp.ordering()));
    EXPECT_TRUE(same_span(kb.vectors, oracle)) << write_graph6(sp.graph());
    EXPECT_EQ(kb.free_columns.size() + kb.pivot_columns.size(), static_cast<std::size_t>(sp.independent_size()));
    EXPECT_EQ(static_cast<Index>(kb.pivot_columns.size()), kb.rank_R);
    EXPECT_EQ(kb.rank_sp + kb.vectors.dim(), sp.order());
    // Independent vectors vanish on K; at most one vector touches K.
    const auto clique_count = std::count(kb.kinds.begin(), kb.kinds.end(), KernelVectorKind::clique_supported);
    EXPECT_LE(clique_count, 1);
    for (Index c = 0; c < kb.vectors.dim(); ++c)
      if (kb.kinds[static_cast<std::size_t>(c)] == KernelVectorKind::independent)
        EXPECT_TRUE(is_zero_matrix(kb.vectors.matrix().col(c).head(sp.clique_size())));
  }
}

TEST(Properties, DeterminantFormula) {
  Rng rng(15);
  for (int round = 0; round < kRounds; ++round) {
    const SplitGraph sp = draw(rng, 9, 9, 2);
    const Rational oracle = det_bareiss(sp.adjacency());
    ASSERT_EQ(det_split_schur(sp), oracle) << write_graph6(sp.graph());
    if (const auto lemma = lemma_factor(sp)) {
      EXPECT_EQ(singularity_criterion(sp), oracle.is_zero()) << write_graph6(sp.graph());
      EXPECT_EQ(singularity_quadratic_form(sp) == Rational(sp.clique_size() - 1), oracle.is_zero());
    }
  }
}

TEST(Properties, NullityOneAdjugate) {
  Rng rng(16);
  int seen = 0;
  for (int round = 0; round < 4 * kRounds; ++round) {
    const SplitGraph sp = draw(rng, 6, 6, 2);
    if (brute_nullspace(sp.graph()).dim() != 1) continue;
    ++seen;
    const NullityOneReport r = nullity_one_report(sp.graph());
    EXPECT_EQ(r.adjugate_rank, 1);
    EXPECT_TRUE(is_zero_matrix(adjacency_matrix(sp.graph()) * r.kernel_vector));
    EXPECT_EQ(r.support_from_adjugate, support(sp));
    for (Vertex v = 0; v < sp.order(); ++v)
      EXPECT_EQ(r.vertex_deleted_dets[static_cast<std::size_t>(v)].is_zero(), !r.support_from_adjugate.contains(v));
  }
  EXPECT_GT(seen, 20);
}

TEST(Properties, CompositionEmbedsKernel) {
  Rng rng(17);
  for (int round = 0; round < kRounds; ++round) {
    const SplitGraph sp = draw(rng, 5, 6);
    const Graph g = random_graph(static_cast<Vertex>(rng.between(0, 6)), Rational(1, 2), rng);
    const Graph h = tyshkevich_compose(sp, g);
    EXPECT_EQ(h.order(), sp.order() + g.order());
    EXPECT_EQ(h.size(), sp.graph().size() + g.size() + static_cast<std::size_t>(sp.clique_size() * g.order()));
    const QSubspace emb = embedded_kernel_vectors(sp, g);
    EXPECT_EQ(emb.dim(), sp.independent_size() - rank(sp.biadjacency()));
    const auto ord = composition_ordering(sp, g);
    EXPECT_TRUE(is_zero_matrix(adjacency_matrix(h, ord) * emb.matrix()));
    if (auto sp2 = recognize_split(g)) {
      const SplitGraph both = tyshkevich_compose(sp, *sp2);
      EXPECT_TRUE(is_s_partition(both.graph(), both.partition()));
    }
  }
}

TEST(Properties, SquareCompositionNonsingularity) {
  Rng rng(18);
  for (int round = 0; round < kRounds; ++round) {
    const Index k1 = rng.between(1, 4);
    const Index k2 = rng.between(1, 4);
    const SplitGraph a = random_split_graph(k1, k1, density(rng), rng);
    const SplitGraph b = random_split_graph(k2, k2, density(rng), rng);
    const SquareComposition sq = square_composition_nonsingularity(a, b);
    EXPECT_EQ(sq.composite, !det_bareiss(adjacency_matrix(tyshkevich_compose(a, b).graph())).is_zero());
    EXPECT_EQ(sq.composite, sq.left && sq.right);
  }
}

TEST(Properties, Graph6RoundTripOfSplitGraphs) {
  Rng rng(19);
  for (int round = 0; round < kRounds; ++round) {
    const Graph g = shuffled(draw(rng, 20, 30).graph(), rng);
    EXPECT_EQ(parse_graph6(write_graph6(g)), g);
  }
}
