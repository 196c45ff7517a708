#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "splitnull/nullspace.hpp"
#include "splitnull/oracle.hpp"

using namespace splitnull;
using fixtures::load_split;
using fixtures::path;
using fixtures::proportional;
using fixtures::vec;

namespace {

QVector natural_order(const QVector& v, const std::vector<Vertex>& ordering) {
  QVector out(v.size());
  for (std::size_t i = 0; i < ordering.size(); ++i) out(ordering[i]) = v(static_cast<Index>(i));
  return out;
}

}  // namespace

TEST(CliqueKernel, Examples) {
  const SplitGraph p3(path(3), SPartition{VertexSet{0, 1}, VertexSet{2}});
  const CliqueKernel ck = clique_kernel(p3);
  EXPECT_EQ(ck.dimension, 1);
  ASSERT_TRUE(ck.generator);
  EXPECT_EQ(*ck.generator, vec({1, 0}));

  EXPECT_EQ(clique_kernel(load_split("support_in_s.edges")).dimension, 0);

  const CliqueKernel clique_sup = clique_kernel(load_split("clique_supported.edges"));
  EXPECT_EQ(clique_sup.dimension, 1);
  EXPECT_EQ(*clique_sup.generator, vec({1, 1, -2, -1, -1, -1}));

  EXPECT_THROW(clique_kernel(SplitGraph(path(3), SPartition{VertexSet{1}, VertexSet{0, 2}})), DomainError);
}

TEST(Nullity, Examples) {
  const NullityReport clique_sup = nullity(load_split("clique_supported.edges"));
  EXPECT_EQ(clique_sup.nullity, 1);
  EXPECT_EQ(clique_sup.nul_R, 0);
  EXPECT_EQ(clique_sup.clique_kernel->dimension, 1);
  EXPECT_TRUE(clique_sup.support_meets_clique);

  const NullityReport indep = nullity(load_split("support_in_s.edges"));
  EXPECT_EQ(indep.nullity, 2);
  EXPECT_EQ(indep.nul_R, 2);
  EXPECT_EQ(indep.rank_R, 3);
  EXPECT_EQ(indep.clique_kernel->dimension, 0);

  // |K| < |S| forces a kernel.
  const SplitGraph star(fixtures::star(3), SPartition{VertexSet{0}, VertexSet{1, 2, 3}});
  EXPECT_GE(nullity(star).nullity, 1);
  const SplitGraph p3(path(3), SPartition{VertexSet{1}, VertexSet{0, 2}});
  EXPECT_EQ(nullity(p3).nullity, 1);
  EXPECT_FALSE(nullity(p3).clique_kernel.has_value());
}

TEST(Nullity, MatchesOracleOnExamples) {
  for (const char* name : {"swing_singleton.edges", "support_in_s.edges", "clique_supported.edges", "clique_supported9.edges", "p3.edges", "p4.edges",
                           "k3.edges"}) {
    const Graph g = fixtures::load(name);
    for (const SPartition& p : brute_s_partitions(g)) {
      const SplitGraph sp(g, p);
      const QSubspace oracle = brute_nullspace(g);
      const NullityReport r = nullity(sp);
      EXPECT_EQ(r.nullity, oracle.dim()) << name << " " << p.str();
      std::vector<Vertex> supp;
      for (Index i : support_of(oracle)) supp.push_back(static_cast<Vertex>(i));
      EXPECT_EQ(r.support, VertexSet(supp)) << name;
    }
  }
}

TEST(Support, Examples) {
  EXPECT_EQ(support(load_split("support_in_s.edges")), (VertexSet{4, 5, 6, 7, 8}));
  EXPECT_EQ(support(load_split("clique_supported.edges")), VertexSet::range(10));
  EXPECT_TRUE(support(load_split("k3.edges")).empty());
  EXPECT_TRUE(support(load_split("p4.edges")).empty());
  EXPECT_EQ(support(load_split("swing_singleton.edges")), (VertexSet{5, 6, 7, 8}));
}

TEST(StructuredBasis, P3) {
  const SplitGraph p3(path(3), SPartition{VertexSet{0, 1}, VertexSet{2}});
  const KernelBasis kb = structured_kernel_basis(p3);
  ASSERT_EQ(kb.vectors.dim(), 1);
  EXPECT_TRUE(proportional(natural_order(kb.vectors.vector(0), kb.ordering), vec({-1, 0, 1})));
  EXPECT_EQ(*kb.z, vec({1, 0}));
  EXPECT_EQ(kb.kinds, (std::vector<KernelVectorKind>{KernelVectorKind::clique_supported}));
}

TEST(StructuredBasis, CliqueSupported) {
  const KernelBasis kb = structured_kernel_basis(load_split("clique_supported.edges"));
  ASSERT_EQ(kb.vectors.dim(), 1);
  EXPECT_TRUE(proportional(kb.vectors.vector(0), vec({1, 1, -2, -1, -1, -1, 1, 2, 1, 1})));
  EXPECT_EQ(kb.rank_R, 4);
  EXPECT_EQ(kb.rank_sp, 9);
}

TEST(StructuredBasis, CliqueSupportedNine) {
  const KernelBasis kb = structured_kernel_basis(load_split("clique_supported9.edges"));
  ASSERT_EQ(kb.vectors.dim(), 1);
  EXPECT_TRUE(proportional(kb.vectors.vector(0), vec({1, 0, 1, 1, -1, -1, -1, 1, -1})));
}

TEST(StructuredBasis, IndependentVectorsForFreeColumns) {
  const SplitGraph sp = load_split("support_in_s.edges");
  const KernelBasis kb = structured_kernel_basis(sp);
  EXPECT_EQ(kb.vectors.dim(), 2);
  EXPECT_EQ(kb.free_columns.size(), 2u);
  EXPECT_EQ(kb.pivot_columns.size(), 3u);
  for (auto k : kb.kinds) EXPECT_EQ(k, KernelVectorKind::independent);
  EXPECT_TRUE(same_span(kb.vectors, QSubspace::from_independent(brute_nullspace(sp.graph()).matrix())));
}

TEST(StructuredBasis, SmallCliques) {
  // K1 alone: e_a spans the kernel.
  const SplitGraph k1(Graph(1), SPartition{VertexSet{0}, VertexSet{}});
  EXPECT_EQ(structured_kernel_basis(k1).vectors.dim(), 1);
  // Empty clique side: every vertex is free.
  const SplitGraph e3(Graph(3), SPartition{VertexSet{}, VertexSet{0, 1, 2}});
  EXPECT_EQ(structured_kernel_basis(e3).vectors.dim(), 3);
}

TEST(NullityOne, P3) {
  const NullityOneReport r = nullity_one_report(path(3));
  EXPECT_EQ(r.adjugate_rank, 1);
  EXPECT_EQ(r.vertex_deleted_dets, (std::vector<Rational>{-1, 0, -1}));
  EXPECT_EQ(r.support_from_adjugate, (VertexSet{0, 2}));
  EXPECT_TRUE(proportional(r.kernel_vector, vec({-1, 0, 1})));
  const Rational xa = r.kernel_vector(0);
  EXPECT_EQ(xa * xa, Rational(1));
}

TEST(NullityOne, CliqueSupported) {
  const Graph g = fixtures::load("clique_supported.edges");
  const NullityOneReport r = nullity_one_report(g);
  EXPECT_EQ(r.support_from_adjugate, VertexSet::range(10));
  const Vertex u = r.reference_vertex;
  for (Vertex v = 0; v < 10; ++v)
    EXPECT_EQ(r.adjugate_column(v) * r.adjugate_column(v),
              r.vertex_deleted_dets[static_cast<std::size_t>(v)] * r.vertex_deleted_dets[static_cast<std::size_t>(u)]);
  EXPECT_THROW(nullity_one_report(fixtures::load("support_in_s.edges")), DomainError);
  EXPECT_THROW(nullity_one_report(fixtures::complete(3)), DomainError);
}

TEST(ImageBasis, Examples) {
  EXPECT_TRUE(image_basis_by_deletion(path(3), 0));
  EXPECT_THROW(image_basis_by_deletion(path(3), 1), DomainError);
  EXPECT_THROW(image_basis_by_deletion(path(3), 7), DimensionError);
  const Graph clique_sup9 = fixtures::load("clique_supported9.edges");
  for (Vertex s : nullity_one_report(clique_sup9).support_from_adjugate) EXPECT_TRUE(image_basis_by_deletion(clique_sup9, s));
  EXPECT_THROW(image_basis_by_deletion(fixtures::load("swing_singleton.edges"), 5), DomainError);
}

TEST(Predicates, SupportInSWithoutOnesInImage) {
  const PredicateReport pr = support_location_predicates(load_split("support_in_s.edges"));
  EXPECT_FALSE(pr.ones_in_image_R);
  EXPECT_TRUE(pr.support_in_S);
  EXPECT_FALSE(pr.at("ones-in-image-R").hypothesis);
  EXPECT_TRUE(pr.all_hold());
}

TEST(Predicates, SwingCases) {
  // P3 with W = {a, c} independent.
  const PredicateReport p3 = support_location_predicates(*recognize_split(path(3)));
  EXPECT_TRUE(p3.at("swing-independent").hypothesis);
  EXPECT_TRUE(p3.at("swing-independent").conclusion);
  EXPECT_EQ(p3.support, (VertexSet{0, 2}));

  const PredicateReport k3 = support_location_predicates(*recognize_split(fixtures::complete(3)));
  EXPECT_TRUE(k3.at("swing-clique").hypothesis);
  EXPECT_TRUE(k3.at("swing-clique").conclusion);

  const PredicateReport singleton = support_location_predicates(load_split("swing_singleton.edges"));
  EXPECT_TRUE(singleton.at("swing-singleton").hypothesis);
  EXPECT_TRUE(singleton.at("swing-singleton").conclusion);
  EXPECT_TRUE(singleton.at("unbalanced-support").conclusion);
  EXPECT_TRUE(singleton.all_hold());
}

TEST(Predicates, SizeConditions) {
  const PredicateReport p4 = support_location_predicates(*recognize_split(path(4)));
  EXPECT_TRUE(p4.at("square-blocks").hypothesis);
  EXPECT_TRUE(p4.at("square-blocks").conclusion);
  EXPECT_TRUE(p4.at("neighborhood-partition").hypothesis);
  EXPECT_TRUE(p4.at("neighborhood-partition").conclusion);

  const PredicateReport clique_sup9 = support_location_predicates(load_split("clique_supported9.edges"));
  EXPECT_FALSE(clique_sup9.at("clique-smaller").hypothesis);
  const SplitGraph star(fixtures::star(3), SPartition{VertexSet{0}, VertexSet{1, 2, 3}});
  const PredicateReport s = support_location_predicates(star);
  EXPECT_TRUE(s.at("clique-smaller").hypothesis);
  EXPECT_TRUE(s.at("clique-smaller").conclusion);
  EXPECT_THROW(s.at("no-such-predicate"), std::out_of_range);
}
