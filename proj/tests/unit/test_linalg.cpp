#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "splitnull/linalg.hpp"
#include "splitnull/oracle.hpp"

using namespace splitnull;
using fixtures::mat;
using fixtures::vec;

namespace {

// Biadjacency of the two-dimensional-kernel example: third row = first + second.
QMatrix example_r() {
  return mat({{0, 0, 0, 1, 1}, {0, 1, 1, 0, 0}, {0, 1, 1, 1, 1}, {1, 0, 1, 0, 1}});
}

QMatrix j_minus_i(Index n) { return QMatrix::Constant(n, n, Rational(1)) - QMatrix::Identity(n, n); }

}  // namespace

TEST(Rref, IdentityAndZero) {
  const auto id = rref(QMatrix::Identity(2, 2));
  EXPECT_EQ(id.reduced, QMatrix(QMatrix::Identity(2, 2)));
  EXPECT_EQ(id.pivots, (std::vector<Index>{0, 1}));
  EXPECT_EQ(id.rank(), 2);

  const auto zero = rref(QMatrix::Zero(3, 3));
  EXPECT_TRUE(zero.pivots.empty());
  EXPECT_TRUE(is_zero_matrix(zero.reduced));
}

TEST(Rref, ReducedEchelonForm) {
  const auto r = rref(mat({{2, 4, 1}, {1, 2, 0}, {3, 6, 1}}));
  EXPECT_EQ(r.pivots, (std::vector<Index>{0, 2}));
  EXPECT_EQ(r.reduced, mat({{1, 2, 0}, {0, 0, 1}, {0, 0, 0}}));
}

TEST(Rref, ExampleBiadjacencyHasRankThree) { EXPECT_EQ(rank(example_r()), 3); }

TEST(Nullspace, Examples) {
  const auto id = nullspace_basis(QMatrix::Identity(3, 3));
  EXPECT_EQ(id.dim(), 0);
  EXPECT_EQ(id.ambient_dim(), 3);

  const auto j = nullspace_basis(QMatrix::Constant(3, 3, Rational(1)));
  ASSERT_EQ(j.dim(), 2);
  EXPECT_TRUE(is_zero_matrix(ones(3).transpose() * j.matrix()));

  const auto r = nullspace_basis(example_r());
  EXPECT_EQ(r.dim(), 2);
  EXPECT_EQ(support_of(r), (std::vector<Index>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(is_zero_matrix(example_r() * r.matrix()));
}

TEST(Bareiss, Examples) {
  EXPECT_EQ(det_bareiss(QMatrix::Identity(5, 5)), Rational(1));
  EXPECT_EQ(det_bareiss(j_minus_i(3)), Rational(2));
  EXPECT_EQ(det_bareiss(adjacency_matrix(fixtures::path(3))), Rational(0));
  EXPECT_EQ(det_bareiss(mat({{0, 1}, {1, 0}})), Rational(-1));
  EXPECT_EQ(det_bareiss(QMatrix(0, 0)), Rational(1));
  EXPECT_THROW(det_bareiss(QMatrix(2, 3)), DimensionError);
}

TEST(Bareiss, AgreesWithCofactorExpansion) {
  const QMatrix m = mat({{3, -1, 2, 0}, {1, 4, -2, 5}, {0, 2, 7, -3}, {6, 1, 0, 2}});
  EXPECT_EQ(det_bareiss(m), cofactor_determinant(m));
  const QMatrix needs_pivot = mat({{0, 0, 1}, {0, 2, 0}, {3, 0, 0}});
  EXPECT_EQ(det_bareiss(needs_pivot), Rational(-6));
}

TEST(Adjugate, Examples) {
  EXPECT_EQ(adjugate(QMatrix::Identity(3, 3)), QMatrix(QMatrix::Identity(3, 3)));

  const QMatrix p3 = adjacency_matrix(fixtures::path(3));
  const QMatrix adj = adjugate(p3);
  EXPECT_EQ(rank(adj), 1);
  EXPECT_EQ(adj, QMatrix(adj.transpose()));
  EXPECT_EQ(adj.diagonal(), vec({-1, 0, -1}));
  EXPECT_TRUE(is_zero_matrix(p3 * adj));

  const QMatrix m = mat({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  EXPECT_EQ(adjugate(m), QMatrix(det_bareiss(m) * *inverse(m)));
  EXPECT_EQ(QMatrix(m * adjugate(m)), QMatrix(det_bareiss(m) * QMatrix::Identity(3, 3)));
}

TEST(Adjugate, RankDeficientByTwoIsZero) {
  EXPECT_TRUE(is_zero_matrix(adjugate(QMatrix::Constant(3, 3, Rational(1)))));
}

TEST(Solve, Examples) {
  EXPECT_EQ(*solve_particular(QMatrix::Identity(3, 3), vec({4, -1, 7})), vec({4, -1, 7}));
  EXPECT_FALSE(solve_particular(example_r(), ones(4)).has_value());
  EXPECT_EQ(*solve_particular(mat({{0}, {1}}), vec({0, 1})), vec({1}));
  EXPECT_FALSE(solve_particular(mat({{0}, {1}}), vec({1, 0})).has_value());
}

TEST(ImageContains, Examples) {
  EXPECT_TRUE(image_contains(example_r(), QVector::Zero(4)));
  EXPECT_FALSE(image_contains(example_r(), ones(4)));
  EXPECT_TRUE(image_contains(mat({{1, 0}, {1, 1}, {1, 0}}), ones(3)));
}

TEST(Subspaces, Intersections) {
  const QSubspace full = QSubspace::from_independent(QMatrix::Identity(3, 3));
  EXPECT_EQ(subspace_intersect(full, full).dim(), 3);

  const QSubspace e1 = QSubspace::from_independent(mat({{1}, {0}, {0}}));
  const QSubspace e2 = QSubspace::from_independent(mat({{0}, {1}, {0}}));
  EXPECT_EQ(subspace_intersect(e1, e2).dim(), 0);

  // P3 with K = {a, b}, S = {c}: R = (0, 1)^t.
  const QMatrix r = mat({{0}, {1}});
  const auto ck = subspace_intersect(nullspace_basis(r.transpose()), image_basis(clique_block_inverse(2) * r));
  ASSERT_EQ(ck.dim(), 1);
  EXPECT_TRUE(fixtures::proportional(ck.vector(0), vec({1, 0})));
}

TEST(Subspaces, SpanQueries) {
  const QSubspace plane = QSubspace::spanned_by(mat({{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}));
  EXPECT_EQ(plane.dim(), 2);
  EXPECT_TRUE(span_contains(plane, vec({3, -2, 0})));
  EXPECT_FALSE(span_contains(plane, vec({0, 0, 1})));
  EXPECT_TRUE(same_span(plane, QSubspace::from_independent(mat({{1, 1}, {1, -1}, {0, 0}}))));
  EXPECT_THROW(QSubspace::from_independent(mat({{1, 2}, {1, 2}})), DimensionError);
}

TEST(Helpers, PrimitiveIntegerVector) {
  QVector v(3);
  v << Rational(-1, 2), Rational(0), Rational(3, 4);
  EXPECT_EQ(primitive_integer_vector(v), vec({2, 0, -3}));
  EXPECT_EQ(primitive_integer_vector(vec({0, 6, -4})), vec({0, 3, -2}));
}

TEST(Helpers, CliqueBlockInverse) {
  for (Index k = 2; k <= 6; ++k)
    EXPECT_EQ(QMatrix(clique_block_inverse(k) * (QMatrix::Identity(k, k) - QMatrix::Constant(k, k, Rational(1)))),
              QMatrix(QMatrix::Identity(k, k)));
}
