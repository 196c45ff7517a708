#include "splitnull/determinant.hpp"

namespace splitnull {

namespace {

void require_clique_pair(const SplitGraph& sp, const char* who) {
  if (sp.clique_size() < 2)
    throw DomainError(std::string(who) + ": requires |K| >= 2");
}

QVector column_sums(const QMatrix& r) { return r.transpose() * ones(r.rows()); }

}  // namespace

Rational schur_factor(const SplitGraph& sp) {
  require_clique_pair(sp, "schur_factor");
  const QMatrix& r = sp.biadjacency();
  const Rational km1(sp.clique_size() - 1);
  const QVector rv = column_sums(r);
  QMatrix m = r.transpose() * r;
  m -= rv * rv.transpose() / km1;
  return det_bareiss(m);
}

std::optional<Rational> lemma_factor(const SplitGraph& sp) {
  require_clique_pair(sp, "lemma_factor");
  const QMatrix& r = sp.biadjacency();
  if (rank(r) != r.cols()) return std::nullopt;
  const Rational km1(sp.clique_size() - 1);
  const QMatrix gram = r.transpose() * r;
  return (Rational(1) - singularity_quadratic_form(sp) / km1) * det_bareiss(gram);
}

Rational det_split_schur(const SplitGraph& sp) {
  const Rational factor = schur_factor(sp);
  if (auto lf = lemma_factor(sp); lf && *lf != factor)
    throw TheoremViolation("det-lemma", "determinant lemma form " + lf->str() +
                                               " differs from " + factor.str());
  const Index k = sp.clique_size();
  Rational det = Rational(k - 1) * factor;
  if ((k - 1) % 2 != 0) det = -det;
  return det;
}

Rational singularity_quadratic_form(const SplitGraph& sp) {
  require_clique_pair(sp, "singularity_criterion");
  const QMatrix& r = sp.biadjacency();
  if (rank(r) != r.cols())
    throw DomainError("singularity_criterion: requires nulo(R) = {0}");
  const QVector rv = column_sums(r);
  const auto gram_inv = inverse(QMatrix(r.transpose() * r));
  // R^t R is invertible because R has full column rank.
  return rv.dot(*gram_inv * rv);
}

bool singularity_criterion(const SplitGraph& sp) {
  return singularity_quadratic_form(sp) == Rational(sp.clique_size() - 1);
}

}  // namespace splitnull
