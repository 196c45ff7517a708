#pragma once

#include <optional>

#include "splitnull/split.hpp"

namespace splitnull {

/// det(R^t R - r r^t/(k - 1)) with r = R^t 1. Throws DomainError when k < 2.
Rational schur_factor(const SplitGraph& sp);

/// (1 - r^t (R^t R)^-1 r/(k - 1)) det(R^t R), defined when nulo(R) = {0}.
std::optional<Rational> lemma_factor(const SplitGraph& sp);

/// det A(Sp) = (-1)^(k-1) (k-1) schur_factor(sp). When R has full column
/// rank the lemma form is computed too and must agree.
Rational det_split_schur(const SplitGraph& sp);

/// r^t (R^t R)^-1 r. Throws DomainError unless k >= 2 and nulo(R) = {0}.
Rational singularity_quadratic_form(const SplitGraph& sp);

/// True (singular) iff the quadratic form equals k - 1.
bool singularity_criterion(const SplitGraph& sp);

}  // namespace splitnull
