#pragma once

#include <vector>

#include "splitnull/split.hpp"

namespace splitnull {

/// Sp ∘ G: Sp keeps vertex ids 0..|Sp|-1, G is shifted by |Sp|, and every
/// vertex of K is joined to every vertex of G.
Graph tyshkevich_compose(const SplitGraph& sp, const Graph& g);

/// Sp ∘ Sp' with the s-partition (K ∪ K', S ∪ S').
SplitGraph tyshkevich_compose(const SplitGraph& sp, const SplitGraph& sp2);

/// Composite vertex ids in (K, S, V(G)) order.
std::vector<Vertex> composition_ordering(const SplitGraph& sp, const Graph& g);

/// {(0, z, 0) : z in a basis of nulo(R)} in (K, S, V(G)) order; each vector
/// is checked against A(Sp ∘ G).
QSubspace embedded_kernel_vectors(const SplitGraph& sp, const Graph& g);

struct SquareComposition {
  bool composite = false;  // Sp ∘ Sp' nonsingular
  bool left = false;
  bool right = false;
};

/// Throws DomainError unless |K| = |S| and |K'| = |S'|.
SquareComposition square_composition_nonsingularity(const SplitGraph& sp, const SplitGraph& sp2);

}  // namespace splitnull
