#pragma once

#include <vector>

#include "splitnull/split.hpp"

namespace splitnull {

/// Largest order accepted by the subset-enumerating oracles below.
inline constexpr Vertex kBruteForceMaxOrder = 20;

/// Kernel basis of A(g) in natural vertex order, by elimination on the full
/// adjacency matrix with no use of split structure.
QSubspace brute_nullspace(const Graph& g);

/// Split test by trying every vertex subset as the clique side.
bool brute_is_split(const Graph& g);
std::vector<SPartition> brute_s_partitions(const Graph& g);

std::vector<VertexSet> brute_maximum_cliques(const Graph& g);
std::vector<VertexSet> brute_maximum_independent_sets(const Graph& g);

/// Laplace expansion along the first row. Exponential; meant for small
/// matrices when cross-checking det_bareiss.
Rational cofactor_determinant(const QMatrix& m);

}  // namespace splitnull
