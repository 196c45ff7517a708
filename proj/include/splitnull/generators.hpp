#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "splitnull/split.hpp"

namespace splitnull {

/// std::mt19937_64 (fully specified by the standard) with bounded draws done
/// here by rejection, since <random> distributions differ between standard
/// libraries. Same seed, same stream, on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform on [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  /// True with probability p, 0 <= p <= 1, denominator at most 2^63.
  bool bernoulli(const Rational& p);

 private:
  std::mt19937_64 engine_;
};

/// Seed for the i-th independent stream derived from a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// K = {0..k-1} complete, S = {k..k+s-1} edgeless, each K×S pair present
/// with probability p. Throws DomainError for k < 1 or p outside [0, 1].
SplitGraph random_split_graph(Index k, Index s, const Rational& p, std::uint64_t seed);
SplitGraph random_split_graph(Index k, Index s, const Rational& p, Rng& rng);

Graph random_graph(Vertex n, const Rational& p, Rng& rng);

/// Number of vertex pairs, i.e. bits in a graph6 body.
std::uint64_t edge_slots(Vertex n);

/// Graph whose edge set is the bit pattern `mask` over pairs in graph6 order
/// (j = 1..n-1, i = 0..j-1), bit 0 being pair (0, 1).
Graph graph_from_mask(Vertex n, std::uint64_t mask);

/// Orders above 8 are refused; 8 (2^28 graphs) needs allow_large.
void check_enumeration_order(Vertex n, bool allow_large);

/// Calls fn on every labelled graph on n vertices. Returns the count.
std::uint64_t enumerate_graphs(Vertex n, bool allow_large, const std::function<void(const Graph&)>& fn);

}  // namespace splitnull
