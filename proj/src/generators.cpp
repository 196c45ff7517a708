#include "splitnull/generators.hpp"

#include <limits>

namespace splitnull {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("Rng::below: bound must be positive");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return x % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw DomainError("Rng::between: empty range");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  return lo + static_cast<std::int64_t>(below(span));
}

bool Rng::bernoulli(const Rational& p) {
  if (p < Rational(0) || p > Rational(1))
    throw DomainError("edge probability " + p.str() + " outside [0, 1]");
  const mpz_class num = p.numerator();
  const mpz_class den = p.denominator();
  if (!den.fits_ulong_p() || den.get_ui() > (std::uint64_t{1} << 63))
    throw DomainError("edge probability denominator exceeds 2^63");
  return below(den.get_ui()) < num.get_ui();
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  // splitmix64 finaliser over base + stream * golden ratio
  std::uint64_t z = base + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SplitGraph random_split_graph(Index k, Index s, const Rational& p, Rng& rng) {
  if (k < 1) throw DomainError("random_split_graph: need k >= 1");
  if (s < 0) throw DomainError("random_split_graph: need s >= 0");
  if (p < Rational(0) || p > Rational(1))
    throw DomainError("edge probability " + p.str() + " outside [0, 1]");
  const auto kk = static_cast<Vertex>(k);
  const auto n = static_cast<Vertex>(k + s);
  Graph g(n);
  for (Vertex u = 0; u < kk; ++u)
    for (Vertex v = u + 1; v < kk; ++v) g.add_edge(u, v);
  for (Vertex u = 0; u < kk; ++u)
    for (Vertex v = kk; v < n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  std::vector<Vertex> clique;
  std::vector<Vertex> indep;
  for (Vertex v = 0; v < n; ++v) (v < kk ? clique : indep).push_back(v);
  return SplitGraph(std::move(g), SPartition{VertexSet(std::move(clique)), VertexSet(std::move(indep))});
}

SplitGraph random_split_graph(Index k, Index s, const Rational& p, std::uint64_t seed) {
  Rng rng(seed);
  return random_split_graph(k, s, p, rng);
}

Graph random_graph(Vertex n, const Rational& p, Rng& rng) {
  Graph g(n);
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (rng.bernoulli(p)) g.add_edge(i, j);
  return g;
}

std::uint64_t edge_slots(Vertex n) {
  return n < 2 ? 0 : static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
}

Graph graph_from_mask(Vertex n, std::uint64_t mask) {
  if (edge_slots(n) > 63) throw DomainError("graph_from_mask: too many edge slots");
  Graph g(n);
  int bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit)
      if ((mask >> bit) & 1) g.add_edge(i, j);
  return g;
}

void check_enumeration_order(Vertex n, bool allow_large) {
  if (n < 0) throw DomainError("enumeration order must be nonnegative");
  if (n > 8) throw DomainError("exhaustive enumeration is capped at n = 8");
  if (n == 8 && !allow_large)
    throw DomainError("n = 8 means 2^28 graphs; pass allow_large to enumerate it");
}

std::uint64_t enumerate_graphs(Vertex n, bool allow_large, const std::function<void(const Graph&)>& fn) {
  check_enumeration_order(n, allow_large);
  const std::uint64_t total = std::uint64_t{1} << edge_slots(n);
  for (std::uint64_t m = 0; m < total; ++m) fn(graph_from_mask(n, m));
  return total;
}

}  // namespace splitnull
