#include "splitnull/split.hpp"

#include <algorithm>
#include <numeric>

namespace splitnull {

std::string SPartition::str() const { return "(" + clique.str() + "," + independent.str() + ")"; }

bool is_s_partition(const Graph& g, const SPartition& p) {
  if (p.clique.size() + p.independent.size() != static_cast<std::size_t>(g.order())) return false;
  if (!(p.clique & p.independent).empty()) return false;
  for (Vertex v : p.clique)
    if (v < 0 || v >= g.order()) return false;
  for (Vertex v : p.independent)
    if (v < 0 || v >= g.order()) return false;
  return is_clique(g, p.clique) && is_independent(g, p.independent);
}

QMatrix biadjacency(const Graph& g, const SPartition& p) {
  if (!is_s_partition(g, p)) throw DomainError("biadjacency: " + p.str() + " is not an s-partition");
  const auto k = static_cast<Index>(p.clique.size());
  const auto s = static_cast<Index>(p.independent.size());
  QMatrix r = QMatrix::Zero(k, s);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < s; ++j)
      if (g.adjacent(p.clique[static_cast<std::size_t>(i)], p.independent[static_cast<std::size_t>(j)]))
        r(i, j) = 1;
  return r;
}

SplitGraph::SplitGraph(Graph g, SPartition p) : graph_(std::move(g)), partition_(std::move(p)) {
  if (graph_.order() == 0) throw DomainError("a split graph needs at least one vertex");
  biadjacency_ = splitnull::biadjacency(graph_, partition_);
  ordering_ = partition_.clique.members();
  ordering_.insert(ordering_.end(), partition_.independent.begin(), partition_.independent.end());
}

QMatrix SplitGraph::adjacency() const { return adjacency_matrix(graph_, ordering_); }

VertexSet SplitGraph::vertices_at(const std::vector<Index>& positions) const {
  std::vector<Vertex> out;
  out.reserve(positions.size());
  for (Index i : positions) out.push_back(ordering_.at(static_cast<std::size_t>(i)));
  return VertexSet(std::move(out));
}

std::optional<SplitGraph> recognize_split(const Graph& g) {
  const Vertex n = g.order();
  if (n == 0) return std::nullopt;
  std::vector<Vertex> by_degree(static_cast<std::size_t>(n));
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) {
    return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
  });

  // m = max{i : d_i >= i - 1}, 1-based over the non-increasing degree sequence.
  std::size_t m = 0;
  for (std::size_t i = 0; i < by_degree.size(); ++i)
    if (deg[static_cast<std::size_t>(by_degree[i])] >= static_cast<int>(i)) m = i + 1;

  long long head = 0;
  long long tail = 0;
  for (std::size_t i = 0; i < by_degree.size(); ++i)
    (i < m ? head : tail) += deg[static_cast<std::size_t>(by_degree[i])];
  const auto mm = static_cast<long long>(m);
  if (head != mm * (mm - 1) + tail) return std::nullopt;

  // Equality forces the top-m block to be a clique and the rest to be
  // edgeless, whatever order ties were broken in.
  SPartition p{VertexSet(std::vector<Vertex>(by_degree.begin(), by_degree.begin() + static_cast<std::ptrdiff_t>(m))),
               VertexSet(std::vector<Vertex>(by_degree.begin() + static_cast<std::ptrdiff_t>(m), by_degree.end()))};
  if (!is_s_partition(g, p))
    throw TheoremViolation("recognize-split", "splittance equality held but " + p.str() +
                                                    " is not an s-partition");
  return SplitGraph(g, std::move(p));
}

std::vector<SPartition> all_s_partitions(const SplitGraph& sp) {
  const Graph& g = sp.graph();
  const VertexSet& k = sp.clique();
  const VertexSet& s = sp.independent();
  std::vector<SPartition> out{sp.partition()};
  auto consider = [&](SPartition cand) {
    if (is_s_partition(g, cand)) out.push_back(std::move(cand));
  };
  for (Vertex x : k) consider({k - VertexSet{x}, s | VertexSet{x}});
  for (Vertex y : s) consider({k | VertexSet{y}, s - VertexSet{y}});
  for (Vertex x : k)
    for (Vertex y : s) consider({(k - VertexSet{x}) | VertexSet{y}, (s - VertexSet{y}) | VertexSet{x}});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Index clique_number(const SplitGraph& sp) {
  const auto k = sp.clique_size();
  for (Vertex v : sp.independent())
    if (sp.graph().degree(v) == k) return k + 1;
  return k;
}

Index independence_number(const SplitGraph& sp) {
  const QMatrix& r = sp.biadjacency();
  for (Index i = 0; i < r.rows(); ++i)
    if (is_zero_matrix(r.row(i))) return sp.independent_size() + 1;
  return sp.independent_size();
}

Balance balance_class(const SplitGraph& sp) {
  const Index total = clique_number(sp) + independence_number(sp);
  if (total == sp.order()) return Balance::balanced;
  if (total == sp.order() + 1) return Balance::unbalanced;
  throw TheoremViolation("balance", "omega + alpha = " + std::to_string(total) +
                                           " is neither n nor n + 1");
}

std::string_view to_string(Balance b) {
  return b == Balance::balanced ? "balanced" : "unbalanced";
}

std::string_view to_string(SwingClass c) {
  switch (c) {
    case SwingClass::empty: return "empty";
    case SwingClass::singleton: return "singleton";
    case SwingClass::clique: return "clique";
    case SwingClass::independent_set: return "independent_set";
  }
  return "?";
}

SwingReport swing_report(const SplitGraph& sp) {
  SwingReport rep;
  rep.all_partitions = all_s_partitions(sp);
  VertexSet in_some_clique;
  VertexSet in_some_independent;
  rep.always_clique = rep.all_partitions.front().clique;
  rep.always_independent = rep.all_partitions.front().independent;
  for (const auto& p : rep.all_partitions) {
    in_some_clique = in_some_clique | p.clique;
    in_some_independent = in_some_independent | p.independent;
    rep.always_clique = rep.always_clique & p.clique;
    rep.always_independent = rep.always_independent & p.independent;
  }
  rep.swing = in_some_clique & in_some_independent;
  if (rep.swing.empty())
    rep.classification = SwingClass::empty;
  else if (rep.swing.size() == 1)
    rep.classification = SwingClass::singleton;
  else if (is_clique(sp.graph(), rep.swing))
    rep.classification = SwingClass::clique;
  else if (is_independent(sp.graph(), rep.swing))
    rep.classification = SwingClass::independent_set;
  else
    throw TheoremViolation("swing-structure",
                           "W = " + rep.swing.str() + " is neither a clique nor independent");
  return rep;
}

std::vector<SPartition> closed_form_partitions(const SwingReport& rep) {
  const VertexSet& ks = rep.always_clique;
  const VertexSet& ss = rep.always_independent;
  const VertexSet& w = rep.swing;
  std::vector<SPartition> out;
  switch (rep.classification) {
    case SwingClass::empty:
      out.push_back({ks, ss});
      break;
    case SwingClass::singleton:
      out.push_back({ks | w, ss});
      out.push_back({ks, ss | w});
      break;
    case SwingClass::clique:
      out.push_back({ks | w, ss});
      for (Vertex x : w) out.push_back({ks | (w - VertexSet{x}), ss | VertexSet{x}});
      break;
    case SwingClass::independent_set:
      out.push_back({ks, ss | w});
      for (Vertex x : w) out.push_back({ks | VertexSet{x}, ss | (w - VertexSet{x})});
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> maximum_cliques(const SplitGraph& sp) {
  // A clique meets S in at most one vertex, so every maximal clique is K or
  // N(v) + v for some v in S.
  std::vector<VertexSet> cand;
  if (!sp.clique().empty()) cand.push_back(sp.clique());
  for (Vertex v : sp.independent()) cand.push_back(sp.graph().neighbors(v) | VertexSet{v});
  std::size_t best = 0;
  for (const auto& c : cand) best = std::max(best, c.size());
  std::vector<VertexSet> out;
  for (auto& c : cand)
    if (c.size() == best) out.push_back(std::move(c));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SplitGraph complement(const SplitGraph& sp) {
  return SplitGraph(complement(sp.graph()), SPartition{sp.independent(), sp.clique()});
}

std::vector<VertexSet> maximum_independent_sets(const SplitGraph& sp) {
  return maximum_cliques(complement(sp));
}

SplitGraph threshold_graph(std::string_view bits) {
  if (bits.empty()) throw DomainError("threshold_graph: empty creation sequence");
  if (bits.front() != '0') throw DomainError("threshold_graph: sequence must start with '0'");
  const auto n = static_cast<Vertex>(bits.size());
  Graph g(n);
  std::vector<Vertex> k;
  std::vector<Vertex> s;
  for (Vertex v = 0; v < n; ++v) {
    const char b = bits[static_cast<std::size_t>(v)];
    if (b != '0' && b != '1')
      throw DomainError(std::string("threshold_graph: invalid symbol '") + b + "'");
    if (b == '1') {
      for (Vertex u = 0; u < v; ++u) g.add_edge(u, v);
      k.push_back(v);
    } else {
      s.push_back(v);
    }
  }
  return SplitGraph(std::move(g), SPartition{VertexSet(std::move(k)), VertexSet(std::move(s))});
}

bool is_threshold(const Graph& g) {
  std::vector<bool> alive(static_cast<std::size_t>(g.order()), true);
  Vertex remaining = g.order();
  while (remaining > 0) {
    bool removed = false;
    for (Vertex v = 0; v < g.order() && !removed; ++v) {
      if (!alive[static_cast<std::size_t>(v)]) continue;
      Vertex live_deg = 0;
      for (Vertex u = 0; u < g.order(); ++u)
        if (alive[static_cast<std::size_t>(u)] && g.adjacent(u, v)) ++live_deg;
      if (live_deg == 0 || live_deg == remaining - 1) {
        alive[static_cast<std::size_t>(v)] = false;
        --remaining;
        removed = true;
      }
    }
    if (!removed) return false;
  }
  return true;
}

}  // namespace splitnull
