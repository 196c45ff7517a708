#include "splitnull/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <thread>

#include "splitnull/composition.hpp"
#include "splitnull/determinant.hpp"
#include "splitnull/generators.hpp"
#include "splitnull/graph_io.hpp"
#include "splitnull/nullspace.hpp"
#include "splitnull/oracle.hpp"

namespace splitnull {

namespace {

using T = TheoremId;

constexpr TheoremInfo kCatalog[] = {
    {T::graph6_roundtrip, "graph6-roundtrip", "graph6 decode(encode(g)) = g and re-encoding is byte-identical"},
    {T::oracle_consistency, "oracle-consistency", "oracle kernel basis is annihilated by A(G) and has n - rank(A) vectors"},
    {T::twin_classes, "twin-classes", "twin classes partition V, agree with the pairwise relation, and each is a clique or independent"},
    {T::recognize_split, "recognize-split", "splittance recognition agrees with brute-force bipartition"},
    {T::complement_split, "complement-split", "the complement of a split graph is split"},
    {T::s_partitions, "s-partitions", "all_s_partitions equals the brute-force list of s-partitions"},
    {T::max_sets, "max-sets", "maximum cliques / independent sets and omega, alpha from any s-partition agree with brute force"},
    {T::threshold, "threshold-construction", "creation sequences give threshold, split, unbalanced graphs"},
    {T::kernel_equations, "kernel-equations", "(x_K, x_S) in nulo(Sp) iff (I - J)x_K = R x_S and R^t x_K = 0"},
    {T::embedded_R_kernel, "R-kernel-embedding", "(0, z) in nulo(Sp) for z in nulo(R), with equality iff Supp in S"},
    {T::nullity_lower_bound, "nullity-lower-bound", "nul(Sp) >= nul(R) = |S| - rank(R), with equality iff Supp in S"},
    {T::zero_sum_clique_part, "zero-sum-clique-part", "kernel vectors with 1^t x_K = 0 have x_K = 0"},
    {T::ones_in_image, "ones-in-image-support", "1 in im(R) implies Supp in S"},
    {T::image_criterion, "image-criterion", "1 in im(M) iff every vector of nulo(M^t) sums to zero"},
    {T::neighborhood_sum, "neighborhood-sum", "if N(v) cap S is the disjoint union of N(u) cap S over u in W then y_v = sum y_u on im(R)"},
    {T::cliqueker_facts, "clique-kernel-facts", "K-parts of kernel vectors span the clique kernel, which extends to kernel vectors; Supp in S iff it is zero; singular implies Supp meets S"},
    {T::clique_smaller, "clique-smaller-singular", "|K| < |S| implies singular"},
    {T::square_blocks, "square-blocks", "|K| = |S| implies (Sp singular iff R singular)"},
    {T::degree_regular, "degree-regularity", "connected with equal clique degrees gives Supp in S; equal independent degrees gives nulo(R) in nulo(J)"},
    {T::neighborhood_partition, "neighborhood-partition", "K the disjoint union of nonempty S-neighbourhoods implies nonsingular"},
    {T::balance, "balance", "omega + alpha is n or n + 1; balanced iff one s-partition; unbalanced part sizes are (omega, alpha - 1) or (omega - 1, alpha)"},
    {T::tripartition, "tripartition", "V is the disjoint union of K*, W and S*; W empty iff balanced"},
    {T::closed_forms, "partition-closed-forms", "the s-partitions are exactly those predicted from K*, W, S* and the shape of W"},
    {T::max_sets_in_partitions, "max-sets-in-partitions", "in unbalanced graphs every maximum clique is a K side and every maximum independent set an S side"},
    {T::balanced_uniqueness, "balanced-uniqueness", "balanced: K unique maximum clique iff no S vertex of degree |K| - 1; S unique maximum independent set iff no K vertex with one S neighbour"},
    {T::unbalanced_support, "unbalanced-support", "unbalanced implies Supp inside every maximum independent set"},
    {T::threshold_support, "threshold-support", "threshold graphs are unbalanced with Supp inside every maximum independent set"},
    {T::swing_twins, "swing-twins", "W is the twin class of each of its members"},
    {T::adjacent_twins_equal, "adjacent-twins-equal", "adjacent twins carry equal entries in every kernel vector"},
    {T::swing_structure, "swing-structure", "W is a clique or an independent set of mutual twins"},
    {T::swing_singleton, "swing-singleton", "unbalanced with W = {w}: Supp in S* + w"},
    {T::swing_clique, "swing-clique", "unbalanced with W a clique of size >= 2: Supp in S*, W disjoint from Supp"},
    {T::swing_independent, "swing-independent", "unbalanced with W independent of size >= 2: W in Supp in S* + W"},
    {T::rank_one, "rank-one", "connected, K covered by S-neighbourhoods and rank(R) = 1 imply R = J with both sides pairwise twins"},
    {T::cliqueker_dim, "clique-kernel-dim", "dim(cliqueker) <= 1"},
    {T::clique_support, "clique-support", "Supp meets K iff dim(cliqueker) = 1, and then nul(Sp) = nul(R) + 1"},
    {T::nullity_formula, "nullity-formula", "nul(Sp) = nul(R) + dim(cliqueker), and the reported nullity and support match the oracle"},
    {T::adjugate_rank, "adjugate-rank", "nul(A) = 1 implies rank(adj A) = 1"},
    {T::adjugate_kernel, "adjugate-kernel", "nul(A) = 1 implies every column of adj A lies in nulo(A)"},
    {T::nullity_one, "nullity-one", "nul(G) = 1: Supp = {v : G - v nonsingular}, adj_uv != 0 iff u, v in Supp, x_v^2 = det(G - v) det(G - u)"},
    {T::nullity_one_iff, "nullity-one-iff", "Supp meets K, |K| >= 2: nul(Sp) = 1 iff nulo(R) = 0"},
    {T::image_basis_deletion, "image-basis-deletion", "no isolated vertex, nul = 1, s in Supp: the other columns form a basis of im(G)"},
    {T::basis_subgraph, "basis-subgraph", "Sp' on K + pivot columns keeps the clique kernel, has nullity 1, matching K-support, and B_s bases"},
    {T::structured_basis, "structured-basis", "the structured basis spans the oracle nullspace; clique-supported gives rank(Sp) = rank(R) + |K| - 1"},
    {T::composition_split, "composition-split", "Sp o Sp' is split with s-partition (K + K', S + S')"},
    {T::composition_blocks, "composition-blocks", "A(Sp o G) = [[J - I, R, J], [R^t, 0, 0], [J^t, 0, A(G)]] in (K, S, V(G)) order"},
    {T::composition_embedding, "composition-embedding", "(0, z, 0) lies in nulo(Sp o G) for every z in nulo(R)"},
    {T::square_nonsingular, "square-nonsingular", "|K| = |S| in both factors: Sp o Sp' nonsingular iff both are"},
    {T::det_formula, "det-formula", "det(Sp) = (-1)^(k-1) (k-1) det(R^t R - r r^t/(k-1))"},
    {T::det_lemma, "det-lemma", "with nulo(R) = 0 the determinant lemma form agrees"},
    {T::singularity_criterion, "singularity-criterion", "with nulo(R) = 0: singular iff r^t (R^t R)^-1 r = |K| - 1"},
};

static_assert(std::size(kCatalog) == kTheoremCount);

std::size_t idx(TheoremId id) { return static_cast<std::size_t>(id); }

std::uint64_t fnv1a(std::string_view s, std::uint64_t salt) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ salt;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

template <typename V>
void sort_truncate(std::vector<V>& v, std::size_t cap) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v.size() > cap) v.resize(cap);
}

class Verifier {
 public:
  Verifier(CensusReport& rep, std::size_t max_counterexamples, std::size_t max_witnesses)
      : rep_(rep), max_cx_(max_counterexamples), max_wit_(max_witnesses) {}

  void subject(std::string g6) { g6_ = std::move(g6); }
  const std::string& g6() const { return g6_; }
  CensusReport& report() { return rep_; }

  void check(TheoremId id, bool ok, const std::string& detail = {}) {
    if (ok)
      ++rep_.tallies[idx(id)].checked;
    else
      fail(id, detail.empty() ? "identity fails" : detail);
  }

  void fail(TheoremId id, const std::string& detail) {
    auto& t = rep_.tallies[idx(id)];
    ++t.checked;
    ++t.failed;
    ++rep_.counterexample_total;
    rep_.counterexamples.push_back({g6_, std::string(theorem_key(id)), detail});
    if (rep_.counterexamples.size() > 4 * max_cx_ + 16) sort_truncate(rep_.counterexamples, max_cx_);
  }

  /// Runs f; a TheoremViolation is booked against the theorem it names and
  /// any other exception against `id`.
  template <typename F>
  bool guard(TheoremId id, F&& f) {
    try {
      f();
      return true;
    } catch (const TheoremViolation& e) {
      fail(find_theorem(e.theorem()).value_or(id), e.what());
    } catch (const std::exception& e) {
      fail(id, std::string("unexpected exception: ") + e.what());
    }
    return false;
  }

  void observe(const std::string& key) { ++rep_.observations[key]; }

  void witness(const std::string& key) {
    observe(key);
    auto& w = rep_.witnesses[key];
    w.push_back(g6_);
    if (w.size() > 4 * max_wit_ + 16) sort_truncate(w, max_wit_);
  }

 private:
  CensusReport& rep_;
  std::size_t max_cx_;
  std::size_t max_wit_;
  std::string g6_;
};

struct Scope {
  bool exhaustive = true;   // brute-force oracles are affordable
  bool nullity_one = true;  // adjugate suite is affordable
};

/// Oracle data shared by all s-partitions of one graph.
struct GraphFacts {
  QSubspace kernel;  // natural vertex order
  VertexSet support;
  Index nullity = 0;
  Index rank = 0;
  std::vector<VertexSet> max_cliques;
  std::vector<VertexSet> max_independent;
  std::vector<SPartition> partitions;
  Balance balance = Balance::balanced;
  SwingReport swing;
};

QMatrix rows_in_order(const QMatrix& m, const std::vector<Vertex>& order) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < order.size(); ++i) out.row(static_cast<Index>(i)) = m.row(order[i]);
  return out;
}

VertexSet support_set(const QSubspace& kernel) {
  std::vector<Vertex> out;
  for (Index i : support_of(kernel)) out.push_back(static_cast<Vertex>(i));
  return VertexSet(std::move(out));
}

QVector random_vector(Rng& rng, Index n, std::int64_t bound) {
  QVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = Rational(rng.between(-bound, bound));
  return v;
}

QVector one_minus_j(const QVector& x) {
  Rational sum = 0;
  for (Index i = 0; i < x.size(); ++i) sum += x(i);
  QVector out = x;
  for (Index i = 0; i < x.size(); ++i) out(i) -= sum;
  return out;
}

bool all_equal_sets(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b) { return a == b; }

// ---------------------------------------------------------------------------
// graph-level checks

void check_twins(Verifier& v, const Graph& g) {
  const auto classes = twin_classes(g);
  std::vector<int> cls(static_cast<std::size_t>(g.order()), -1);
  bool ok = true;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    ok = ok && (is_clique(g, classes[c]) || is_independent(g, classes[c]));
    for (Vertex x : classes[c]) {
      ok = ok && cls[static_cast<std::size_t>(x)] == -1;
      cls[static_cast<std::size_t>(x)] = static_cast<int>(c);
    }
  }
  for (Vertex x = 0; x < g.order() && ok; ++x) {
    ok = cls[static_cast<std::size_t>(x)] >= 0;
    for (Vertex y = 0; y < g.order() && ok; ++y)
      ok = twins(g, x, y) == (cls[static_cast<std::size_t>(x)] == cls[static_cast<std::size_t>(y)]);
  }
  v.check(T::twin_classes, ok);
}

void check_nullity_one(Verifier& v, const Graph& g, const GraphFacts& facts) {
  ++v.report().nullity_one_count;
  v.guard(T::nullity_one, [&] {
    const NullityOneReport rep = nullity_one_report(g);
    v.check(T::adjugate_rank, rep.adjugate_rank == 1);
    v.check(T::adjugate_kernel,
            is_zero_matrix(adjacency_matrix(g) * rep.adjugate_column) && !is_zero_matrix(rep.adjugate_column));
    // Recheck against the oracle kernel rather than the report's own vector.
    const QVector x = facts.kernel.vector(0);
    const Vertex u = facts.support.front();
    bool ok = rep.support_from_adjugate == facts.support;
    for (Vertex w = 0; w < g.order() && ok; ++w) {
      const Rational& dw = rep.vertex_deleted_dets[static_cast<std::size_t>(w)];
      const Rational& du = rep.vertex_deleted_dets[static_cast<std::size_t>(u)];
      ok = x(w) * x(w) * du == x(u) * x(u) * dw;
    }
    v.check(T::nullity_one, ok, "support or square identity disagrees with the oracle kernel");
  });
  if (has_isolated_vertex(g)) return;
  for (Vertex s : facts.support)
    v.guard(T::image_basis_deletion,
            [&] { v.check(T::image_basis_deletion, image_basis_by_deletion(g, s), "s = " + std::to_string(s)); });
}

// ---------------------------------------------------------------------------
// per-s-partition checks

void check_partition(Verifier& v, const SplitGraph& sp, const GraphFacts& facts, const Scope& scope,
                     std::uint64_t salt) {
  ++v.report().partitions_examined;
  const Graph& g = sp.graph();
  const QMatrix& r = sp.biadjacency();
  const Index k = sp.clique_size();
  const Index s = sp.independent_size();
  const Index n = k + s;
  const Index d = facts.nullity;
  const QMatrix a = sp.adjacency();
  const QMatrix bks = rows_in_order(facts.kernel.matrix(), sp.ordering());
  const VertexSet& supp = facts.support;
  const bool supp_in_s = supp.is_subset_of(sp.independent());
  const bool supp_meets_k = !(supp & sp.clique()).empty();
  const Index rank_r = rank(r);
  const Index nul_r = s - rank_r;
  Rng rng(fnv1a(v.g6(), salt));

  // omega, alpha and the extremal sets from this partition
  v.guard(T::max_sets, [&] {
    const auto omega = static_cast<Index>(facts.max_cliques.front().size());
    const auto alpha = static_cast<Index>(facts.max_independent.front().size());
    v.check(T::max_sets, clique_number(sp) == omega && independence_number(sp) == alpha &&
                             all_equal_sets(maximum_cliques(sp), facts.max_cliques) &&
                             all_equal_sets(maximum_independent_sets(sp), facts.max_independent));
    if (facts.balance == Balance::unbalanced)
      v.check(T::balance, (k == omega && s == alpha - 1) || (k == omega - 1 && s == alpha),
              "unbalanced part sizes");
    v.check(T::balance, balance_class(sp) == facts.balance, "balance depends on the partition");
  });

  NullityReport nr;
  const bool have_nr = v.guard(T::nullity_formula, [&] { nr = nullity(sp); });
  if (have_nr)
    v.check(T::nullity_formula, nr.nullity == d && nr.support == supp && nr.nul_R == nul_r,
            "reported nullity " + std::to_string(nr.nullity) + ", oracle " + std::to_string(d));

  // kernel equations, both directions
  {
    bool ok = true;
    auto equations = [&](const QVector& x) {
      const QVector xk = x.head(k);
      const QVector xs = x.tail(s);
      return one_minus_j(xk) == r * xs && is_zero_matrix(r.transpose() * xk);
    };
    for (Index c = 0; c < bks.cols(); ++c) ok = ok && equations(bks.col(c));
    for (int t = 0; t < 2; ++t) {
      const QVector y = random_vector(rng, n, 1);
      ok = ok && equations(y) == is_zero_matrix(a * y);
    }
    if (d > 0) {
      const QVector y = bks * random_vector(rng, d, 3);
      ok = ok && equations(y);
    }
    v.check(T::kernel_equations, ok);
  }

  // (0, z) embedding, nullity bound, zero-sum clique part
  {
    const auto nz = nullspace_basis(r);
    QMatrix emb = QMatrix::Zero(n, nz.dim());
    emb.bottomRows(s) = nz.matrix();
    v.check(T::embedded_R_kernel, is_zero_matrix(a * emb) && ((d == nz.dim()) == supp_in_s));
    v.check(T::nullity_lower_bound, d >= nul_r && nz.dim() == nul_r && ((d == nul_r) == supp_in_s));
    if (d > 0) {
      const QMatrix bk = bks.topRows(k);
      const QMatrix sums = ones(k).transpose() * bk;
      const auto zero_sum = nullspace_basis(sums);
      v.check(T::zero_sum_clique_part, is_zero_matrix(bk * zero_sum.matrix()));
    }
  }

  // image criterion on R and R^t
  for (const QMatrix& m : {r, QMatrix(r.transpose())}) {
    if (m.rows() == 0) continue;
    const bool in_image = image_contains(m, ones(m.rows()));
    const auto left = nullspace_basis(m.transpose());
    const bool sums_zero = is_zero_matrix(ones(m.rows()).transpose() * left.matrix());
    v.check(T::image_criterion, in_image == sums_zero);
  }

  // neighbourhood sums; rows as bit masks over S
  if (k >= 2 && k <= 10 && s <= 64) {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(k), 0);
    for (Index i = 0; i < k; ++i)
      for (Index j = 0; j < s; ++j)
        if (!r(i, j).is_zero()) rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    const QVector y1 = r * random_vector(rng, s, 3);
    const QVector y2 = r * random_vector(rng, s, 3);
    for (Index vi = 0; vi < k; ++vi) {
      const std::uint64_t others = (std::uint64_t{1} << k) - 1 - (std::uint64_t{1} << vi);
      for (std::uint64_t w = others; w; w = (w - 1) & others) {
        std::uint64_t uni = 0;
        bool disjoint = true;
        for (std::uint64_t rest = w; rest && disjoint; rest &= rest - 1) {
          const std::uint64_t row = rows[static_cast<std::size_t>(std::countr_zero(rest))];
          disjoint = (uni & row) == 0;
          uni |= row;
        }
        if (!disjoint || uni != rows[static_cast<std::size_t>(vi)]) continue;
        Rational s1 = 0;
        Rational s2 = 0;
        for (std::uint64_t rest = w; rest; rest &= rest - 1) {
          s1 += y1(std::countr_zero(rest));
          s2 += y2(std::countr_zero(rest));
        }
        v.check(T::neighborhood_sum, y1(vi) == s1 && y2(vi) == s2);
      }
    }
  }

  // clique kernel
  if (k >= 2) {
    QSubspace ck;
    if (v.guard(T::cliqueker_facts, [&] { ck = clique_kernel_space(sp); })) {
      v.check(T::cliqueker_dim, ck.dim() <= 1, "dim " + std::to_string(ck.dim()));
      bool ok = true;
      for (Index c = 0; c < bks.cols(); ++c) ok = ok && span_contains(ck, QVector(bks.col(c).head(k)));
      for (Index c = 0; c < ck.dim() && ok; ++c) {
        const QVector x = ck.vector(c);
        const auto y = solve_particular(r, one_minus_j(x));
        ok = y.has_value() && is_zero_matrix(r.transpose() * x);
        if (ok) {
          QVector full(n);
          full.head(k) = x;
          full.tail(s) = *y;
          ok = is_zero_matrix(a * full);
        }
      }
      ok = ok && (supp_in_s == (ck.dim() == 0)) && (d == 0 || !(supp & sp.independent()).empty());
      v.check(T::cliqueker_facts, ok);
      v.check(T::clique_support, supp_meets_k == (ck.dim() == 1) && (!supp_meets_k || d == nul_r + 1));
      v.check(T::nullity_formula, d == nul_r + ck.dim(),
              "nul " + std::to_string(d) + " vs " + std::to_string(nul_r) + " + " + std::to_string(ck.dim()));
      if (supp_meets_k) v.check(T::nullity_one_iff, (d == 1) == (nul_r == 0));
    }
  }

  // sufficient conditions and swing cases
  v.guard(T::ones_in_image, [&] {
    const PredicateReport pr = support_location_predicates(sp);
    auto book = [&](TheoremId id, const std::string& key) {
      const Implication& im = pr.at(key);
      if (im.hypothesis) v.check(id, im.conclusion, key);
    };
    book(T::ones_in_image, "ones-in-image-R");
    book(T::degree_regular, "equal-clique-degrees");
    book(T::degree_regular, "equal-independent-degrees");
    book(T::neighborhood_partition, "neighborhood-partition");
    book(T::clique_smaller, "clique-smaller");
    book(T::square_blocks, "square-blocks");
    book(T::unbalanced_support, "unbalanced-support");
    book(T::threshold_support, "threshold-support");
    book(T::swing_singleton, "swing-singleton");
    book(T::swing_clique, "swing-clique");
    book(T::swing_independent, "swing-independent");
    if (pr.at("threshold-support").hypothesis) v.check(T::threshold_support, facts.balance == Balance::unbalanced);
    if (!pr.ones_in_image_R) {
      v.observe("ones-not-in-image");
      if (pr.support_in_S) v.witness("ones-not-in-image-support-in-S");
    }
  });

  // rank one with K covered by S-neighbourhoods
  if (is_connected(g) && k >= 1 && s >= 1 && rank_r == 1) {
    bool covered = true;
    for (Index i = 0; i < k; ++i) covered = covered && !is_zero_matrix(r.row(i));
    if (covered) {
      bool ok = r == QMatrix::Constant(k, s, Rational(1));
      for (Vertex x : sp.clique())
        for (Vertex y : sp.clique()) ok = ok && twins(g, x, y);
      for (Vertex x : sp.independent())
        for (Vertex y : sp.independent()) ok = ok && twins(g, x, y);
      v.check(T::rank_one, ok);
    }
  }

  // structured basis and the Sp' subgraph
  KernelBasis kb;
  if (v.guard(T::structured_basis, [&] { kb = structured_kernel_basis(sp); })) {
    const QSubspace oracle = QSubspace::from_independent(bks);
    bool ok = same_span(kb.vectors, oracle) && kb.vectors.dim() == d;
    const bool clique_supported =
        std::count(kb.kinds.begin(), kb.kinds.end(), KernelVectorKind::clique_supported) > 0;
    if (clique_supported && k >= 2) ok = ok && facts.rank == rank_r + k - 1 && kb.rank_sp == facts.rank;
    v.check(T::structured_basis, ok);

    if (clique_supported && k >= 2 && scope.exhaustive) {
      v.guard(T::basis_subgraph, [&] {
        const VertexSet keep = sp.clique() | VertexSet(kb.pivot_columns);
        std::vector<Vertex> new_id(static_cast<std::size_t>(g.order()), -1);
        for (std::size_t i = 0; i < keep.size(); ++i) new_id[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
        auto relabel = [&](const VertexSet& vs) {
          std::vector<Vertex> out;
          for (Vertex x : vs) out.push_back(new_id[static_cast<std::size_t>(x)]);
          return VertexSet(std::move(out));
        };
        const SplitGraph sub(induced_subgraph(g, keep),
                             SPartition{relabel(sp.clique()), relabel(VertexSet(kb.pivot_columns))});
        const QSubspace sub_kernel = brute_nullspace(sub.graph());
        const VertexSet sub_supp = support_set(sub_kernel);
        const VertexSet supp_k = relabel(supp & sp.clique());
        const VertexSet supp_sprime = relabel(supp & VertexSet(kb.pivot_columns));
        bool sub_ok = sub_kernel.dim() == 1 && same_span(clique_kernel_space(sub), clique_kernel_space(sp)) &&
                      (sub_supp & sub.clique()) == supp_k &&
                      (sub_supp & sub.independent()).is_subset_of(supp_sprime);
        // B_s = columns of A(Sp) over V(Sp') - s
        const QMatrix full = adjacency_matrix(g);
        for (Vertex t : sub_supp) {
          const Vertex orig = keep[static_cast<std::size_t>(t)];
          QMatrix cols(full.rows(), static_cast<Index>(keep.size()) - 1);
          Index c = 0;
          for (Vertex x : keep)
            if (x != orig) cols.col(c++) = full.col(x);
          sub_ok = sub_ok && cols.cols() == facts.rank && rank(cols) == facts.rank;
        }
        v.check(T::basis_subgraph, sub_ok);
      });
    }
  }

  // determinant
  if (k >= 2) {
    v.guard(T::det_formula, [&] {
      const Rational oracle = det_bareiss(a);
      v.check(T::det_formula, det_split_schur(sp) == oracle, "oracle det " + oracle.str());
      if (nul_r == 0) {
        v.check(T::det_lemma, lemma_factor(sp) == std::optional<Rational>(schur_factor(sp)));
        v.check(T::singularity_criterion, singularity_criterion(sp) == (d > 0));
      }
    });
  }
}

void check_split(Verifier& v, const Graph& g, const SplitGraph& sp0, GraphFacts& facts, const Scope& scope) {
  ++v.report().split_count;
  v.guard(T::complement_split, [&] { v.check(T::complement_split, recognize_split(complement(g)).has_value()); });

  if (!v.guard(T::swing_structure, [&] {
        facts.partitions = all_s_partitions(sp0);
        facts.swing = swing_report(sp0);
        facts.balance = balance_class(sp0);
      }))
    return;
  const auto& parts = facts.partitions;
  const SwingReport& sw = facts.swing;

  if (scope.exhaustive) {
    v.check(T::s_partitions, parts == brute_s_partitions(g));
    facts.max_cliques = brute_maximum_cliques(g);
    facts.max_independent = brute_maximum_independent_sets(g);
  } else {
    facts.max_cliques = maximum_cliques(sp0);
    facts.max_independent = maximum_independent_sets(sp0);
  }
  const bool balanced = facts.balance == Balance::balanced;
  v.check(T::balance, balanced == (parts.size() == 1));

  {
    const VertexSet all = VertexSet::range(g.order());
    const bool disjoint = (sw.always_clique & sw.swing).empty() && (sw.always_clique & sw.always_independent).empty() &&
                          (sw.swing & sw.always_independent).empty();
    v.check(T::tripartition, disjoint && (sw.always_clique | sw.swing | sw.always_independent) == all &&
                                 (sw.swing.empty() == balanced));
  }
  v.check(T::closed_forms, closed_form_partitions(sw) == parts);

  if (!sw.swing.empty()) {
    bool ok = true;
    for (Vertex w : sw.swing) {
      std::vector<Vertex> cls;
      for (Vertex u = 0; u < g.order(); ++u)
        if (twins(g, w, u)) cls.push_back(u);
      ok = ok && VertexSet(std::move(cls)) == sw.swing;
    }
    v.check(T::swing_twins, ok);
    v.check(T::swing_structure, sw.swing.size() == 1 || is_clique(g, sw.swing) != is_independent(g, sw.swing));
  }

  if (!balanced) {
    bool ok = true;
    for (const auto& c : facts.max_cliques)
      ok = ok && std::any_of(parts.begin(), parts.end(), [&](const SPartition& p) { return p.clique == c; });
    for (const auto& i : facts.max_independent)
      ok = ok && std::any_of(parts.begin(), parts.end(), [&](const SPartition& p) { return p.independent == i; });
    v.check(T::max_sets_in_partitions, ok);
  } else {
    const auto k_size = static_cast<int>(sp0.clique().size());
    bool s_vertex_deg = false;
    for (Vertex x : sp0.independent()) s_vertex_deg = s_vertex_deg || g.degree(x) == k_size - 1;
    bool k_vertex_one = false;
    for (Vertex x : sp0.clique())
      k_vertex_one = k_vertex_one || (g.neighbors(x) & sp0.independent()).size() == 1;
    const bool k_unique = facts.max_cliques == std::vector<VertexSet>{sp0.clique()};
    const bool s_unique = facts.max_independent == std::vector<VertexSet>{sp0.independent()};
    v.check(T::balanced_uniqueness, k_unique == !s_vertex_deg && s_unique == !k_vertex_one);
  }

  // adjacent twins share kernel entries
  {
    bool ok = true;
    for (auto [x, y] : g.edges())
      if (twins(g, x, y)) ok = ok && facts.kernel.matrix().row(x) == facts.kernel.matrix().row(y);
    v.check(T::adjacent_twins_equal, ok);
  }

  // open question: is Sp - W balanced?
  if (!balanced && sw.swing.size() < static_cast<std::size_t>(g.order())) {
    const Graph rest = induced_subgraph(g, VertexSet::range(g.order()) - sw.swing);
    if (auto sr = recognize_split(rest)) {
      v.observe("minus-swing-examined");
      if (balance_class(*sr) == Balance::unbalanced) v.witness("minus-swing-unbalanced");
    }
  }

  for (std::size_t i = 0; i < parts.size(); ++i) {
    v.guard(T::nullity_formula, [&] {
      check_partition(v, SplitGraph(g, parts[i]), facts, scope, i + 1);
    });
  }
}

void check_graph(Verifier& v, const Graph& g, const Scope& scope) {
  ++v.report().graphs_examined;
  const std::string g6 = write_graph6(g);
  v.subject(g6);
  v.guard(T::graph6_roundtrip, [&] {
    const Graph back = parse_graph6(g6);
    v.check(T::graph6_roundtrip, back == g && write_graph6(back) == g6);
  });

  GraphFacts facts;
  facts.kernel = brute_nullspace(g);
  const QMatrix a = adjacency_matrix(g);
  facts.rank = rank(a);
  facts.nullity = facts.kernel.dim();
  facts.support = support_set(facts.kernel);
  v.check(T::oracle_consistency, is_zero_matrix(a * facts.kernel.matrix()) && facts.nullity == g.order() - facts.rank);
  check_twins(v, g);

  std::optional<SplitGraph> sp;
  if (!v.guard(T::recognize_split, [&] { sp = recognize_split(g); })) return;
  if (scope.exhaustive) v.check(T::recognize_split, sp.has_value() == brute_is_split(g));

  if (facts.nullity == 1 && scope.nullity_one) check_nullity_one(v, g, facts);
  if (sp) check_split(v, g, *sp, facts, scope);
}

// ---------------------------------------------------------------------------
// composition checks

void check_composition(Verifier& v, const SplitGraph& sp, const Graph& g) {
  ++v.report().composition_pairs;
  const Graph h = tyshkevich_compose(sp, g);
  v.subject(write_graph6(h));
  const auto order = composition_ordering(sp, g);
  const QMatrix ah = adjacency_matrix(h, order);
  const Index k = sp.clique_size();
  const Index s = sp.independent_size();
  const Index m = g.order();

  QMatrix expected = QMatrix::Zero(k + s + m, k + s + m);
  expected.topLeftCorner(k, k) = QMatrix::Constant(k, k, Rational(1)) - QMatrix::Identity(k, k);
  expected.block(0, k, k, s) = sp.biadjacency();
  expected.block(k, 0, s, k) = sp.biadjacency().transpose();
  expected.block(0, k + s, k, m) = QMatrix::Constant(k, m, Rational(1));
  expected.block(k + s, 0, m, k) = QMatrix::Constant(m, k, Rational(1));
  expected.bottomRightCorner(m, m) = adjacency_matrix(g);
  v.check(T::composition_blocks, ah == expected);

  v.guard(T::composition_embedding, [&] {
    const QSubspace emb = embedded_kernel_vectors(sp, g);
    const QSubspace oracle = QSubspace::from_independent(rows_in_order(brute_nullspace(h).matrix(), order));
    bool ok = oracle.dim() >= emb.dim() && emb.dim() == s - rank(sp.biadjacency());
    for (Index c = 0; c < emb.dim() && ok; ++c) ok = span_contains(oracle, emb.vector(c));
    v.check(T::composition_embedding, ok);
  });

  if (auto sp2 = recognize_split(g)) {
    v.guard(T::composition_split, [&] {
      const SplitGraph hh = tyshkevich_compose(sp, *sp2);
      v.check(T::composition_split, hh.graph() == h && is_s_partition(h, hh.partition()));
    });
  }
}

std::vector<SplitGraph> square_split_graphs(Index max_half) {
  std::vector<SplitGraph> out;
  for (Index k = 1; k <= max_half; ++k) {
    const auto cells = static_cast<int>(k * k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
      Graph g(static_cast<Vertex>(2 * k));
      for (Vertex u = 0; u < k; ++u)
        for (Vertex w = u + 1; w < k; ++w) g.add_edge(u, w);
      for (int c = 0; c < cells; ++c)
        if ((mask >> c) & 1) g.add_edge(static_cast<Vertex>(c / k), static_cast<Vertex>(k + c % k));
      out.emplace_back(std::move(g), SPartition{VertexSet::range(static_cast<Vertex>(k)),
                                                VertexSet::range(static_cast<Vertex>(2 * k)) -
                                                    VertexSet::range(static_cast<Vertex>(k))});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// work distribution

using Task = std::function<void(Verifier&)>;

std::vector<CensusReport> run_tasks(const std::vector<Task>& tasks, const CensusOptions& opt) {
  std::vector<CensusReport> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      Verifier v(results[i], opt.max_counterexamples, opt.max_witnesses);
      tasks[i](v);
      results[i].finalize(opt.max_counterexamples, opt.max_witnesses);
    }
  };
  unsigned workers = opt.workers ? opt.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, tasks.size())));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  return results;
}

constexpr std::uint64_t kRandomStream = 0x52414e44ULL;
constexpr std::uint64_t kComposeStream = 0x434f4d50ULL;

}  // namespace

std::span<const TheoremInfo> theorem_catalog() { return kCatalog; }

std::string_view theorem_key(TheoremId id) { return kCatalog[idx(id)].key; }

std::optional<TheoremId> find_theorem(std::string_view key) {
  for (const auto& t : kCatalog)
    if (t.key == key) return t.id;
  return std::nullopt;
}

bool CensusReport::ok() const {
  return counterexample_total == 0 &&
         std::all_of(tallies.begin(), tallies.end(), [](const Tally& t) { return t.failed == 0; });
}

void CensusReport::merge(const CensusReport& o) {
  graphs_examined += o.graphs_examined;
  split_count += o.split_count;
  partitions_examined += o.partitions_examined;
  nullity_one_count += o.nullity_one_count;
  random_graphs += o.random_graphs;
  composition_pairs += o.composition_pairs;
  square_pairs += o.square_pairs;
  threshold_sequences += o.threshold_sequences;
  for (std::size_t i = 0; i < kTheoremCount; ++i) {
    tallies[i].checked += o.tallies[i].checked;
    tallies[i].failed += o.tallies[i].failed;
  }
  counterexamples.insert(counterexamples.end(), o.counterexamples.begin(), o.counterexamples.end());
  counterexample_total += o.counterexample_total;
  for (const auto& [key, count] : o.observations) observations[key] += count;
  for (const auto& [key, list] : o.witnesses) {
    auto& w = witnesses[key];
    w.insert(w.end(), list.begin(), list.end());
  }
}

void CensusReport::finalize(std::size_t max_counterexamples, std::size_t max_witnesses) {
  sort_truncate(counterexamples, max_counterexamples);
  for (auto& [key, list] : witnesses) sort_truncate(list, max_witnesses);
}

CensusReport census_verify(const CensusOptions& opt) {
  for (Vertex n = 1; n <= opt.n_max; ++n) check_enumeration_order(n, opt.allow_large);
  std::vector<Task> tasks;
  const Scope full{};

  constexpr std::uint64_t kChunk = 4096;
  for (Vertex n = 1; n <= opt.n_max; ++n) {
    const std::uint64_t total = std::uint64_t{1} << edge_slots(n);
    for (std::uint64_t lo = 0; lo < total; lo += kChunk) {
      const std::uint64_t hi = std::min(total, lo + kChunk);
      tasks.push_back([n, lo, hi, full](Verifier& v) {
        for (std::uint64_t m = lo; m < hi; ++m) check_graph(v, graph_from_mask(n, m), full);
      });
    }
    tasks.push_back([n](Verifier& v) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
        std::string seq = "0";
        for (Vertex i = 1; i < n; ++i) seq.push_back((bits >> (i - 1)) & 1 ? '1' : '0');
        ++v.report().threshold_sequences;
        v.guard(T::threshold, [&] {
          const SplitGraph sp = threshold_graph(seq);
          v.subject(write_graph6(sp.graph()));
          v.check(T::threshold, recognize_split(sp.graph()).has_value() && is_threshold(sp.graph()) &&
                                    balance_class(sp) == Balance::unbalanced,
                  seq);
        });
      }
    });
  }

  constexpr std::uint64_t kRandomChunk = 16;
  for (std::uint64_t lo = 0; lo < opt.random_rounds; lo += kRandomChunk) {
    const std::uint64_t hi = std::min(opt.random_rounds, lo + kRandomChunk);
    tasks.push_back([lo, hi, &opt](Verifier& v) {
      for (std::uint64_t i = lo; i < hi; ++i) {
        Rng rng(derive_seed(opt.seed ^ kRandomStream, i));
        const auto n = static_cast<Index>(rng.between(2, std::max<Vertex>(2, opt.random_max_order)));
        const Index k = rng.between(1, n);
        const Rational p(rng.between(0, 8), 8);
        const SplitGraph sp = random_split_graph(k, n - k, p, rng);
        ++v.report().random_graphs;
        const Scope scope{n <= 10, n <= 10};
        check_graph(v, sp.graph(), scope);
      }
    });
  }

  constexpr std::uint64_t kComposeChunk = 64;
  for (std::uint64_t lo = 0; lo < opt.composition_rounds; lo += kComposeChunk) {
    const std::uint64_t hi = std::min(opt.composition_rounds, lo + kComposeChunk);
    tasks.push_back([lo, hi, &opt](Verifier& v) {
      for (std::uint64_t i = lo; i < hi; ++i) {
        Rng rng(derive_seed(opt.seed ^ kComposeStream, i));
        const auto n1 = static_cast<Index>(rng.between(1, opt.composition_max_order));
        const Index k = rng.between(1, n1);
        const SplitGraph sp = random_split_graph(k, n1 - k, Rational(rng.between(0, 8), 8), rng);
        const auto n2 = static_cast<Vertex>(rng.between(0, opt.composition_max_order));
        const Graph g = random_graph(n2, Rational(rng.between(0, 8), 8), rng);
        check_composition(v, sp, g);
      }
    });
  }

  std::shared_ptr<const std::vector<SplitGraph>> squares;
  std::shared_ptr<const std::vector<bool>> square_nonsingular;
  if (opt.square_max_half > 0) {
    auto list = std::make_shared<std::vector<SplitGraph>>(square_split_graphs(opt.square_max_half));
    auto nonsing = std::make_shared<std::vector<bool>>();
    for (const auto& sp : *list) nonsing->push_back(!det_bareiss(sp.adjacency()).is_zero());
    squares = list;
    square_nonsingular = nonsing;
    constexpr std::size_t kSquareChunk = 8;
    for (std::size_t lo = 0; lo < squares->size(); lo += kSquareChunk) {
      const std::size_t hi = std::min(squares->size(), lo + kSquareChunk);
      tasks.push_back([lo, hi, squares, square_nonsingular](Verifier& v) {
        for (std::size_t i = lo; i < hi; ++i) {
          for (std::size_t j = 0; j < squares->size(); ++j) {
            ++v.report().square_pairs;
            const SplitGraph& left = (*squares)[i];
            const SplitGraph& right = (*squares)[j];
            v.guard(T::square_nonsingular, [&] {
              const SquareComposition sc = square_composition_nonsingularity(left, right);
              const Graph h = tyshkevich_compose(left, right.graph());
              const bool oracle = !det_bareiss(adjacency_matrix(h)).is_zero();
              const bool ok = sc.composite == oracle && sc.left == (*square_nonsingular)[i] &&
                              sc.right == (*square_nonsingular)[j] &&
                              oracle == ((*square_nonsingular)[i] && (*square_nonsingular)[j]);
              if (!ok) v.subject(write_graph6(h));
              v.check(T::square_nonsingular, ok);
            });
          }
        }
      });
    }
  }

  CensusReport out;
  out.n_min = opt.n_max >= 1 ? 1 : 0;
  out.n_max = opt.n_max;
  for (const auto& r : run_tasks(tasks, opt)) out.merge(r);
  out.finalize(opt.max_counterexamples, opt.max_witnesses);
  return out;
}

CensusReport verify_graph(const Graph& g) {
  CensusReport out;
  out.n_min = out.n_max = g.order();
  Verifier v(out, 100, 5);
  const Scope scope{g.order() <= kBruteForceMaxOrder, g.order() <= 12};
  check_graph(v, g, scope);
  out.finalize(100, 5);
  return out;
}

nlohmann::json to_json(const CensusReport& r) {
  nlohmann::json j;
  j["n_range"] = {r.n_min, r.n_max};
  j["graphs_examined"] = r.graphs_examined;
  j["split_count"] = r.split_count;
  j["partitions_examined"] = r.partitions_examined;
  j["nullity_one_count"] = r.nullity_one_count;
  j["random_graphs"] = r.random_graphs;
  j["composition_pairs"] = r.composition_pairs;
  j["square_pairs"] = r.square_pairs;
  j["threshold_sequences"] = r.threshold_sequences;
  j["ok"] = r.ok();
  auto theorems = nlohmann::json::array();
  for (const auto& t : kCatalog) {
    const Tally& tl = r.tally(t.id);
    theorems.push_back({{"id", t.key}, {"checked", tl.checked}, {"failed", tl.failed}});
  }
  j["theorems"] = std::move(theorems);
  auto cx = nlohmann::json::array();
  for (const auto& c : r.counterexamples)
    cx.push_back({{"graph6", c.graph6}, {"theorem", c.theorem}, {"detail", c.detail}});
  j["counterexamples"] = std::move(cx);
  j["counterexample_total"] = r.counterexample_total;
  j["observations"] = r.observations;
  j["witnesses"] = r.witnesses;
  return j;
}

}  // namespace splitnull
