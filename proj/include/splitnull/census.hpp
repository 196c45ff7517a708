#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "splitnull/split.hpp"

namespace splitnull {

enum class TheoremId : int {
  graph6_roundtrip,
  oracle_consistency,
  twin_classes,
  recognize_split,
  complement_split,
  s_partitions,
  max_sets,
  threshold,
  kernel_equations,
  embedded_R_kernel,
  nullity_lower_bound,
  zero_sum_clique_part,
  ones_in_image,
  image_criterion,
  neighborhood_sum,
  cliqueker_facts,
  clique_smaller,
  square_blocks,
  degree_regular,
  neighborhood_partition,
  balance,
  tripartition,
  closed_forms,
  max_sets_in_partitions,
  balanced_uniqueness,
  unbalanced_support,
  threshold_support,
  swing_twins,
  adjacent_twins_equal,
  swing_structure,
  swing_singleton,
  swing_clique,
  swing_independent,
  rank_one,
  cliqueker_dim,
  clique_support,
  nullity_formula,
  adjugate_rank,
  adjugate_kernel,
  nullity_one,
  nullity_one_iff,
  image_basis_deletion,
  basis_subgraph,
  structured_basis,
  composition_split,
  composition_blocks,
  composition_embedding,
  square_nonsingular,
  det_formula,
  det_lemma,
  singularity_criterion,
  count_
};

inline constexpr std::size_t kTheoremCount = static_cast<std::size_t>(TheoremId::count_);

struct TheoremInfo {
  TheoremId id;
  std::string_view key;
  std::string_view statement;
};

std::span<const TheoremInfo> theorem_catalog();
std::string_view theorem_key(TheoremId id);
std::optional<TheoremId> find_theorem(std::string_view key);

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
};

struct Counterexample {
  std::string graph6;
  std::string theorem;
  std::string detail;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
  friend auto operator<=>(const Counterexample&, const Counterexample&) = default;
};

struct CensusOptions {
  Vertex n_max = 4;
  bool allow_large = false;
  std::uint64_t random_rounds = 0;
  Vertex random_max_order = 40;
  std::uint64_t composition_rounds = 0;
  Vertex composition_max_order = 12;
  Index square_max_half = 0;  // exhaustive square pairs with |K| = |S| <= this
  std::uint64_t seed = 1;
  unsigned workers = 0;       // 0: one per hardware thread
  std::size_t max_counterexamples = 100;
  std::size_t max_witnesses = 5;
};

struct CensusReport {
  Vertex n_min = 0;
  Vertex n_max = 0;
  std::uint64_t graphs_examined = 0;
  std::uint64_t split_count = 0;
  std::uint64_t partitions_examined = 0;
  std::uint64_t nullity_one_count = 0;
  std::uint64_t random_graphs = 0;
  std::uint64_t composition_pairs = 0;
  std::uint64_t square_pairs = 0;
  std::uint64_t threshold_sequences = 0;
  std::vector<Tally> tallies = std::vector<Tally>(kTheoremCount);
  std::vector<Counterexample> counterexamples;  // sorted, truncated
  std::uint64_t counterexample_total = 0;
  std::map<std::string, std::uint64_t> observations;
  std::map<std::string, std::vector<std::string>> witnesses;  // graph6, sorted, truncated

  const Tally& tally(TheoremId id) const { return tallies[static_cast<std::size_t>(id)]; }
  bool ok() const;

  /// Adds counts and concatenates examples; call finalize() afterwards to
  /// restore the sorted, truncated form.
  void merge(const CensusReport& other);
  void finalize(std::size_t max_counterexamples, std::size_t max_witnesses);
};

/// Exhaustive census of all labelled graphs with 1 <= n <= n_max, plus the
/// randomized and composition rounds requested in the options.
CensusReport census_verify(const CensusOptions& options);

/// The full per-graph suite on a single graph (used by `verify`).
CensusReport verify_graph(const Graph& g);

nlohmann::json to_json(const CensusReport& report);

}  // namespace splitnull
