#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitnull/split.hpp"

namespace splitnull {

struct CliqueKernel {
  Index dimension = 0;              // 0 or 1
  std::optional<QVector> generator; // primitive integer z of length |K|
};

/// nulo(R^t) ∩ im((I - J)^-1 R) as a subspace of Q^|K|, with no assumption
/// on its dimension. Throws DomainError when |K| < 2.
QSubspace clique_kernel_space(const SplitGraph& sp);

/// The clique kernel with its normalised generator. Throws DomainError when
/// |K| < 2 and TheoremViolation if the dimension exceeds 1.
CliqueKernel clique_kernel(const SplitGraph& sp);

struct NullityReport {
  Index nullity = 0;
  Index nul_R = 0;
  Index rank_R = 0;
  std::optional<CliqueKernel> clique_kernel;  // absent when |K| < 2
  VertexSet support;
  bool support_meets_clique = false;
};

/// nul(Sp) = nul(R) + dim(cliqueker) for |K| >= 2; exact elimination on
/// A(Sp) otherwise.
NullityReport nullity(const SplitGraph& sp);

VertexSet support(const SplitGraph& sp);

enum class KernelVectorKind { clique_supported, independent };

struct KernelBasis {
  QSubspace vectors;                    // coordinates in (K, S) order
  std::vector<KernelVectorKind> kinds;  // one per column of vectors
  std::vector<Vertex> ordering;         // vertex id of each coordinate
  std::vector<Vertex> pivot_columns;    // S': vertices whose R-columns form P
  std::vector<Vertex> free_columns;     // W: one independent vector each, same order
  std::optional<QVector> z;
  std::optional<QVector> y0;            // coefficients over pivot_columns
  Index rank_R = 0;
  Index rank_sp = 0;
};

/// Basis {(z, y0, 0)} ∪ {(0, -y_v, e_v) : v ∈ W}, with P the greedy pivot
/// columns of R in sorted S order. For |K| <= 1 the clique vector is e_a when
/// the lone clique vertex a has no neighbours.
KernelBasis structured_kernel_basis(const SplitGraph& sp);

struct NullityOneReport {
  Index adjugate_rank = 0;
  VertexSet support_from_adjugate;
  std::vector<Rational> vertex_deleted_dets;  // indexed by vertex
  QVector kernel_vector;                      // primitive
  Vertex reference_vertex = 0;                // u, the first supported vertex
  QVector adjugate_column;                    // column u of adj(A)
};

/// Adjugate structure of a nullity-one graph. Throws DomainError when
/// nul(g) != 1 and TheoremViolation if an identity fails.
NullityOneReport nullity_one_report(const Graph& g);

/// Whether the columns of A(G) other than s form a basis of im(G). Throws
/// DomainError unless g has no isolated vertex, nul(g) = 1 and s ∈ Supp(g).
bool image_basis_by_deletion(const Graph& g, Vertex s);

struct Implication {
  std::string id;
  bool hypothesis = false;
  bool conclusion = false;
  bool holds() const { return !hypothesis || conclusion; }
};

struct PredicateReport {
  VertexSet support;
  bool ones_in_image_R = false;
  bool support_in_S = false;
  std::vector<Implication> implications;

  bool all_hold() const;
  const Implication& at(const std::string& id) const;
};

PredicateReport support_location_predicates(const SplitGraph& sp);

}  // namespace splitnull
