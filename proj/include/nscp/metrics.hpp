#pragma once

#include <vector>

#include "nscp/graph.hpp"
#include "nscp/models.hpp"

namespace nscp {

/// Ascending ranks: smallest score gets rank 1, ties broken by node index.
Permutation rank_from_scores(const Vector& scores);

/// Node indices sorted by ascending score, ties by index.
std::vector<Index> ascending_order(const Vector& scores);

struct ProfileCurve {
  /// gamma[k-1] for k = 1..n.
  Vector gamma;

  /// sum_k gamma_k / n
  double area() const { return gamma.mean(); }
};

/// gamma_k = (weight inside the k lowest-scored nodes) / (weight incident to
/// them). Requires a connected graph.
ProfileCurve cp_profile(const Graph& graph, const Vector& scores);

/// f_inf(x) / (max_i x_i * sum_ij a_ij).
double normalized_quality(const Graph& graph, const Vector& scores);

/// Tie-adjusted Kendall tau-b in O(n log n). Throws if either input is
/// entirely tied.
double kendall_tau(const Vector& a, const Vector& b);

/// Fraction of nodes whose core/periphery label matches `core` when the
/// `core_size` top-scored nodes (ties by lower index) are called core.
double recovery_fraction(const Vector& scores, const std::vector<bool>& core, Index core_size);

}  // namespace nscp
