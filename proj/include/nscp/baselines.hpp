#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nscp/graph.hpp"

namespace nscp {

/// Weighted degrees scaled to max 1.
Vector degree_scores(const Graph& graph);

struct EigenvectorResult {
  /// Perron vector, entrywise positive, ||v||_2 = 1.
  Vector scores;
  /// Rayleigh quotient v^T A v.
  double spectral_radius = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Power iteration on A + sI with s = max-degree / 2. The shift keeps the
/// eigenvectors and removes the period-2 oscillation on bipartite graphs.
EigenvectorResult eigenvector_centrality(const Graph& graph, double tolerance = 1e-12,
                                         int max_iterations = 100000);

/// k-core numbers as the fixed point of the neighbor H-index operator,
/// starting from degrees of the binarized graph.
IntVector hindex_coreness(const Graph& graph);

/// Parameters of the two-ramp score family; alpha sets the jump between the
/// last peripheral and first core position, beta the peripheral fraction.
struct CabParams {
  double alpha = 0.5;
  double beta = 0.5;
};

/// Position-ordered score vector (position 1 first) of the two-ramp family.
Vector cab_vector(Index n, const CabParams& params);

/// The lattice {1/h, ..., 1}^2, alpha-major.
std::vector<CabParams> cab_lattice(int h);

/// sum_ij a_ij x_i x_j over ordered pairs.
double product_quality(const Graph& graph, const Vector& x);

struct AnnealSchedule {
  /// Defaults to the standard deviation of quality changes over random swaps.
  std::optional<double> initial_temperature;
  double cooling_factor = 0.95;
  /// Proposed pair swaps per temperature level; defaults to 100 n.
  std::optional<long> sweeps_per_temperature;
  /// Defaults to 1e-4 * initial temperature.
  std::optional<double> min_temperature;
  std::uint64_t seed = 0;

  void validate() const;
};

struct LatticeOutcome {
  CabParams params;
  /// position (0-based) held by each node in the best assignment found.
  std::vector<Index> assignment;
  double best_quality = 0.0;
  /// Quality of the identity assignment the annealer starts from.
  double initial_quality = 0.0;
};

struct SimannResult {
  /// Aggregate score scaled to max 1.
  Vector scores;
  std::vector<LatticeOutcome> lattice;
};

/// Metropolis annealing over node-to-position assignments for one lattice point.
LatticeOutcome anneal_lattice_point(const Graph& graph, const CabParams& params,
                                    const AnnealSchedule& schedule);

/// Aggregate score sum_points x_{sigma*(i)} R over the given lattice. Point k
/// anneals with seed derived from (schedule.seed ^ k); results do not depend
/// on `threads`.
SimannResult simann_core_score(const Graph& graph, std::span<const CabParams> lattice,
                               const AnnealSchedule& schedule, int threads = 1);

SimannResult simann_core_score(const Graph& graph, int lattice_h, const AnnealSchedule& schedule,
                               int threads = 1);

}  // namespace nscp
