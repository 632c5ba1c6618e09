#pragma once

#include <cstdint>
#include <vector>

#include "nscp/graph.hpp"

namespace nscp {

/// A node ordering as 1-based ranks; rank n is the most core node.
class Permutation {
 public:
  /// Throws unless `ranks` is a bijection onto {1, ..., n}.
  explicit Permutation(IntVector ranks);

  static Permutation identity(Index n);

  Index size() const { return ranks_.size(); }
  const IntVector& ranks() const { return ranks_; }
  int operator[](Index i) const { return ranks_[i]; }
  /// Ranks as real scores, e.g. for f_infinity.
  Vector as_scores() const { return ranks_.cast<double>(); }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.ranks_ == b.ranks_; }

 private:
  IntVector ranks_;
};

/// 1 / (1 + exp(-s (x - t))).
double sigma(double x, double s, double t);

/// 1 if x >= t, else 0.
int heaviside(double x, double t);

struct LogisticParams {
  Index n = 90;
  double s = 7.0;
  double t = 2.0 / 3.0;
  std::uint64_t seed = 0;

  void validate() const;
};

enum class SbmSetting {
  /// kp if either endpoint is peripheral, k^2 p between core nodes.
  EitherPeriphery,
  /// kp only between peripheral nodes, k^2 p otherwise.
  BothPeriphery,
};

struct SbmParams {
  Index n = 100;
  double delta = 0.5;
  double p_base = 0.25;
  double k = 1.0;
  SbmSetting setting = SbmSetting::EitherPeriphery;
  std::uint64_t seed = 0;

  void validate() const;
};

struct LcpSample {
  Graph graph;
  /// Node i (0-based) has rank i + 1.
  Permutation ground_truth;
  bool connected = false;
};

struct SbmSample {
  Graph graph;
  /// core[i] is true for planted core nodes (after the output shuffle).
  std::vector<bool> core;
  bool connected = false;
};

/// Logistic core-periphery graph: pair (i, j), 1-based, is an edge with
/// probability sigma(max(i, j) / n). Each pair draws from its own counter.
LcpSample lcp_generate(const LogisticParams& params);

/// Two-block core-periphery model. The first floor(delta n) generated nodes
/// form the core; node order is shuffled before output.
SbmSample sbm_generate(const SbmParams& params);

/// Edge probability of pair (i, j) in the logistic model, 1-based indices.
double lcp_edge_probability(Index i, Index j, const LogisticParams& params);

/// log nu(pi) = sum over unordered pairs of log phi or log(1 - phi), with
/// phi = sigma(max(pi_i, pi_j) / n). Weights are ignored; any stored edge
/// counts as present. Returns -infinity when some phi is exactly 0 or 1,
/// which only happens for s = infinity.
double log_likelihood(const Graph& graph, const Permutation& ranks, double s, double t);

/// Exhaustive check over all n! orderings (n <= 9) that the maximizers of the
/// log-likelihood and of f_infinity on the binarized graph coincide.
bool ml_equivalence_check(const Graph& graph, double s, double t);

}  // namespace nscp
