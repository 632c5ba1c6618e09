#pragma once

#include <optional>
#include <vector>

#include "nscp/kernel.hpp"

namespace nscp {

struct NsmParams {
  KernelParams kernel;
  double tolerance = 1e-8;
  int max_iterations = 10000;
  /// Strictly positive start, rescaled to unit p-norm; defaults to the
  /// uniform vector n^(-1/p).
  std::optional<Vector> initial_guess;

  void validate() const;
};

struct NsmResult {
  /// fixed_point / max(fixed_point); entries in (0, 1].
  Vector core_score;
  /// Approximate maximizer of f_alpha on the positive p-unit sphere.
  Vector fixed_point;
  /// f_alpha(x) / ||x||_p^p at the fixed point.
  double eigenvalue = 0.0;
  int iterations = 0;
  bool converged = false;
  /// ||x_k - x_{k+1}||_p for k = 0, 1, ...
  std::vector<double> residual_history;
  /// ||x_k - x_{k+1}||_inf
  std::vector<double> step_inf_history;
  /// d_T(x_{k+1}, x_k)
  std::vector<double> thomson_history;
  /// d_T(x_1, x_0)
  double gamma0 = 0.0;
  double contraction_ratio = 0.0;
};

/// Nonlinear power iteration x_{k+1} = G_alpha(x_k), stopped once
/// ||x_k - x_{k+1}||_p < tolerance (the iterates have unit p-norm).
/// Throws DisconnectedGraphError for disconnected input. Running out of
/// iterations is not an error; the partial result has converged == false.
NsmResult nsm_detect(const Graph& graph, const NsmParams& params = {});

struct ErrorBound {
  /// Upper bound on ||x_{k+1} - x_k||_inf.
  double step = 0.0;
  /// Upper bound on ||x_k - x*||_inf.
  double distance = 0.0;
};

/// A-priori bounds gamma0 C^k and gamma0 (p-1)/(p-alpha) C^k.
ErrorBound apriori_error_bound(double gamma0, double contraction_ratio, double p, double alpha, int k);

/// max_i |F(x)_i - lambda x_i^(p-1)| with lambda = f_alpha(x)/||x||_p^p.
double eigen_residual(const Graph& graph, const Vector& x, const KernelParams& params, double* lambda = nullptr);

}  // namespace nscp
