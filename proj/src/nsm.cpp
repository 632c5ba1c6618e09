#include "nscp/nsm.hpp"

#include <cmath>

namespace nscp {

void NsmParams::validate() const {
  kernel.validate();
  if (!(tolerance > 0.0)) throw ValidationError("tolerance must be positive");
  if (max_iterations < 1) throw ValidationError("max_iterations must be positive");
  if (initial_guess) detail::require_positive(*initial_guess);
}

NsmResult nsm_detect(const Graph& graph, const NsmParams& params) {
  params.validate();
  const Index n = graph.node_count();
  if (n < 2) throw ValidationError("detection needs at least two nodes");
  if (!is_connected(graph)) throw DisconnectedGraphError("graph is not connected");

  const KernelParams& kp = params.kernel;
  Vector x;
  if (params.initial_guess) {
    x = *params.initial_guess;
    if (x.size() != n) throw ValidationError("initial guess length does not match node count");
    // G is scale-invariant, so this only moves x_0 onto the sphere where the
    // a-priori bounds are stated; x_1, x_2, ... are unchanged.
    x /= detail::lp_norm(x, kp.p);
  } else {
    x = Vector::Constant(n, std::pow(static_cast<double>(n), -1.0 / kp.p));
  }

  NsmResult result;
  result.contraction_ratio = kp.contraction_ratio();
  for (int k = 0; k < params.max_iterations; ++k) {
    Vector next = G_alpha_map(graph, x, kp);
    const Vector diff = x - next;
    const double residual = detail::lp_norm(diff, kp.p);
    result.residual_history.push_back(residual);
    result.step_inf_history.push_back(diff.cwiseAbs().maxCoeff());
    result.thomson_history.push_back(thomson_distance(next, x));
    if (k == 0) result.gamma0 = result.thomson_history.back();
    x = std::move(next);
    result.iterations = k + 1;
    if (residual < params.tolerance) {
      result.converged = true;
      break;
    }
  }

  result.eigenvalue = f_alpha(graph, x, kp.alpha) / std::pow(detail::lp_norm(x, kp.p), kp.p);
  result.core_score = x / x.maxCoeff();
  result.fixed_point = std::move(x);
  return result;
}

ErrorBound apriori_error_bound(double gamma0, double contraction_ratio, double p, double alpha, int k) {
  if (!(contraction_ratio > 0.0 && contraction_ratio < 1.0)) {
    throw ValidationError("contraction ratio must lie in (0, 1)");
  }
  if (!(gamma0 >= 0.0)) throw ValidationError("gamma0 must be nonnegative");
  if (!(p > alpha)) throw ValidationError("p must be > alpha");
  if (k < 0) throw ValidationError("k must be nonnegative");
  const double ck = std::pow(contraction_ratio, k);
  return {gamma0 * ck, gamma0 * ((p - 1.0) / (p - alpha)) * ck};
}

double eigen_residual(const Graph& graph, const Vector& x, const KernelParams& params, double* lambda) {
  const double lam = f_alpha(graph, x, params.alpha) / std::pow(detail::lp_norm(x, params.p), params.p);
  if (lambda) *lambda = lam;
  const Vector F = F_alpha_map(graph, x, params.alpha);
  return (F.array() - lam * x.array().pow(params.p - 1.0)).abs().maxCoeff();
}

}  // namespace nscp
