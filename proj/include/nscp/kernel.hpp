#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>

#include "nscp/graph.hpp"

namespace nscp {

/// Exponents of the smoothed max kernel and of the p-sphere constraint.
struct KernelParams {
  double alpha = 10.0;
  double p = 20.0;

  /// Hölder conjugate of p.
  double q() const { return p / (p - 1.0); }
  /// (alpha - 1) / (p - 1); ratio of the geometric a-priori step bound.
  double contraction_ratio() const { return (alpha - 1.0) / (p - 1.0); }

  void validate() const {
    if (!(alpha > 1.0) || !std::isfinite(alpha)) throw ValidationError("alpha must be > 1");
    if (!(p > alpha) || !std::isfinite(p)) throw ValidationError("p must be > alpha");
  }
};

namespace detail {

template <typename Derived>
void require_size(const Graph& graph, const Eigen::MatrixBase<Derived>& x) {
  if (x.size() != graph.node_count()) throw ValidationError("vector length does not match node count");
}

template <typename Derived>
void require_positive(const Eigen::MatrixBase<Derived>& x) {
  for (Index i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0)) throw ValidationError("entries must be strictly positive");
  }
}

/// ||v||_p with the largest magnitude factored out.
template <typename Derived>
typename Derived::Scalar lp_norm(const Eigen::MatrixBase<Derived>& v, typename Derived::Scalar p) {
  using Scalar = typename Derived::Scalar;
  using std::pow;
  const Scalar scale = v.cwiseAbs().maxCoeff();
  if (scale == Scalar(0)) return Scalar(0);
  Scalar sum(0);
  for (Index i = 0; i < v.size(); ++i) sum += pow(std::abs(v[i]) / scale, p);
  return scale * pow(sum, Scalar(1) / p);
}

}  // namespace detail

/// (x^alpha + y^alpha)^(1/alpha) with max(x, y) factored out, so the result
/// never overflows or underflows before the final rescale.
template <typename Scalar>
Scalar mu_alpha(Scalar x, Scalar y, Scalar alpha) {
  using std::abs;
  using std::pow;
  if (!(alpha > Scalar(0))) throw ValidationError("alpha must be positive");
  x = abs(x);
  y = abs(y);
  const Scalar m = std::max(x, y);
  if (m == Scalar(0)) return Scalar(0);
  return m * pow(pow(x / m, alpha) + pow(y / m, alpha), Scalar(1) / alpha);
}

/// f_alpha(x) = sum over ordered pairs of a_ij mu_alpha(x_i, x_j).
template <typename Derived>
typename Derived::Scalar f_alpha(const Graph& graph, const Eigen::MatrixBase<Derived>& x,
                                 typename Derived::Scalar alpha) {
  using Scalar = typename Derived::Scalar;
  detail::require_size(graph, x);
  Scalar sum(0);
  for (const auto& e : graph.edges()) sum += Scalar(e.weight) * mu_alpha<Scalar>(x[e.i], x[e.j], alpha);
  return Scalar(2) * sum;
}

/// f_inf(x) = sum over ordered pairs of a_ij max(x_i, x_j). Pass 1-based ranks
/// to evaluate a permutation.
template <typename Derived>
typename Derived::Scalar f_infinity(const Graph& graph, const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  detail::require_size(graph, x);
  Scalar sum(0);
  for (const auto& e : graph.edges()) {
    sum += Scalar(e.weight) * std::max(std::abs(x[e.i]), std::abs(x[e.j]));
  }
  return Scalar(2) * sum;
}

/// Gradient of f_alpha on the positive orthant:
///   F(x)_i = 2 sum_j a_ij x_i^(alpha-1) (x_i^alpha + x_j^alpha)^(1/alpha - 1).
/// Each term is evaluated after dividing both arguments by max(x_i, x_j); the
/// term is 0-homogeneous so the scaling is exact. One sweep, O(n + m).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> F_alpha_map(
    const Graph& graph, const Eigen::MatrixBase<Derived>& x, typename Derived::Scalar alpha) {
  using Scalar = typename Derived::Scalar;
  using std::pow;
  detail::require_size(graph, x);
  detail::require_positive(x);
  const auto& adj = graph.adjacency();
  const Scalar outer = Scalar(1) / alpha - Scalar(1);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out(x.size());
  for (Index i = 0; i < adj.outerSize(); ++i) {
    const Scalar xi = x[i];
    Scalar sum(0);
    for (Graph::Adjacency::InnerIterator it(adj, i); it; ++it) {
      const Scalar xj = x[it.col()];
      const Scalar m = std::max(xi, xj);
      const Scalar ri = xi / m;
      const Scalar rj = xj / m;
      const Scalar ri_pow = pow(ri, alpha - Scalar(1));
      sum += Scalar(it.value()) * ri_pow * pow(ri_pow * ri + pow(rj, alpha), outer);
    }
    out[i] = Scalar(2) * sum;
  }
  return out;
}

/// Normalized map G(x) = F(x)^(q-1) / ||F(x)||_q^(q-1); its output lies on the
/// positive p-unit sphere.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> G_alpha_map(
    const Graph& graph, const Eigen::MatrixBase<Derived>& x, const KernelParams& params) {
  using Scalar = typename Derived::Scalar;
  using std::pow;
  params.validate();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> y = F_alpha_map(graph, x, Scalar(params.alpha));
  const Scalar ymax = y.maxCoeff();
  if (!(ymax > Scalar(0))) throw ValidationError("gradient vanished; graph has no edges");
  const Scalar exponent = Scalar(params.q()) - Scalar(1);
  for (Index i = 0; i < y.size(); ++i) y[i] = pow(y[i] / ymax, exponent);
  // ||y^(q-1)||_p = ||y||_q^(q-1), so normalizing in p is the same map.
  y /= detail::lp_norm(y, Scalar(params.p));
  return y;
}

/// ||log x - log y||_inf on strictly positive vectors.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar thomson_distance(const Eigen::MatrixBase<DerivedA>& x,
                                           const Eigen::MatrixBase<DerivedB>& y) {
  if (x.size() != y.size()) throw ValidationError("vector lengths differ");
  detail::require_positive(x);
  detail::require_positive(y);
  return (x.array().log() - y.array().log()).abs().maxCoeff();
}

}  // namespace nscp
