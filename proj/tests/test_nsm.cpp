#include <doctest.h>

#include <cmath>

#include "nscp/nsm.hpp"
#include "test_support.hpp"

using namespace nscp;

namespace {

// Centre/leaf ratio r of the star K_{1,m}: from the eigen-equation the ratio
// of the centre and leaf equations gives m r^(alpha-1) = r^(p-1).
double star_ratio_by_bisection(double m, double alpha, double p) {
  auto g = [&](double r) { return m * std::pow(r, alpha - 1.0) - std::pow(r, p - 1.0); };
  double lo = 1.0, hi = m + 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("complete graph: uniform fixed point") {
  for (Index n : {2, 3, 7}) {
    const NsmResult r = nsm_detect(testing::complete(n));
    CHECK(r.converged);
    for (Index i = 0; i < n; ++i) {
      CHECK(r.fixed_point[i] == doctest::Approx(std::pow(double(n), -1.0 / 20.0)).epsilon(1e-12));
      CHECK(r.core_score[i] == doctest::Approx(1.0).epsilon(1e-12));
    }
    // lambda = f_alpha(x)/||x||_p^p on the uniform vector.
    const double u = std::pow(double(n), -1.0 / 20.0);
    CHECK(r.eigenvalue == doctest::Approx(n * (n - 1) * std::pow(2.0, 0.1) * u).epsilon(1e-12));
  }
}

TEST_CASE("star K_{1,3}: centre/leaf ratio from the reduced equation") {
  const NsmResult r = nsm_detect(testing::star(3));
  REQUIRE(r.converged);
  const double ratio = star_ratio_by_bisection(3.0, 10.0, 20.0);
  CHECK(ratio == doctest::Approx(std::pow(3.0, 0.1)).epsilon(1e-12));
  CHECK(r.fixed_point[0] / r.fixed_point[1] == doctest::Approx(ratio).epsilon(1e-7));
  CHECK(r.fixed_point[1] == doctest::Approx(r.fixed_point[2]).epsilon(1e-12));
  CHECK(r.fixed_point[1] == doctest::Approx(r.fixed_point[3]).epsilon(1e-12));
  // c^p + 3 l^p = 1 with c = ratio * l.
  const double leaf = std::pow(std::pow(ratio, 20.0) + 3.0, -1.0 / 20.0);
  CHECK(r.fixed_point[1] == doctest::Approx(leaf).epsilon(1e-7));
  CHECK(r.core_score[0] == 1.0);
}

TEST_CASE("converged runs satisfy the eigen-equation") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 40, 0.1, trial % 2 == 1);
    const NsmResult r = nsm_detect(g);
    REQUIRE(r.converged);
    double lambda = 0.0;
    const double res = eigen_residual(g, r.fixed_point, KernelParams{}, &lambda);
    CHECK(lambda == doctest::Approx(r.eigenvalue).epsilon(1e-14));
    CHECK(res <= 1e-8 * lambda);
    CHECK((r.fixed_point.array() > 0).all());
    CHECK(r.fixed_point.array().pow(20.0).sum() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.core_score.maxCoeff() == 1.0);
    CHECK(r.residual_history.size() == static_cast<std::size_t>(r.iterations));
  }
}

TEST_CASE("uniqueness across random starts") {
  std::mt19937_64 rng(22);
  const Graph g = testing::random_connected_graph(rng, 30, 0.12);
  const Vector reference = nsm_detect(g).fixed_point;
  for (int start = 0; start < 5; ++start) {
    NsmParams params;
    params.initial_guess = testing::random_positive(rng, 30, 1e-3, 10.0);
    const NsmResult r = nsm_detect(g, params);
    CHECK(r.converged);
    CHECK((r.fixed_point - reference).cwiseAbs().maxCoeff() <= 1e-6);
  }
}

TEST_CASE("a-priori step bound along the iteration") {
  // The per-step Thomson ratio can exceed C (see the K_{1,3} kernel test), so
  // only the geometric step bound is asserted here; criterion 4 of the
  // acceptance suite reports both.
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 30, 0.1, true);
    NsmParams params;
    params.initial_guess = testing::random_positive(rng, 30, 0.01, 1.0);
    const NsmResult r = nsm_detect(g, params);
    const double c = r.contraction_ratio;
    CHECK(r.thomson_history.size() == r.step_inf_history.size());
    for (std::size_t k = 0; k < r.step_inf_history.size(); ++k) {
      const auto bound = apriori_error_bound(r.gamma0, c, 20.0, 10.0, static_cast<int>(k));
      CHECK(r.step_inf_history[k] <= bound.step + 1e-13);
    }
  }
}

TEST_CASE("a-priori bound arithmetic") {
  const double c = 9.0 / 19.0;
  const auto k0 = apriori_error_bound(1.0, c, 20.0, 10.0, 0);
  CHECK(k0.step == 1.0);
  CHECK(k0.distance == doctest::Approx(1.9).epsilon(1e-15));
  CHECK(apriori_error_bound(1.0, c, 20.0, 10.0, 1).step == doctest::Approx(0.47368).epsilon(1e-5));
  CHECK_THROWS_AS(apriori_error_bound(1.0, 1.0, 20.0, 10.0, 0), ValidationError);
  CHECK_THROWS_AS(apriori_error_bound(1.0, 0.0, 20.0, 10.0, 0), ValidationError);
}

TEST_CASE("errors and partial results") {
  CHECK_THROWS_AS(nsm_detect(Graph::from_edges(4, {{0, 1, 1.0}, {2, 3, 1.0}})), DisconnectedGraphError);
  CHECK_THROWS_AS(nsm_detect(Graph::from_edges(1, {})), ValidationError);
  NsmParams bad;
  bad.tolerance = 0.0;
  CHECK_THROWS_AS(nsm_detect(testing::path(3), bad), ValidationError);
  NsmParams negative;
  negative.initial_guess = Eigen::Vector3d(1, -1, 1);
  CHECK_THROWS_AS(nsm_detect(testing::path(3), negative), ValidationError);

  NsmParams short_budget;
  short_budget.max_iterations = 1;
  short_budget.tolerance = 1e-15;
  const NsmResult r = nsm_detect(testing::star(5), short_budget);
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 1);
  CHECK(r.core_score.size() == 6);
}
