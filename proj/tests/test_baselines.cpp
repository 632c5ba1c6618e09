#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nscp/baselines.hpp"
#include "test_support.hpp"

using namespace nscp;

namespace {

AnnealSchedule quick_schedule(std::uint64_t seed) {
  AnnealSchedule s;
  s.seed = seed;
  s.cooling_factor = 0.8;
  s.sweeps_per_temperature = 200;
  return s;
}

}  // namespace

TEST_CASE("degree scores") {
  const Vector star = degree_scores(testing::star(3));
  CHECK(star[0] == 1.0);
  for (Index i = 1; i < 4; ++i) CHECK(star[i] == doctest::Approx(1.0 / 3.0));
  CHECK(degree_scores(testing::complete(4)) == Vector::Ones(4));
  CHECK(degree_scores(Graph::from_edges(2, {{0, 1, 2.5}})) == Vector::Ones(2));
}

TEST_CASE("degree scores maximize the linear objective among grid candidates") {
  // f_1(x) = sum_ij a_ij (x_i + x_j) = 2 <d, x>; on the 2-norm sphere the
  // maximizer is d/||d||. Compare against a coarse grid of unit vectors.
  const Graph g = Graph::from_edges(3, {{0, 1, 1.0}, {1, 2, 2.0}});
  const Vector d = degree_scores(g).normalized();
  const Vector deg = degree_vector(g);
  const double best = 2.0 * deg.dot(d);
  for (int a = 0; a <= 20; ++a) {
    for (int b = 0; b <= 20; ++b) {
      for (int c = 0; c <= 20; ++c) {
        Vector x = Eigen::Vector3d(a, b, c);
        if (x.norm() == 0.0) continue;
        x.normalize();
        CHECK(2.0 * deg.dot(x) <= best + 1e-12);
      }
    }
  }
}

TEST_CASE("eigenvector centrality: complete graph") {
  for (Index n : {3, 6}) {
    const EigenvectorResult r = eigenvector_centrality(testing::complete(n));
    CHECK(r.converged);
    for (Index i = 0; i < n; ++i) CHECK(r.scores[i] == doctest::Approx(1.0 / std::sqrt(double(n))).epsilon(1e-10));
    CHECK(r.spectral_radius == doctest::Approx(n - 1.0).epsilon(1e-10));
  }
}

TEST_CASE("eigenvector centrality: star against the reduced 2x2 problem") {
  // On (centre, leaf) the action is c' = m l, l' = c, with Perron root sqrt(m)
  // and eigenvector (sqrt(m), 1).
  for (Index m : {2, 3, 8}) {
    Eigen::Matrix2d reduced;
    reduced << 0.0, double(m), 1.0, 0.0;
    Eigen::EigenSolver<Eigen::Matrix2d> solver(reduced);
    Index top = 0;
    solver.eigenvalues().real().maxCoeff(&top);
    const double root = solver.eigenvalues().real()[top];
    const Eigen::Vector2d vec = solver.eigenvectors().col(top).real();

    const EigenvectorResult r = eigenvector_centrality(testing::star(m));
    REQUIRE(r.converged);
    CHECK(r.spectral_radius == doctest::Approx(root).epsilon(1e-9));
    CHECK(r.scores[0] / r.scores[1] == doctest::Approx(vec[0] / vec[1]).epsilon(1e-9));
    CHECK(r.scores[0] / r.scores[1] == doctest::Approx(std::sqrt(double(m))).epsilon(1e-9));
  }
}

TEST_CASE("eigenvector centrality: positivity, residual and scale invariance") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 30, 0.1, true);
    const EigenvectorResult r = eigenvector_centrality(g);
    REQUIRE(r.converged);
    CHECK((r.scores.array() > 0).all());
    CHECK(r.scores.norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK((g.adjacency() * r.scores - r.spectral_radius * r.scores).norm() <= 1e-6 * r.spectral_radius);

    std::vector<Edge> scaled = g.edges();
    for (auto& e : scaled) e.weight *= 7.5;
    Index a = 0, b = 0;
    r.scores.maxCoeff(&a);
    eigenvector_centrality(Graph::from_edges(g.node_count(), scaled)).scores.maxCoeff(&b);
    CHECK(a == b);
  }
  CHECK_THROWS_AS(eigenvector_centrality(Graph::from_edges(4, {{0, 1, 1.0}, {2, 3, 1.0}})), DisconnectedGraphError);
}

TEST_CASE("eigenvector centrality converges on bipartite graphs") {
  const EigenvectorResult even_path = eigenvector_centrality(testing::path(6));
  CHECK(even_path.converged);
  CHECK(even_path.spectral_radius == doctest::Approx(2.0 * std::cos(M_PI / 7.0)).epsilon(1e-9));
}

TEST_CASE("H-index coreness") {
  CHECK(hindex_coreness(testing::complete(4)) == IntVector::Constant(4, 3));
  CHECK(hindex_coreness(testing::path(4)) == IntVector::Constant(4, 1));
  CHECK(hindex_coreness(Graph::from_edges(3, {{0, 1, 0.2}, {1, 2, 9.0}, {0, 2, 3.0}})) == IntVector::Constant(3, 2));
  CHECK(hindex_coreness(Graph::from_edges(3, {{0, 1, 1.0}}))[2] == 0);

  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_graph(rng, 40, 0.05 + 0.005 * trial);
    const IntVector h = hindex_coreness(g);
    const auto oracle = testing::peeling_core_numbers(g);
    for (Index i = 0; i < g.node_count(); ++i) CHECK(h[i] == oracle[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("cab vector") {
  const Vector step = cab_vector(6, {1.0, 0.5});
  CHECK(step == (Vector(6) << 0, 0, 0, 1, 1, 1).finished());
  const Vector ramp = cab_vector(4, {0.0, 0.5});
  CHECK(ramp.isApprox(Eigen::Vector4d(0.25, 0.5, 0.75, 1.0), 1e-15));
  // beta = 0 uses the core ramp everywhere; beta = 1 the peripheral ramp.
  CHECK(cab_vector(4, {0.0, 0.0}).isApprox(Eigen::Vector4d(0.625, 0.75, 0.875, 1.0), 1e-15));
  CHECK(cab_vector(4, {0.0, 1.0}).isApprox(Eigen::Vector4d(0.125, 0.25, 0.375, 0.5), 1e-15));
  for (const auto& point : cab_lattice(10)) {
    const Vector x = cab_vector(17, point);
    for (Index i = 1; i < x.size(); ++i) CHECK(x[i] >= x[i - 1]);
  }
  CHECK_THROWS_AS(cab_vector(4, {1.5, 0.5}), ValidationError);
  CHECK_THROWS_AS(cab_vector(0, {0.5, 0.5}), ValidationError);

  const auto lattice = cab_lattice(3);
  REQUIRE(lattice.size() == 9);
  CHECK(lattice.front().alpha == doctest::Approx(1.0 / 3.0));
  CHECK(lattice[1].beta == doctest::Approx(2.0 / 3.0));
  CHECK(lattice.back().alpha == 1.0);
}

TEST_CASE("product quality") {
  CHECK(product_quality(testing::path(2), Vector::Ones(2)) == 2.0);
  CHECK(product_quality(testing::complete(3), Vector::Zero(3)) == 0.0);
  CHECK(product_quality(testing::complete(3), Eigen::Vector3d(1, 2, 3)) == 22.0);
}

TEST_CASE("annealing on the ideal block graph reaches the exhaustive optimum") {
  const Index n = 8;
  const Graph g = testing::ideal_block(n, 4);
  const CabParams point{1.0, 0.5};
  const Vector positions = cab_vector(n, point);

  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  double optimum = -1.0;
  do {
    Vector x(n);
    for (Index i = 0; i < n; ++i) x[i] = positions[perm[static_cast<std::size_t>(i)]];
    optimum = std::max(optimum, product_quality(g, x));
  } while (std::next_permutation(perm.begin(), perm.end()));

  // Start from an assignment that puts the planted core on peripheral slots.
  const Graph reversed = g.relabeled({7, 6, 5, 4, 3, 2, 1, 0});
  const LatticeOutcome out = anneal_lattice_point(reversed, point, AnnealSchedule{});
  CHECK(out.best_quality == optimum);
  CHECK(out.best_quality >= out.initial_quality);

  // The top half of the aggregate must be an optimal core set.
  const SimannResult agg = simann_core_score(reversed, std::span<const CabParams>(&point, 1), AnnealSchedule{});
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return agg.scores[a] > agg.scores[b]; });
  Vector top = Vector::Zero(n);
  for (Index k = 0; k < n / 2; ++k) top[order[static_cast<std::size_t>(k)]] = 1.0;
  CHECK(product_quality(reversed, top) == optimum);
}

TEST_CASE("annealing never ends below the identity assignment") {
  std::mt19937_64 rng(33);
  const Graph g = testing::random_connected_graph(rng, 20, 0.2);
  const SimannResult r = simann_core_score(g, 4, quick_schedule(3));
  REQUIRE(r.lattice.size() == 16);
  for (const auto& point : r.lattice) {
    CHECK(point.best_quality >= point.initial_quality);
    std::vector<Index> sorted = point.assignment;
    std::sort(sorted.begin(), sorted.end());
    for (Index i = 0; i < 20; ++i) CHECK(sorted[static_cast<std::size_t>(i)] == i);
  }
  CHECK(r.scores.maxCoeff() == 1.0);
}

TEST_CASE("annealing is reproducible and independent of the worker count") {
  std::mt19937_64 rng(34);
  const Graph g = testing::random_connected_graph(rng, 16, 0.25);
  const SimannResult a = simann_core_score(g, 3, quick_schedule(9), 1);
  const SimannResult b = simann_core_score(g, 3, quick_schedule(9), 1);
  const SimannResult c = simann_core_score(g, 3, quick_schedule(9), 4);
  CHECK(a.scores == b.scores);
  CHECK(a.scores == c.scores);
  const SimannResult d = simann_core_score(g, 3, quick_schedule(10), 1);
  CHECK(d.lattice.size() == a.lattice.size());
}

TEST_CASE("annealing on a complete graph is relabeling invariant") {
  const Graph k = testing::complete(7);
  const Graph relabeled = k.relabeled({3, 1, 6, 0, 5, 2, 4});
  Vector a = simann_core_score(k, 3, quick_schedule(5)).scores;
  Vector b = simann_core_score(relabeled, 3, quick_schedule(5)).scores;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
}

TEST_CASE("annealing schedule validation") {
  AnnealSchedule s;
  s.cooling_factor = 1.0;
  CHECK_THROWS_AS(s.validate(), ValidationError);
  s = {};
  s.sweeps_per_temperature = 0;
  CHECK_THROWS_AS(s.validate(), ValidationError);
  CHECK_THROWS_AS(simann_core_score(Graph::from_edges(4, {{0, 1, 1.0}, {2, 3, 1.0}}), 2, AnnealSchedule{}),
                  DisconnectedGraphError);
}
