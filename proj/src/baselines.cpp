#include "nscp/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "nscp/random.hpp"

namespace nscp {

Vector degree_scores(const Graph& graph) {
  Vector d = degree_vector(graph);
  const double m = d.maxCoeff();
  if (m > 0.0) d /= m;
  return d;
}

EigenvectorResult eigenvector_centrality(const Graph& graph, double tolerance, int max_iterations) {
  if (!(tolerance > 0.0)) throw ValidationError("tolerance must be positive");
  if (!is_connected(graph)) throw DisconnectedGraphError("graph is not connected");
  const auto& adj = graph.adjacency();
  const Index n = graph.node_count();
  const double shift = 0.5 * degree_vector(graph).maxCoeff();

  EigenvectorResult result;
  Vector v = Vector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  for (int k = 0; k < max_iterations; ++k) {
    Vector next = adj * v + shift * v;
    next.normalize();
    const double change = (next - v).norm();
    v = std::move(next);
    result.iterations = k + 1;
    if (change < tolerance) {
      result.converged = true;
      break;
    }
  }
  result.spectral_radius = v.dot(adj * v);
  result.scores = std::move(v);
  return result;
}

IntVector hindex_coreness(const Graph& graph) {
  const Graph::Adjacency& adj = graph.adjacency();
  const Index n = graph.node_count();
  IntVector h(n);
  for (Index i = 0; i < n; ++i) h[i] = static_cast<int>(adj.outerIndexPtr()[i + 1] - adj.outerIndexPtr()[i]);

  std::vector<int> counts;
  IntVector next(n);
  for (bool changed = true; changed;) {
    changed = false;
    for (Index i = 0; i < n; ++i) {
      const int deg = static_cast<int>(adj.outerIndexPtr()[i + 1] - adj.outerIndexPtr()[i]);
      counts.assign(static_cast<std::size_t>(deg) + 1, 0);
      for (Graph::Adjacency::InnerIterator it(adj, i); it; ++it) {
        ++counts[static_cast<std::size_t>(std::min(h[it.col()], deg))];
      }
      // Largest k with at least k neighbor values >= k.
      int at_least = 0;
      int value = 0;
      for (int k = deg; k > 0; --k) {
        at_least += counts[static_cast<std::size_t>(k)];
        if (at_least >= k) {
          value = k;
          break;
        }
      }
      next[i] = value;
      changed = changed || value != h[i];
    }
    h.swap(next);
  }
  return h;
}

Vector cab_vector(Index n, const CabParams& params) {
  if (n < 1) throw ValidationError("n must be positive");
  if (!(params.alpha >= 0.0 && params.alpha <= 1.0) || !(params.beta >= 0.0 && params.beta <= 1.0)) {
    throw ValidationError("alpha and beta must lie in [0, 1]");
  }
  const auto b = static_cast<Index>(std::floor(params.beta * static_cast<double>(n)));
  const double a = params.alpha;
  Vector x(n);
  for (Index pos = 1; pos <= n; ++pos) {
    if (pos <= b) {
      x[pos - 1] = static_cast<double>(pos) * (1.0 - a) / (2.0 * static_cast<double>(b));
    } else {
      x[pos - 1] = static_cast<double>(pos - b) * (1.0 - a) / (2.0 * static_cast<double>(n - b)) + (1.0 + a) / 2.0;
    }
  }
  return x;
}

std::vector<CabParams> cab_lattice(int h) {
  if (h < 1) throw ValidationError("lattice resolution must be positive");
  std::vector<CabParams> lattice;
  lattice.reserve(static_cast<std::size_t>(h) * static_cast<std::size_t>(h));
  for (int a = 1; a <= h; ++a) {
    for (int b = 1; b <= h; ++b) lattice.push_back({double(a) / h, double(b) / h});
  }
  return lattice;
}

double product_quality(const Graph& graph, const Vector& x) {
  if (x.size() != graph.node_count()) throw ValidationError("vector length does not match node count");
  double sum = 0.0;
  for (const auto& e : graph.edges()) sum += e.weight * x[e.i] * x[e.j];
  return 2.0 * sum;
}

void AnnealSchedule::validate() const {
  if (initial_temperature && !(*initial_temperature > 0.0)) throw ValidationError("initial temperature must be positive");
  if (!(cooling_factor > 0.0 && cooling_factor < 1.0)) throw ValidationError("cooling factor must lie in (0, 1)");
  if (sweeps_per_temperature && *sweeps_per_temperature < 1) throw ValidationError("sweeps per temperature must be positive");
  if (min_temperature && !(*min_temperature > 0.0)) throw ValidationError("minimum temperature must be positive");
}

namespace {

class Annealer {
 public:
  Annealer(const Graph& graph, const Vector& positions, std::uint64_t seed)
      : graph_(graph), adj_(graph.adjacency()), positions_(positions), engine_(seed) {
    const Index n = graph.node_count();
    assignment_.resize(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) assignment_[static_cast<std::size_t>(i)] = i;
    value_ = positions_;
    field_ = adj_ * value_;
    quality_ = value_.dot(field_);
  }

  double quality() const { return quality_; }
  const std::vector<Index>& assignment() const { return assignment_; }

  std::pair<Index, Index> propose() {
    const auto n = static_cast<std::uint64_t>(graph_.node_count());
    const auto u = static_cast<Index>(rng::to_range(engine_(), n));
    auto v = static_cast<Index>(rng::to_range(engine_(), n - 1));
    if (v >= u) ++v;
    return {u, v};
  }

  /// Quality change of swapping the positions of u and v.
  double delta(Index u, Index v) const {
    const double d = value_[v] - value_[u];
    if (d == 0.0) return 0.0;
    return 2.0 * d * (field_[u] - field_[v]) - 2.0 * d * d * graph_.weight(u, v);
  }

  void swap(Index u, Index v, double change) {
    const double d = value_[v] - value_[u];
    for (Graph::Adjacency::InnerIterator it(adj_, u); it; ++it) field_[it.col()] += it.value() * d;
    for (Graph::Adjacency::InnerIterator it(adj_, v); it; ++it) field_[it.col()] -= it.value() * d;
    std::swap(value_[u], value_[v]);
    std::swap(assignment_[static_cast<std::size_t>(u)], assignment_[static_cast<std::size_t>(v)]);
    quality_ += change;
  }

  /// Recomputes the running sums to shed accumulated rounding.
  void refresh() {
    field_ = adj_ * value_;
    quality_ = value_.dot(field_);
  }

  double uniform() { return rng::to_unit(engine_()); }

 private:
  const Graph& graph_;
  const Graph::Adjacency& adj_;
  const Vector& positions_;
  std::mt19937_64 engine_;
  std::vector<Index> assignment_;
  Vector value_;
  Vector field_;
  double quality_ = 0.0;
};

double exact_quality(const Graph& graph, const Vector& positions, const std::vector<Index>& assignment) {
  Vector x(graph.node_count());
  for (Index i = 0; i < x.size(); ++i) x[i] = positions[assignment[static_cast<std::size_t>(i)]];
  return product_quality(graph, x);
}

}  // namespace

LatticeOutcome anneal_lattice_point(const Graph& graph, const CabParams& params, const AnnealSchedule& schedule) {
  schedule.validate();
  const Index n = graph.node_count();
  const Vector positions = cab_vector(n, params);

  LatticeOutcome out;
  out.params = params;
  Annealer annealer(graph, positions, schedule.seed);
  out.initial_quality = exact_quality(graph, positions, annealer.assignment());
  out.assignment = annealer.assignment();
  out.best_quality = out.initial_quality;
  if (n < 2) return out;

  double t0 = 0.0;
  if (schedule.initial_temperature) {
    t0 = *schedule.initial_temperature;
  } else {
    constexpr int kSamples = 100;
    double sum = 0.0, sum_sq = 0.0;
    for (int s = 0; s < kSamples; ++s) {
      auto [u, v] = annealer.propose();
      const double d = annealer.delta(u, v);
      sum += d;
      sum_sq += d * d;
    }
    const double mean = sum / kSamples;
    t0 = std::sqrt(std::max(0.0, sum_sq / kSamples - mean * mean));
    if (!(t0 > 0.0)) t0 = std::abs(mean) > 0.0 ? std::abs(mean) : 1.0;
  }
  const double t_min = schedule.min_temperature.value_or(1e-4 * t0);
  const long moves = schedule.sweeps_per_temperature.value_or(100L * static_cast<long>(n));

  double best = annealer.quality();
  for (double temperature = t0; temperature >= t_min; temperature *= schedule.cooling_factor) {
    for (long m = 0; m < moves; ++m) {
      auto [u, v] = annealer.propose();
      const double change = annealer.delta(u, v);
      if (change >= 0.0 || annealer.uniform() < std::exp(change / temperature)) {
        annealer.swap(u, v, change);
        if (annealer.quality() > best) {
          best = annealer.quality();
          out.assignment = annealer.assignment();
        }
      }
    }
    annealer.refresh();
  }
  out.best_quality = exact_quality(graph, positions, out.assignment);
  if (out.best_quality < out.initial_quality) {
    // Rounding in the running sum picked a tie-level assignment that is worse.
    out.assignment.resize(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) out.assignment[static_cast<std::size_t>(i)] = i;
    out.best_quality = out.initial_quality;
  }
  return out;
}

SimannResult simann_core_score(const Graph& graph, std::span<const CabParams> lattice,
                               const AnnealSchedule& schedule, int threads) {
  schedule.validate();
  if (!is_connected(graph)) throw DisconnectedGraphError("graph is not connected");
  if (lattice.empty()) throw ValidationError("lattice is empty");

  SimannResult result;
  result.lattice.resize(lattice.size());
  auto run = [&](std::size_t k) {
    AnnealSchedule local = schedule;
    local.seed = rng::mix64(schedule.seed ^ static_cast<std::uint64_t>(k));
    result.lattice[k] = anneal_lattice_point(graph, lattice[k], local);
  };
  const auto workers = static_cast<std::size_t>(std::clamp(threads, 1, static_cast<int>(lattice.size())));
  if (workers == 1) {
    for (std::size_t k = 0; k < lattice.size(); ++k) run(k);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t k = w; k < lattice.size(); k += workers) run(k);
      });
    }
  }

  const Index n = graph.node_count();
  result.scores = Vector::Zero(n);
  for (const auto& point : result.lattice) {
    const Vector positions = cab_vector(n, point.params);
    for (Index i = 0; i < n; ++i) {
      result.scores[i] += positions[point.assignment[static_cast<std::size_t>(i)]] * point.best_quality;
    }
  }
  const double m = result.scores.maxCoeff();
  if (m > 0.0) result.scores /= m;
  return result;
}

SimannResult simann_core_score(const Graph& graph, int lattice_h, const AnnealSchedule& schedule, int threads) {
  const auto lattice = cab_lattice(lattice_h);
  return simann_core_score(graph, std::span<const CabParams>(lattice), schedule, threads);
}

}  // namespace nscp
