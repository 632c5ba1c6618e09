#include "nscp/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "nscp/kernel.hpp"
#include "nscp/random.hpp"

namespace nscp {
namespace {

constexpr std::uint64_t kEdgeStream = 0x65646765ULL;
constexpr std::uint64_t kShuffleStream = 0x73687566ULL;

std::uint64_t pair_counter(Index i, Index j) {
  // i < j, 0-based
  return static_cast<std::uint64_t>(j) * static_cast<std::uint64_t>(j - 1) / 2 + static_cast<std::uint64_t>(i);
}

/// log(1 + exp(z)) without overflow.
double softplus(double z) { return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

}  // namespace

Permutation::Permutation(IntVector ranks) : ranks_(std::move(ranks)) {
  std::vector<bool> seen(static_cast<std::size_t>(ranks_.size()), false);
  for (Index i = 0; i < ranks_.size(); ++i) {
    const int r = ranks_[i];
    if (r < 1 || r > ranks_.size() || seen[static_cast<std::size_t>(r - 1)]) {
      throw ValidationError("ranks are not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(r - 1)] = true;
  }
}

Permutation Permutation::identity(Index n) {
  return Permutation(IntVector::LinSpaced(n, 1, static_cast<int>(n)));
}

double sigma(double x, double s, double t) { return 1.0 / (1.0 + std::exp(-s * (x - t))); }

int heaviside(double x, double t) { return x >= t ? 1 : 0; }

void LogisticParams::validate() const {
  if (n < 2) throw ValidationError("n must be at least 2");
  if (!(s >= 0.0)) throw ValidationError("s must be nonnegative");
  if (!(t > 0.0 && t < 1.0)) throw ValidationError("t must lie in (0, 1)");
}

void SbmParams::validate() const {
  if (n < 2) throw ValidationError("n must be at least 2");
  if (!(delta >= 0.0 && delta <= 1.0)) throw ValidationError("delta must lie in [0, 1]");
  if (!(p_base >= 0.0 && p_base <= 1.0)) throw ValidationError("p must lie in [0, 1]");
  if (!(k >= 1.0)) throw ValidationError("k must be >= 1");
  if (k * k * p_base > 1.0) throw ValidationError("k^2 p exceeds 1");
}

double lcp_edge_probability(Index i, Index j, const LogisticParams& params) {
  return sigma(static_cast<double>(std::max(i, j)) / static_cast<double>(params.n), params.s, params.t);
}

LcpSample lcp_generate(const LogisticParams& params) {
  params.validate();
  const Index n = params.n;
  std::vector<Edge> edges;
  for (Index j = 1; j < n; ++j) {
    for (Index i = 0; i < j; ++i) {
      const double u = rng::to_unit(rng::counter_hash(params.seed, kEdgeStream, pair_counter(i, j)));
      if (u < lcp_edge_probability(i + 1, j + 1, params)) edges.push_back({i, j, 1.0});
    }
  }
  Graph g = Graph::from_edges(n, std::move(edges));
  const bool connected = is_connected(g);
  return {std::move(g), Permutation::identity(n), connected};
}

SbmSample sbm_generate(const SbmParams& params) {
  params.validate();
  const Index n = params.n;
  const auto core_size = static_cast<Index>(std::floor(params.delta * static_cast<double>(n)));
  const double low = params.k * params.p_base;
  const double high = params.k * params.k * params.p_base;

  // Fisher-Yates from the shuffle stream: generated node g lands at position[g].
  std::vector<Index> position(static_cast<std::size_t>(n));
  std::iota(position.begin(), position.end(), Index{0});
  for (Index i = n - 1; i > 0; --i) {
    const auto bits = rng::counter_hash(params.seed, kShuffleStream, static_cast<std::uint64_t>(i));
    const auto r = static_cast<Index>(rng::to_range(bits, static_cast<std::uint64_t>(i + 1)));
    std::swap(position[static_cast<std::size_t>(i)], position[static_cast<std::size_t>(r)]);
  }

  std::vector<Edge> edges;
  for (Index j = 1; j < n; ++j) {
    for (Index i = 0; i < j; ++i) {
      const bool ci = i < core_size;
      const bool cj = j < core_size;
      double prob = 0.0;
      if (params.setting == SbmSetting::EitherPeriphery) {
        prob = (ci && cj) ? high : low;
      } else {
        prob = (!ci && !cj) ? low : high;
      }
      const double u = rng::to_unit(rng::counter_hash(params.seed, kEdgeStream, pair_counter(i, j)));
      if (u < prob) {
        edges.push_back({position[static_cast<std::size_t>(i)], position[static_cast<std::size_t>(j)], 1.0});
      }
    }
  }
  std::vector<bool> core(static_cast<std::size_t>(n), false);
  for (Index g = 0; g < core_size; ++g) core[static_cast<std::size_t>(position[static_cast<std::size_t>(g)])] = true;

  Graph graph = Graph::from_edges(n, std::move(edges));
  const bool connected = is_connected(graph);
  return {std::move(graph), std::move(core), connected};
}

double log_likelihood(const Graph& graph, const Permutation& ranks, double s, double t) {
  const Index n = graph.node_count();
  if (ranks.size() != n) throw ValidationError("permutation length does not match node count");
  if (!(s >= 0.0)) throw ValidationError("s must be nonnegative");
  const double nd = static_cast<double>(n);

  if (std::isinf(s)) {
    // Heaviside limit: a non-edge with phi = 1 or an edge with phi = 0 has probability 0.
    for (Index j = 1; j < n; ++j) {
      for (Index i = 0; i < j; ++i) {
        const int h = heaviside(static_cast<double>(std::max(ranks[i], ranks[j])) / nd, t);
        const bool edge = graph.weight(i, j) > 0.0;
        if (edge != (h == 1)) return -std::numeric_limits<double>::infinity();
      }
    }
    return 0.0;
  }

  // sum over pairs of log(1 - phi), grouped by the larger rank r (r - 1 pairs each),
  // plus the log-odds s (max/n - t) of every present edge.
  double total = 0.0;
  for (Index r = 2; r <= n; ++r) {
    const double z = s * (static_cast<double>(r) / nd - t);
    total -= static_cast<double>(r - 1) * softplus(z);
  }
  for (const auto& e : graph.edges()) {
    total += s * (static_cast<double>(std::max(ranks[e.i], ranks[e.j])) / nd - t);
  }
  return total;
}

bool ml_equivalence_check(const Graph& graph, double s, double t) {
  const Index n = graph.node_count();
  if (n > 9) throw ValidationError("exhaustive check limited to n <= 9");
  const Graph binary = graph.binarized();

  IntVector ranks = IntVector::LinSpaced(n, 1, static_cast<int>(n));
  std::vector<double> ll;
  std::vector<double> quality;
  do {
    const Permutation perm(ranks);
    ll.push_back(log_likelihood(binary, perm, s, t));
    quality.push_back(f_infinity(binary, perm.as_scores()));
  } while (std::next_permutation(ranks.data(), ranks.data() + n));

  const double ll_max = *std::max_element(ll.begin(), ll.end());
  const double q_max = *std::max_element(quality.begin(), quality.end());
  const double ll_tol = std::isfinite(ll_max) ? 1e-9 * std::max(1.0, std::abs(ll_max)) : 0.0;
  for (std::size_t k = 0; k < ll.size(); ++k) {
    const bool ll_best = ll[k] >= ll_max - ll_tol;
    const bool q_best = quality[k] == q_max;
    if (ll_best != q_best) return false;
  }
  return true;
}

}  // namespace nscp
