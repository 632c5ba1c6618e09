#include "nscp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "nscp/kernel.hpp"

namespace nscp {

std::vector<Index> ascending_order(const Vector& scores) {
  std::vector<Index> order(static_cast<std::size_t>(scores.size()));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return scores[a] < scores[b]; });
  return order;
}

Permutation rank_from_scores(const Vector& scores) {
  if (scores.size() < 1) throw ValidationError("score vector is empty");
  const auto order = ascending_order(scores);
  IntVector ranks(scores.size());
  for (std::size_t k = 0; k < order.size(); ++k) ranks[order[k]] = static_cast<int>(k + 1);
  return Permutation(std::move(ranks));
}

ProfileCurve cp_profile(const Graph& graph, const Vector& scores) {
  const Index n = graph.node_count();
  if (scores.size() != n) throw ValidationError("score length does not match node count");
  if (!is_connected(graph)) throw DisconnectedGraphError("profile requires a connected graph");

  const auto& adj = graph.adjacency();
  const Vector degree = degree_vector(graph);
  const auto order = ascending_order(scores);
  std::vector<bool> inside(static_cast<std::size_t>(n), false);

  ProfileCurve curve;
  curve.gamma.resize(n);
  double within = 0.0;
  double incident = 0.0;
  for (Index k = 0; k < n; ++k) {
    const Index u = order[static_cast<std::size_t>(k)];
    double links = 0.0;
    for (Graph::Adjacency::InnerIterator it(adj, u); it; ++it) {
      if (inside[static_cast<std::size_t>(it.col())]) links += it.value();
    }
    inside[static_cast<std::size_t>(u)] = true;
    within += 2.0 * links;
    incident += degree[u];
    curve.gamma[k] = within / incident;
  }
  // S_n is the whole node set, so the ratio is identically one.
  curve.gamma[n - 1] = 1.0;
  return curve;
}

double normalized_quality(const Graph& graph, const Vector& scores) {
  const double top = scores.size() > 0 ? scores.maxCoeff() : 0.0;
  if (!(top > 0.0)) throw ValidationError("score vector has no positive entry");
  return f_infinity(graph, scores) / (top * graph.total_weight());
}

namespace {

/// Number of tied pairs within runs of equal values of a sorted sequence.
template <typename Get>
std::int64_t tied_pairs(std::size_t n, Get get) {
  std::int64_t total = 0;
  std::size_t run = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i < n && get(i) == get(i - 1)) {
      ++run;
    } else {
      total += static_cast<std::int64_t>(run) * static_cast<std::int64_t>(run - 1) / 2;
      run = 1;
    }
  }
  return total;
}

/// Stable merge sort that returns the number of inversions.
std::int64_t sort_counting_swaps(std::vector<double>& v, std::vector<double>& buffer, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t swaps = sort_counting_swaps(v, buffer, lo, mid) + sort_counting_swaps(v, buffer, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      swaps += static_cast<std::int64_t>(mid - i);
      buffer[k++] = v[j++];
    } else {
      buffer[k++] = v[i++];
    }
  }
  while (i < mid) buffer[k++] = v[i++];
  while (j < hi) buffer[k++] = v[j++];
  std::copy(buffer.begin() + static_cast<std::ptrdiff_t>(lo), buffer.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return swaps;
}

}  // namespace

double kendall_tau(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ValidationError("rankings have different lengths");
  if (a.size() < 2) throw ValidationError("kendall tau needs at least two items");
  const auto n = static_cast<std::size_t>(a.size());

  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index x, Index y) {
    return a[x] != a[y] ? a[x] < a[y] : b[x] < b[y];
  });

  const auto pairs = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n - 1) / 2;
  const std::int64_t ties_a = tied_pairs(n, [&](std::size_t i) { return a[order[i]]; });
  std::int64_t ties_joint = 0;
  {
    std::size_t run = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      if (i < n && a[order[i]] == a[order[i - 1]] && b[order[i]] == b[order[i - 1]]) {
        ++run;
      } else {
        ties_joint += static_cast<std::int64_t>(run) * static_cast<std::int64_t>(run - 1) / 2;
        run = 1;
      }
    }
  }

  std::vector<double> sorted_b(n);
  for (std::size_t i = 0; i < n; ++i) sorted_b[i] = b[order[i]];
  std::vector<double> buffer(n);
  const std::int64_t swaps = sort_counting_swaps(sorted_b, buffer, 0, n);
  const std::int64_t ties_b = tied_pairs(n, [&](std::size_t i) { return sorted_b[i]; });

  if (ties_a == pairs || ties_b == pairs) throw ValidationError("kendall tau undefined for constant ranking");
  const double numerator = static_cast<double>(pairs - ties_a - ties_b + ties_joint - 2 * swaps);
  const double denominator = std::sqrt(static_cast<double>(pairs - ties_a)) * std::sqrt(static_cast<double>(pairs - ties_b));
  return std::clamp(numerator / denominator, -1.0, 1.0);
}

double recovery_fraction(const Vector& scores, const std::vector<bool>& core, Index core_size) {
  const Index n = scores.size();
  if (static_cast<Index>(core.size()) != n) throw ValidationError("ground truth length does not match scores");
  if (core_size < 0 || core_size > n) throw ValidationError("core size out of range");
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) { return scores[x] > scores[y]; });
  std::vector<bool> called(static_cast<std::size_t>(n), false);
  for (Index k = 0; k < core_size; ++k) called[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = true;
  Index matches = 0;
  for (Index i = 0; i < n; ++i) {
    if (called[static_cast<std::size_t>(i)] == core[static_cast<std::size_t>(i)]) ++matches;
  }
  return static_cast<double>(matches) / static_cast<double>(n);
}

}  // namespace nscp
