#pragma once

#include <Eigen/SparseCore>

#include <iosfwd>
#include <string>
#include <vector>

#include "nscp/common.hpp"

namespace nscp {

struct Edge {
  Index i;
  Index j;
  double weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected graph with strictly positive weights and no self-loops.
///
/// The adjacency is stored in full symmetric CSR form (2m stored arcs), so a
/// neighbor sweep over all nodes costs O(n + m). Edges are kept canonically
/// with i < j, sorted lexicographically. Immutable after construction.
class Graph {
 public:
  using Adjacency = Eigen::SparseMatrix<double, Eigen::RowMajor>;

  /// Builds a graph from canonical-or-not edges. Duplicate pairs are summed,
  /// zero-weight pairs dropped. Throws on self-loops, negative weights,
  /// out-of-range indices or a label count that does not match `node_count`.
  /// Empty `labels` yields "1".."n".
  static Graph from_edges(Index node_count, std::vector<Edge> edges,
                          std::vector<std::string> labels = {});

  Index node_count() const { return static_cast<Index>(labels_.size()); }
  Index edge_count() const { return static_cast<Index>(edges_.size()); }

  const Adjacency& adjacency() const { return adjacency_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Index i) const { return labels_[static_cast<std::size_t>(i)]; }

  /// Weight of (i, j), zero when absent.
  double weight(Index i, Index j) const { return adjacency_.coeff(i, j); }

  /// Sum of all stored weights over ordered pairs, i.e. 2 * sum of edge weights.
  double total_weight() const { return total_weight_; }

  /// Same topology with every weight set to 1.
  Graph binarized() const;

  /// Graph with internal index i moved to new_index[i]; labels travel with nodes.
  Graph relabeled(const std::vector<Index>& new_index) const;

 private:
  Graph() = default;

  Adjacency adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  double total_weight_ = 0.0;
};

struct LoadDiagnostics {
  std::size_t dropped_self_loops = 0;
  std::size_t dropped_zero_weight = 0;
  std::size_t merged_duplicates = 0;
  std::vector<std::string> warnings;
};

/// Whitespace separated "u v [w]" lines; '#' and '%' start comments.
/// Identifiers are mapped to indices in first-appearance order.
Graph load_edge_list(std::istream& in, LoadDiagnostics* diagnostics = nullptr);

/// Matrix Market coordinate format, pattern/real/integer, symmetric/general.
/// Node labels are the 1-based row indices.
Graph load_matrix_market(std::istream& in, LoadDiagnostics* diagnostics = nullptr);

/// Dispatches on the "%%MatrixMarket" banner or a .mtx extension.
Graph load_graph_file(const std::string& path, LoadDiagnostics* diagnostics = nullptr);

/// Writes "label_i label_j weight" per canonical edge, weights at full precision.
void write_edge_list(std::ostream& out, const Graph& graph);

struct ComponentRestriction {
  Graph graph;
  /// old index -> new index, -1 for nodes outside the kept component.
  std::vector<Index> old_to_new;
};

bool is_connected(const Graph& graph);

/// Component id per node; components numbered in order of their smallest index.
std::vector<Index> connected_components(const Graph& graph, Index* component_count = nullptr);

/// Induced subgraph on the largest component. Ties go to the component that
/// contains the smallest internal index.
ComponentRestriction largest_component(const Graph& graph);

/// d_i = sum_j a_ij.
Vector degree_vector(const Graph& graph);

}  // namespace nscp
