#include "nscp/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace nscp {
namespace {

bool parse_double(std::string_view token, double* value) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, *value);
  return ec == std::errc() && ptr == last;
}

bool parse_index(std::string_view token, long long* value) {
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), last, *value);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
    tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

std::string line_error(std::size_t line_no, const std::string& what) {
  return "line " + std::to_string(line_no) + ": " + what;
}

void warn(LoadDiagnostics* diagnostics, std::string message) {
  if (diagnostics) diagnostics->warnings.push_back(std::move(message));
}

}  // namespace

Graph Graph::from_edges(Index node_count, std::vector<Edge> edges,
                        std::vector<std::string> labels) {
  if (node_count < 1) throw ValidationError("graph must have at least one node");
  if (labels.empty()) {
    labels.reserve(static_cast<std::size_t>(node_count));
    for (Index i = 0; i < node_count; ++i) labels.push_back(std::to_string(i + 1));
  }
  if (static_cast<Index>(labels.size()) != node_count) {
    throw ValidationError("label count does not match node count");
  }

  for (auto& e : edges) {
    if (e.i < 0 || e.j < 0 || e.i >= node_count || e.j >= node_count) {
      throw ValidationError("edge endpoint out of range");
    }
    if (e.i == e.j) throw ValidationError("self-loops are not allowed");
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
      throw ValidationError("edge weights must be finite and nonnegative");
    }
    if (e.i > e.j) std::swap(e.i, e.j);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });

  std::vector<Edge> merged;
  merged.reserve(edges.size());
  for (const auto& e : edges) {
    if (!merged.empty() && merged.back().i == e.i && merged.back().j == e.j) {
      merged.back().weight += e.weight;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const Edge& e) { return e.weight == 0.0; });

  Graph g;
  g.labels_ = std::move(labels);
  g.edges_ = std::move(merged);

  std::vector<Eigen::Triplet<double, Index>> triplets;
  triplets.reserve(2 * g.edges_.size());
  double total = 0.0;
  for (const auto& e : g.edges_) {
    triplets.emplace_back(e.i, e.j, e.weight);
    triplets.emplace_back(e.j, e.i, e.weight);
    total += e.weight;
  }
  g.adjacency_.resize(node_count, node_count);
  g.adjacency_.setFromTriplets(triplets.begin(), triplets.end());
  g.adjacency_.makeCompressed();
  g.total_weight_ = 2.0 * total;
  return g;
}

Graph Graph::binarized() const {
  std::vector<Edge> edges = edges_;
  for (auto& e : edges) e.weight = 1.0;
  return from_edges(node_count(), std::move(edges), labels_);
}

Graph Graph::relabeled(const std::vector<Index>& new_index) const {
  const Index n = node_count();
  if (static_cast<Index>(new_index.size()) != n) {
    throw ValidationError("relabeling size does not match node count");
  }
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Index i = 0; i < n; ++i) {
    const Index k = new_index[static_cast<std::size_t>(i)];
    if (k < 0 || k >= n || seen[static_cast<std::size_t>(k)]) {
      throw ValidationError("relabeling is not a bijection");
    }
    seen[static_cast<std::size_t>(k)] = true;
    labels[static_cast<std::size_t>(k)] = labels_[static_cast<std::size_t>(i)];
  }
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) {
    edges.push_back({new_index[static_cast<std::size_t>(e.i)],
                     new_index[static_cast<std::size_t>(e.j)], e.weight});
  }
  return from_edges(n, std::move(edges), std::move(labels));
}

Graph load_edge_list(std::istream& in, LoadDiagnostics* diagnostics) {
  std::unordered_map<std::string, Index> ids;
  std::vector<std::string> labels;
  std::map<std::pair<Index, Index>, double> weights;
  std::size_t self_loops = 0;
  std::size_t duplicates = 0;

  auto intern = [&](std::string_view token) {
    auto [it, inserted] = ids.try_emplace(std::string(token), static_cast<Index>(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#' || tokens[0].front() == '%') continue;
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ValidationError(line_error(line_no, "expected 'u v' or 'u v w'"));
    }
    double w = 1.0;
    if (tokens.size() == 3) {
      if (!parse_double(tokens[2], &w) || !std::isfinite(w)) {
        throw ValidationError(line_error(line_no, "malformed weight '" + std::string(tokens[2]) + "'"));
      }
      if (w < 0.0) throw ValidationError(line_error(line_no, "negative weight"));
    }
    const Index u = intern(tokens[0]);
    const Index v = intern(tokens[1]);
    if (u == v) {
      ++self_loops;
      warn(diagnostics, line_error(line_no, "self-loop dropped"));
      continue;
    }
    auto key = std::minmax(u, v);
    auto [it, inserted] = weights.try_emplace({key.first, key.second}, 0.0);
    if (!inserted) ++duplicates;
    it->second += w;
  }
  if (labels.empty()) throw ValidationError("empty graph");

  std::vector<Edge> edges;
  edges.reserve(weights.size());
  std::size_t zero = 0;
  for (const auto& [key, w] : weights) {
    if (w == 0.0) {
      ++zero;
      continue;
    }
    edges.push_back({key.first, key.second, w});
  }
  if (diagnostics) {
    diagnostics->dropped_self_loops += self_loops;
    diagnostics->dropped_zero_weight += zero;
    diagnostics->merged_duplicates += duplicates;
  }
  const auto n = static_cast<Index>(labels.size());
  return Graph::from_edges(n, std::move(edges), std::move(labels));
}

Graph load_matrix_market(std::istream& in, LoadDiagnostics* diagnostics) {
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("empty Matrix Market input");
  std::vector<std::string> banner;
  for (auto t : split_ws(line)) {
    std::string s(t);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    banner.push_back(std::move(s));
  }
  if (banner.size() != 5 || banner[0] != "%%matrixmarket" || banner[1] != "matrix") {
    throw ValidationError("missing %%MatrixMarket matrix banner");
  }
  if (banner[2] != "coordinate") throw ValidationError("unsupported Matrix Market format: " + banner[2]);
  const std::string& field = banner[3];
  if (field != "pattern" && field != "real" && field != "integer") {
    throw ValidationError("unsupported Matrix Market field: " + field);
  }
  const std::string& symmetry = banner[4];
  if (symmetry != "symmetric" && symmetry != "general") {
    throw ValidationError("unsupported Matrix Market symmetry: " + symmetry);
  }
  const bool pattern = field == "pattern";
  const bool symmetric = symmetry == "symmetric";

  std::size_t line_no = 1;
  long long rows = -1, cols = -1, nnz = -1;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '%') continue;
    if (tokens.size() != 3 || !parse_index(tokens[0], &rows) || !parse_index(tokens[1], &cols) ||
        !parse_index(tokens[2], &nnz)) {
      throw ValidationError(line_error(line_no, "malformed size line"));
    }
    break;
  }
  if (rows < 0) throw ValidationError("missing Matrix Market size line");
  if (rows != cols) throw ValidationError("matrix is not square");
  if (rows < 1) throw ValidationError("empty graph");

  std::map<std::pair<Index, Index>, double> entries;
  long long read = 0;
  std::size_t diagonal = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '%') continue;
    const std::size_t expected = pattern ? 2 : 3;
    long long r = 0, c = 0;
    double v = 1.0;
    if (tokens.size() != expected || !parse_index(tokens[0], &r) || !parse_index(tokens[1], &c) ||
        (!pattern && (!parse_double(tokens[2], &v) || !std::isfinite(v)))) {
      throw ValidationError(line_error(line_no, "malformed entry"));
    }
    if (r < 1 || c < 1 || r > rows || c > cols) throw ValidationError(line_error(line_no, "index out of range"));
    if (v < 0.0) throw ValidationError(line_error(line_no, "negative weight"));
    ++read;
    if (r == c) {
      ++diagonal;
      warn(diagnostics, line_error(line_no, "diagonal entry dropped"));
      continue;
    }
    entries[{static_cast<Index>(r - 1), static_cast<Index>(c - 1)}] += v;
  }
  if (read != nnz) throw ValidationError("entry count does not match size line");

  std::vector<Edge> edges;
  if (symmetric) {
    for (const auto& [key, w] : entries) edges.push_back({key.first, key.second, w});
  } else {
    for (const auto& [key, w] : entries) {
      auto mirror = entries.find({key.second, key.first});
      const double wt = mirror == entries.end() ? 0.0 : mirror->second;
      if (std::abs(w - wt) > 1e-12 * std::max(std::abs(w), std::abs(wt))) {
        throw ValidationError("general matrix is not symmetric at (" + std::to_string(key.first + 1) +
                              ", " + std::to_string(key.second + 1) + ")");
      }
      if (key.first > key.second) edges.push_back({key.second, key.first, w});
    }
  }
  if (diagnostics) diagnostics->dropped_self_loops += diagonal;
  return Graph::from_edges(static_cast<Index>(rows), std::move(edges));
}

Graph load_graph_file(const std::string& path, LoadDiagnostics* diagnostics) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::string first;
  std::getline(in, first);
  in.clear();
  in.seekg(0);
  const bool mtx = first.rfind("%%MatrixMarket", 0) == 0 ||
                   (path.size() >= 4 && path.compare(path.size() - 4, 4, ".mtx") == 0);
  return mtx ? load_matrix_market(in, diagnostics) : load_edge_list(in, diagnostics);
}

void write_edge_list(std::ostream& out, const Graph& graph) {
  char buffer[64];
  for (const auto& e : graph.edges()) {
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), e.weight);
    out << graph.label(e.i) << ' ' << graph.label(e.j) << ' ' << std::string_view(buffer, ptr - buffer)
        << '\n';
  }
}

std::vector<Index> connected_components(const Graph& graph, Index* component_count) {
  const Index n = graph.node_count();
  const auto& adj = graph.adjacency();
  std::vector<Index> component(static_cast<std::size_t>(n), -1);
  Index count = 0;
  std::vector<Index> stack;
  for (Index root = 0; root < n; ++root) {
    if (component[static_cast<std::size_t>(root)] >= 0) continue;
    component[static_cast<std::size_t>(root)] = count;
    stack.push_back(root);
    while (!stack.empty()) {
      const Index u = stack.back();
      stack.pop_back();
      for (Graph::Adjacency::InnerIterator it(adj, u); it; ++it) {
        auto& c = component[static_cast<std::size_t>(it.col())];
        if (c < 0) {
          c = count;
          stack.push_back(it.col());
        }
      }
    }
    ++count;
  }
  if (component_count) *component_count = count;
  return component;
}

bool is_connected(const Graph& graph) {
  Index count = 0;
  connected_components(graph, &count);
  return count == 1;
}

ComponentRestriction largest_component(const Graph& graph) {
  Index count = 0;
  const auto component = connected_components(graph, &count);
  std::vector<Index> sizes(static_cast<std::size_t>(count), 0);
  for (Index c : component) ++sizes[static_cast<std::size_t>(c)];
  // max_element returns the first maximum, i.e. the component with the smallest root.
  const Index keep = std::max_element(sizes.begin(), sizes.end()) - sizes.begin();

  std::vector<Index> old_to_new(component.size(), -1);
  std::vector<std::string> labels;
  Index next = 0;
  for (std::size_t i = 0; i < component.size(); ++i) {
    if (component[i] == keep) {
      old_to_new[i] = next++;
      labels.push_back(graph.labels()[i]);
    }
  }
  std::vector<Edge> edges;
  for (const auto& e : graph.edges()) {
    const Index a = old_to_new[static_cast<std::size_t>(e.i)];
    if (a >= 0) edges.push_back({a, old_to_new[static_cast<std::size_t>(e.j)], e.weight});
  }
  return {Graph::from_edges(next, std::move(edges), std::move(labels)), std::move(old_to_new)};
}

Vector degree_vector(const Graph& graph) {
  const auto& adj = graph.adjacency();
  Vector d(graph.node_count());
  for (Index i = 0; i < adj.outerSize(); ++i) {
    double sum = 0.0;
    for (Graph::Adjacency::InnerIterator it(adj, i); it; ++it) sum += it.value();
    d[i] = sum;
  }
  return d;
}

}  // namespace nscp
