#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include "nscp/baselines.hpp"
#include "nscp/graph.hpp"
#include "nscp/metrics.hpp"
#include "nscp/models.hpp"
#include "nscp/nsm.hpp"

namespace nscp::cli {
namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr const char* kRankConvention =
    "rank column is descending coreness (1 = most core); internal ranks are ascending "
    "(1 = most peripheral), ties by node order; rank = n + 1 - ascending rank";

class NotConverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  char buffer[1 << 14];
  while (in) {
    in.read(buffer, sizeof(buffer));
    EVP_DigestUpdate(ctx.get(), buffer, static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &length);
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

std::string format_double(double v) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v);
  return std::string(buffer, ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  return fields;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

Table read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  Table table;
  std::string line;
  if (!std::getline(in, line)) throw ValidationError(path + ": empty file");
  table.header = split_csv(line);
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_csv(line);
    if (fields.size() != table.header.size()) throw ValidationError(path + ": ragged row");
    table.rows.push_back(std::move(fields));
  }
  return table;
}

std::size_t column(const Table& table, const std::string& name, const std::string& path) {
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (table.header[c] == name) return c;
  }
  throw ValidationError(path + ": missing column '" + name + "'");
}

double parse_number(const std::string& s, const std::string& path) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ValidationError(path + ": bad number '" + s + "'");
  return v;
}

/// Reads `value_column` keyed by label and aligns it to the graph's node order.
Vector read_node_column(const std::string& path, const std::string& value_column, const Graph& graph) {
  const Table table = read_csv(path);
  const std::size_t lc = column(table, "label", path);
  const std::size_t vc = column(table, value_column, path);
  std::map<std::string, double> values;
  for (const auto& row : table.rows) {
    if (!values.emplace(row[lc], parse_number(row[vc], path)).second) {
      throw ValidationError(path + ": duplicate label '" + row[lc] + "'");
    }
  }
  if (static_cast<Index>(values.size()) != graph.node_count()) {
    throw ValidationError(path + ": label set does not match graph (" + std::to_string(values.size()) + " vs " +
                          std::to_string(graph.node_count()) + " nodes)");
  }
  Vector out(graph.node_count());
  for (Index i = 0; i < graph.node_count(); ++i) {
    auto it = values.find(graph.label(i));
    if (it == values.end()) throw ValidationError(path + ": label '" + graph.label(i) + "' missing");
    out[i] = it->second;
  }
  return out;
}

bool has_column(const std::string& path, const std::string& name) {
  const Table table = read_csv(path);
  for (const auto& h : table.header) {
    if (h == name) return true;
  }
  return false;
}

/// Output sink: a file when a path is given, otherwise the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : path_(path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ValidationError("cannot write " + path);
    }
    stream_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::string path_;
  std::ofstream file_;
  std::ostream* stream_;
};

struct Manifest {
  json doc;
  Clock::time_point start = Clock::now();

  Manifest(const std::string& command, const std::vector<std::string>& args) {
    doc["command"] = command;
    doc["argv"] = args;
    doc["version"] = kVersion;
    doc["parameters"] = json::object();
    doc["inputs"] = json::object();
  }

  void input(const std::string& path) { doc["inputs"][path] = {{"sha256", sha256_file(path)}}; }

  /// Written to `manifest_path`, else next to `output_path`, else to `err`.
  void emit(const std::string& manifest_path, const std::string& output_path, std::ostream& err) {
    doc["wall_time_seconds"] = std::chrono::duration<double>(Clock::now() - start).count();
    std::string target = manifest_path;
    if (target.empty() && !output_path.empty()) target = output_path + ".manifest.json";
    if (target.empty()) {
      err << doc.dump(2) << '\n';
      return;
    }
    std::ofstream out(target);
    if (!out) throw ValidationError("cannot write " + target);
    out << doc.dump(2) << '\n';
  }
};

struct GraphOptions {
  std::string path;
  bool largest_component = false;
};

Graph load_input(const GraphOptions& options, Manifest& manifest, std::ostream& err) {
  LoadDiagnostics diag;
  Graph graph = load_graph_file(options.path, &diag);
  manifest.input(options.path);
  for (const auto& w : diag.warnings) err << "warning: " << w << '\n';
  manifest.doc["load"] = {{"nodes", graph.node_count()},
                          {"edges", graph.edge_count()},
                          {"dropped_self_loops", diag.dropped_self_loops},
                          {"merged_duplicates", diag.merged_duplicates},
                          {"dropped_zero_weight", diag.dropped_zero_weight}};
  if (!is_connected(graph)) {
    if (!options.largest_component) {
      throw DisconnectedGraphError("graph is not connected; pass --largest-component to restrict to it");
    }
    graph = largest_component(graph).graph;
    manifest.doc["load"]["largest_component_nodes"] = graph.node_count();
  }
  return graph;
}

void add_graph_options(CLI::App* app, GraphOptions& options) {
  app->add_option("graph", options.path, "Edge list or Matrix Market file")->required()->check(CLI::ExistingFile);
  app->add_flag("--largest-component", options.largest_component,
                "Restrict a disconnected graph to its largest connected component");
}

// ---------------------------------------------------------------------------
// detect

struct DetectOptions {
  GraphOptions graph;
  std::string method = "nsm";
  double alpha = 10.0;
  double p = 20.0;
  double tol = 1e-8;
  int max_iter = 10000;
  int lattice = 50;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string output;
  std::string manifest;
};

int cmd_detect(const DetectOptions& o, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Manifest manifest("detect", args);
  const Graph graph = load_input(o.graph, manifest, err);
  auto& params = manifest.doc["parameters"];
  params["method"] = o.method;
  params["largest_component"] = o.graph.largest_component;

  Vector scores;
  bool converged = true;
  if (o.method == "nsm") {
    NsmParams np;
    np.kernel = {o.alpha, o.p};
    np.tolerance = o.tol;
    np.max_iterations = o.max_iter;
    params["alpha"] = o.alpha;
    params["p"] = o.p;
    params["tolerance"] = o.tol;
    params["max_iterations"] = o.max_iter;
    const NsmResult r = nsm_detect(graph, np);
    scores = r.core_score;
    converged = r.converged;
    json residuals = json::array();
    json bounds = json::array();
    for (std::size_t k = 0; k < r.residual_history.size(); ++k) {
      const auto b = apriori_error_bound(r.gamma0, r.contraction_ratio, o.p, o.alpha, static_cast<int>(k));
      residuals.push_back(r.residual_history[k]);
      bounds.push_back({{"step", b.step}, {"distance", b.distance}, {"observed_step_inf", r.step_inf_history[k]}});
    }
    manifest.doc["diagnostics"] = {{"eigenvalue", r.eigenvalue},
                                   {"iterations", r.iterations},
                                   {"converged", r.converged},
                                   {"gamma0", r.gamma0},
                                   {"contraction_ratio", r.contraction_ratio},
                                   {"residual_history", residuals},
                                   {"apriori_bounds", bounds}};
  } else if (o.method == "degree") {
    scores = degree_scores(graph);
  } else if (o.method == "eig") {
    params["tolerance"] = o.tol;
    params["max_iterations"] = o.max_iter;
    const EigenvectorResult r = eigenvector_centrality(graph, o.tol, o.max_iter);
    scores = r.scores / r.scores.maxCoeff();
    converged = r.converged;
    manifest.doc["diagnostics"] = {{"spectral_radius", r.spectral_radius},
                                   {"iterations", r.iterations},
                                   {"converged", r.converged}};
  } else if (o.method == "coreness") {
    scores = hindex_coreness(graph).cast<double>();
    const double m = scores.maxCoeff();
    if (m > 0.0) scores /= m;
  } else if (o.method == "simann") {
    params["lattice"] = o.lattice;
    params["threads"] = o.threads;
    AnnealSchedule schedule;
    schedule.seed = o.seed;
    const SimannResult r = simann_core_score(graph, o.lattice, schedule, o.threads);
    scores = r.scores;
    manifest.doc["diagnostics"] = {{"lattice_points", r.lattice.size()}};
  } else {
    throw ValidationError("unknown method '" + o.method + "'");
  }
  manifest.doc["seed"] = o.seed;
  manifest.doc["rank_convention"] = kRankConvention;

  const Permutation ascending = rank_from_scores(scores);
  const Index n = graph.node_count();
  Sink sink(o.output, out);
  auto& s = sink.stream();
  s << "label,score,rank\n";
  for (Index i = 0; i < n; ++i) {
    s << csv_field(graph.label(i)) << ',' << format_double(scores[i]) << ',' << (n + 1 - ascending[i]) << '\n';
  }
  manifest.emit(o.manifest, o.output, err);
  if (!converged) throw NotConverged("iteration budget exhausted before convergence");
  return kSuccess;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateOptions {
  std::string model;
  Index n = 0;
  double s = 7.0;
  double t = 0.667;
  double delta = 0.5;
  double p = 0.25;
  double k = 1.0;
  std::string setting = "either";
  std::uint64_t seed = 0;
  std::string output;
  std::string manifest;
};

int cmd_generate(const GenerateOptions& o, const std::vector<std::string>& args, std::ostream& err) {
  Manifest manifest("generate", args);
  auto& params = manifest.doc["parameters"];
  params["model"] = o.model;
  manifest.doc["seed"] = o.seed;

  Graph graph = Graph::from_edges(1, {});
  std::vector<std::pair<std::string, std::string>> truth;
  std::string truth_column;
  bool connected = false;
  if (o.model == "lcp") {
    LogisticParams lp{o.n > 0 ? o.n : 90, o.s, o.t, o.seed};
    params["n"] = lp.n;
    params["s"] = lp.s;
    params["t"] = lp.t;
    LcpSample sample = lcp_generate(lp);
    truth_column = "rank";
    for (Index i = 0; i < lp.n; ++i) truth.emplace_back(sample.graph.label(i), std::to_string(sample.ground_truth[i]));
    graph = std::move(sample.graph);
    connected = sample.connected;
  } else if (o.model == "sbm") {
    SbmParams sp;
    sp.n = o.n > 0 ? o.n : 100;
    sp.delta = o.delta;
    sp.p_base = o.p;
    sp.k = o.k;
    sp.seed = o.seed;
    if (o.setting == "either") {
      sp.setting = SbmSetting::EitherPeriphery;
    } else if (o.setting == "both") {
      sp.setting = SbmSetting::BothPeriphery;
    } else {
      throw ValidationError("setting must be 'either' or 'both'");
    }
    params["n"] = sp.n;
    params["delta"] = sp.delta;
    params["p"] = sp.p_base;
    params["k"] = sp.k;
    params["setting"] = o.setting;
    SbmSample sample = sbm_generate(sp);
    truth_column = "core";
    for (Index i = 0; i < sp.n; ++i) {
      truth.emplace_back(sample.graph.label(i), sample.core[static_cast<std::size_t>(i)] ? "1" : "0");
    }
    graph = std::move(sample.graph);
    connected = sample.connected;
  } else {
    throw ValidationError("unknown model '" + o.model + "'");
  }

  const std::string edges_path = o.output + ".edges";
  const std::string truth_path = o.output + ".truth.csv";
  {
    std::ofstream edges(edges_path);
    if (!edges) throw ValidationError("cannot write " + edges_path);
    edges << "# nodes " << graph.node_count() << " edges " << graph.edge_count() << '\n';
    const Vector degree = degree_vector(graph);
    for (Index i = 0; i < graph.node_count(); ++i) {
      if (degree[i] == 0.0) edges << "# isolated " << graph.label(i) << '\n';
    }
    write_edge_list(edges, graph);
  }
  {
    std::ofstream out(truth_path);
    if (!out) throw ValidationError("cannot write " + truth_path);
    out << "label," << truth_column << '\n';
    for (const auto& [label, value] : truth) out << csv_field(label) << ',' << value << '\n';
  }
  manifest.doc["outputs"] = {edges_path, truth_path};
  manifest.doc["connected"] = connected;
  manifest.doc["edges"] = graph.edge_count();
  if (!connected) err << "warning: generated graph is disconnected\n";
  manifest.emit(o.manifest, o.output, err);
  return kSuccess;
}

// ---------------------------------------------------------------------------
// evaluate, reorder, profile

struct EvaluateOptions {
  GraphOptions graph;
  std::string scores;
  std::string scores2;
  std::string truth;
  std::optional<double> lcp_s;
  std::optional<double> lcp_t;
  std::string output;
  std::string manifest;
};

int cmd_evaluate(const EvaluateOptions& o, const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err) {
  Manifest manifest("evaluate", args);
  const Graph graph = load_input(o.graph, manifest, err);
  manifest.input(o.scores);
  const Vector scores = read_node_column(o.scores, "score", graph);
  const Permutation ranks = rank_from_scores(scores);

  json metrics;
  metrics["nodes"] = graph.node_count();
  metrics["normalized_quality"] = normalized_quality(graph, scores);
  metrics["normalized_quality_ranks"] = normalized_quality(graph, ranks.as_scores());
  metrics["profile_area"] = cp_profile(graph, scores).area();
  if (o.lcp_s.has_value() != o.lcp_t.has_value()) throw ValidationError("--lcp-s and --lcp-t go together");
  if (o.lcp_s) {
    metrics["log_likelihood"] = log_likelihood(graph, ranks, *o.lcp_s, *o.lcp_t);
    manifest.doc["parameters"]["lcp_s"] = *o.lcp_s;
    manifest.doc["parameters"]["lcp_t"] = *o.lcp_t;
  }
  if (!o.scores2.empty()) {
    manifest.input(o.scores2);
    metrics["kendall_tau"] = kendall_tau(scores, read_node_column(o.scores2, "score", graph));
  }
  if (!o.truth.empty()) {
    manifest.input(o.truth);
    if (has_column(o.truth, "core")) {
      const Vector flags = read_node_column(o.truth, "core", graph);
      std::vector<bool> core(static_cast<std::size_t>(flags.size()));
      Index core_size = 0;
      for (Index i = 0; i < flags.size(); ++i) {
        core[static_cast<std::size_t>(i)] = flags[i] != 0.0;
        core_size += core[static_cast<std::size_t>(i)] ? 1 : 0;
      }
      metrics["core_size"] = core_size;
      metrics["recovery_fraction"] = recovery_fraction(scores, core, core_size);
    } else {
      metrics["truth_kendall_tau"] = kendall_tau(scores, read_node_column(o.truth, "rank", graph));
    }
  }
  Sink sink(o.output, out);
  sink.stream() << metrics.dump(2) << '\n';
  manifest.emit(o.manifest, o.output, err);
  return kSuccess;
}

struct PairOptions {
  GraphOptions graph;
  std::string scores;
  std::string output;
  std::string manifest;
};

int cmd_reorder(const PairOptions& o, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Manifest manifest("reorder", args);
  const Graph graph = load_input(o.graph, manifest, err);
  manifest.input(o.scores);
  const Vector scores = read_node_column(o.scores, "score", graph);
  const Permutation ascending = rank_from_scores(scores);
  const Index n = graph.node_count();

  std::vector<std::tuple<Index, Index, double>> triples;
  triples.reserve(2 * graph.edges().size());
  for (const auto& e : graph.edges()) {
    const Index a = n + 1 - ascending[e.i];
    const Index b = n + 1 - ascending[e.j];
    triples.emplace_back(a, b, e.weight);
    triples.emplace_back(b, a, e.weight);
  }
  std::sort(triples.begin(), triples.end());
  Sink sink(o.output, out);
  auto& s = sink.stream();
  s << "row,col,weight\n";
  for (const auto& [r, c, w] : triples) s << r << ',' << c << ',' << format_double(w) << '\n';
  manifest.doc["rank_convention"] = kRankConvention;
  manifest.emit(o.manifest, o.output, err);
  return kSuccess;
}

int cmd_profile(const PairOptions& o, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Manifest manifest("profile", args);
  const Graph graph = load_input(o.graph, manifest, err);
  manifest.input(o.scores);
  const ProfileCurve curve = cp_profile(graph, read_node_column(o.scores, "score", graph));
  Sink sink(o.output, out);
  auto& s = sink.stream();
  s << "k,gamma\n";
  for (Index k = 0; k < curve.gamma.size(); ++k) s << (k + 1) << ',' << format_double(curve.gamma[k]) << '\n';
  manifest.emit(o.manifest, o.output, err);
  return kSuccess;
}

void add_output_options(CLI::App* app, std::string& output, std::string& manifest) {
  app->add_option("-o,--output", output, "Output file (default: stdout)");
  app->add_option("--manifest", manifest, "Run manifest path (default: <output>.manifest.json, or stderr)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Core-periphery detection with a nonlinear spectral method"};
  app.name(args.empty() ? "nscp" : args[0]);
  app.require_subcommand(1);

  DetectOptions detect;
  auto* detect_cmd = app.add_subcommand("detect", "Compute core-periphery scores");
  add_graph_options(detect_cmd, detect.graph);
  detect_cmd->add_option("--method", detect.method, "nsm | degree | eig | coreness | simann")
      ->check(CLI::IsMember({"nsm", "degree", "eig", "coreness", "simann"}));
  detect_cmd->add_option("--alpha", detect.alpha, "Kernel exponent (> 1)");
  detect_cmd->add_option("--p", detect.p, "Sphere exponent (> alpha)");
  detect_cmd->add_option("--tol", detect.tol, "Stopping tolerance");
  detect_cmd->add_option("--max-iter", detect.max_iter, "Iteration budget");
  detect_cmd->add_option("--lattice", detect.lattice, "Annealing lattice resolution h");
  detect_cmd->add_option("--seed", detect.seed, "Random seed");
  detect_cmd->add_option("--threads", detect.threads, "Worker cap for annealing");
  add_output_options(detect_cmd, detect.output, detect.manifest);

  GenerateOptions generate;
  auto* generate_cmd = app.add_subcommand("generate", "Sample a synthetic core-periphery graph");
  generate_cmd->add_option("model", generate.model, "lcp | sbm")->required()->check(CLI::IsMember({"lcp", "sbm"}));
  generate_cmd->add_option("--n", generate.n, "Number of nodes (lcp: 90, sbm: 100)");
  generate_cmd->add_option("--s", generate.s, "Logistic steepness");
  generate_cmd->add_option("--t", generate.t, "Logistic threshold");
  generate_cmd->add_option("--delta", generate.delta, "Core fraction");
  generate_cmd->add_option("--p", generate.p, "Base edge probability");
  generate_cmd->add_option("--k", generate.k, "Block contrast, 1 <= k <= 1/sqrt(p)");
  generate_cmd->add_option("--setting", generate.setting, "either | both");
  generate_cmd->add_option("--seed", generate.seed, "Random seed");
  generate_cmd->add_option("-o,--output", generate.output, "Output prefix for .edges and .truth.csv")->required();
  generate_cmd->add_option("--manifest", generate.manifest, "Run manifest path (default: <prefix>.manifest.json)");

  EvaluateOptions evaluate;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Quality and comparison metrics as JSON");
  add_graph_options(evaluate_cmd, evaluate.graph);
  evaluate_cmd->add_option("scores", evaluate.scores, "Score CSV (label,score)")->required()->check(CLI::ExistingFile);
  evaluate_cmd->add_option("--scores2", evaluate.scores2, "Second score CSV for Kendall tau")->check(CLI::ExistingFile);
  evaluate_cmd->add_option("--truth", evaluate.truth, "Ground truth CSV (label,core or label,rank)")
      ->check(CLI::ExistingFile);
  evaluate_cmd->add_option("--lcp-s", evaluate.lcp_s, "Logistic steepness for the log-likelihood");
  evaluate_cmd->add_option("--lcp-t", evaluate.lcp_t, "Logistic threshold for the log-likelihood");
  add_output_options(evaluate_cmd, evaluate.output, evaluate.manifest);

  PairOptions reorder;
  auto* reorder_cmd = app.add_subcommand("reorder", "Adjacency coordinates permuted by descending score");
  add_graph_options(reorder_cmd, reorder.graph);
  reorder_cmd->add_option("scores", reorder.scores, "Score CSV")->required()->check(CLI::ExistingFile);
  add_output_options(reorder_cmd, reorder.output, reorder.manifest);

  PairOptions profile;
  auto* profile_cmd = app.add_subcommand("profile", "Core-periphery profile as CSV");
  add_graph_options(profile_cmd, profile.graph);
  profile_cmd->add_option("scores", profile.scores, "Score CSV")->required()->check(CLI::ExistingFile);
  add_output_options(profile_cmd, profile.output, profile.manifest);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kValidationError;
  }

  try {
    if (*detect_cmd) return cmd_detect(detect, args, out, err);
    if (*generate_cmd) return cmd_generate(generate, args, err);
    if (*evaluate_cmd) return cmd_evaluate(evaluate, args, out, err);
    if (*reorder_cmd) return cmd_reorder(reorder, args, out, err);
    if (*profile_cmd) return cmd_profile(profile, args, out, err);
  } catch (const NotConverged& e) {
    err << "error: " << e.what() << '\n';
    return kNotConverged;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }
  return kValidationError;
}

}  // namespace nscp::cli
