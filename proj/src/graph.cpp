#include "nrgraph/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "nrgraph/alias.hpp"

namespace nrgraph {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

double uniform_closed_open(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

MultiGraph::MultiGraph(std::size_t n) : offsets_(n + 1, 0), loops_(n, 0) {}

MultiGraph MultiGraph::from_edges(std::size_t n, std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (e.u >= n || e.v >= n)
      throw std::out_of_range(fmt::format("edge ({}, {}) outside vertex range [0, {})", e.u, e.v, n));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });

  // Merge duplicates in place.
  std::size_t kept = 0;
  for (const auto& e : edges) {
    if (e.multiplicity == 0) continue;
    if (kept > 0 && edges[kept - 1].u == e.u && edges[kept - 1].v == e.v)
      edges[kept - 1].multiplicity += e.multiplicity;
    else
      edges[kept++] = e;
  }
  edges.resize(kept);

  MultiGraph g(n);
  std::vector<std::size_t> degree(n, 0);
  for (const auto& e : edges) {
    g.edge_total_ += e.multiplicity;
    if (e.u == e.v) {
      g.loops_[e.u] += e.multiplicity;
    } else {
      ++degree[e.u];
      ++degree[e.v];
    }
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.adjacency_.resize(g.offsets_[n]);
  // With edges sorted by (u, v), row w first receives every u < w in
  // increasing order and then every v > w, so rows come out sorted.
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : edges) {
    if (e.u == e.v) continue;
    g.adjacency_[cursor[e.u]++] = Neighbor{e.v, e.multiplicity};
    g.adjacency_[cursor[e.v]++] = Neighbor{e.u, e.multiplicity};
  }
  return g;
}

std::uint32_t MultiGraph::multiplicity(Vertex u, Vertex v) const {
  if (u >= num_vertices() || v >= num_vertices()) throw std::out_of_range("multiplicity: vertex out of range");
  if (u == v) return loops_[u];
  auto row = neighbors(u);
  auto it = std::lower_bound(row.begin(), row.end(), v,
                             [](const Neighbor& a, Vertex key) { return a.vertex < key; });
  return (it != row.end() && it->vertex == v) ? it->multiplicity : 0;
}

bool MultiGraph::is_simple() const {
  if (std::any_of(loops_.begin(), loops_.end(), [](auto c) { return c != 0; })) return false;
  return std::all_of(adjacency_.begin(), adjacency_.end(), [](const Neighbor& a) { return a.multiplicity == 1; });
}

std::vector<Edge> MultiGraph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < num_vertices(); ++u) {
    bool loop_written = false;
    for (const auto& nb : neighbors(u)) {
      if (!loop_written && nb.vertex > u) {
        if (loops_[u] > 0) out.push_back({u, u, loops_[u]});
        loop_written = true;
      }
      if (nb.vertex > u) out.push_back({u, nb.vertex, nb.multiplicity});
    }
    if (!loop_written && loops_[u] > 0) out.push_back({u, u, loops_[u]});
  }
  return out;
}

void MultiGraph::audit() const {
  const std::size_t n = num_vertices();
  if (offsets_.size() != n + 1 || offsets_.back() != adjacency_.size())
    throw std::logic_error("audit: offsets inconsistent with adjacency");
  std::uint64_t total = 0;
  for (Vertex u = 0; u < n; ++u) {
    total += loops_[u];
    auto row = neighbors(u);
    for (std::size_t i = 0; i < row.size(); ++i) {
      const auto& nb = row[i];
      if (nb.vertex >= n) throw std::logic_error(fmt::format("audit: neighbor {} of {} out of range", nb.vertex, u));
      if (nb.vertex == u) throw std::logic_error(fmt::format("audit: loop of {} stored as neighbor", u));
      if (nb.multiplicity == 0) throw std::logic_error(fmt::format("audit: zero multiplicity at ({}, {})", u, nb.vertex));
      if (i > 0 && row[i - 1].vertex >= nb.vertex)
        throw std::logic_error(fmt::format("audit: row {} not strictly sorted", u));
      if (multiplicity(nb.vertex, u) != nb.multiplicity)
        throw std::logic_error(fmt::format("audit: asymmetric multiplicity at ({}, {})", u, nb.vertex));
      if (nb.vertex > u) total += nb.multiplicity;
    }
  }
  if (total != edge_total_)
    throw std::logic_error(fmt::format("audit: edge_total {} but edges sum to {}", edge_total_, total));
}

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::NR: return "NR";
    case ModelKind::ENR: return "ENR";
    case ModelKind::CL: return "CL";
    case ModelKind::GRG: return "GRG";
  }
  return "?";
}

std::string_view to_string(Normalizer normalizer) { return normalizer == Normalizer::Ln ? "Ln" : "nEW"; }

ModelKind parse_model_kind(std::string_view text) {
  const auto s = lower(text);
  if (s == "nr") return ModelKind::NR;
  if (s == "enr") return ModelKind::ENR;
  if (s == "cl") return ModelKind::CL;
  if (s == "grg") return ModelKind::GRG;
  throw std::invalid_argument(fmt::format("unknown graph kind '{}' (expected NR, ENR, CL or GRG)", text));
}

Normalizer parse_normalizer(std::string_view text) {
  const auto s = lower(text);
  if (s == "ln") return Normalizer::Ln;
  if (s == "new") return Normalizer::NEW;
  throw std::invalid_argument(fmt::format("unknown normalizer '{}' (expected Ln or nEW)", text));
}

double edge_denominator(const WeightVector& weights, Normalizer normalizer, const WeightModel& model) {
  if (normalizer == Normalizer::Ln) return weights.total();
  return static_cast<double>(weights.size()) * model.mean();
}

double edge_probability(ModelKind kind, double p) {
  switch (kind) {
    case ModelKind::ENR: return -std::expm1(-p);
    case ModelKind::CL: return std::min(1.0, p);
    case ModelKind::GRG: return p / (1.0 + p);
    case ModelKind::NR: break;
  }
  throw std::invalid_argument("edge_probability: NR is a multigraph model");
}

MultiGraph generate_nr(const WeightVector& weights, double denominator, Rng& rng) {
  const std::size_t n = weights.size();
  if (n == 0) throw std::invalid_argument("generate_nr: empty weight vector");
  if (!(denominator > 0.0)) throw std::invalid_argument("generate_nr: denominator must be positive");

  const double total = weights.total();
  const double expected_edges = total * total / (2.0 * denominator);
  const std::uint64_t m = std::poisson_distribution<std::uint64_t>(expected_edges)(rng);

  AliasTable endpoints(weights.values());
  std::vector<Edge> edges;
  edges.reserve(m + n / 8);
  for (std::uint64_t k = 0; k < m; ++k) {
    const auto a = static_cast<Vertex>(endpoints.sample(rng));
    const auto b = static_cast<Vertex>(endpoints.sample(rng));
    edges.push_back({a, b, 1});
  }
  // Top-up so that loops reach rate W_x^2 / D.
  for (std::size_t x = 0; x < n; ++x) {
    const double rate = weights[x] * weights[x] / (2.0 * denominator);
    const auto extra = std::poisson_distribution<std::uint32_t>(rate)(rng);
    if (extra > 0) edges.push_back({static_cast<Vertex>(x), static_cast<Vertex>(x), extra});
  }
  return MultiGraph::from_edges(n, std::move(edges));
}

MultiGraph generate_simple(const WeightVector& weights, ModelKind kind, double denominator, Rng& rng) {
  if (kind == ModelKind::NR) throw std::invalid_argument("generate_simple: NR is not a simple-graph model");
  const std::size_t n = weights.size();
  if (n == 0) throw std::invalid_argument("generate_simple: empty weight vector");
  if (!(denominator > 0.0)) throw std::invalid_argument("generate_simple: denominator must be positive");

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return weights[a] > weights[b]; });

  std::vector<Edge> edges;
  for (std::size_t a = 0; a + 1 < n; ++a) {
    const Vertex u = order[a];
    const double scale = weights[u] / denominator;
    std::size_t b = a + 1;
    double bound = std::min(1.0, scale * weights[order[b]]);
    while (b < n && bound > 0.0) {
      if (bound < 1.0) {
        const double skip = std::floor(std::log(uniform_open_closed(rng)) / std::log1p(-bound));
        if (skip >= static_cast<double>(n - b)) break;
        b += static_cast<std::size_t>(skip);
      }
      const Vertex v = order[b];
      const double p = scale * weights[v];
      if (uniform_closed_open(rng) * bound < edge_probability(kind, p)) edges.push_back({u, v, 1});
      bound = std::min(1.0, p);
      ++b;
    }
  }
  return MultiGraph::from_edges(n, std::move(edges));
}

MultiGraph generate(const WeightVector& weights, const WeightModel& model, GraphModel graph_model, Rng& rng) {
  const double denominator = edge_denominator(weights, graph_model.normalizer, model);
  if (graph_model.kind == ModelKind::NR) return generate_nr(weights, denominator, rng);
  return generate_simple(weights, graph_model.kind, denominator, rng);
}

MultiGraph erase(const MultiGraph& g) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (e.u != e.v) edges.push_back({e.u, e.v, 1});
  return MultiGraph::from_edges(g.num_vertices(), std::move(edges));
}

std::size_t degree(const MultiGraph& g, Vertex v) {
  if (v >= g.num_vertices())
    throw std::out_of_range(fmt::format("degree: vertex {} out of range (n = {})", v + 1, g.num_vertices()));
  return g.neighbors(v).size();
}

void write_edge_list(std::ostream& out, const MultiGraph& g, std::string_view model_label,
                     std::span<const std::string> extra_header) {
  out << "# n=" << g.num_vertices() << " model=" << model_label << '\n';
  for (const auto& line : extra_header) out << "# " << line << '\n';
  for (const auto& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.multiplicity << '\n';
}

MultiGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto pos = line.find("n=");
      if (!n && pos != std::string::npos && line.rfind("# n=", 0) == 0) n = std::stoull(line.substr(pos + 2));
      continue;
    }
    if (!n) throw std::runtime_error(fmt::format("edge list line {}: edge before '# n=' header", line_no));
    std::istringstream fields(line);
    unsigned long long u = 0, v = 0, m = 0;
    if (!(fields >> u >> v >> m) || u == 0 || v == 0 || u > *n || v > *n)
      throw std::runtime_error(fmt::format("edge list line {}: malformed edge '{}'", line_no, line));
    edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1), static_cast<std::uint32_t>(m)});
  }
  if (!n) throw std::runtime_error("edge list: missing '# n=' header");
  return MultiGraph::from_edges(*n, std::move(edges));
}

void write_weights(std::ostream& out, const WeightVector& weights, std::span<const std::string> header) {
  for (const auto& line : header) out << "# " << line << '\n';
  for (double w : weights.values()) out << fmt::format("{:.17g}", w) << '\n';
}

WeightVector read_weights(std::istream& in) {
  std::string line;
  std::vector<double> w;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    try {
      w.push_back(std::stod(line));
    } catch (const std::exception&) {
      throw std::runtime_error(fmt::format("weights line {}: not a number '{}'", line_no, line));
    }
  }
  return WeightVector(std::move(w));
}

}  // namespace nrgraph
