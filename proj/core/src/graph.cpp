#include "polyspec/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>
#include <string>

#include "polyspec/error.hpp"

namespace polyspec {

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  if (vertex_count > std::size_t{0xFFFFFFFFu}) {
    throw InputError("graph: vertex count exceeds 32-bit ids");
  }
  Graph g;
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v) {
      throw InputError("graph: self-loop at vertex " + std::to_string(u));
    }
    if (u >= vertex_count || v >= vertex_count) {
      throw InputError("graph: edge endpoint out of range");
    }
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.adjacency_.assign(vertex_count, {});
  for (auto [u, v] : g.edges_) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }

  // BFS 2-coloring; also counts components.
  std::vector<int> color(vertex_count, -1);
  g.bipartite_ = true;
  g.component_count_ = 0;
  std::queue<Vertex> frontier;
  for (Vertex start = 0; start < vertex_count; ++start) {
    if (color[start] != -1) {
      continue;
    }
    ++g.component_count_;
    color[start] = 0;
    frontier.push(start);
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop();
      for (Vertex w : g.adjacency_[u]) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          frontier.push(w);
        } else if (color[w] == color[u]) {
          g.bipartite_ = false;
        }
      }
    }
  }
  return g;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(adjacency_.size());
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    out[v] = adjacency_[v].size();
  }
  return out;
}

void Graph::require_connected() const {
  if (vertex_count() < 2 || edge_count() == 0) {
    throw InputError("graph: at least one edge is required");
  }
  if (!connected()) {
    throw InputError("graph: disconnected (" + std::to_string(component_count_) +
                     " components)");
  }
}

namespace {

bool parse_vertex(std::string_view token, Vertex& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  Vertex max_id = 0;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    std::istringstream fields(line);
    std::string a, b, extra;
    fields >> a >> b;
    Vertex u = 0, v = 0;
    if (b.empty() || (fields >> extra) || !parse_vertex(a, u) || !parse_vertex(b, v)) {
      throw InputError("edge list line " + std::to_string(line_no) +
                       ": expected \"u v\" with non-negative integers");
    }
    if (u == v) {
      throw InputError("edge list line " + std::to_string(line_no) + ": self-loop");
    }
    max_id = std::max({max_id, u, v});
    edges.emplace_back(u, v);
  }
  if (edges.empty()) {
    throw InputError("edge list: no edges");
  }
  Graph g = Graph::from_edges(std::size_t{max_id} + 1, edges);
  g.require_connected();
  return g;
}

std::string format_edge_list(const Graph& graph) {
  std::string out;
  for (auto [u, v] : graph.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

Graph polygon_transform(const Graph& graph, int n) {
  if (n < 2) {
    throw InputError("polygon_transform: n must be >= 2");
  }
  graph.require_connected();
  const std::size_t base_n = graph.vertex_count();
  const std::size_t path_len = static_cast<std::size_t>(n - 1);
  const std::size_t total = base_n + path_len * graph.edge_count();

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n + 1) * graph.edge_count());
  std::size_t e = 0;
  for (auto [i, j] : graph.edges()) {
    edges.emplace_back(i, j);
    const auto first = static_cast<Vertex>(base_n + e * path_len);
    edges.emplace_back(i, first);
    for (std::size_t k = 0; k + 1 < path_len; ++k) {
      edges.emplace_back(static_cast<Vertex>(first + k), static_cast<Vertex>(first + k + 1));
    }
    edges.emplace_back(static_cast<Vertex>(first + path_len - 1), j);
    ++e;
  }
  return Graph::from_edges(total, edges);
}

GrowthCounts predict_counts(const BigInt& n0, const BigInt& e0, int n, int g) {
  if (n < 2 || g < 0) {
    throw InputError("predict_counts: need n >= 2 and g >= 0");
  }
  const BigInt growth = pow_big(BigInt(n + 1), static_cast<unsigned long>(g));
  BigInt numerator = BigInt(n - 1) * (growth - 1) * e0;
  if (!mpz_divisible_ui_p(numerator.get_mpz_t(), static_cast<unsigned long>(n))) {
    throw InternalError("predict_counts: N_g numerator not divisible by n");
  }
  GrowthCounts out;
  out.n = n;
  out.g = g;
  out.vertices = n0 + numerator / n;
  out.edges = growth * e0;
  return out;
}

Graph iterate_transform(const Graph& graph, int n, int g, std::size_t vertex_cap) {
  if (n < 2 || g < 0) {
    throw InputError("iterate_transform: need n >= 2 and g >= 0");
  }
  graph.require_connected();
  const GrowthCounts predicted = predict_counts(BigInt(static_cast<unsigned long>(graph.vertex_count())),
                                                BigInt(static_cast<unsigned long>(graph.edge_count())), n, g);
  if (predicted.vertices > BigInt(static_cast<unsigned long>(vertex_cap))) {
    throw CapExceeded("iterate_transform: predicted " + to_string(predicted.vertices) +
                      " vertices exceeds cap " + std::to_string(vertex_cap));
  }
  Graph current = graph;
  for (int step = 0; step < g; ++step) {
    current = polygon_transform(current, n);
  }
  return current;
}

}  // namespace polyspec
