#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "polyspec/numeric.hpp"

namespace polyspec {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..N-1.
///
/// Edges are stored once each as (u, v) with u < v, sorted
/// lexicographically; the edge index used by polygon_transform and
/// lift_eigenvector is the position in that order. Connectivity and
/// bipartiteness are computed on construction. A disconnected graph is
/// representable (so callers can report the component count) but every
/// spectral operation rejects it.
class Graph {
 public:
  /// Builds from an edge list. Self-loops and out-of-range endpoints throw
  /// InputError; repeated pairs (in either orientation) are collapsed.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::vector<std::size_t> degrees() const;

  bool connected() const { return component_count_ == 1; }
  std::size_t component_count() const { return component_count_; }
  bool bipartite() const { return bipartite_; }

  /// Throws InputError unless the graph is connected.
  void require_connected() const;

 private:
  Graph() = default;

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t component_count_ = 0;
  bool bipartite_ = false;
};

/// Vertex and edge counts of the g-th iterate, exact.
struct GrowthCounts {
  int n = 2;
  int g = 0;
  BigInt vertices;
  BigInt edges;
};

/// Parses "u v" lines; '#' starts a comment line, blank lines are ignored.
/// Rejects self-loops, an empty edge set, and disconnected graphs (the
/// message carries the component count).
Graph parse_edge_list(std::string_view text);

/// Writes one "u v" line per edge, in stored order.
std::string format_edge_list(const Graph& graph);

/// Replaces every edge {i, j} by an (n+1)-cycle: the edge is kept and a new
/// path i - p_0 - ... - p_{n-2} - j is added. For edge index e the path
/// vertices are N + e*(n-1) + k, oriented from the smaller endpoint.
Graph polygon_transform(const Graph& graph, int n);

inline constexpr std::size_t kDefaultExplicitCap = 100000;

/// g-fold polygon_transform. Throws CapExceeded when the predicted vertex
/// count is above `vertex_cap`, before building anything.
Graph iterate_transform(const Graph& graph, int n, int g,
                        std::size_t vertex_cap = kDefaultExplicitCap);

/// N_g = N_0 + (n-1)((n+1)^g - 1)/n * E_0 and E_g = (n+1)^g E_0.
GrowthCounts predict_counts(const BigInt& n0, const BigInt& e0, int n, int g);

}  // namespace polyspec
