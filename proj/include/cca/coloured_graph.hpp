#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace cca {

using Vertex = std::uint32_t;
using ColourId = std::int32_t;
inline constexpr ColourId kNoEdge = -1;

struct Edge {
  Vertex u;
  Vertex v;
  ColourId colour = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// An orientation of an edge.
struct Arc {
  Vertex tail;
  Vertex head;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Simple undirected graph whose edges carry colour ids.
///
/// Immutable once built. Edges are stored with u < v, sorted; an adjacency
/// matrix of colour ids (kNoEdge for non-edges) backs O(1) colour lookups.
class ColouredGraph {
 public:
  ColouredGraph() = default;

  /// Throws std::invalid_argument on loops, duplicate edges, out-of-range
  /// endpoints or negative colour ids.
  ColouredGraph(std::size_t vertex_count, std::vector<Edge> edges,
                std::map<ColourId, std::string> colour_names = {});

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  ColourId colour(Vertex u, Vertex v) const { return matrix_[std::size_t{u} * n_ + v]; }
  bool adjacent(Vertex u, Vertex v) const { return colour(u, v) != kNoEdge; }
  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  /// Distinct colour ids in ascending order.
  std::vector<ColourId> colour_ids() const;
  /// Display label for a colour; falls back to the numeric id.
  std::string colour_name(ColourId c) const;
  const std::map<ColourId, std::string>& colour_names() const noexcept { return names_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<ColourId> matrix_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::map<ColourId, std::string> names_;
};

bool is_connected(const ColouredGraph& g);

/// Both orientations of every edge, sorted by (tail, head).
std::vector<Arc> arcs(const ColouredGraph& g);

/// K_{n,m} with part A = 0..n-1 and part B = n..n+m-1, all edges colour 0.
ColouredGraph complete_bipartite(std::size_t n, std::size_t m);

/// Where a vertex of a subdivision graph came from.
struct SubdivisionOrigin {
  bool midpoint;
  /// Original vertex, or the index of the subdivided edge in the input's edges().
  std::uint32_t index;
};

struct Subdivision {
  ColouredGraph graph;
  std::vector<SubdivisionOrigin> origin;
};

/// S(Γ): original vertices keep their indices; the midpoint of input edge k is
/// vertex n + k. Edge k = {u, v} becomes {u, n+k} and {n+k, v}. Single colour.
Subdivision subdivision(const ColouredGraph& g);

struct LineGraph {
  ColouredGraph graph;
  /// Vertex i of the line graph is input edge edge_of[i] (currently i itself).
  std::vector<std::size_t> edge_of;
};

/// L(Γ): one vertex per input edge, adjacent when the edges share an endpoint.
/// Single colour.
LineGraph line_graph(const ColouredGraph& g);

/// Graphviz text. Edges carry `color` from a fixed palette indexed by the rank
/// of the colour id and `label` from the colour name.
std::string to_dot(const ColouredGraph& g, std::span<const std::string> vertex_labels = {},
                   const std::string& name = "G");

}  // namespace cca
