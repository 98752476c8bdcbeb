#include "cca/coloured_graph.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cca {

ColouredGraph::ColouredGraph(std::size_t vertex_count, std::vector<Edge> edges,
                             std::map<ColourId, std::string> colour_names)
    : n_(vertex_count),
      edges_(std::move(edges)),
      matrix_(vertex_count * vertex_count, kNoEdge),
      adjacency_(vertex_count),
      names_(std::move(colour_names)) {
  for (auto& e : edges_) {
    if (e.u >= n_ || e.v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("loops are not allowed");
    if (e.colour < 0) throw std::invalid_argument("colour ids must be non-negative");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (matrix_[e.u * n_ + e.v] != kNoEdge) {
      throw std::invalid_argument("duplicate edge {" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + "}");
    }
    matrix_[e.u * n_ + e.v] = matrix_[e.v * n_ + e.u] = e.colour;
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

std::vector<ColourId> ColouredGraph::colour_ids() const {
  std::set<ColourId> ids;
  for (const auto& e : edges_) ids.insert(e.colour);
  return {ids.begin(), ids.end()};
}

std::string ColouredGraph::colour_name(ColourId c) const {
  auto it = names_.find(c);
  return it == names_.end() ? std::to_string(c) : it->second;
}

bool is_connected(const ColouredGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbours(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

std::vector<Arc> arcs(const ColouredGraph& g) {
  std::vector<Arc> out;
  out.reserve(2 * g.edge_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex w : g.neighbours(v)) out.push_back({v, w});
  }
  return out;
}

ColouredGraph complete_bipartite(std::size_t n, std::size_t m) {
  if (n < 1 || m < 1) throw std::invalid_argument("complete bipartite parts must be non-empty");
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(n + b), 0});
    }
  }
  return ColouredGraph(n + m, std::move(edges));
}

Subdivision subdivision(const ColouredGraph& g) {
  const std::size_t n = g.vertex_count();
  Subdivision out;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) out.origin.push_back({false, v});
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edges()[k];
    auto mid = static_cast<Vertex>(n + k);
    out.origin.push_back({true, static_cast<std::uint32_t>(k)});
    edges.push_back({e.u, mid, 0});
    edges.push_back({mid, e.v, 0});
  }
  out.graph = ColouredGraph(n + g.edge_count(), std::move(edges));
  return out;
}

LineGraph line_graph(const ColouredGraph& g) {
  LineGraph out;
  const std::size_t m = g.edge_count();
  std::vector<std::vector<Vertex>> incident(g.vertex_count());
  for (std::size_t k = 0; k < m; ++k) {
    incident[g.edges()[k].u].push_back(static_cast<Vertex>(k));
    incident[g.edges()[k].v].push_back(static_cast<Vertex>(k));
    out.edge_of.push_back(k);
  }
  std::vector<Edge> edges;
  for (const auto& inc : incident) {
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) edges.push_back({inc[i], inc[j], 0});
    }
  }
  out.graph = ColouredGraph(m, std::move(edges));
  return out;
}

std::string to_dot(const ColouredGraph& g, std::span<const std::string> vertex_labels,
                   const std::string& name) {
  static constexpr std::array<const char*, 10> palette = {
      "red", "blue", "darkgreen", "orange", "purple",
      "brown", "magenta", "cyan4", "gold3", "gray40"};
  auto ids = g.colour_ids();
  auto rank = [&ids](ColourId c) {
    return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), c) - ids.begin());
  };
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') q += '\\';
      q += ch;
    }
    return q + "\"";
  };
  std::ostringstream os;
  os << "graph " << quote(name) << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v;
    if (v < vertex_labels.size()) os << " [label=" << quote(vertex_labels[v]) << "]";
    os << ";\n";
  }
  for (const auto& e : g.edges()) {
    os << "  " << e.u << " -- " << e.v << " [color=" << palette[rank(e.colour) % palette.size()]
       << ", label=" << quote(g.colour_name(e.colour)) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace cca
