#include "cca/cayley_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace cca {

CayleyColouredGraph cayley_graph(const FiniteGroup& g, std::vector<ElemId> connection) {
  std::sort(connection.begin(), connection.end());
  connection.erase(std::unique(connection.begin(), connection.end()), connection.end());
  for (ElemId c : connection) {
    if (c >= g.order()) throw std::invalid_argument("connection element out of range");
    if (c == g.identity()) {
      throw std::invalid_argument("connection set contains the identity");
    }
    if (!std::binary_search(connection.begin(), connection.end(), g.inv(c))) {
      throw std::invalid_argument("connection set is not inverse-closed: missing inverse of " +
                                  g.name(c));
    }
  }

  std::vector<Edge> edges;
  std::map<ColourId, std::string> names;
  for (ElemId c : connection) {
    ElemId ci = g.inv(c);
    auto id = static_cast<ColourId>(std::min(c, ci));
    if (names.count(id)) continue;
    names[id] = c == ci ? "{" + g.name(c) + "}"
                        : "{" + g.name(id) + ", " + g.name(std::max(c, ci)) + "}";
  }
  for (ElemId x = 0; x < g.order(); ++x) {
    for (ElemId c : connection) {
      ElemId y = g.mul(x, c);
      if (x < y) edges.push_back({x, y, static_cast<ColourId>(std::min(c, g.inv(c)))});
    }
  }
  ColouredGraph graph(g.order(), std::move(edges), std::move(names));
  return {g, std::move(connection), std::move(graph)};
}

CayleyColouredGraph complete_colour_graph(const FiniteGroup& g) {
  if (g.order() < 2) throw std::invalid_argument("complete colour graph of the trivial group");
  std::vector<ElemId> all;
  for (ElemId a = 1; a < g.order(); ++a) all.push_back(a);
  return cayley_graph(g, std::move(all));
}

std::vector<ElemId> inverse_closure(const FiniteGroup& g, std::span<const ElemId> c) {
  std::vector<ElemId> out(c.begin(), c.end());
  for (ElemId x : c) out.push_back(g.inv(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<ElemId>> colour_classes(const FiniteGroup& g,
                                                std::span<const ElemId> connection) {
  std::vector<std::vector<ElemId>> out;
  for (ElemId c : connection) {
    ElemId ci = g.inv(c);
    if (ci < c) continue;
    out.push_back(c == ci ? std::vector<ElemId>{c} : std::vector<ElemId>{c, ci});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> element_labels(const FiniteGroup& g) {
  return {g.names().begin(), g.names().end()};
}

}  // namespace cca
