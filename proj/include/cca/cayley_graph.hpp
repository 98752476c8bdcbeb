#pragma once

#include <span>
#include <vector>

#include "cca/coloured_graph.hpp"
#include "cca/finite_group.hpp"

namespace cca {

/// Cay(G, C) with the natural colouring: edge {g, gc} carries the colour of
/// the class {c, c^-1}, whose id is the smaller element index of the class.
struct CayleyColouredGraph {
  FiniteGroup group;
  std::vector<ElemId> connection;  // ascending
  ColouredGraph graph;
};

/// Throws std::invalid_argument if C contains the identity, an out-of-range
/// index, or is not closed under inversion. Inverse closure is never applied
/// implicitly; see inverse_closure().
CayleyColouredGraph cayley_graph(const FiniteGroup& g, std::vector<ElemId> connection);

/// K_G = Cay(G, G \ {e}). Throws on the trivial group.
CayleyColouredGraph complete_colour_graph(const FiniteGroup& g);

/// C ∪ C^-1, ascending, duplicates removed.
std::vector<ElemId> inverse_closure(const FiniteGroup& g, std::span<const ElemId> c);

/// The inverse classes {c, c^-1} of a connection set, ascending. The first
/// member of each class is its colour id.
std::vector<std::vector<ElemId>> colour_classes(const FiniteGroup& g,
                                                std::span<const ElemId> connection);

/// Vertex labels for DOT output: the element names.
std::vector<std::string> element_labels(const FiniteGroup& g);

}  // namespace cca
