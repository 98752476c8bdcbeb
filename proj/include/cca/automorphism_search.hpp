#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "cca/coloured_graph.hpp"
#include "cca/permutation.hpp"

namespace cca {

/// p maps every edge to an edge of the same colour. Since p is a bijection
/// and edge counts agree, non-edges then go to non-edges. Throws
/// std::invalid_argument when the degree differs from the vertex count.
bool is_colour_preserving(const ColouredGraph& g, const Permutation& p);

/// Same as above but ignoring colours.
bool is_graph_automorphism(const ColouredGraph& g, const Permutation& p);

struct SearchStats {
  std::uint64_t nodes = 0;
  double millis = 0.0;
};

struct AutSearchOptions {
  /// Only search automorphisms fixing vertex 0.
  bool fix_root = false;
  /// Throws CapExceeded once more automorphisms than this are found.
  std::size_t max_results = std::numeric_limits<std::size_t>::max();
};

struct AutGroupResult {
  /// Sorted lexicographically by image arrays; identity first.
  std::vector<Permutation> elements;
  SearchStats stats;
};

/// Colour-preserving automorphisms by backtracking along a BFS spanning tree
/// rooted at vertex 0. A tree vertex reached from its parent by colour k can
/// only go to an unused neighbour of the parent's image along colour k, and
/// must agree in colour with every earlier-placed neighbour. Every complete
/// assignment is re-verified with is_colour_preserving before it is kept.
/// Throws std::invalid_argument on a disconnected graph.
AutGroupResult colour_preserving_automorphisms(const ColouredGraph& g,
                                               const AutSearchOptions& options = {});

/// Greedy generating sublist of a permutation group given by all its elements.
std::vector<Permutation> generating_subset(const std::vector<Permutation>& elements);

}  // namespace cca
