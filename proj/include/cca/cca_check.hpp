#pragma once

#include <cstddef>

#include "cca/cayley_graph.hpp"
#include "cca/finite_group.hpp"
#include "cca/verdict.hpp"

namespace cca {

/// Decides whether every colour-preserving automorphism of Cay(G, C) is
/// affine. Since left translations are colour-preserving, it suffices to
/// search the automorphisms fixing the identity; each one is tested both as
/// an affine map (decomposition and normalizer routes) and as a group
/// automorphism fixing every colour class, and the two answers must agree.
/// The non-CCA witness is the first non-affine identity-fixing automorphism.
/// Throws std::invalid_argument on a disconnected graph.
Verdict is_cca_graph(const CayleyColouredGraph& cg);

struct CcaGroupOptions {
  /// Connection sets examined before giving up with unknown-cap.
  std::size_t max_subsets = 1'000'000;
  /// Orbit pruning is skipped when Aut(G) is larger than this.
  std::size_t aut_cap = 1u << 14;
};

/// Runs is_cca_graph over the connected Cayley graphs of G, one connection
/// set per Aut(G)-orbit, smallest sets first. Stops at the first non-CCA
/// graph.
Verdict is_cca_group(const FiniteGroup& g, const CcaGroupOptions& options = {});

}  // namespace cca
