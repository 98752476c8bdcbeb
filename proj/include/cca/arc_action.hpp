#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cca/cayley_graph.hpp"
#include "cca/coloured_graph.hpp"
#include "cca/finite_group.hpp"
#include "cca/permutation.hpp"
#include "cca/verdict.hpp"

namespace cca {

/// Throws std::invalid_argument unless `grp` carries a realization on V(g)
/// whose every element is a graph automorphism.
void require_automorphism_action(const ColouredGraph& g, const FiniteGroup& grp);

/// Regular on arcs: |grp| equals the arc count and one orbit covers them all.
bool is_arc_regular(const ColouredGraph& g, const FiniteGroup& grp);

/// Stabilizer of v restricted to N(v), as a permutation group on the sorted
/// neighbour list (point i is neighbours(v)[i]).
FiniteGroup local_action(const FiniteGroup& grp, const ColouredGraph& g, Vertex v);

struct ArcLabeling {
  ColouredGraph graph;
  FiniteGroup group;
  Arc base;
  std::map<Arc, ElemId> label;
  std::vector<Arc> arc_of;  // by element

  ElemId operator[](const Arc& a) const { return label.at(a); }
};

/// Labels each arc with the unique element carrying `base` to it. Throws
/// std::invalid_argument if the action is not arc-regular or `base` is not an
/// arc, InternalInconsistency if left-equivariance fails.
ArcLabeling arc_labeling(const ColouredGraph& g, const FiniteGroup& grp, Arc base);

/// x -> label(h(arc_x)). Throws std::invalid_argument if h is not a graph
/// automorphism.
Permutation induced_vertex_map(const Permutation& h, const ArcLabeling& labeling);

struct LineSubdivisionForm {
  Subdivision subdivision;
  LineGraph line;
  std::vector<ElemId> element_of;  // line-graph vertex -> element
  std::vector<ElemId> connection;  // neighbours of the identity, sorted
  CayleyColouredGraph cayley;
};

/// Identifies L(S(g)) with a Cayley graph on the labeling group: the S-edge
/// (x, m_xy) is the arc (x, y). Throws InternalInconsistency if the
/// identification does not carry edges onto edges.
LineSubdivisionForm line_subdivision_cayley_form(const ArcLabeling& labeling);

/// Hypotheses: g connected, grp arc-regular, grp <= h, h acts by
/// automorphisms, and (grp_v^{N(v)}, h_v^{N(v)}) a complete colour pair for
/// every v. When they hold every element of h is transported to the Cayley
/// form and must be colour-preserving there; a failure throws
/// InternalInconsistency. `base` defaults to the first arc.
Verdict corollary_4_10_harness(const ColouredGraph& g, const FiniteGroup& grp,
                               const FiniteGroup& h, std::optional<Arc> base = {});

}  // namespace cca
