#pragma once

#include <optional>
#include <vector>

#include "cca/cayley_graph.hpp"
#include "cca/finite_group.hpp"
#include "cca/permutation.hpp"

namespace cca {

/// p(x) = translation * automorphism(x)
struct AffineDecomposition {
  ElemId translation;
  std::vector<ElemId> automorphism;  // indexed by element
};

/// Route 1: g0 = p(e), alpha = x -> g0^-1 p(x); affine iff alpha is a group
/// automorphism (checked on x * gen for every x and every generator).
std::optional<AffineDecomposition> affine_decomposition(const FiniteGroup& g,
                                                        const Permutation& p);

/// Route 2: p normalizes the left-regular copy of G, i.e. every conjugate
/// p λ_s p^-1 of a generator translation is again a left translation.
bool normalizes_left_regular(const FiniteGroup& g, const Permutation& p);

struct AffineResult {
  bool affine = false;
  std::optional<AffineDecomposition> decomposition;
};

/// Both routes; throws InternalInconsistency if they disagree.
AffineResult is_affine(const FiniteGroup& g, const Permutation& p);
inline AffineResult is_affine(const CayleyColouredGraph& cg, const Permutation& p) {
  return is_affine(cg.group, p);
}

/// alpha is a group automorphism that maps every colour class {c, c^-1} of
/// the connection set onto itself.
bool is_colour_class_automorphism(const CayleyColouredGraph& cg, const Permutation& alpha);

}  // namespace cca
