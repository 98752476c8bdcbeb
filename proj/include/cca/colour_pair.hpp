#pragma once

#include <optional>
#include <vector>

#include "cca/finite_group.hpp"
#include "cca/permutation.hpp"
#include "cca/verdict.hpp"

namespace cca {

/// Decides whether (G, B) is a complete colour pair.
///
/// `g` must carry a realization that is regular on its point set; points are
/// identified with elements through the orbit of point 0, which turns the
/// action of G into left translation. `b` is a permutation group on the same
/// points. With A0 the colour-preserving automorphism group of K_G, the pair
/// holds when B <= A0 and one of the following does:
///   1. G abelian, not an elementary abelian 2-group, A0 = <Ĝ, inversion>;
///   2. G = Dic(A, y) but not Q8 x C2^n, A0 = <Ĝ, σ> where σ fixes A pointwise
///      and inverts the coset Ax (any recognized witness A is accepted);
///   3. G = Q8 x C2^n, A0 = <Ĝ, σ_i, σ_j, σ_k>, σ_α inverting {±α} x C2^n.
/// Equalities are tested as permutation sets.
///
/// Throws std::invalid_argument if |G| <= 2, if G's action is not regular,
/// or if the point sets differ.
Verdict is_complete_colour_pair(const FiniteGroup& g, const FiniteGroup& b);

/// A0 = colour-preserving automorphisms of K_G, on element indices.
std::vector<Permutation> complete_colour_automorphisms(const FiniteGroup& g);

/// σ_A for Dic(A, y): fixes A pointwise, inverts every other element.
Permutation dicyclic_sigma(const FiniteGroup& g, const std::vector<ElemId>& subgroup);

/// σ_i, σ_j, σ_k for G = Q8 x C2^n. The three sets {±α} x C2^n are the
/// classes of order-4 elements under x ~ y iff x y^-1 has order <= 2.
std::vector<Permutation> quaternion_sigmas(const FiniteGroup& g);

/// For the command line: the first subgroup of A0 that contains the left
/// translations and is isomorphic to `b`, as a permutation group on G's
/// element indices. Subgroups are built as <Ĝ, S> for the subgroups S of the
/// identity stabilizer of A0.
std::optional<FiniteGroup> realize_over_left_regular(const FiniteGroup& g, const FiniteGroup& b);

}  // namespace cca
