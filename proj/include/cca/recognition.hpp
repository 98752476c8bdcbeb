#pragma once

#include <optional>
#include <vector>

#include "cca/finite_group.hpp"
#include "cca/isomorphism.hpp"

namespace cca {

/// G = Dic(A, y) witnessed by an abelian index-2 subgroup A and x outside A
/// with x^2 = y an involution and x^-1 a x = a^-1 for every a in A.
struct DicyclicWitness {
  std::vector<ElemId> subgroup;  // A, ascending element indices
  ElemId y;
  ElemId x;
};

/// All index-2 subgroups, each as ascending element indices. Found as the
/// kernels of the homomorphisms G -> C2, enumerated over the images of a
/// minimal generating list.
std::vector<std::vector<ElemId>> index_two_subgroups(const FiniteGroup& g);

/// Every (A, y, x) witness, by exhaustive search over index-2 subgroups and
/// elements outside them. Empty when G is not a generalized dicyclic group.
std::vector<DicyclicWitness> recognize_dicyclic(const FiniteGroup& g);

/// An isomorphism Q8 x C2^n -> G built from quaternion() and
/// elementary_abelian_2(n), when |G| = 8 * 2^n and one exists.
std::optional<Isomorphism> q8_times_c2n_isomorphism(const FiniteGroup& g);

inline bool is_q8_times_c2n(const FiniteGroup& g) {
  return q8_times_c2n_isomorphism(g).has_value();
}

}  // namespace cca
