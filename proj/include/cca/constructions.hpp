#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cca/finite_group.hpp"
#include "cca/permutation.hpp"

namespace cca {

// Named group constructions. Every builder refuses to grow a group past `cap`
// elements (CapExceeded) and throws std::invalid_argument on a bad
// precondition.

/// Group generated by permutations of a common degree, with realization.
/// Generator names default to g1, g2, ...
FiniteGroup closure(std::span<const Permutation> gens, std::size_t cap = kDefaultOrderCap,
                    std::vector<std::string> names = {});

/// C_n, generator "r". n >= 1.
FiniteGroup cyclic(std::size_t n);

/// D_2n of order 2n, generators "r" (order n) and "s" with s r s = r^-1. n >= 3.
FiniteGroup dihedral(std::size_t n);

/// Q8 from the quaternion unit multiplication rules; generators "i", "j".
FiniteGroup quaternion();

/// C_2^k with generators c1..ck.
FiniteGroup elementary_abelian_2(std::size_t k);

/// Dih(A): A extended by an involution inverting every element. The adjoined
/// generator is "s" (or the first free name among s, t, u, ...).
FiniteGroup generalized_dihedral(const FiniteGroup& a, std::size_t cap = kDefaultOrderCap);

/// Dic(A, y): A extended by x with x^2 = y and x^-1 a x = a^-1. The adjoined
/// generator is "x" (or a free fallback). A abelian of even order, y an
/// involution of A.
FiniteGroup generalized_dicyclic(const FiniteGroup& a, ElemId y,
                                 std::size_t cap = kDefaultOrderCap);

/// Componentwise product. When the factors share a generator name, left names
/// get suffix "1" and right names suffix "2" (so C(3) x D(3) has r1, r2, s2).
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           std::size_t cap = kDefaultOrderCap);

/// (G x G) ⋊ C2 with the C2 swapping coordinates. Generators are the G
/// generators suffixed 1 and 2, then "t" for the swap.
FiniteGroup wreath_c2(const FiniteGroup& g, std::size_t cap = kDefaultOrderCap);

/// The left-regular representation: same table and names, element a realized
/// by x -> a x on element indices.
FiniteGroup left_regular(const FiniteGroup& g);

/// The permutation group { x -> a x } as a list indexed by element.
std::vector<Permutation> left_translations(const FiniteGroup& g);
Permutation left_translation(const FiniteGroup& g, ElemId a);

}  // namespace cca
