#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cca/finite_group.hpp"

namespace cca {

struct Isomorphism {
  /// Images of the (minimal) named generators of the source group.
  std::vector<std::pair<std::string, ElemId>> generator_images;
  /// Full element map, source index -> target index.
  std::vector<ElemId> map;
};

/// Backtracking over images of a minimal generating sublist of g's named
/// generators, ascending target index. A partial assignment is extended to
/// the subgroup it generates and rejected as soon as it fails to be an
/// injective homomorphism there. Calls `visit` on each isomorphism in search
/// order; `visit` returns false to stop.
void for_each_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                          const std::function<bool(const Isomorphism&)>& visit);

/// First isomorphism in canonical search order, if the groups are isomorphic.
std::optional<Isomorphism> are_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

/// All automorphisms of g as element maps (identity map first). Throws
/// CapExceeded if there are more than `cap`.
std::vector<std::vector<ElemId>> automorphisms(const FiniteGroup& g,
                                               std::size_t cap = 1u << 16);

/// True when `map` (indexed by element) is a bijective homomorphism g -> h.
bool is_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                    const std::vector<ElemId>& map);

}  // namespace cca
