#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cca/permutation.hpp"

namespace cca {

/// Index of an element inside a FiniteGroup. Index 0 is always the identity.
using ElemId = std::uint32_t;

/// Orders above this are refused by every table-backed construction unless a
/// caller passes a larger cap explicitly.
inline constexpr std::size_t kDefaultOrderCap = 512;

struct NamedGenerator {
  std::string name;
  ElemId element;

  friend bool operator==(const NamedGenerator&, const NamedGenerator&) = default;
};

/// A small group stored as a full multiplication table.
///
/// Elements are indexed in breadth-first discovery order from the generators,
/// identity first. When the group came from a permutation action, the
/// realization maps each element index to its permutation; it is a faithful
/// homomorphism.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Checks that the table is a Latin square with identity at index 0, that
  /// generator indices are valid, and that the realization is injective and
  /// compatible with multiplication by generators. Throws
  /// std::invalid_argument.
  FiniteGroup(std::vector<std::string> names, std::vector<ElemId> table,
              std::vector<NamedGenerator> generators,
              std::optional<std::vector<Permutation>> realization = std::nullopt);

  std::size_t order() const noexcept { return names_.size(); }
  ElemId identity() const noexcept { return 0; }

  ElemId mul(ElemId a, ElemId b) const { return table_[a * order() + b]; }
  ElemId inv(ElemId a) const { return inverse_[a]; }
  /// a^k for any integer k.
  ElemId pow(ElemId a, long long k) const;
  /// g^-1 a g
  ElemId conj(ElemId a, ElemId g) const { return mul(inv(g), mul(a, g)); }

  const std::string& name(ElemId a) const { return names_[a]; }
  std::span<const std::string> names() const noexcept { return names_; }
  std::span<const ElemId> table() const noexcept { return table_; }
  std::span<const NamedGenerator> generators() const noexcept { return generators_; }
  std::vector<ElemId> generator_elements() const;
  std::optional<ElemId> generator(const std::string& name) const;

  bool has_realization() const noexcept { return realization_.has_value(); }
  const Permutation& realization(ElemId a) const { return realization_->at(a); }
  std::span<const Permutation> realizations() const;
  std::size_t degree() const;

  /// Element whose realization equals p, if any.
  std::optional<ElemId> find(const Permutation& p) const;

  std::size_t element_order(ElemId a) const { return orders_[a]; }
  bool is_abelian() const;
  /// Every non-identity element is an involution (true for the trivial group).
  bool is_elementary_abelian_2() const;
  std::vector<ElemId> involutions() const;
  /// Multiset of element orders: order -> count.
  std::map<std::size_t, std::size_t> order_profile() const;

  /// Elements of the subgroup generated by `gens`, in BFS order from the identity.
  std::vector<ElemId> subgroup(std::span<const ElemId> gens) const;
  bool generates(std::span<const ElemId> gens) const {
    return subgroup(gens).size() == order();
  }
  /// Greedy sublist of the named generators that still generates the group,
  /// topped up from the element list if the named generators fall short.
  std::vector<ElemId> minimal_generators() const;

  /// Exhaustive O(n^3) associativity check plus identity, inverse and, when
  /// present, full realization homomorphism checks. The constructor only does
  /// the O(n^2) structural checks.
  bool verify_axioms() const;

 private:
  std::vector<std::string> names_;
  std::vector<ElemId> table_;
  std::vector<ElemId> inverse_;
  std::vector<std::size_t> orders_;
  std::vector<NamedGenerator> generators_;
  std::optional<std::vector<Permutation>> realization_;
  std::unordered_map<Permutation, ElemId, PermutationHash> lookup_;
};

/// Renders a word over generator indices, compressing runs: "r^2 s".
std::string render_word(std::span<const std::size_t> word,
                        std::span<const std::string> gen_names);

}  // namespace cca
