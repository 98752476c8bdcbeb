#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cca {

using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}. Images are stored by position.
///
/// Products follow right-to-left application: (p * q)(i) == p(q(i)). This is
/// the convention under which group elements act on the left.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `images` is a bijection; throws std::invalid_argument.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Skips the bijection check. For images already known to be a bijection.
  static Permutation unchecked(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
  /// Points not mentioned are fixed. Throws on repeated points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  std::size_t order() const;

  /// Non-trivial cycles in ascending order of their smallest point.
  std::vector<std::vector<Point>> cycles() const;

  /// Cycle notation, "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// compose(p, q)(i) == p(q(i)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

/// p * q * p^-1
Permutation conjugate(const Permutation& p, const Permutation& q);

std::size_t hash_value(const Permutation& p) noexcept;

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    return hash_value(p);
  }
};

}  // namespace cca

template <>
struct std::hash<cca::Permutation> {
  std::size_t operator()(const cca::Permutation& p) const noexcept {
    return cca::hash_value(p);
  }
};
