#include "cca/permutation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cca {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw std::invalid_argument("permutation images are not a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      Point from = cycle[k];
      Point to = cycle[(k + 1) % cycle.size()];
      if (from >= degree || to >= degree) {
        throw std::invalid_argument("cycle point " + std::to_string(from) +
                                    " out of range for degree " +
                                    std::to_string(degree));
      }
      if (used[from]) {
        throw std::invalid_argument("point " + std::to_string(from) +
                                    " appears in more than one cycle position");
      }
      used[from] = true;
      images[from] = to;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, c.size());
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("cannot compose permutations of degree " +
                                std::to_string(p.degree()) + " and " +
                                std::to_string(q.degree()));
  }
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = p(q(static_cast<Point>(i)));
  return Permutation::unchecked(std::move(images));
}

Permutation conjugate(const Permutation& p, const Permutation& q) {
  return p * q * p.inverse();
}

std::size_t hash_value(const Permutation& p) noexcept {
  // FNV-1a over the image words.
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace cca
