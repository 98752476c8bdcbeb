#include "cca/constructions.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "cca/detail/generate.hpp"

namespace cca {
namespace {

using Code = std::uint64_t;

std::vector<std::string> generator_names(const FiniteGroup& g) {
  std::vector<std::string> out;
  for (const auto& gen : g.generators()) out.push_back(gen.name);
  return out;
}

std::string fresh_name(const std::vector<std::string>& taken,
                       std::initializer_list<const char*> preferred) {
  for (const char* candidate : preferred) {
    if (std::find(taken.begin(), taken.end(), candidate) == taken.end()) return candidate;
  }
  std::string base = *preferred.begin();
  for (int k = 1;; ++k) {
    std::string c = base + "_" + std::to_string(k);
    if (std::find(taken.begin(), taken.end(), c) == taken.end()) return c;
  }
}

}  // namespace

FiniteGroup closure(std::span<const Permutation> gens, std::size_t cap,
                    std::vector<std::string> names) {
  if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
  if (cap < 1) throw std::invalid_argument("closure cap must be at least 1");
  const std::size_t degree = gens[0].degree();
  for (const auto& g : gens) {
    if (g.degree() != degree) throw std::invalid_argument("generators differ in degree");
  }
  if (names.empty()) {
    for (std::size_t i = 0; i < gens.size(); ++i) names.push_back("g" + std::to_string(i + 1));
  }
  if (names.size() != gens.size()) throw std::invalid_argument("one name per generator");
  std::vector<Permutation> g(gens.begin(), gens.end());
  return detail::generate_group<Permutation>(
      names, g, Permutation::identity(degree),
      [](const Permutation& a, const Permutation& b) { return compose(a, b); }, cap,
      [](const Permutation& p) { return p; });
}

FiniteGroup cyclic(std::size_t n) {
  if (n < 1) throw std::invalid_argument("cyclic group needs n >= 1");
  // With n = 1 the generator is the identity; generate_group still records it.
  return detail::generate_group<Code>({"r"}, {n == 1 ? 0u : 1u}, 0,
                                      [n](Code a, Code b) { return (a + b) % n; }, n);
}

FiniteGroup dihedral(std::size_t n) {
  if (n < 3) throw std::invalid_argument("dihedral group D(n) needs n >= 3");
  // r^k s^f encoded as k + n f; s r^k = r^-k s.
  auto mul = [n](Code a, Code b) {
    Code k1 = a % n, f1 = a / n, k2 = b % n, f2 = b / n;
    Code k = f1 ? (k1 + n - k2) % n : (k1 + k2) % n;
    return k + n * ((f1 + f2) % 2);
  };
  return detail::generate_group<Code>({"r", "s"}, {1, n}, 0, mul, 2 * n);
}

FiniteGroup quaternion() {
  // Units 1, i, j, k as 0..3; sign bit in 4. Encoding: unit + 4 * negative.
  static constexpr std::array<std::array<int, 4>, 4> unit_product = {{
      {0, 1, 2, 3},
      {1, 4, 3, 6},  // i*1=i, i*i=-1, i*j=k, i*k=-j
      {2, 7, 4, 1},  // j*1=j, j*i=-k, j*j=-1, j*k=i
      {3, 2, 5, 4},  // k*1=k, k*i=j, k*j=-i, k*k=-1
  }};
  auto mul = [](Code a, Code b) {
    int r = unit_product[a % 4][b % 4];
    Code unit = static_cast<Code>(r % 4);
    Code neg = ((r >= 4) + (a / 4) + (b / 4)) % 2;
    return unit + 4 * neg;
  };
  return detail::generate_group<Code>({"i", "j"}, {1, 2}, 0, mul, 8);
}

FiniteGroup elementary_abelian_2(std::size_t k) {
  if (k == 0) return cyclic(1);
  if (k > 9) throw CapExceeded("order of C2^" + std::to_string(k), kDefaultOrderCap);
  std::vector<std::string> names;
  std::vector<Code> gens;
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back("c" + std::to_string(i + 1));
    gens.push_back(Code{1} << i);
  }
  return detail::generate_group<Code>(names, gens, 0, [](Code a, Code b) { return a ^ b; },
                                      std::size_t{1} << k);
}

FiniteGroup generalized_dihedral(const FiniteGroup& a, std::size_t cap) {
  if (!a.is_abelian()) throw std::invalid_argument("Dih(A) needs an abelian A");
  const Code n = a.order();
  // (x, f) encodes x s^f; s x = x^-1 s.
  auto mul = [&a, n](Code u, Code v) {
    auto x = static_cast<ElemId>(u % n), y = static_cast<ElemId>(v % n);
    Code f = u / n, g = v / n;
    ElemId z = a.mul(x, f ? a.inv(y) : y);
    return z + n * ((f + g) % 2);
  };
  auto names = generator_names(a);
  std::vector<Code> gens;
  for (const auto& g : a.generators()) gens.push_back(g.element);
  names.push_back(fresh_name(names, {"s", "t", "u", "sigma"}));
  gens.push_back(n);
  return detail::generate_group<Code>(names, gens, 0, mul, cap);
}

FiniteGroup generalized_dicyclic(const FiniteGroup& a, ElemId y, std::size_t cap) {
  if (!a.is_abelian()) throw std::invalid_argument("Dic(A, y) needs an abelian A");
  if (a.order() % 2 != 0) throw std::invalid_argument("Dic(A, y) needs A of even order");
  if (y >= a.order() || a.element_order(y) != 2) {
    throw std::invalid_argument("Dic(A, y) needs y to be an involution of A");
  }
  const Code n = a.order();
  // (z, f) encodes z x^f; x z = z^-1 x, x^2 = y.
  auto mul = [&a, n, y](Code u, Code v) {
    auto p = static_cast<ElemId>(u % n), q = static_cast<ElemId>(v % n);
    Code f = u / n, g = v / n;
    ElemId z = a.mul(p, f ? a.inv(q) : q);
    if (f + g == 2) z = a.mul(z, y);
    return z + n * ((f + g) % 2);
  };
  auto names = generator_names(a);
  std::vector<Code> gens;
  for (const auto& g : a.generators()) gens.push_back(g.element);
  names.push_back(fresh_name(names, {"x", "w", "v", "xi"}));
  gens.push_back(n);
  return detail::generate_group<Code>(names, gens, 0, mul, cap);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t cap) {
  if (g.order() * h.order() > cap) throw CapExceeded("direct product order", cap);
  const Code n = g.order();
  auto mul = [&g, &h, n](Code u, Code v) {
    ElemId a = g.mul(static_cast<ElemId>(u % n), static_cast<ElemId>(v % n));
    ElemId b = h.mul(static_cast<ElemId>(u / n), static_cast<ElemId>(v / n));
    return a + n * b;
  };
  auto left = generator_names(g);
  auto right = generator_names(h);
  bool clash = std::any_of(left.begin(), left.end(), [&](const std::string& s) {
    return std::find(right.begin(), right.end(), s) != right.end();
  });
  std::vector<std::string> names;
  std::vector<Code> gens;
  for (const auto& gen : g.generators()) {
    names.push_back(clash ? gen.name + "1" : gen.name);
    gens.push_back(gen.element);
  }
  for (const auto& gen : h.generators()) {
    names.push_back(clash ? gen.name + "2" : gen.name);
    gens.push_back(n * gen.element);
  }
  return detail::generate_group<Code>(names, gens, 0, mul, cap);
}

FiniteGroup wreath_c2(const FiniteGroup& g, std::size_t cap) {
  const Code n = g.order();
  if (2 * n * n > cap) throw CapExceeded("wreath product order", cap);
  // (a, b, f) encodes (a, b) t^f; t (c, d) t = (d, c).
  auto mul = [&g, n](Code u, Code v) {
    auto a = static_cast<ElemId>(u % n), b = static_cast<ElemId>((u / n) % n);
    auto c = static_cast<ElemId>(v % n), d = static_cast<ElemId>((v / n) % n);
    Code f = u / (n * n), k = v / (n * n);
    if (f) std::swap(c, d);
    return g.mul(a, c) + n * g.mul(b, d) + n * n * ((f + k) % 2);
  };
  std::vector<std::string> names;
  std::vector<Code> gens;
  for (const auto& gen : g.generators()) {
    names.push_back(gen.name + "1");
    gens.push_back(gen.element);
  }
  for (const auto& gen : g.generators()) {
    names.push_back(gen.name + "2");
    gens.push_back(n * gen.element);
  }
  names.push_back(fresh_name(names, {"t", "u", "swap"}));
  gens.push_back(n * n);
  return detail::generate_group<Code>(names, gens, 0, mul, cap);
}

Permutation left_translation(const FiniteGroup& g, ElemId a) {
  std::vector<Point> images(g.order());
  for (ElemId x = 0; x < g.order(); ++x) images[x] = g.mul(a, x);
  return Permutation::unchecked(std::move(images));
}

std::vector<Permutation> left_translations(const FiniteGroup& g) {
  std::vector<Permutation> out;
  out.reserve(g.order());
  for (ElemId a = 0; a < g.order(); ++a) out.push_back(left_translation(g, a));
  return out;
}

FiniteGroup left_regular(const FiniteGroup& g) {
  std::vector<std::string> names(g.names().begin(), g.names().end());
  std::vector<ElemId> table(g.table().begin(), g.table().end());
  std::vector<NamedGenerator> gens(g.generators().begin(), g.generators().end());
  return FiniteGroup(std::move(names), std::move(table), std::move(gens),
                     left_translations(g));
}

}  // namespace cca
