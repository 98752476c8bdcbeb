#include "cca/recognition.hpp"

#include <algorithm>

#include "cca/constructions.hpp"

namespace cca {

std::vector<std::vector<ElemId>> index_two_subgroups(const FiniteGroup& g) {
  std::vector<std::vector<ElemId>> out;
  if (g.order() % 2 != 0) return out;
  const auto gens = g.minimal_generators();
  const std::size_t m = gens.size();
  std::vector<int> parity(g.order());
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    std::fill(parity.begin(), parity.end(), -1);
    parity[0] = 0;
    std::vector<ElemId> queue{0};
    bool consistent = true;
    for (std::size_t head = 0; head < queue.size() && consistent; ++head) {
      ElemId x = queue[head];
      for (std::size_t j = 0; j < m; ++j) {
        ElemId y = g.mul(x, gens[j]);
        int want = parity[x] ^ static_cast<int>((mask >> j) & 1u);
        if (parity[y] < 0) {
          parity[y] = want;
          queue.push_back(y);
        } else if (parity[y] != want) {
          consistent = false;
          break;
        }
      }
    }
    if (!consistent) continue;
    std::vector<ElemId> kernel;
    for (ElemId a = 0; a < g.order(); ++a) {
      if (parity[a] == 0) kernel.push_back(a);
    }
    out.push_back(std::move(kernel));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DicyclicWitness> recognize_dicyclic(const FiniteGroup& g) {
  std::vector<DicyclicWitness> out;
  if (g.order() % 4 != 0) return out;  // |A| must be even
  for (const auto& a : index_two_subgroups(g)) {
    bool abelian = true;
    for (std::size_t i = 0; i < a.size() && abelian; ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        if (g.mul(a[i], a[j]) != g.mul(a[j], a[i])) {
          abelian = false;
          break;
        }
      }
    }
    if (!abelian) continue;
    std::vector<bool> in_a(g.order(), false);
    for (ElemId e : a) in_a[e] = true;
    for (ElemId x = 0; x < g.order(); ++x) {
      if (in_a[x]) continue;
      ElemId y = g.mul(x, x);
      if (g.element_order(y) != 2) continue;
      bool inverts = std::all_of(a.begin(), a.end(),
                                 [&](ElemId e) { return g.conj(e, x) == g.inv(e); });
      if (inverts) out.push_back({a, y, x});
    }
  }
  return out;
}

std::optional<Isomorphism> q8_times_c2n_isomorphism(const FiniteGroup& g) {
  std::size_t order = g.order();
  if (order < 8 || order % 8 != 0) return std::nullopt;
  std::size_t n = 0;
  for (std::size_t rest = order / 8; rest > 1; rest /= 2) {
    if (rest % 2 != 0) return std::nullopt;
    ++n;
  }
  FiniteGroup model = n == 0 ? quaternion()
                             : direct_product(quaternion(), elementary_abelian_2(n), order);
  return are_isomorphic(model, g);
}

}  // namespace cca
