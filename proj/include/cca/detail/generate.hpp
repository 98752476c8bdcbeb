#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cca/errors.hpp"
#include "cca/finite_group.hpp"

namespace cca::detail {

/// Breadth-first closure of `gens` under `mul`, then the full table.
///
/// Element k+1 is the first product x*g not yet seen, scanning x in discovery
/// order and g in generator order. Names are the discovering words. When
/// `realize` is set, each element is mapped to a permutation for the
/// group's realization.
template <class T, class Mul, class Hash = std::hash<T>>
FiniteGroup generate_group(const std::vector<std::string>& gen_names,
                           const std::vector<T>& gens, const T& identity, Mul mul,
                           std::size_t cap,
                           const std::function<Permutation(const T&)>& realize = {}) {
  std::vector<T> elems{identity};
  std::vector<std::vector<std::size_t>> words{{}};
  std::unordered_map<T, ElemId, Hash> index;
  index.emplace(identity, 0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      T y = mul(elems[head], gens[g]);
      if (index.find(y) != index.end()) continue;
      if (elems.size() >= cap) throw CapExceeded("group order", cap);
      index.emplace(y, static_cast<ElemId>(elems.size()));
      auto w = words[head];
      w.push_back(g);
      words.push_back(std::move(w));
      elems.push_back(std::move(y));
    }
  }

  const std::size_t n = elems.size();
  std::vector<ElemId> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = index.at(mul(elems[a], elems[b]));
    }
  }

  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& w : words) names.push_back(render_word(w, gen_names));

  std::vector<NamedGenerator> generators;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    generators.push_back({gen_names[g], index.at(gens[g])});
  }

  std::optional<std::vector<Permutation>> realization;
  if (realize) {
    realization.emplace();
    realization->reserve(n);
    for (const auto& x : elems) realization->push_back(realize(x));
  }
  return FiniteGroup(std::move(names), std::move(table), std::move(generators),
                     std::move(realization));
}

}  // namespace cca::detail
