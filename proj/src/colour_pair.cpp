#include "cca/colour_pair.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "cca/automorphism_search.hpp"
#include "cca/cayley_graph.hpp"
#include "cca/constructions.hpp"
#include "cca/errors.hpp"
#include "cca/isomorphism.hpp"
#include "cca/recognition.hpp"

namespace cca {
namespace {

using PermSet = std::unordered_set<Permutation>;

std::vector<Permutation> translation_generators(const FiniteGroup& g) {
  std::vector<Permutation> out;
  for (ElemId s : g.minimal_generators()) out.push_back(left_translation(g, s));
  return out;
}

// <gens> as a permutation set equals `a0` exactly.
bool generates_exactly(const std::vector<Permutation>& gens, const PermSet& a0) {
  try {
    auto grp = closure(gens, a0.size());
    if (grp.order() != a0.size()) return false;
    return std::all_of(grp.realizations().begin(), grp.realizations().end(),
                       [&](const Permutation& p) { return a0.count(p) > 0; });
  } catch (const CapExceeded&) {
    return false;
  }
}

Permutation inversion_map(const FiniteGroup& g) {
  std::vector<Point> images(g.order());
  for (ElemId x = 0; x < g.order(); ++x) images[x] = g.inv(x);
  return Permutation(std::move(images));
}

}  // namespace

std::vector<Permutation> complete_colour_automorphisms(const FiniteGroup& g) {
  return colour_preserving_automorphisms(complete_colour_graph(g).graph).elements;
}

Permutation dicyclic_sigma(const FiniteGroup& g, const std::vector<ElemId>& subgroup) {
  std::vector<bool> in_a(g.order(), false);
  for (ElemId a : subgroup) in_a[a] = true;
  std::vector<Point> images(g.order());
  for (ElemId x = 0; x < g.order(); ++x) images[x] = in_a[x] ? x : g.inv(x);
  return Permutation(std::move(images));
}

std::vector<Permutation> quaternion_sigmas(const FiniteGroup& g) {
  std::vector<int> cls(g.order(), -1);
  int classes = 0;
  for (ElemId x = 0; x < g.order(); ++x) {
    if (g.element_order(x) != 4 || cls[x] >= 0) continue;
    for (ElemId y = x; y < g.order(); ++y) {
      if (g.element_order(y) == 4 && g.element_order(g.mul(x, g.inv(y))) <= 2) cls[y] = classes;
    }
    ++classes;
  }
  if (classes != 3) {
    throw std::invalid_argument("group is not of the form Q8 x C2^n: " + std::to_string(classes) +
                                " classes of order-4 elements");
  }
  std::vector<Permutation> out;
  for (int c = 0; c < 3; ++c) {
    std::vector<Point> images(g.order());
    for (ElemId x = 0; x < g.order(); ++x) images[x] = cls[x] == c ? g.inv(x) : x;
    out.emplace_back(std::move(images));
  }
  return out;
}

Verdict is_complete_colour_pair(const FiniteGroup& g, const FiniteGroup& b) {
  if (!g.has_realization()) {
    throw std::invalid_argument("G needs a permutation realization for a colour pair check");
  }
  if (!b.has_realization()) {
    throw std::invalid_argument("B needs a permutation realization for a colour pair check");
  }
  if (g.order() <= 2) {
    throw std::invalid_argument("colour pair check needs |G| >= 3 (got " +
                                std::to_string(g.order()) + ")");
  }
  const std::size_t d = g.degree();
  if (b.degree() != d) throw std::invalid_argument("G and B act on different point sets");
  if (d != g.order()) throw std::invalid_argument("G is not regular on its point set");
  std::vector<Point> point_of(g.order());
  std::vector<ElemId> elem_of(d, static_cast<ElemId>(-1));
  for (ElemId x = 0; x < g.order(); ++x) {
    point_of[x] = g.realization(x)(0);
    if (elem_of[point_of[x]] != static_cast<ElemId>(-1)) {
      throw std::invalid_argument("G is not regular on its point set");
    }
    elem_of[point_of[x]] = x;
  }
  auto to_elements = [&](const Permutation& q) {
    std::vector<Point> images(g.order());
    for (ElemId x = 0; x < g.order(); ++x) images[x] = elem_of[q(point_of[x])];
    return Permutation(std::move(images));
  };

  Verdict v;
  auto a0_list = complete_colour_automorphisms(g);
  PermSet a0(a0_list.begin(), a0_list.end());
  v.check("A0 computed", true, "|A0| = " + std::to_string(a0.size()));

  bool b_in_a0 = std::all_of(b.realizations().begin(), b.realizations().end(),
                             [&](const Permutation& q) { return a0.count(to_elements(q)) > 0; });
  v.check("B <= A0", b_in_a0, "|B| = " + std::to_string(b.order()));

  const auto ghat = translation_generators(g);
  bool any_bullet = false;

  // Bullet 1.
  {
    bool shape = g.is_abelian() && !g.is_elementary_abelian_2();
    bool equal = false;
    if (shape) {
      auto gens = ghat;
      gens.push_back(inversion_map(g));
      equal = generates_exactly(gens, a0);
    }
    v.check("bullet 1: abelian, not elementary abelian 2-group, A0 = Dih(G)", shape && equal,
            shape ? (equal ? "A0 equals <Ĝ, inversion>" : "A0 differs from <Ĝ, inversion>")
                  : "G not abelian or elementary abelian 2-group");
    any_bullet |= shape && equal;
  }

  // Bullet 2.
  {
    auto witnesses = recognize_dicyclic(g);
    bool q8 = !witnesses.empty() && is_q8_times_c2n(g);
    bool shape = !witnesses.empty() && !q8;
    bool equal = false;
    std::size_t distinct = 0;
    if (shape) {
      std::set<std::vector<ElemId>> seen;
      for (const auto& w : witnesses) {
        if (!seen.insert(w.subgroup).second) continue;
        ++distinct;
        auto gens = ghat;
        gens.push_back(dicyclic_sigma(g, w.subgroup));
        if (generates_exactly(gens, a0)) {
          equal = true;
          break;
        }
      }
      if (equal && distinct > 1) {
        v.assumptions.push_back(
            "generalized dicyclic case accepted on the first matching witness subgroup A");
      } else if (equal) {
        v.assumptions.push_back("generalized dicyclic case accepted if any witness matches");
      }
    }
    v.check("bullet 2: Dic(A, y) not Q8 x C2^n, A0 = Ĝ ⋊ <σ>", shape && equal,
            shape ? (equal ? "matched witness subgroup" : "no witness sigma generates A0")
                  : (q8 ? "G is Q8 x C2^n" : "G not generalized dicyclic"));
    any_bullet |= shape && equal;
  }

  // Bullet 3.
  {
    bool shape = is_q8_times_c2n(g);
    bool equal = false;
    if (shape) {
      auto gens = ghat;
      for (auto& s : quaternion_sigmas(g)) gens.push_back(std::move(s));
      equal = generates_exactly(gens, a0);
    }
    v.check("bullet 3: Q8 x C2^n, A0 = <Ĝ, σ_i, σ_j, σ_k>", shape && equal,
            shape ? (equal ? "A0 equals <Ĝ, σ_i, σ_j, σ_k>" : "A0 differs")
                  : "G not Q8 x C2^n");
    any_bullet |= shape && equal;
  }

  v.kind = b_in_a0 && any_bullet ? VerdictKind::pair_yes : VerdictKind::pair_no;
  return v;
}

std::optional<FiniteGroup> realize_over_left_regular(const FiniteGroup& g, const FiniteGroup& b) {
  if (g.order() < 2 || b.order() % g.order() != 0) return std::nullopt;
  auto a0 = complete_colour_automorphisms(g);
  std::vector<Permutation> stab;
  for (const auto& p : a0) {
    if (p(0) == 0) stab.push_back(p);
  }
  const auto ghat = translation_generators(g);
  std::vector<std::string> ghat_names;
  for (ElemId s : g.minimal_generators()) ghat_names.push_back("L_" + g.name(s));

  // Subgroups of the stabilizer, smallest generating lists first.
  std::vector<std::vector<Permutation>> subgroup_gens{{}};
  std::set<std::vector<Permutation>> seen{{Permutation::identity(g.order())}};
  for (std::size_t head = 0; head < subgroup_gens.size(); ++head) {
    const auto gens = subgroup_gens[head];
    std::vector<std::string> names = ghat_names;
    auto all = ghat;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      all.push_back(gens[i]);
      names.push_back("a" + std::to_string(i + 1));
    }
    auto candidate = closure(all, std::max(b.order(), a0.size()), names);
    if (candidate.order() == b.order() && are_isomorphic(candidate, b)) return candidate;

    std::vector<Permutation> elems;
    if (gens.empty()) {
      elems = {Permutation::identity(g.order())};
    } else {
      auto sub = closure(gens, stab.size());
      elems.assign(sub.realizations().begin(), sub.realizations().end());
    }
    for (const auto& t : stab) {
      if (std::find(elems.begin(), elems.end(), t) != elems.end()) continue;
      auto next = gens;
      next.push_back(t);
      auto grown = closure(next, stab.size());
      std::vector<Permutation> key(grown.realizations().begin(), grown.realizations().end());
      std::sort(key.begin(), key.end());
      if (seen.insert(key).second) subgroup_gens.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

}  // namespace cca
