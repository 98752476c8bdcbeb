#include "cca/isomorphism.hpp"

#include "cca/errors.hpp"

namespace cca {
namespace {

constexpr ElemId kUnset = static_cast<ElemId>(-1);

class IsoSearch {
 public:
  IsoSearch(const FiniteGroup& g, const FiniteGroup& h,
            const std::function<bool(const Isomorphism&)>& visit)
      : g_(g), h_(h), visit_(visit), gens_(g.minimal_generators()) {
    for (ElemId gen : gens_) {
      std::vector<ElemId> cands;
      for (ElemId y = 0; y < h.order(); ++y) {
        if (h.element_order(y) == g.element_order(gen)) cands.push_back(y);
      }
      candidates_.push_back(std::move(cands));
    }
    images_.assign(gens_.size(), 0);
  }

  void run() {
    if (gens_.empty()) {
      // Trivial source group.
      Isomorphism iso;
      iso.map = {0};
      visit_(iso);
      return;
    }
    descend(0);
  }

 private:
  // Extends the current assignment of gens_[0..depth] to the subgroup it
  // generates. Returns false if it is not an injective homomorphism there.
  bool extend(std::size_t depth) {
    map_.assign(g_.order(), kUnset);
    used_.assign(h_.order(), false);
    map_[0] = 0;
    used_[0] = true;
    std::vector<ElemId> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      ElemId x = queue[head];
      for (std::size_t j = 0; j <= depth; ++j) {
        ElemId y = g_.mul(x, gens_[j]);
        ElemId want = h_.mul(map_[x], images_[j]);
        if (map_[y] == kUnset) {
          if (used_[want]) return false;
          map_[y] = want;
          used_[want] = true;
          queue.push_back(y);
        } else if (map_[y] != want) {
          return false;
        }
      }
    }
    return true;
  }

  bool descend(std::size_t depth) {
    for (ElemId y : candidates_[depth]) {
      images_[depth] = y;
      if (!extend(depth)) continue;
      if (depth + 1 == gens_.size()) {
        if (!complete()) continue;
        Isomorphism iso;
        for (std::size_t j = 0; j < gens_.size(); ++j) {
          iso.generator_images.emplace_back(name_of(gens_[j]), images_[j]);
        }
        iso.map = map_;
        if (!visit_(iso)) return false;
      } else if (!descend(depth + 1)) {
        return false;
      }
    }
    return true;
  }

  bool complete() const {
    for (ElemId v : map_) {
      if (v == kUnset) return false;
    }
    return true;
  }

  std::string name_of(ElemId gen) const {
    for (const auto& ng : g_.generators()) {
      if (ng.element == gen) return ng.name;
    }
    return g_.name(gen);
  }

  const FiniteGroup& g_;
  const FiniteGroup& h_;
  const std::function<bool(const Isomorphism&)>& visit_;
  std::vector<ElemId> gens_;
  std::vector<std::vector<ElemId>> candidates_;
  std::vector<ElemId> images_;
  std::vector<ElemId> map_;
  std::vector<bool> used_;
};

}  // namespace

void for_each_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                          const std::function<bool(const Isomorphism&)>& visit) {
  if (g.order() != h.order()) return;
  if (g.order_profile() != h.order_profile()) return;
  if (g.is_abelian() != h.is_abelian()) return;
  IsoSearch(g, h, visit).run();
}

std::optional<Isomorphism> are_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  std::optional<Isomorphism> found;
  for_each_isomorphism(g, h, [&](const Isomorphism& iso) {
    found = iso;
    return false;
  });
  return found;
}

std::vector<std::vector<ElemId>> automorphisms(const FiniteGroup& g, std::size_t cap) {
  std::vector<std::vector<ElemId>> out;
  bool overflow = false;
  for_each_isomorphism(g, g, [&](const Isomorphism& iso) {
    if (out.size() >= cap) {
      overflow = true;
      return false;
    }
    out.push_back(iso.map);
    return true;
  });
  if (overflow) throw CapExceeded("automorphism group order", cap);
  return out;
}

bool is_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                    const std::vector<ElemId>& map) {
  if (g.order() != h.order() || map.size() != g.order()) return false;
  std::vector<bool> hit(h.order(), false);
  for (ElemId v : map) {
    if (v >= h.order() || hit[v]) return false;
    hit[v] = true;
  }
  for (ElemId a = 0; a < g.order(); ++a) {
    for (ElemId b = 0; b < g.order(); ++b) {
      if (map[g.mul(a, b)] != h.mul(map[a], map[b])) return false;
    }
  }
  return true;
}

}  // namespace cca
