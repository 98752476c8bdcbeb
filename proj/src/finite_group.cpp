#include "cca/finite_group.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cca {

FiniteGroup::FiniteGroup(std::vector<std::string> names, std::vector<ElemId> table,
                         std::vector<NamedGenerator> generators,
                         std::optional<std::vector<Permutation>> realization)
    : names_(std::move(names)),
      table_(std::move(table)),
      generators_(std::move(generators)),
      realization_(std::move(realization)) {
  const std::size_t n = names_.size();
  if (n == 0) throw std::invalid_argument("group must have at least one element");
  if (table_.size() != n * n) throw std::invalid_argument("table size is not order^2");

  std::vector<bool> row(n), col(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(row.begin(), row.end(), false);
    std::fill(col.begin(), col.end(), false);
    for (std::size_t b = 0; b < n; ++b) {
      ElemId r = table_[a * n + b];
      ElemId c = table_[b * n + a];
      if (r >= n || c >= n || row[r] || col[c]) {
        throw std::invalid_argument("multiplication table is not a Latin square");
      }
      row[r] = col[c] = true;
    }
    if (table_[a] != a || table_[a * n] != a) {
      throw std::invalid_argument("element 0 is not a two-sided identity");
    }
  }

  inverse_.assign(n, 0);
  for (ElemId a = 0; a < n; ++a) {
    for (ElemId b = 0; b < n; ++b) {
      if (table_[a * n + b] == 0) {
        inverse_[a] = b;
        break;
      }
    }
    if (table_[inverse_[a] * n + a] != 0) {
      throw std::invalid_argument("left and right inverses differ");
    }
  }

  orders_.assign(n, 0);
  for (ElemId a = 0; a < n; ++a) {
    std::size_t k = 1;
    for (ElemId x = a; x != 0; x = mul(x, a)) {
      if (++k > n + 1) throw std::invalid_argument("element has no finite order");
    }
    orders_[a] = k;
  }

  for (const auto& g : generators_) {
    if (g.element >= n) throw std::invalid_argument("generator index out of range");
  }

  if (realization_) {
    if (realization_->size() != n) {
      throw std::invalid_argument("realization size differs from group order");
    }
    const std::size_t deg = (*realization_)[0].degree();
    for (ElemId a = 0; a < n; ++a) {
      const Permutation& p = (*realization_)[a];
      if (p.degree() != deg) throw std::invalid_argument("realization degrees differ");
      if (!lookup_.emplace(p, a).second) {
        throw std::invalid_argument("realization is not faithful");
      }
    }
    if (!(*realization_)[0].is_identity()) {
      throw std::invalid_argument("identity is not realized by the identity permutation");
    }
    for (ElemId a = 0; a < n; ++a) {
      for (const auto& g : generators_) {
        if (compose((*realization_)[a], (*realization_)[g.element]) !=
            (*realization_)[mul(a, g.element)]) {
          throw std::invalid_argument("realization is not a homomorphism");
        }
      }
    }
  }
}

ElemId FiniteGroup::pow(ElemId a, long long k) const {
  const long long ord = static_cast<long long>(orders_[a]);
  k %= ord;
  if (k < 0) k += ord;
  ElemId r = identity();
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::vector<ElemId> FiniteGroup::generator_elements() const {
  std::vector<ElemId> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(g.element);
  return out;
}

std::optional<ElemId> FiniteGroup::generator(const std::string& name) const {
  for (const auto& g : generators_) {
    if (g.name == name) return g.element;
  }
  return std::nullopt;
}

std::span<const Permutation> FiniteGroup::realizations() const {
  if (!realization_) return {};
  return *realization_;
}

std::size_t FiniteGroup::degree() const {
  return realization_ ? (*realization_)[0].degree() : 0;
}

std::optional<ElemId> FiniteGroup::find(const Permutation& p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

bool FiniteGroup::is_abelian() const {
  const std::size_t n = order();
  for (ElemId a = 0; a < n; ++a) {
    for (ElemId b = a + 1; b < n; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

bool FiniteGroup::is_elementary_abelian_2() const {
  for (ElemId a = 1; a < order(); ++a) {
    if (orders_[a] != 2) return false;
  }
  return true;
}

std::vector<ElemId> FiniteGroup::involutions() const {
  std::vector<ElemId> out;
  for (ElemId a = 1; a < order(); ++a) {
    if (orders_[a] == 2) out.push_back(a);
  }
  return out;
}

std::map<std::size_t, std::size_t> FiniteGroup::order_profile() const {
  std::map<std::size_t, std::size_t> profile;
  for (std::size_t o : orders_) ++profile[o];
  return profile;
}

std::vector<ElemId> FiniteGroup::subgroup(std::span<const ElemId> gens) const {
  std::vector<bool> seen(order(), false);
  std::vector<ElemId> out{identity()};
  seen[identity()] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (ElemId g : gens) {
      ElemId y = mul(out[head], g);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

std::vector<ElemId> FiniteGroup::minimal_generators() const {
  std::vector<ElemId> kept;
  std::size_t reached = 1;
  for (const auto& g : generators_) {
    kept.push_back(g.element);
    std::size_t now = subgroup(kept).size();
    if (now == reached) {
      kept.pop_back();
    } else {
      reached = now;
    }
    if (reached == order()) break;
  }
  // Groups whose named generators do not generate (or that have none) are
  // completed greedily from the element list.
  for (ElemId a = 1; a < order() && reached < order(); ++a) {
    auto sub = subgroup(kept);
    if (std::find(sub.begin(), sub.end(), a) != sub.end()) continue;
    kept.push_back(a);
    reached = subgroup(kept).size();
  }
  return kept;
}

bool FiniteGroup::verify_axioms() const {
  const std::size_t n = order();
  for (ElemId a = 0; a < n; ++a) {
    if (mul(a, 0) != a || mul(0, a) != a) return false;
    if (mul(a, inv(a)) != 0 || mul(inv(a), a) != 0) return false;
    for (ElemId b = 0; b < n; ++b) {
      ElemId ab = mul(a, b);
      for (ElemId c = 0; c < n; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) return false;
      }
    }
  }
  if (realization_) {
    for (ElemId a = 0; a < n; ++a) {
      for (ElemId b = 0; b < n; ++b) {
        if (compose((*realization_)[a], (*realization_)[b]) != (*realization_)[mul(a, b)]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::string render_word(std::span<const std::size_t> word,
                        std::span<const std::string> gen_names) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size();) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    if (i) os << ' ';
    os << gen_names[word[i]];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

}  // namespace cca
