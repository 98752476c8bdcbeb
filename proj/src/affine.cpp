#include "cca/affine.hpp"

#include <stdexcept>

#include "cca/errors.hpp"

namespace cca {
namespace {

void require_degree(const FiniteGroup& g, const Permutation& p) {
  if (p.degree() != g.order()) {
    throw std::invalid_argument("vertex permutation degree differs from group order");
  }
}

bool is_homomorphism_on_generators(const FiniteGroup& g, const std::vector<ElemId>& alpha) {
  if (alpha[g.identity()] != g.identity()) return false;
  const auto gens = g.minimal_generators();
  for (ElemId x = 0; x < g.order(); ++x) {
    for (ElemId s : gens) {
      if (alpha[g.mul(x, s)] != g.mul(alpha[x], alpha[s])) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<AffineDecomposition> affine_decomposition(const FiniteGroup& g,
                                                        const Permutation& p) {
  require_degree(g, p);
  ElemId g0 = p(g.identity());
  ElemId g0_inv = g.inv(g0);
  std::vector<ElemId> alpha(g.order());
  for (ElemId x = 0; x < g.order(); ++x) alpha[x] = g.mul(g0_inv, p(x));
  if (!is_homomorphism_on_generators(g, alpha)) return std::nullopt;
  return AffineDecomposition{g0, std::move(alpha)};
}

bool normalizes_left_regular(const FiniteGroup& g, const Permutation& p) {
  require_degree(g, p);
  const Permutation p_inv = p.inverse();
  for (ElemId s : g.minimal_generators()) {
    // q = p λ_s p^-1 must satisfy q(x) = q(e) x for all x.
    std::vector<Point> q(g.order());
    for (ElemId x = 0; x < g.order(); ++x) q[x] = p(g.mul(s, p_inv(x)));
    for (ElemId x = 0; x < g.order(); ++x) {
      if (q[x] != g.mul(q[g.identity()], x)) return false;
    }
  }
  return true;
}

AffineResult is_affine(const FiniteGroup& g, const Permutation& p) {
  AffineResult r;
  r.decomposition = affine_decomposition(g, p);
  r.affine = r.decomposition.has_value();
  if (r.affine != normalizes_left_regular(g, p)) {
    throw InternalInconsistency(
        "affine decomposition and left-regular normalizer test disagree on " + p.to_string());
  }
  return r;
}

bool is_colour_class_automorphism(const CayleyColouredGraph& cg, const Permutation& alpha) {
  const FiniteGroup& g = cg.group;
  require_degree(g, alpha);
  std::vector<ElemId> map(alpha.images().begin(), alpha.images().end());
  if (!is_homomorphism_on_generators(g, map)) return false;
  for (ElemId c : cg.connection) {
    ElemId image = map[c];
    if (image != c && image != g.inv(c)) return false;
  }
  return true;
}

}  // namespace cca
