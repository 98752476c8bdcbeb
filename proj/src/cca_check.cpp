#include "cca/cca_check.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "cca/affine.hpp"
#include "cca/automorphism_search.hpp"
#include "cca/constructions.hpp"
#include "cca/errors.hpp"
#include "cca/isomorphism.hpp"

namespace cca {

Verdict is_cca_graph(const CayleyColouredGraph& cg) {
  auto start = std::chrono::steady_clock::now();
  Verdict v;
  const FiniteGroup& g = cg.group;
  if (!is_connected(cg.graph)) {
    throw std::invalid_argument("Cayley graph is disconnected; CCA verdicts need a connected graph");
  }
  v.check("connected", true);

  bool translations_ok = true;
  for (ElemId s : g.minimal_generators()) {
    translations_ok &= is_colour_preserving(cg.graph, left_translation(g, s));
  }
  if (!v.check("left translations colour-preserving", translations_ok)) {
    throw InternalInconsistency("a left translation does not preserve colours");
  }

  auto stab = colour_preserving_automorphisms(cg.graph, {.fix_root = true});
  v.stats.nodes = stab.stats.nodes;
  v.check("identity stabilizer search", true,
          std::to_string(stab.elements.size()) + " colour-preserving automorphisms fix e; full group order " +
              std::to_string(stab.elements.size() * g.order()));

  std::optional<Permutation> witness;
  for (const auto& alpha : stab.elements) {
    bool affine = is_affine(g, alpha).affine;
    bool class_auto = is_colour_class_automorphism(cg, alpha);
    if (affine != class_auto) {
      throw InternalInconsistency("affine test and colour-class automorphism test disagree on " +
                                  alpha.to_string());
    }
    if (!affine && !witness) witness = alpha;
  }
  v.check("affine and colour-class automorphism formulations agree", true);

  if (witness) {
    v.kind = VerdictKind::non_cca;
    v.witness = std::move(witness);
    v.subject = cg;
    v.check("non-affine colour-preserving automorphism found", true);
  } else {
    v.kind = VerdictKind::cca;
    v.check("every identity-fixing colour-preserving automorphism is a group automorphism", true);
  }
  v.stats.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

namespace {

// Advances a k-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Verdict is_cca_group(const FiniteGroup& g, const CcaGroupOptions& options) {
  auto start = std::chrono::steady_clock::now();
  Verdict v;
  std::vector<ElemId> all;
  for (ElemId a = 1; a < g.order(); ++a) all.push_back(a);
  const auto classes = colour_classes(g, all);
  const std::size_t k = classes.size();

  std::vector<ElemId> class_of(g.order(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (ElemId c : classes[i]) class_of[c] = static_cast<ElemId>(i);
  }

  // Each automorphism permutes the inverse classes.
  std::vector<std::vector<std::size_t>> class_perms;
  try {
    for (const auto& alpha : automorphisms(g, options.aut_cap)) {
      std::vector<std::size_t> perm(k);
      for (std::size_t i = 0; i < k; ++i) perm[i] = class_of[alpha[classes[i][0]]];
      class_perms.push_back(std::move(perm));
    }
    v.check("Aut(G) orbit pruning", true, "|Aut(G)| = " + std::to_string(class_perms.size()));
  } catch (const CapExceeded&) {
    class_perms.clear();
    v.assumptions.push_back("Aut(G) exceeds " + std::to_string(options.aut_cap) +
                            "; connection sets enumerated without orbit pruning");
    v.check("Aut(G) orbit pruning", false, "skipped: automorphism group over cap");
  }

  auto canonical = [&](const std::vector<std::size_t>& subset) {
    std::vector<std::size_t> image(subset.size());
    for (const auto& perm : class_perms) {
      for (std::size_t i = 0; i < subset.size(); ++i) image[i] = perm[subset[i]];
      std::sort(image.begin(), image.end());
      if (image < subset) return false;
    }
    return true;
  };

  std::size_t examined = 0, graphs = 0;
  std::uint64_t nodes = 0;
  const std::size_t first_size = g.order() == 1 ? 0 : 1;
  for (std::size_t size = first_size; size <= k; ++size) {
    std::vector<std::size_t> subset(size);
    std::iota(subset.begin(), subset.end(), std::size_t{0});
    do {
      if (examined >= options.max_subsets) {
        v.kind = VerdictKind::unknown_cap;
        v.check("enumeration", false,
                "stopped after " + std::to_string(examined) + " connection sets (cap " +
                    std::to_string(options.max_subsets) + "), " + std::to_string(graphs) +
                    " graphs checked CCA");
        v.stats.nodes = nodes;
        v.stats.millis = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        return v;
      }
      ++examined;
      if (!canonical(subset)) continue;
      std::vector<ElemId> connection;
      for (std::size_t i : subset) {
        connection.insert(connection.end(), classes[i].begin(), classes[i].end());
      }
      if (!g.generates(connection)) continue;
      ++graphs;
      auto graph_verdict = is_cca_graph(cayley_graph(g, connection));
      nodes += graph_verdict.stats.nodes;
      if (graph_verdict.kind == VerdictKind::non_cca) {
        v.kind = VerdictKind::non_cca;
        v.witness = graph_verdict.witness;
        v.subject = graph_verdict.subject;
        v.check("enumeration", true,
                "non-CCA connection set found after " + std::to_string(examined) +
                    " sets, " + std::to_string(graphs) + " connected graphs");
        v.stats.nodes = nodes;
        v.stats.millis = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        return v;
      }
    } while (size > 0 && next_combination(subset, k));
  }
  v.kind = VerdictKind::cca;
  v.check("enumeration", true,
          "exhausted " + std::to_string(examined) + " connection sets, " +
              std::to_string(graphs) + " connected graphs, all CCA");
  v.stats.nodes = nodes;
  v.stats.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

}  // namespace cca
