#include "cca/arc_action.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "cca/automorphism_search.hpp"
#include "cca/colour_pair.hpp"
#include "cca/constructions.hpp"
#include "cca/errors.hpp"

namespace cca {
namespace {

Arc image(const Permutation& p, const Arc& a) { return {p(a.tail), p(a.head)}; }

}  // namespace

void require_automorphism_action(const ColouredGraph& g, const FiniteGroup& grp) {
  if (!grp.has_realization()) {
    throw std::invalid_argument("group acting on a graph needs a permutation realization");
  }
  if (grp.degree() != g.vertex_count()) {
    throw std::invalid_argument("realization degree " + std::to_string(grp.degree()) +
                                " does not match " + std::to_string(g.vertex_count()) +
                                " vertices");
  }
  for (ElemId x = 0; x < grp.order(); ++x) {
    if (!is_graph_automorphism(g, grp.realization(x))) {
      throw std::invalid_argument("element " + grp.name(x) + " = " +
                                  grp.realization(x).to_string() + " is not a graph automorphism");
    }
  }
}

bool is_arc_regular(const ColouredGraph& g, const FiniteGroup& grp) {
  require_automorphism_action(g, grp);
  const auto all = arcs(g);
  if (all.empty() || grp.order() != all.size()) return false;
  std::set<Arc> orbit;
  for (ElemId x = 0; x < grp.order(); ++x) orbit.insert(image(grp.realization(x), all.front()));
  return orbit.size() == all.size();
}

FiniteGroup local_action(const FiniteGroup& grp, const ColouredGraph& g, Vertex v) {
  if (v >= g.vertex_count()) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  }
  if (!grp.has_realization() || grp.degree() != g.vertex_count()) {
    throw std::invalid_argument("local action needs a realization on the graph's vertices");
  }
  const auto nbrs = g.neighbours(v);
  std::vector<Point> pos(g.vertex_count(), 0);
  for (std::size_t i = 0; i < nbrs.size(); ++i) pos[nbrs[i]] = static_cast<Point>(i);

  std::unordered_set<Permutation> seen;
  std::vector<Permutation> restricted;
  for (ElemId x = 0; x < grp.order(); ++x) {
    const auto& p = grp.realization(x);
    if (p(v) != v) continue;
    std::vector<Point> images(nbrs.size());
    for (std::size_t i = 0; i < nbrs.size(); ++i) images[i] = pos[p(nbrs[i])];
    Permutation r(std::move(images));
    if (seen.insert(r).second) restricted.push_back(std::move(r));
  }
  std::sort(restricted.begin(), restricted.end());
  auto gens = generating_subset(restricted);
  if (gens.empty()) gens.push_back(Permutation::identity(nbrs.size()));
  return closure(gens, restricted.size());
}

ArcLabeling arc_labeling(const ColouredGraph& g, const FiniteGroup& grp, Arc base) {
  if (!g.adjacent(base.tail, base.head)) {
    throw std::invalid_argument("base is not an arc of the graph");
  }
  if (!is_arc_regular(g, grp)) throw std::invalid_argument("action is not arc-regular");
  ArcLabeling out{g, grp, base, {}, {}};
  for (ElemId x = 0; x < grp.order(); ++x) {
    Arc a = image(grp.realization(x), base);
    out.label.emplace(a, x);
    out.arc_of.push_back(a);
  }
  if (out.label.size() != grp.order() || out.label.at(base) != grp.identity()) {
    throw InternalInconsistency("arc labeling is not a bijection");
  }
  for (ElemId x = 0; x < grp.order(); ++x) {
    for (const auto& [a, y] : out.label) {
      if (out.label.at(image(grp.realization(x), a)) != grp.mul(x, y)) {
        throw InternalInconsistency("arc labeling is not left-equivariant");
      }
    }
  }
  return out;
}

Permutation induced_vertex_map(const Permutation& h, const ArcLabeling& labeling) {
  if (h.degree() != labeling.graph.vertex_count() || !is_graph_automorphism(labeling.graph, h)) {
    throw std::invalid_argument("induced map needs a graph automorphism, got " + h.to_string());
  }
  std::vector<Point> images(labeling.group.order());
  for (ElemId x = 0; x < images.size(); ++x) images[x] = labeling[image(h, labeling.arc_of[x])];
  return Permutation(std::move(images));
}

LineSubdivisionForm line_subdivision_cayley_form(const ArcLabeling& labeling) {
  const auto& g = labeling.graph;
  const auto& grp = labeling.group;
  LineSubdivisionForm out{subdivision(g), {}, {}, {}, {}};
  out.line = line_graph(out.subdivision.graph);
  const auto& s = out.subdivision;
  const std::size_t m = out.line.graph.vertex_count();
  if (m != grp.order()) {
    throw InternalInconsistency("line graph of the subdivision has " + std::to_string(m) +
                                " vertices, group has " + std::to_string(grp.order()));
  }
  out.element_of.resize(m);
  std::vector<bool> hit(m, false);
  for (Vertex i = 0; i < m; ++i) {
    const Edge& se = s.graph.edges()[out.line.edge_of[i]];
    Vertex x = s.origin[se.u].midpoint ? se.v : se.u;
    Vertex mid = s.origin[se.u].midpoint ? se.u : se.v;
    const Edge& orig = g.edges()[s.origin[mid].index];
    Vertex y = orig.u == x ? orig.v : orig.u;
    ElemId el = labeling[{x, y}];
    if (hit[el]) throw InternalInconsistency("two line-graph vertices share a label");
    hit[el] = true;
    out.element_of[i] = el;
  }
  Vertex root = static_cast<Vertex>(
      std::find(out.element_of.begin(), out.element_of.end(), grp.identity()) -
      out.element_of.begin());
  for (Vertex u : out.line.graph.neighbours(root)) out.connection.push_back(out.element_of[u]);
  std::sort(out.connection.begin(), out.connection.end());
  out.cayley = cayley_graph(grp, out.connection);
  if (out.cayley.graph.edge_count() != out.line.graph.edge_count()) {
    throw InternalInconsistency("Cayley form and line graph differ in edge count");
  }
  for (const Edge& e : out.line.graph.edges()) {
    if (!out.cayley.graph.adjacent(out.element_of[e.u], out.element_of[e.v])) {
      throw InternalInconsistency("line-graph edge does not map to a Cayley edge");
    }
  }
  return out;
}

Verdict corollary_4_10_harness(const ColouredGraph& g, const FiniteGroup& grp,
                               const FiniteGroup& h, std::optional<Arc> base) {
  Verdict v;
  v.kind = VerdictKind::hypotheses_fail;
  if (!v.check("connected", g.vertex_count() > 0 && is_connected(g))) return v;
  require_automorphism_action(g, grp);
  if (!v.check("arc-regular", is_arc_regular(g, grp),
               std::to_string(grp.order()) + " elements, " + std::to_string(arcs(g).size()) +
                   " arcs")) {
    return v;
  }
  require_automorphism_action(g, h);
  v.check("H acts by graph automorphisms", true, "|H| = " + std::to_string(h.order()));
  bool contained = std::all_of(grp.realizations().begin(), grp.realizations().end(),
                               [&](const Permutation& p) { return h.find(p).has_value(); });
  if (!v.check("G <= H", contained)) return v;

  bool pairs = true;
  std::string first_bad;
  for (Vertex x = 0; x < g.vertex_count() && pairs; ++x) {
    auto gl = local_action(grp, g, x);
    auto hl = local_action(h, g, x);
    bool ok = false;
    try {
      ok = is_complete_colour_pair(gl, hl).kind == VerdictKind::pair_yes;
    } catch (const std::invalid_argument& e) {
      first_bad = e.what();
    }
    if (!ok) {
      pairs = false;
      first_bad = "vertex " + std::to_string(x) + (first_bad.empty() ? "" : ": " + first_bad);
    }
  }
  if (!v.check("local complete colour pair at every vertex", pairs, first_bad)) return v;
  v.kind = VerdictKind::hypotheses_ok;

  Arc b = base ? *base : arcs(g).front();
  auto labeling = arc_labeling(g, grp, b);
  auto form = line_subdivision_cayley_form(labeling);
  std::size_t transported = 0;
  for (ElemId x = 0; x < h.order(); ++x) {
    auto induced = induced_vertex_map(h.realization(x), labeling);
    if (!is_colour_preserving(form.cayley.graph, induced)) {
      throw InternalInconsistency("hypotheses hold but " + h.name(x) +
                                  " does not transport to a colour-preserving map");
    }
    ++transported;
  }
  v.check("conclusion: transported H is colour-preserving on the Cayley form", true,
          std::to_string(transported) + " transported automorphisms");
  v.subject = std::move(form.cayley);
  return v;
}

}  // namespace cca
