#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "cca/automorphism_search.hpp"
#include "cca/cayley_graph.hpp"
#include "cca/coloured_graph.hpp"
#include "cca/constructions.hpp"
#include "cca/errors.hpp"

using namespace cca;

namespace {

// Every permutation of the vertex set, kept when each edge maps to an edge of
// the same colour. Only usable for small graphs.
std::vector<Permutation> brute_colour_automorphisms(const ColouredGraph& g) {
  std::vector<Point> images(g.vertex_count());
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if (g.colour(images[e.u], images[e.v]) != e.colour) {
        ok = false;
        break;
      }
    }
    if (ok) out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<Permutation> sorted(std::vector<Permutation> v) {
  std::sort(v.begin(), v.end());
  return v;
}

ElemId find_name(const FiniteGroup& g, const std::string& name) {
  for (ElemId a = 0; a < g.order(); ++a) {
    if (g.name(a) == name) return a;
  }
  throw std::runtime_error("no element " + name);
}

}  // namespace

TEST_CASE("coloured graph rejects malformed edges") {
  CHECK_THROWS_AS(ColouredGraph(3, {{0, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(ColouredGraph(3, {{0, 3, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(ColouredGraph(3, {{0, 1, 0}, {1, 0, 0}}), std::invalid_argument);
  ColouredGraph g(3, {{0, 1, 0}, {1, 2, 1}});
  CHECK(g.colour(1, 0) == 0);
  CHECK(g.colour(0, 2) == kNoEdge);
  CHECK(g.degree(1) == 2);
  CHECK(is_connected(g));
  CHECK_FALSE(is_connected(ColouredGraph(3, {{0, 1, 0}})));
}

TEST_CASE("complete colour graphs have one colour per inverse class") {
  CHECK(complete_colour_graph(cyclic(4)).graph.colour_ids().size() == 2);
  CHECK(complete_colour_graph(cyclic(7)).graph.colour_ids().size() == 3);
  CHECK(complete_colour_graph(quaternion()).graph.colour_ids().size() == 4);
  CHECK(complete_colour_graph(elementary_abelian_2(3)).graph.colour_ids().size() == 7);
  auto k = complete_colour_graph(dihedral(4));
  CHECK(k.graph.edge_count() == 8 * 7 / 2);
}

TEST_CASE("cayley graph validates the connection set") {
  auto g = cyclic(6);
  CHECK_THROWS_AS(cayley_graph(g, {0}), std::invalid_argument);
  CHECK_THROWS_AS(cayley_graph(g, {1}), std::invalid_argument);
  CHECK_THROWS_AS(cayley_graph(g, {17}), std::invalid_argument);
  auto cg = cayley_graph(g, inverse_closure(g, std::vector<ElemId>{1}));
  CHECK(cg.graph.edge_count() == 6);
  CHECK(cg.graph.colour_ids().size() == 1);
  for (Vertex v = 0; v < 6; ++v) CHECK(cg.graph.degree(v) == 2);
}

TEST_CASE("cayley graph of C3 x D3 with three connection elements") {
  auto g = direct_product(cyclic(3), dihedral(3));
  ElemId r1 = find_name(g, "r1"), r2 = find_name(g, "r2"), s2 = find_name(g, "s2");
  auto cg = cayley_graph(g, inverse_closure(g, std::vector<ElemId>{g.mul(r1, r2), s2}));
  CHECK(cg.graph.vertex_count() == 18);
  CHECK(cg.graph.edge_count() == 27);
  CHECK(cg.graph.colour_ids().size() == 2);
  CHECK(is_connected(cg.graph));
}

TEST_CASE("subdivision and line graph of K3,3") {
  auto k = complete_bipartite(3, 3);
  CHECK(k.vertex_count() == 6);
  CHECK(k.edge_count() == 9);
  auto s = subdivision(k);
  CHECK(s.graph.vertex_count() == 15);
  CHECK(s.graph.edge_count() == 18);
  for (Vertex v = 0; v < 6; ++v) {
    CHECK_FALSE(s.origin[v].midpoint);
    CHECK(s.graph.degree(v) == 3);
  }
  for (Vertex v = 6; v < 15; ++v) {
    CHECK(s.origin[v].midpoint);
    CHECK(s.graph.degree(v) == 2);
  }
  auto l = line_graph(s.graph);
  CHECK(l.graph.vertex_count() == 18);
  CHECK(l.graph.edge_count() == 27);
  for (Vertex v = 0; v < 18; ++v) CHECK(l.graph.degree(v) == 3);
  CHECK(arcs(k).size() == 18);
}

TEST_CASE("automorphism search matches the brute-force oracle") {
  std::vector<CayleyColouredGraph> graphs;
  auto add = [&](const FiniteGroup& g, std::vector<ElemId> c) {
    graphs.push_back(cayley_graph(g, inverse_closure(g, c)));
  };
  auto gens = [](const FiniteGroup& g) { return g.generator_elements(); };
  add(cyclic(5), {1});
  add(cyclic(5), {1, 2});
  add(cyclic(6), {1});
  add(cyclic(6), {1, 2, 3});
  add(dihedral(3), gens(dihedral(3)));
  {
    auto d4 = dihedral(4);
    auto c = gens(d4);
    c.push_back(d4.mul(c[0], c[1]));
    add(d4, c);
  }
  add(elementary_abelian_2(3), gens(elementary_abelian_2(3)));
  add(quaternion(), gens(quaternion()));
  graphs.push_back(complete_colour_graph(cyclic(6)));
  graphs.push_back(complete_colour_graph(quaternion()));
  for (const auto& cg : graphs) {
    auto fast = colour_preserving_automorphisms(cg.graph);
    auto slow = sorted(brute_colour_automorphisms(cg.graph));
    CHECK(sorted(fast.elements) == slow);
    for (const auto& p : fast.elements) CHECK(is_colour_preserving(cg.graph, p));
    auto stab = colour_preserving_automorphisms(cg.graph, {.fix_root = true});
    CHECK(stab.elements.size() * cg.group.order() == slow.size());
  }
}

TEST_CASE("small automorphism group orders") {
  auto k3 = complete_colour_graph(cyclic(3));
  CHECK(colour_preserving_automorphisms(k3.graph).elements.size() == 6);
  auto hexagon = cayley_graph(cyclic(6), {1, 5});
  CHECK(colour_preserving_automorphisms(hexagon.graph).elements.size() == 12);
  auto c2cubed = elementary_abelian_2(3);
  auto cube = cayley_graph(c2cubed, c2cubed.generator_elements());
  // Three colours pin the directions: only translations survive.
  CHECK(colour_preserving_automorphisms(cube.graph).elements.size() == 8);
  CHECK_THROWS_AS(colour_preserving_automorphisms(k3.graph, {.max_results = 2}), CapExceeded);
}

TEST_CASE("generating subset regenerates the group") {
  auto a = colour_preserving_automorphisms(complete_colour_graph(quaternion()).graph).elements;
  auto gens = generating_subset(a);
  CHECK(gens.size() < a.size());
  CHECK(closure(gens, a.size()).order() == a.size());
}

TEST_CASE("search refuses disconnected graphs") {
  ColouredGraph g(4, {{0, 1, 0}, {2, 3, 0}});
  CHECK_THROWS_AS(colour_preserving_automorphisms(g), std::invalid_argument);
}

TEST_CASE("dot output names every vertex and edge") {
  auto cg = cayley_graph(cyclic(4), {1, 3});
  auto labels = element_labels(cg.group);
  auto dot = to_dot(cg.graph, labels, "C4");
  CHECK(dot.find("graph \"C4\"") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '\n') >= 4 + 4);
  CHECK(dot.find("--") != std::string::npos);
}

TEST_CASE("automorphism sets are groups") {
  for (const auto& g : {cyclic(8), dihedral(4), quaternion()}) {
    auto cg = cayley_graph(g, inverse_closure(g, g.generator_elements()));
    auto elems = colour_preserving_automorphisms(cg.graph).elements;
    std::set<Permutation> set(elems.begin(), elems.end());
    CHECK(set.count(Permutation::identity(g.order())) == 1);
    for (const auto& p : elems) {
      CHECK(set.count(p.inverse()) == 1);
      for (const auto& q : elems) CHECK(set.count(p * q) == 1);
    }
    for (ElemId x = 0; x < g.order(); ++x) CHECK(set.count(left_translation(g, x)) == 1);
  }
}
