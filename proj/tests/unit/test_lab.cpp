#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "cca/affine.hpp"
#include "cca/arc_action.hpp"
#include "cca/automorphism_search.hpp"
#include "cca/constructions.hpp"
#include "cca/errors.hpp"
#include "cca/isomorphism.hpp"
#include "cca/knn_lab.hpp"

using namespace cca;

TEST_CASE("K_{n,n} actors") {
  auto k = knn_actors(3);
  CHECK(k.G.order() == 18);
  CHECK(k.H.order() == 72);
  CHECK(k.tau * k.rho1 * k.tau == k.rho2);
  CHECK(k.sigma2(k.b(0)) == k.b(0));
  for (long i = 0; i < 3; ++i) CHECK(k.sigma2(k.a(i)) == k.a(i));
  CHECK_THROWS_AS(knn_actors(4), std::invalid_argument);
  CHECK_THROWS_AS(knn_actors(1), std::invalid_argument);
  CHECK_THROWS_AS(knn_actors(9), CapExceeded);
  for (std::size_t n : {5, 7, 9}) {
    auto kn = knn_actors(n, 1024);
    CHECK(kn.H.order() == 8 * n * n);
  }
}

TEST_CASE("arc regularity") {
  auto k = knn_actors(3);
  CHECK(is_arc_regular(k.graph, k.G));
  CHECK(is_arc_regular(knn_actors(5).graph, knn_actors(5).G));
  std::vector<Permutation> rr{k.rho1, k.rho2};
  CHECK_FALSE(is_arc_regular(k.graph, closure(rr)));
  CHECK_FALSE(is_arc_regular(k.graph, k.H));

  ColouredGraph triangle(3, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}});
  std::vector<Permutation> rot{Permutation::from_cycles(3, {{0, 1, 2}})};
  CHECK_FALSE(is_arc_regular(triangle, closure(rot)));
  std::vector<Permutation> bad{Permutation::from_cycles(6, {{0, 3}})};
  CHECK_THROWS_AS(is_arc_regular(k.graph, closure(bad)), std::invalid_argument);
}

TEST_CASE("arc-regular action has exactly one transporter per arc pair") {
  auto k = knn_actors(3);
  auto all = arcs(k.graph);
  for (const auto& x : all) {
    for (const auto& y : all) {
      int count = 0;
      for (const auto& p : k.G.realizations()) {
        if (p(x.tail) == y.tail && p(x.head) == y.head) ++count;
      }
      CHECK(count == 1);
    }
  }
}

TEST_CASE("local actions") {
  auto k = knn_actors(3);
  auto gl = local_action(k.G, k.graph, k.b(0));
  auto hl = local_action(k.H, k.graph, k.b(0));
  CHECK(gl.order() == 3);
  CHECK(are_isomorphic(gl, cyclic(3)));
  CHECK(hl.order() == 6);
  CHECK(are_isomorphic(hl, dihedral(3)));
  auto cg = cayley_graph(cyclic(5), {1, 4});
  CHECK(local_action(left_regular(cyclic(5)), cg.graph, 2).order() == 1);
  CHECK_THROWS_AS(local_action(k.G, k.graph, 99), std::invalid_argument);
}

TEST_CASE("arc labeling") {
  auto k = knn_actors(3);
  auto lab = knn_arc_labeling(k);
  CHECK(lab.base == Arc{k.tau(k.b(0)), k.b(0)});
  CHECK(lab[lab.base] == k.G.identity());
  std::mt19937 rng(3);
  for (int t = 0; t < 5; ++t) {
    ElemId g = rng() % k.G.order();
    const auto& p = k.G.realization(g);
    CHECK(lab[{p(lab.base.tail), p(lab.base.head)}] == g);
  }
  std::set<ElemId> labels;
  for (const auto& [a, x] : lab.label) labels.insert(x);
  CHECK(labels.size() == 18);
}

TEST_CASE("Cayley form of L(S(K_{n,n}))") {
  auto k = knn_actors(3);
  auto form = knn_cayley_form(k, knn_arc_labeling(k));
  std::vector<ElemId> c{element_of(k.G, k.tau), element_of(k.G, k.rho2),
                        element_of(k.G, k.rho2 * k.rho2)};
  std::sort(c.begin(), c.end());
  CHECK(form.connection == c);
  for (Vertex v = 0; v < 18; ++v) CHECK(form.cayley.graph.degree(v) == 3);
  CHECK(form.cayley.graph.edge_count() == 27);
  CHECK(form.cayley.graph.colour_ids().size() == 2);

  auto k5 = knn_actors(5);
  auto form5 = knn_cayley_form(k5, knn_arc_labeling(k5));
  CHECK(form5.connection.size() == 5);
  CHECK(form5.cayley.graph.colour_ids().size() == 3);
}

TEST_CASE("induced vertex maps") {
  auto k = knn_actors(3);
  auto lab = knn_arc_labeling(k);
  auto form = knn_cayley_form(k, lab);
  CHECK(induced_vertex_map(k.rho2, lab) == left_translation(k.G, element_of(k.G, k.rho2)));
  for (ElemId g = 0; g < k.G.order(); ++g) {
    CHECK(induced_vertex_map(k.G.realization(g), lab) == left_translation(k.G, g));
  }
  auto s = induced_vertex_map(k.sigma2, lab);
  auto gam = gamma(k);
  for (ElemId g = 0; g < k.G.order(); ++g) {
    auto nf = normal_form(k, gam, k.G.realization(g));
    CHECK(nf.d == 0);
    NormalForm flipped = nf;
    flipped.i2 = (3 - nf.i2) % 3;
    CHECK(k.G.realization(s(g)) == assemble(k, gam, flipped));
  }
  CHECK(is_colour_preserving(form.cayley.graph, s));
  CHECK_FALSE(is_affine(k.G, s).affine);
  CHECK_THROWS_AS(induced_vertex_map(Permutation::from_cycles(6, {{0, 3}}), lab),
                  std::invalid_argument);
}

TEST_CASE("induced maps are functorial and colour-preserving for all of H") {
  auto k = knn_actors(3);
  auto lab = knn_arc_labeling(k);
  auto form = knn_cayley_form(k, lab);
  std::vector<Permutation> induced;
  for (const auto& h : k.H.realizations()) induced.push_back(induced_vertex_map(h, lab));
  for (ElemId x = 0; x < k.H.order(); ++x) {
    CHECK(is_colour_preserving(form.cayley.graph, induced[x]));
    for (ElemId y = 0; y < k.H.order(); ++y) {
      REQUIRE(induced[k.H.mul(x, y)] == induced[x] * induced[y]);
    }
  }
}

TEST_CASE("harness") {
  auto k = knn_actors(3);
  auto v = corollary_4_10_harness(k.graph, k.G, k.H);
  CHECK(v.kind == VerdictKind::hypotheses_ok);
  CHECK(v.all_checks_pass());
  CHECK(v.checks.back().detail == "72 transported automorphisms");

  auto k5 = knn_actors(5);
  auto v5 = corollary_4_10_harness(k5.graph, k5.G, k5.H, Arc{k5.a(0), k5.b(0)});
  CHECK(v5.kind == VerdictKind::hypotheses_ok);
  CHECK(v5.checks.back().detail == "200 transported automorphisms");

  ColouredGraph path(3, {{0, 1, 0}, {1, 2, 0}});
  std::vector<Permutation> id{Permutation::identity(3)};
  auto trivial = closure(id);
  CHECK(corollary_4_10_harness(path, trivial, trivial).kind == VerdictKind::hypotheses_fail);

  // H = G: B = C_n sits inside A0 = Dih(C_n), so the pair still holds.
  auto same = corollary_4_10_harness(k.graph, k.G, k.G);
  CHECK(same.kind == VerdictKind::hypotheses_ok);
}

TEST_CASE("theorem witness") {
  auto v = theorem_3_1_witness(3);
  CHECK(v.kind == VerdictKind::non_cca);
  REQUIRE(v.witness);
  CHECK(v.witness->degree() == 18);
  CHECK(v.all_checks_pass());
  CHECK(replay_witness(v));
  std::vector<Point> images(v.witness->images().begin(), v.witness->images().end());
  std::swap(images[1], images[2]);
  v.witness = Permutation(images);
  CHECK_FALSE(replay_witness(v));
  CHECK(theorem_3_1_witness(5).kind == VerdictKind::non_cca);
  CHECK(theorem_3_1_witness(7).subject->graph.vertex_count() == 98);
}

TEST_CASE("gamma") {
  auto k = knn_actors(3);
  auto g = gamma(k);
  for (long i = 0; i < 3; ++i) {
    CHECK(g(k.a(i)) == k.b(-i));
    CHECK(g(k.b(i)) == k.a(-i));
  }
  std::vector<Permutation> gens{k.rho1, k.rho2, k.tau, g};
  CHECK(closure(gens).order() == 36);
}

TEST_CASE("normal form") {
  for (std::size_t n : {3, 5}) {
    auto k = knn_actors(n);
    auto g = gamma(k);
    CHECK(normal_form(k, g, Permutation::identity(2 * n)) == NormalForm{});
    CHECK(normal_form(k, g, k.tau * g) == NormalForm{0, 0, 1, 1});
    std::vector<Permutation> gens{k.rho1, k.rho2, k.tau, g};
    auto grp = closure(gens);
    std::set<std::tuple<long, long, int, int>> seen;
    for (const auto& h : grp.realizations()) {
      auto nf = normal_form(k, g, h);
      CHECK(assemble(k, g, nf) == h);
      seen.insert({nf.i1, nf.i2, nf.e, nf.d});
    }
    CHECK(seen.size() == 4 * n * n);
    CHECK_THROWS_AS(normal_form(k, g, k.sigma1), std::invalid_argument);
    CHECK(rebasing_identity_holds(k));
  }
}

TEST_CASE("phi") {
  auto k = knn_actors(3);
  auto g = gamma(k);
  auto pm = phi(k, g);
  const auto& grp = pm.group;
  CHECK(pm.phi(grp.identity()) == grp.identity());
  CHECK(pm.phi(element_of(grp, k.rho2 * g)) == element_of(grp, k.rho2.inverse() * g));
  CHECK((pm.phi * pm.phi).is_identity());
}

TEST_CASE("proposition witness") {
  auto v = proposition_3_3_witness(3);
  CHECK(v.kind == VerdictKind::non_cca);
  REQUIRE(v.subject);
  CHECK(v.subject->graph.vertex_count() == 36);
  CHECK(v.subject->connection.size() == 4);
  CHECK(v.subject->graph.colour_ids().size() == 3);
  CHECK(replay_witness(v));
  auto v5 = proposition_3_3_witness(5);
  CHECK(v5.subject->graph.vertex_count() == 100);
  CHECK(replay_witness(v5));
}
