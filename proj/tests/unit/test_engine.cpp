#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "cca/affine.hpp"
#include "cca/automorphism_search.hpp"
#include "cca/cayley_graph.hpp"
#include "cca/cca_check.hpp"
#include "cca/colour_pair.hpp"
#include "cca/constructions.hpp"
#include "cca/errors.hpp"
#include "cca/isomorphism.hpp"
#include "cca/verdict.hpp"

using namespace cca;

namespace {

// p is affine iff x -> p(e)^-1 p(x) is multiplicative.
bool brute_affine(const FiniteGroup& g, const Permutation& p) {
  ElemId shift = g.inv(p(0));
  auto alpha = [&](ElemId x) { return g.mul(shift, p(x)); };
  for (ElemId x = 0; x < g.order(); ++x) {
    for (ElemId y = 0; y < g.order(); ++y) {
      if (alpha(g.mul(x, y)) != g.mul(alpha(x), alpha(y))) return false;
    }
  }
  return true;
}

std::vector<FiniteGroup> small_groups() {
  std::vector<FiniteGroup> out;
  out.push_back(cyclic(5));
  out.push_back(cyclic(6));
  out.push_back(dihedral(3));
  out.push_back(dihedral(4));
  out.push_back(quaternion());
  out.push_back(elementary_abelian_2(3));
  out.push_back(direct_product(cyclic(2), cyclic(4)));
  return out;
}

FiniteGroup colour_automorphism_group(const FiniteGroup& g) {
  return closure(complete_colour_automorphisms(g));
}

}  // namespace

TEST_CASE("affine test agrees with the brute-force oracle") {
  std::mt19937 rng(7);
  for (const auto& g : small_groups()) {
    auto autos = colour_preserving_automorphisms(complete_colour_graph(g).graph).elements;
    for (const auto& p : autos) {
      auto r = is_affine(g, p);
      CHECK(r.affine == brute_affine(g, p));
      CHECK(r.affine == normalizes_left_regular(g, p));
    }
    std::vector<Point> images(g.order());
    for (int trial = 0; trial < 40; ++trial) {
      for (Point i = 0; i < images.size(); ++i) images[i] = i;
      std::shuffle(images.begin(), images.end(), rng);
      Permutation p(images);
      CHECK(is_affine(g, p).affine == brute_affine(g, p));
    }
  }
}

TEST_CASE("affine decomposition recomposes the map") {
  auto g = dihedral(5);
  for (const auto& alpha : automorphisms(g)) {
    for (ElemId t = 0; t < g.order(); ++t) {
      std::vector<Point> images(g.order());
      for (ElemId x = 0; x < g.order(); ++x) images[x] = g.mul(t, alpha[x]);
      auto d = affine_decomposition(g, Permutation(images));
      REQUIRE(d);
      CHECK(d->translation == t);
      CHECK(d->automorphism == alpha);
    }
  }
}

TEST_CASE("cyclic groups of small order are CCA") {
  for (std::size_t n = 3; n <= 8; ++n) {
    auto v = is_cca_group(cyclic(n));
    CHECK(v.kind == VerdictKind::cca);
    CHECK_FALSE(v.witness);
  }
}

TEST_CASE("the complete colour graph of Q8 is not CCA") {
  auto cg = complete_colour_graph(quaternion());
  auto v = is_cca_graph(cg);
  CHECK(v.kind == VerdictKind::non_cca);
  REQUIRE(v.witness);
  CHECK(replay_witness(v));
  CHECK_FALSE(brute_affine(cg.group, *v.witness));
  CHECK(is_colour_preserving(cg.graph, *v.witness));
  CHECK(is_cca_group(quaternion()).kind == VerdictKind::non_cca);
}

TEST_CASE("replay rejects a tampered witness") {
  auto v = is_cca_graph(complete_colour_graph(quaternion()));
  REQUIRE(v.witness);
  v.witness = Permutation::identity(8);
  CHECK_FALSE(replay_witness(v));
  Verdict empty;
  CHECK_THROWS_AS(replay_witness(empty), std::invalid_argument);
}

TEST_CASE("cca check refuses disconnected Cayley graphs") {
  auto g = cyclic(6);
  CHECK_THROWS_AS(is_cca_graph(cayley_graph(g, {3})), std::invalid_argument);
}

TEST_CASE("verdict kinds round-trip through strings") {
  for (auto k : {VerdictKind::cca, VerdictKind::non_cca, VerdictKind::pair_yes,
                 VerdictKind::pair_no, VerdictKind::hypotheses_ok, VerdictKind::hypotheses_fail,
                 VerdictKind::unknown_cap}) {
    CHECK(verdict_kind_from_string(to_string(k)) == k);
  }
  CHECK_FALSE(verdict_kind_from_string("maybe"));
}

TEST_CASE("colour pairs on the three admissible shapes") {
  for (std::size_t n : {3, 4, 5, 6}) {
    auto g = left_regular(cyclic(n));
    auto v = is_complete_colour_pair(g, colour_automorphism_group(g));
    CHECK(v.kind == VerdictKind::pair_yes);
  }
  auto q = left_regular(quaternion());
  auto a0 = colour_automorphism_group(q);
  CHECK(a0.order() == 64);
  CHECK(is_complete_colour_pair(q, a0).kind == VerdictKind::pair_yes);

  auto dic = left_regular(generalized_dicyclic(cyclic(6), 3));
  CHECK(is_complete_colour_pair(dic, colour_automorphism_group(dic)).kind ==
        VerdictKind::pair_yes);
}

TEST_CASE("colour pairs fail outside the admissible shapes") {
  auto d = left_regular(dihedral(3));
  CHECK(is_complete_colour_pair(d, colour_automorphism_group(d)).kind == VerdictKind::pair_no);
  auto v4 = left_regular(elementary_abelian_2(2));
  CHECK(is_complete_colour_pair(v4, colour_automorphism_group(v4)).kind == VerdictKind::pair_no);
  // B outside A0.
  auto c4 = left_regular(cyclic(4));
  auto sym = closure(std::vector<Permutation>{Permutation::from_cycles(4, {{0, 1}}),
                                              Permutation::from_cycles(4, {{0, 1, 2, 3}})});
  auto v = is_complete_colour_pair(c4, sym);
  CHECK(v.kind == VerdictKind::pair_no);
  CHECK_THROWS_AS(is_complete_colour_pair(left_regular(cyclic(2)), left_regular(cyclic(2))),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_complete_colour_pair(cyclic(4), cyclic(4)), std::invalid_argument);
}

TEST_CASE("dicyclic and quaternion sigmas") {
  auto q = quaternion();
  auto sig = quaternion_sigmas(q);
  CHECK(sig.size() == 3);
  for (const auto& s : sig) {
    CHECK(s.order() == 2);
    CHECK_FALSE(brute_affine(q, s));
  }
  CHECK_THROWS_AS(quaternion_sigmas(cyclic(4)), std::invalid_argument);
}

TEST_CASE("abstract B is realized over the left-regular action") {
  auto g = cyclic(5);
  auto b = realize_over_left_regular(g, dihedral(5));
  REQUIRE(b);
  CHECK(b->order() == 10);
  CHECK(is_complete_colour_pair(left_regular(g), *b).kind == VerdictKind::pair_yes);
  CHECK_FALSE(realize_over_left_regular(g, cyclic(10)));
}
