#include "cca/knn_lab.hpp"

#include <algorithm>
#include <stdexcept>

#include "cca/affine.hpp"
#include "cca/automorphism_search.hpp"
#include "cca/cayley_graph.hpp"
#include "cca/cca_check.hpp"
#include "cca/colour_pair.hpp"
#include "cca/constructions.hpp"
#include "cca/errors.hpp"
#include "cca/isomorphism.hpp"

namespace cca {
namespace {

long mod(long x, long n) { return ((x % n) + n) % n; }

Permutation power(const Permutation& p, long k) {
  const long ord = static_cast<long>(p.order());
  k = mod(k, ord);
  Permutation out = Permutation::identity(p.degree());
  for (long i = 0; i < k; ++i) out = out * p;
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InternalInconsistency(what);
}

// Raises a stage failure with the stage name attached.
template <typename F>
auto stage(const std::string& name, F&& f) {
  try {
    return f();
  } catch (const CapExceeded&) {
    throw;
  } catch (const std::exception& e) {
    throw InternalInconsistency("stage '" + name + "' failed: " + e.what());
  }
}

bool moves_only(const Permutation& p, Point lo, Point hi) {
  for (Point x = 0; x < p.degree(); ++x) {
    if ((x < lo || x >= hi) && p(x) != x) return false;
  }
  return true;
}

}  // namespace

Point KnnActors::a(long i) const { return static_cast<Point>(mod(i, static_cast<long>(n))); }
Point KnnActors::b(long i) const {
  return static_cast<Point>(n + mod(i, static_cast<long>(n)));
}

ElemId element_of(const FiniteGroup& g, const Permutation& p) {
  auto x = g.find(p);
  if (!x) throw std::invalid_argument("permutation " + p.to_string() + " is not in the group");
  return *x;
}

KnnActors knn_actors(std::size_t n, std::size_t cap) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("K_{n,n} actors need odd n >= 3, got " + std::to_string(n));
  }
  KnnActors k;
  k.n = n;
  const std::size_t deg = 2 * n;
  std::vector<Point> r1(deg), r2(deg), t(deg), s1(deg), s2(deg);
  for (std::size_t p = 0; p < deg; ++p) r1[p] = r2[p] = s1[p] = s2[p] = static_cast<Point>(p);
  const long ln = static_cast<long>(n);
  for (long i = 0; i < ln; ++i) {
    r1[k.a(i)] = k.a(i + 1);
    r2[k.b(i)] = k.b(i + 1);
    t[k.a(i)] = k.b(i);
    t[k.b(i)] = k.a(i);
    s1[k.a(i)] = k.a(-i);
    s2[k.b(i)] = k.b(-i);
  }
  k.rho1 = Permutation(r1);
  k.rho2 = Permutation(r2);
  k.tau = Permutation(t);
  k.sigma1 = Permutation(s1);
  k.sigma2 = Permutation(s2);
  k.graph = complete_bipartite(n, n);

  const Point half = static_cast<Point>(n);
  require(moves_only(k.rho1, 0, half) && k.rho1.order() == n, "rho1 is not an n-cycle on A");
  require(moves_only(k.rho2, half, 2 * half) && k.rho2.order() == n,
          "rho2 is not an n-cycle on B");
  for (Point x = 0; x < deg; ++x) require((k.tau(x) < half) != (x < half), "tau fixes a part");
  const auto r12 = k.rho1 * k.rho2;
  require(k.tau * r12 == r12 * k.tau, "tau does not commute with rho1 rho2");
  require(k.tau * k.rho1 * k.tau == k.rho2, "tau rho1 tau != rho2");
  require(moves_only(k.sigma1, 0, half) && k.sigma1 * k.rho1 * k.sigma1 == k.rho1.inverse(),
          "sigma1 does not invert rho1 while fixing B");
  require(moves_only(k.sigma2, half, 2 * half) &&
              k.sigma2 * k.rho2 * k.sigma2 == k.rho2.inverse(),
          "sigma2 does not invert rho2 while fixing A");
  require((k.rho2 * k.rho2).order() == n, "<rho2^2> != <rho2>");

  std::vector<Permutation> gg{k.rho1, k.rho2, k.tau};
  k.G = closure(gg, cap, {"rho1", "rho2", "tau"});
  std::vector<Permutation> hh{k.rho1, k.rho2, k.tau, k.sigma1, k.sigma2};
  k.H = closure(hh, cap, {"rho1", "rho2", "tau", "sigma1", "sigma2"});
  require(k.G.order() == 2 * n * n, "|G| != 2n^2");
  require(k.H.order() == 8 * n * n, "|H| != 8n^2");
  require(are_isomorphic(k.G, direct_product(cyclic(n), dihedral(n), cap)).has_value(),
          "G is not isomorphic to C_n x D_2n");
  require(are_isomorphic(k.H, wreath_c2(dihedral(n), cap)).has_value(),
          "H is not isomorphic to D_2n wr C2");
  return k;
}

ArcLabeling knn_arc_labeling(const KnnActors& k) {
  std::vector<Point> fixed_b;
  for (long i = 0; i < static_cast<long>(k.n); ++i) {
    if (k.sigma2(k.b(i)) == k.b(i)) fixed_b.push_back(k.b(i));
  }
  require(fixed_b.size() == 1 && fixed_b[0] == k.b(0), "sigma2 must fix exactly b0 in B");
  const Point v = fixed_b[0];
  return arc_labeling(k.graph, k.G, {k.tau(v), v});
}

LineSubdivisionForm knn_cayley_form(const KnnActors& k, const ArcLabeling& labeling) {
  auto form = line_subdivision_cayley_form(labeling);
  std::vector<ElemId> expected{element_of(k.G, k.tau)};
  for (long i = 1; i < static_cast<long>(k.n); ++i) {
    expected.push_back(element_of(k.G, power(k.rho2, i)));
  }
  std::sort(expected.begin(), expected.end());
  require(form.connection == expected,
          "connection set read off the line graph is not {tau} ∪ {rho2^i}");
  return form;
}

Verdict theorem_3_1_witness(std::size_t n, std::size_t cap) {
  Verdict v;
  auto k = stage("actors", [&] { return knn_actors(n, cap); });
  v.check("actors", true,
          "|G| = " + std::to_string(k.G.order()) + ", |H| = " + std::to_string(k.H.order()));
  stage("arc-regular", [&] {
    require(is_arc_regular(k.graph, k.G), "G is not arc-regular on K_{n,n}");
    return 0;
  });
  v.check("G arc-regular on K_{n,n}", true);

  stage("local pairs", [&] {
    for (Vertex x = 0; x < k.graph.vertex_count(); ++x) {
      auto gl = local_action(k.G, k.graph, x);
      auto hl = local_action(k.H, k.graph, x);
      require(are_isomorphic(gl, cyclic(n)).has_value(), "local G is not C_n");
      require(are_isomorphic(hl, dihedral(n)).has_value(), "local H is not D_2n");
      auto pair = is_complete_colour_pair(gl, hl);
      require(pair.kind == VerdictKind::pair_yes && pair.checks.size() > 3 &&
                  pair.checks[2].pass,
              "local pair is not a complete colour pair through the abelian case");
    }
    return 0;
  });
  v.check("(C_n, D_2n) complete colour pair at every vertex", true);

  auto harness = stage("harness", [&] {
    auto h = corollary_4_10_harness(k.graph, k.G, k.H, Arc{k.a(0), k.b(0)});
    require(h.kind == VerdictKind::hypotheses_ok, "harness hypotheses failed");
    return h;
  });
  v.check("harness: hypotheses hold and H transports to colour-preserving maps", true,
          harness.checks.back().detail);

  auto labeling = stage("labeling", [&] { return knn_arc_labeling(k); });
  v.check("arc labeling with base (tau(b0), b0)", true);
  auto form = stage("cayley form", [&] { return knn_cayley_form(k, labeling); });
  v.check("L(S(K_{n,n})) = Cay(G, {tau} ∪ {rho2^i})", true,
          "|C| = " + std::to_string(form.connection.size()));

  auto induced = stage("transport", [&] { return induced_vertex_map(k.sigma2, labeling); });
  const auto& cg = form.cayley;
  stage("sigma2 colour-preserving", [&] {
    require(is_colour_preserving(cg.graph, induced), "induced sigma2 is not colour-preserving");
    return 0;
  });
  v.check("induced sigma2 colour-preserving", true);
  stage("sigma2 non-affine", [&] {
    require(induced(k.G.identity()) == k.G.identity(), "induced sigma2 moves e");
    require(!is_affine(k.G, induced).affine, "induced sigma2 is affine");
    return 0;
  });
  v.check("induced sigma2 non-affine", true);

  stage("probe", [&] {
    const auto conj = k.sigma2 * k.tau * k.sigma2;
    const Arc base{k.a(0), k.b(0)};
    auto act = [](const Permutation& p, const Arc& a) { return Arc{p(a.tail), p(a.head)}; };
    require(act(conj, base) == act(k.tau, base), "sigma2 tau sigma2 and tau differ on the base arc");
    require(act(k.tau, base) == Arc{base.head, base.tail}, "tau does not reverse the base arc");
    require(conj != k.tau, "sigma2 tau sigma2 equals tau");
    return 0;
  });
  v.check("sigma2 tau sigma2 agrees with tau on the base arc but differs as a permutation", true);

  auto graph_verdict = stage("engine", [&] { return is_cca_graph(cg); });
  stage("engine agrees", [&] {
    require(graph_verdict.kind == VerdictKind::non_cca, "generic check says CCA");
    return 0;
  });
  v.check("generic CCA check on the Cayley form", true, "non-CCA");
  v.stats = graph_verdict.stats;

  v.kind = VerdictKind::non_cca;
  v.witness = induced;
  v.subject = cg;
  return v;
}

Permutation gamma(const KnnActors& k) {
  const auto g = k.sigma1 * k.sigma2 * k.tau;
  const auto r12 = k.rho1 * k.rho2;
  const auto r1r2 = k.rho1.inverse() * k.rho2;
  require((g * g).is_identity(), "gamma^2 != e");
  require(g * k.tau == k.tau * g, "gamma does not commute with tau");
  require(g * r1r2 * g == r1r2, "gamma does not commute with rho1^-1 rho2");
  require(g * r12 * g == r12.inverse(), "gamma does not invert rho1 rho2");
  for (long i = 0; i < static_cast<long>(k.n); ++i) {
    require(g(k.a(i)) == k.b(-i) && g(k.b(i)) == k.a(-i), "gamma is not a_i <-> b_{-i}");
  }
  std::vector<Permutation> gens{k.rho1, k.rho2, k.tau, g};
  auto grp = closure(gens, 4 * k.n * k.n);
  require(grp.order() == 4 * k.n * k.n, "|<G, gamma>| != 4n^2");
  require(are_isomorphic(grp, direct_product(dihedral(k.n), dihedral(k.n), 4 * k.n * k.n))
              .has_value(),
          "<G, gamma> is not D_2n x D_2n");
  return g;
}

NormalForm normal_form(const KnnActors& k, const Permutation& gamma, const Permutation& h) {
  if (h.degree() != 2 * k.n) throw std::invalid_argument("element has the wrong degree");
  const long n = static_cast<long>(k.n);
  auto index = [&](Point p) { return static_cast<long>(p) % n; };
  auto in_b = [&](Point p) { return p >= k.n; };
  NormalForm nf;
  nf.d = mod(index(h(k.a(1))) - index(h(k.a(0))), n) == n - 1 ? 1 : 0;
  const auto h1 = nf.d ? h * gamma : h;
  nf.e = in_b(h1(k.a(0))) ? 1 : 0;
  const auto h2 = nf.e ? h1 * k.tau : h1;
  nf.i1 = index(h2(k.a(0)));
  nf.i2 = index(h2(k.b(0)));
  if (assemble(k, gamma, nf) != h) {
    throw std::invalid_argument("permutation " + h.to_string() + " is outside <G, gamma>");
  }
  return nf;
}

Permutation assemble(const KnnActors& k, const Permutation& gamma, const NormalForm& nf) {
  auto out = power(k.rho1, nf.i1) * power(k.rho2, nf.i2);
  if (nf.e) out = out * k.tau;
  if (nf.d) out = out * gamma;
  return out;
}

bool rebasing_identity_holds(const KnnActors& k) {
  const long n = static_cast<long>(k.n);
  const long half = (n + 1) / 2;  // inverse of 2 mod odd n
  const auto r12 = k.rho1 * k.rho2;
  const auto r1r2 = k.rho1.inverse() * k.rho2;
  for (long a = 0; a < n; ++a) {
    for (long b = 0; b < n; ++b) {
      auto lhs = power(k.rho1, a) * power(k.rho2, b);
      auto rhs = power(r12, (a + b) * half) * power(r1r2, (b - a) * half);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

PhiMap phi(const KnnActors& k, const Permutation& gamma, std::size_t cap) {
  std::vector<Permutation> gens{k.rho1, k.rho2, k.tau, gamma};
  PhiMap out{closure(gens, cap, {"rho1", "rho2", "tau", "gamma"}), {}};
  const auto& grp = out.group;
  auto labeling = knn_arc_labeling(k);
  auto sigma = induced_vertex_map(k.sigma2, labeling);
  std::vector<Point> via_transport(grp.order()), via_form(grp.order());
  for (ElemId x = 0; x < grp.order(); ++x) {
    auto nf = normal_form(k, gamma, grp.realization(x));
    NormalForm g_part = nf;
    g_part.d = 0;
    ElemId g = element_of(k.G, assemble(k, gamma, g_part));
    auto image = k.G.realization(sigma(g));
    if (nf.d) image = image * gamma;
    via_transport[x] = element_of(grp, image);
    NormalForm flipped = nf;
    flipped.i2 = mod(-nf.i2, static_cast<long>(k.n));
    via_form[x] = element_of(grp, assemble(k, gamma, flipped));
  }
  require(via_transport == via_form, "phi by transport differs from phi by normal form");
  out.phi = Permutation(std::move(via_transport));
  return out;
}

Verdict proposition_3_3_witness(std::size_t n, std::size_t cap) {
  Verdict v;
  auto k = stage("actors", [&] { return knn_actors(n, cap); });
  v.check("actors", true);
  auto gam = stage("gamma", [&] { return gamma(k); });
  v.check("gamma relations and <G, gamma> ≅ D_2n x D_2n", true);
  stage("rebasing", [&] {
    require(rebasing_identity_holds(k), "rebasing identity fails");
    return 0;
  });
  v.check("rebasing identity for all exponent pairs", true);
  auto pm = stage("phi", [&] { return phi(k, gam, cap); });
  v.check("phi by transport equals phi by normal form", true);
  const auto& grp = pm.group;

  std::vector<ElemId> conn{element_of(grp, k.tau), element_of(grp, gam)};
  for (long i = 1; i < static_cast<long>(n); ++i) conn.push_back(element_of(grp, power(k.rho2, i)));
  auto cg = stage("cayley graph", [&] {
    auto c = cayley_graph(grp, conn);
    require(is_connected(c.graph), "Cay(<G, gamma>, C ∪ {gamma}) is disconnected");
    return c;
  });
  v.check("connected Cay(<G, gamma>, C ∪ {gamma})",
          true, std::to_string(grp.order()) + " vertices, |connection| = " +
                    std::to_string(cg.connection.size()));

  stage("coset colours", [&] {
    const ColourId gamma_colour = cg.graph.colour(grp.identity(), element_of(grp, gam));
    for (const Edge& e : cg.graph.edges()) {
      bool cross = normal_form(k, gam, grp.realization(e.u)).d !=
                   normal_form(k, gam, grp.realization(e.v)).d;
      require(cross == (e.colour == gamma_colour), "an edge between cosets is not coloured gamma");
    }
    return 0;
  });
  v.check("edges between G and G gamma carry the gamma colour", true);

  stage("phi colour-preserving", [&] {
    require(is_colour_preserving(cg.graph, pm.phi), "phi is not colour-preserving");
    return 0;
  });
  v.check("phi colour-preserving on every edge", true);
  stage("phi non-affine", [&] {
    auto labeling = knn_arc_labeling(k);
    auto sigma = induced_vertex_map(k.sigma2, labeling);
    for (ElemId x = 0; x < k.G.order(); ++x) {
      require(grp.realization(pm.phi(element_of(grp, k.G.realization(x)))) ==
                  k.G.realization(sigma(x)),
              "phi restricted to G differs from induced sigma2");
    }
    require(!normalizes_left_regular(k.G, sigma), "induced sigma2 normalizes Ĝ");
    require(!is_affine(grp, pm.phi).affine, "phi is affine");
    return 0;
  });
  v.check("phi non-affine (restriction to G and full test)", true);

  v.kind = VerdictKind::non_cca;
  v.witness = pm.phi;
  v.subject = std::move(cg);
  return v;
}

}  // namespace cca
