#include "cca/runner.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <future>
#include <set>
#include <stdexcept>

#include "cca/arc_action.hpp"
#include "cca/cayley_graph.hpp"
#include "cca/cca_check.hpp"
#include "cca/colour_pair.hpp"
#include "cca/constructions.hpp"
#include "cca/errors.hpp"
#include "cca/isomorphism.hpp"
#include "cca/knn_lab.hpp"

namespace cca {

using nlohmann::json;

namespace {

FiniteGroup wrap(Location loc, const std::function<FiniteGroup()>& build) {
  try {
    return build();
  } catch (const CapExceeded&) {
    throw;
  } catch (const SourceError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SourceError(loc, e.what());
  }
}

std::string connection_names(const FiniteGroup& g, const std::vector<ElemId>& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + g.name(c[i]);
  return s + "}";
}

std::string dot_name(std::string s) {
  for (char& c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
  }
  return s;
}

void add_dot(Report& r, const CayleyColouredGraph& cg, const std::string& name) {
  auto labels = element_labels(cg.group);
  r.dots.emplace_back(name, to_dot(cg.graph, labels, name));
}

std::set<std::string> referenced_names(const Expr& e) {
  std::set<std::string> out;
  if (e.kind == ExprKind::ref) out.insert(e.name);
  for (const auto& a : e.args) {
    auto sub = referenced_names(*a);
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

Report cap_report(const std::string& task, const CapExceeded& e) {
  Report r;
  r.task = task;
  r.verdict.kind = VerdictKind::unknown_cap;
  r.verdict.check("within order cap", false, e.what());
  return r;
}

}  // namespace

FiniteGroup elaborate(const Expr& e, const GroupEnv& env, std::size_t cap) {
  auto need_abelian = [&](const FiniteGroup& a, const char* what) {
    if (!a.is_abelian()) throw SourceError(e.loc, std::string(what) + " needs an abelian group");
  };
  switch (e.kind) {
    case ExprKind::cyclic:
      if (e.n < 1) throw SourceError(e.loc, "C(n) needs n >= 1");
      if (static_cast<std::size_t>(e.n) > cap) throw CapExceeded("group order", cap);
      return cyclic(static_cast<std::size_t>(e.n));
    case ExprKind::dihedral:
      if (e.n < 3) throw SourceError(e.loc, "D(n) needs n >= 3");
      if (2 * static_cast<std::size_t>(e.n) > cap) throw CapExceeded("group order", cap);
      return dihedral(static_cast<std::size_t>(e.n));
    case ExprKind::quaternion:
      return quaternion();
    case ExprKind::dih: {
      auto a = elaborate(*e.args[0], env, cap);
      need_abelian(a, "Dih");
      return wrap(e.loc, [&] { return generalized_dihedral(a, cap); });
    }
    case ExprKind::dic: {
      auto a = elaborate(*e.args[0], env, cap);
      need_abelian(a, "Dic");
      ElemId y = evaluate_word(e.word, a, e.loc);
      return wrap(e.loc, [&] { return generalized_dicyclic(a, y, cap); });
    }
    case ExprKind::product: {
      auto l = elaborate(*e.args[0], env, cap);
      auto r = elaborate(*e.args[1], env, cap);
      return wrap(e.loc, [&] { return direct_product(l, r, cap); });
    }
    case ExprKind::wreath: {
      auto g = elaborate(*e.args[0], env, cap);
      return wrap(e.loc, [&] { return wreath_c2(g, cap); });
    }
    case ExprKind::perm: {
      std::size_t degree = e.perm_degree.value_or(0);
      if (!e.perm_degree) {
        degree = 1;
        for (const auto& gen : e.perm_cycles) {
          for (const auto& c : gen) {
            for (Point p : c) degree = std::max<std::size_t>(degree, p + 1);
          }
        }
      }
      std::vector<Permutation> gens;
      for (const auto& gen : e.perm_cycles) {
        try {
          gens.push_back(Permutation::from_cycles(degree, gen));
        } catch (const std::invalid_argument& ex) {
          throw SourceError(e.loc, ex.what());
        }
      }
      return wrap(e.loc, [&] { return closure(gens, cap); });
    }
    case ExprKind::ref: {
      auto it = env.find(e.name);
      if (it == env.end()) throw SourceError(e.loc, "unknown group name '" + e.name + "'");
      return it->second;
    }
  }
  throw SourceError(e.loc, "unsupported expression");
}

ElemId evaluate_word(const Word& w, const FiniteGroup& g, Location loc) {
  ElemId out = g.identity();
  for (const auto& f : w) {
    auto gen = g.generator(f.name);
    if (!gen) {
      std::string names;
      for (const auto& ng : g.generators()) names += (names.empty() ? "" : ", ") + ng.name;
      throw SourceError(loc, "no generator '" + f.name + "' (generators: " + names + ")");
    }
    out = g.mul(out, g.pow(*gen, f.power));
  }
  return out;
}

std::vector<ElemId> elaborate_connection(const Connection& c, const FiniteGroup& g) {
  std::vector<ElemId> elems;
  for (const auto& w : c.words) elems.push_back(evaluate_word(w, g, c.loc));
  if (c.plus_inv) elems = inverse_closure(g, elems);
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  for (ElemId x : elems) {
    if (x == g.identity()) throw SourceError(c.loc, "connection set contains the identity");
    if (!std::binary_search(elems.begin(), elems.end(), g.inv(x))) {
      throw SourceError(c.loc, "connection set is not inverse-closed (missing inverse of " +
                                   g.name(x) + "); append +inv");
    }
  }
  if (!g.generates(elems)) {
    throw SourceError(c.loc, "connection set does not generate the group: Cayley graph is disconnected");
  }
  return elems;
}

std::vector<std::pair<std::string, FiniteGroup>> census_catalogue(long lo, long hi,
                                                                  std::size_t cap) {
  std::vector<std::string> candidates;
  auto in_range = [&](long order) { return order >= lo && order <= hi; };
  struct Base {
    std::string text;
    long order;
  };
  std::vector<Base> bases;
  for (long n = 1; n <= hi; ++n) {
    if (in_range(n)) candidates.push_back("C(" + std::to_string(n) + ")");
    if (n >= 2) bases.push_back({"C(" + std::to_string(n) + ")", n});
  }
  for (long n = 3; 2 * n <= hi; ++n) {
    if (in_range(2 * n)) candidates.push_back("D(" + std::to_string(n) + ")");
    bases.push_back({"D(" + std::to_string(n) + ")", 2 * n});
  }
  if (hi >= 8) bases.push_back({"Q8", 8});
  if (in_range(8)) candidates.push_back("Q8");
  for (long m = 3; 4 * m <= hi; ++m) {
    if (in_range(4 * m)) {
      candidates.push_back("Dic(C(" + std::to_string(2 * m) + "), r^" + std::to_string(m) + ")");
    }
  }
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i; j < bases.size(); ++j) {
      long order = bases[i].order * bases[j].order;
      if (in_range(order)) candidates.push_back(bases[i].text + " x " + bases[j].text);
      for (const auto& [extra, k] : {std::pair<const char*, long>{"C(2)", 2}, {"C(3)", 3},
                                     {"C(2) x C(2)", 4}}) {
        if (in_range(order * k)) candidates.push_back(bases[i].text + " x " + bases[j].text + " x " + extra);
      }
    }
  }
  for (long m = 2; 2 * m <= hi; ++m) {
    for (long k = 2; 2 * m * k <= hi; ++k) {
      if (in_range(2 * m * k)) {
        candidates.push_back("Dih(C(" + std::to_string(m) + ") x C(" + std::to_string(k) + "))");
      }
    }
  }
  for (long m = 2; 2 * m * m <= hi; ++m) {
    if (in_range(2 * m * m)) candidates.push_back("Wr2(C(" + std::to_string(m) + "))");
  }

  std::vector<std::pair<std::string, FiniteGroup>> out;
  for (const auto& text : candidates) {
    FiniteGroup g;
    try {
      g = elaborate(*parse_expr(text), {}, cap);
    } catch (const CapExceeded&) {
      continue;
    } catch (const SourceError&) {
      continue;
    }
    bool seen = std::any_of(out.begin(), out.end(), [&](const auto& entry) {
      return entry.second.order() == g.order() && are_isomorphic(entry.second, g).has_value();
    });
    if (!seen) out.emplace_back(text, std::move(g));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second.order() < b.second.order();
  });
  return out;
}

PreparedTask prepare(const Task& t, const GroupEnv& env, std::size_t cap) {
  PreparedTask p;
  p.task = t;
  for (const auto& e : t.exprs) p.groups.push_back(elaborate(*e, env, cap));
  if (t.connection) p.connection = elaborate_connection(*t.connection, p.groups[0]);
  if (t.command == Command::census) p.census = census_catalogue(t.lo, t.hi, cap);
  return p;
}

std::vector<Report> execute(const PreparedTask& p, const RunOptions& options) {
  const Task& t = p.task;
  const std::string echo = print_task(t);
  std::vector<Report> out;
  auto finish = [&](Report r) {
    if (r.verdict.witness) {
      if (!replay_witness(r.verdict)) {
        throw InternalInconsistency("witness for '" + r.task + "' does not replay");
      }
      if (options.verify && !replay_report(to_json(r, options.seedless))) {
        throw InternalInconsistency("serialized witness for '" + r.task + "' does not replay");
      }
    }
    out.push_back(std::move(r));
  };

  try {
    switch (t.command) {
      case Command::check_graph: {
        Report r;
        r.task = echo;
        auto cg = cayley_graph(p.groups[0], p.connection);
        r.verdict = is_cca_graph(cg);
        r.details["order"] = p.groups[0].order();
        r.details["connection"] = connection_names(p.groups[0], p.connection);
        add_dot(r, cg, "cayley");
        if (!r.verdict.subject) r.verdict.subject = std::move(cg);
        finish(std::move(r));
        break;
      }
      case Command::check_group: {
        Report r;
        r.task = echo;
        CcaGroupOptions opts;
        if (t.cap) opts.max_subsets = *t.cap;
        r.verdict = is_cca_group(p.groups[0], opts);
        r.details["order"] = p.groups[0].order();
        if (r.verdict.subject) {
          r.details["connection"] =
              connection_names(r.verdict.subject->group, r.verdict.subject->connection);
          add_dot(r, *r.verdict.subject, "witness_graph");
        }
        finish(std::move(r));
        break;
      }
      case Command::pair: {
        Report r;
        r.task = echo;
        const auto& g = p.groups[0];
        const auto& b = p.groups[1];
        bool given = g.has_realization() && b.has_realization() && g.degree() == g.order() &&
                     b.degree() == g.degree();
        if (given) {
          r.verdict = is_complete_colour_pair(g, b);
          r.details["realization"] = "as given";
        } else {
          auto gl = left_regular(g);
          auto realized = realize_over_left_regular(g, b);
          if (realized) {
            r.verdict = is_complete_colour_pair(gl, *realized);
            r.details["realization"] = "B realized as <Ĝ, S> with S in the identity stabilizer";
          } else {
            r.verdict.kind = VerdictKind::pair_no;
            r.verdict.check("B realized inside A0 over Ĝ", false,
                            "no subgroup of A0 containing Ĝ is isomorphic to B");
          }
        }
        r.details["order_G"] = g.order();
        r.details["order_B"] = b.order();
        finish(std::move(r));
        break;
      }
      case Command::witness_thm31:
      case Command::witness_prop33: {
        if (t.n < 3 || t.n % 2 == 0) {
          throw std::invalid_argument("n must be odd and at least 3");
        }
        Report r;
        r.task = echo;
        const auto n = static_cast<std::size_t>(t.n);
        r.verdict = t.command == Command::witness_thm31 ? theorem_3_1_witness(n, options.cap)
                                                        : proposition_3_3_witness(n, options.cap);
        const auto& cg = *r.verdict.subject;
        r.details["n"] = t.n;
        r.details["vertices"] = cg.graph.vertex_count();
        r.details["connection"] = connection_names(cg.group, cg.connection);
        add_dot(r, cg, t.command == Command::witness_thm31 ? "cay_G_C" : "cay_H_C_gamma");
        finish(std::move(r));
        break;
      }
      case Command::harness: {
        if (t.n < 3 || t.n % 2 == 0) throw std::invalid_argument("n must be odd and at least 3");
        Report r;
        r.task = echo;
        auto k = knn_actors(static_cast<std::size_t>(t.n), options.cap);
        r.verdict = corollary_4_10_harness(k.graph, k.G, k.H, Arc{k.a(0), k.b(0)});
        r.details["n"] = t.n;
        r.details["order_G"] = k.G.order();
        r.details["order_H"] = k.H.order();
        if (r.verdict.subject) add_dot(r, *r.verdict.subject, "line_subdivision_form");
        finish(std::move(r));
        break;
      }
      case Command::census: {
        for (const auto& [text, g] : p.census) {
          Report r;
          r.task = echo + ": " + text;
          r.verdict = is_cca_group(g);
          r.details["group"] = text;
          r.details["order"] = g.order();
          if (r.verdict.subject) {
            r.details["connection"] =
                connection_names(r.verdict.subject->group, r.verdict.subject->connection);
          }
          finish(std::move(r));
        }
        break;
      }
    }
  } catch (const CapExceeded& e) {
    out.push_back(cap_report(echo, e));
  }
  for (auto& r : out) {
    for (auto& [name, text] : r.dots) name = dot_name(name);
  }
  return out;
}

std::vector<Report> run_program(const Program& prog, const RunOptions& options) {
  GroupEnv env;
  std::vector<std::optional<PreparedTask>> prepared;
  std::vector<std::optional<Report>> failed;
  std::map<std::string, std::string> capped;  // let name -> cap message
  auto first_capped = [&](const std::vector<ExprPtr>& exprs) -> const std::string* {
    for (const auto& e : exprs) {
      for (const auto& name : referenced_names(*e)) {
        if (auto it = capped.find(name); it != capped.end()) return &it->second;
      }
    }
    return nullptr;
  };
  for (const auto& st : prog.statements) {
    if (const auto* l = std::get_if<Let>(&st)) {
      if (const auto* why = first_capped({l->expr})) {
        capped.emplace(l->name, *why);
        continue;
      }
      try {
        env.emplace(l->name, elaborate(*l->expr, env, options.cap));
      } catch (const CapExceeded& e) {
        capped.emplace(l->name, "'" + l->name + "': " + e.what());
      }
      continue;
    }
    const auto& t = std::get<Task>(st);
    if (const auto* why = first_capped(t.exprs)) {
      prepared.emplace_back();
      Report r;
      r.task = print_task(t);
      r.verdict.kind = VerdictKind::unknown_cap;
      r.verdict.check("within order cap", false, *why);
      failed.push_back(std::move(r));
      continue;
    }
    try {
      prepared.push_back(prepare(t, env, options.cap));
      failed.emplace_back();
    } catch (const CapExceeded& e) {
      prepared.emplace_back();
      failed.push_back(cap_report(print_task(t), e));
    }
  }
  std::vector<std::vector<Report>> results(prepared.size());
  if (options.seedless) {
    for (std::size_t i = 0; i < prepared.size(); ++i) {
      if (prepared[i]) results[i] = execute(*prepared[i], options);
    }
  } else {
    std::vector<std::future<std::vector<Report>>> futures;
    for (const auto& p : prepared) {
      futures.push_back(p ? std::async(std::launch::async,
                                       [&options, &p] { return execute(*p, options); })
                          : std::future<std::vector<Report>>{});
    }
    for (std::size_t i = 0; i < futures.size(); ++i) {
      if (futures[i].valid()) results[i] = futures[i].get();
    }
  }
  std::vector<Report> out;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (failed[i]) out.push_back(std::move(*failed[i]));
    for (auto& r : results[i]) out.push_back(std::move(r));
  }
  return out;
}

json group_to_json(const FiniteGroup& g) {
  json j;
  j["order"] = g.order();
  j["elements"] = g.names();
  json gens = json::array();
  for (const auto& ng : g.generators()) gens.push_back({{"name", ng.name}, {"element", ng.element}});
  j["generators"] = gens;
  json table = json::array();
  for (ElemId a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (ElemId b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    table.push_back(row);
  }
  j["table"] = table;
  return j;
}

FiniteGroup group_from_json(const json& j) {
  try {
    auto names = j.at("elements").get<std::vector<std::string>>();
    const std::size_t n = names.size();
    std::vector<ElemId> table;
    const auto& rows = j.at("table");
    if (rows.size() != n) throw std::invalid_argument("table has the wrong number of rows");
    for (const auto& row : rows) {
      if (row.size() != n) throw std::invalid_argument("table row has the wrong length");
      for (const auto& x : row) table.push_back(x.get<ElemId>());
    }
    std::vector<NamedGenerator> gens;
    for (const auto& ng : j.at("generators")) {
      gens.push_back({ng.at("name").get<std::string>(), ng.at("element").get<ElemId>()});
    }
    return FiniteGroup(std::move(names), std::move(table), std::move(gens));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed group certificate: ") + e.what());
  }
}

json to_json(const Report& r, bool seedless) {
  const auto& v = r.verdict;
  json j;
  j["version"] = kToolVersion;
  j["task"] = r.task;
  json verdict;
  verdict["kind"] = std::string(to_string(v.kind));
  json images = json::array();
  if (v.witness) {
    for (Point p : v.witness->images()) images.push_back(p);
  }
  verdict["witness_images"] = images;
  json checks = json::array();
  for (const auto& c : v.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  verdict["checks"] = checks;
  verdict["assumptions"] = v.assumptions;
  j["verdict"] = verdict;
  if (v.subject) {
    j["certificate"] = {{"group", group_to_json(v.subject->group)},
                        {"connection", v.subject->connection}};
  }
  j["details"] = r.details;
  j["stats"] = {{"nodes", v.stats.nodes}, {"millis", seedless ? 0.0 : v.stats.millis}};
  return j;
}

Verdict verdict_from_json(const json& j) {
  try {
    Verdict v;
    const auto& jv = j.at("verdict");
    auto kind = verdict_kind_from_string(jv.at("kind").get<std::string>());
    if (!kind) throw std::invalid_argument("unknown verdict kind");
    v.kind = *kind;
    for (const auto& c : jv.at("checks")) {
      v.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                          c.at("detail").get<std::string>()});
    }
    v.assumptions = jv.at("assumptions").get<std::vector<std::string>>();
    auto images = jv.at("witness_images").get<std::vector<Point>>();
    if (!images.empty()) v.witness = Permutation(std::move(images));
    if (j.contains("certificate")) {
      const auto& cert = j.at("certificate");
      auto g = group_from_json(cert.at("group"));
      v.subject = cayley_graph(g, cert.at("connection").get<std::vector<ElemId>>());
    }
    v.stats.nodes = j.at("stats").at("nodes").get<std::uint64_t>();
    v.stats.millis = j.at("stats").at("millis").get<double>();
    return v;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

bool replay_report(const json& j) { return replay_witness(verdict_from_json(j)); }

}  // namespace cca
