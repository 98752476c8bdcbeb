#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>

#include "cca/constructions.hpp"
#include "cca/errors.hpp"
#include "cca/isomorphism.hpp"
#include "cca/program.hpp"
#include "cca/runner.hpp"

using namespace cca;

namespace {

FiniteGroup build(const std::string& text, std::size_t cap = kDefaultOrderCap) {
  return elaborate(*parse_expr(text), {}, cap);
}

Location error_at(const std::string& program) {
  try {
    parse_program(program);
  } catch (const SourceError& e) {
    return e.location();
  }
  FAIL("no error raised for: " << program);
  return {};
}

const char* kCorpus = R"(# corpus
let G = C(3) x D(3)
let K = Dic(C(4), r^2)
let P = Perm[(0 1 2)(3 4), (); 6]
let W = Wr2(D(3)) x (C(2) x Q8)
check-graph G {r1 r2, s2} +inv
check-graph C(6) {r, r^-1}
check-group C(7) cap 100
check-group Dih(C(2) x C(4))
pair C(3), Dih(C(3))
witness-thm31 3
witness-prop33 5
harness-4-10 3
census 1..8
)";

}  // namespace

TEST_CASE("expressions elaborate to the expected groups") {
  CHECK(build("C(3) x D(3)").order() == 18);
  CHECK(are_isomorphic(build("Dih(C(5))"), dihedral(5)));
  CHECK(are_isomorphic(build("Dic(C(4), r^2)"), quaternion()));
  CHECK(build("Q8").order() == 8);
  CHECK(build("Wr2(C(3))").order() == 18);
  CHECK(build("Perm[(0 1 2 3), (0 2)]").order() == 8);
  CHECK(build("Perm[(0 1); 5]").degree() == 5);
  CHECK(build("(C(2) x C(2)) x C(2)").is_elementary_abelian_2());
  CHECK(build("C(2) x (C(2) x C(2))").order() == 8);
}

TEST_CASE("elaboration errors") {
  CHECK_THROWS_AS(build("Dih(D(3))"), SourceError);
  CHECK_THROWS_AS(build("Dic(D(3), s)"), SourceError);
  CHECK_THROWS_AS(build("Dic(C(4), r)"), SourceError);
  CHECK_THROWS_AS(build("Dic(C(4), q)"), SourceError);
  CHECK_THROWS_AS(build("G"), SourceError);
  CHECK_THROWS_AS(build("D(2)"), SourceError);
  CHECK_THROWS_AS(build("C(600)"), CapExceeded);
  CHECK(build("C(600)", 600).order() == 600);
  CHECK_THROWS_AS(build("Perm[(0 9); 5]"), SourceError);
  try {
    build("C(3) x Dih(Q8)");
    FAIL("expected an error");
  } catch (const SourceError& e) {
    CHECK(e.location().column == 8);
  }
}

TEST_CASE("syntax errors carry line and column") {
  auto at = error_at("let A = C(3)\ncheck-group A x\n");
  CHECK(at.line == 2);
  CHECK(at.column == 16);
  at = error_at("check-grup C(3)");
  CHECK(at.line == 1);
  CHECK(at.column == 1);
  at = error_at("\n\n  pair C(3) Dih(C(3))");
  CHECK(at.line == 3);
  CHECK(at.column == 13);
  at = error_at("let A = C(3)\nlet A = C(4)");
  CHECK(at.line == 2);
  at = error_at("let x = C(3)");
  CHECK(at.column == 5);
  at = error_at("census 5..2");
  CHECK(at.line == 1);
  CHECK_THROWS_AS(parse_expr("C(3) D(3)"), SourceError);
  CHECK_THROWS_AS(parse_connection("{r, }"), SourceError);
}

TEST_CASE("print and parse round-trip") {
  // Syntactically fine even though elaboration would refuse the identity.
  auto prog = parse_program(std::string(kCorpus) + "check-graph K {e}\n");
  CHECK(prog.statements.size() == 14);
  auto text = print_program(prog);
  auto again = parse_program(text);
  CHECK(same_program(prog, again));
  CHECK(print_program(again) == text);
  CHECK(print_expr(*parse_expr("C(2) x (C(3) x C(4))")) == "C(2) x (C(3) x C(4))");
  CHECK(print_expr(*parse_expr("(C(2) x C(3)) x C(4)")) == "C(2) x C(3) x C(4)");
  CHECK(print_word(parse_word("r^-1 s r^1")) == "r^-1 s r");
  CHECK(print_connection(parse_connection("{ r ,s^2}+inv")) == "{r, s^2} +inv");
}

TEST_CASE("connection sets") {
  auto g = build("C(3) x D(3)");
  auto c = elaborate_connection(parse_connection("{r1 r2, s2} +inv"), g);
  CHECK(c.size() == 3);
  CHECK_THROWS_AS(elaborate_connection(parse_connection("{r1 r2, s2}"), g), SourceError);
  CHECK_THROWS_AS(elaborate_connection(parse_connection("{s2}"), g), SourceError);
  CHECK_THROWS_AS(elaborate_connection(parse_connection("{e, s2}"), g), SourceError);
  CHECK_THROWS_AS(elaborate_connection(parse_connection("{t}"), g), SourceError);
}

TEST_CASE("reports for the command examples") {
  RunOptions opt;
  opt.seedless = true;
  opt.verify = true;
  auto reports = run_program(parse_program("witness-thm31 3\ncheck-group C(7)\n"
                                           "pair C(3), Dih(C(3))\npair C(2) x C(2), C(2) x C(2)"),
                             opt);
  REQUIRE(reports.size() == 4);
  auto j = to_json(reports[0], true);
  CHECK(j["version"] == kToolVersion);
  CHECK(j["task"] == "witness-thm31 3");
  CHECK(j["verdict"]["kind"] == "non-CCA");
  CHECK(j["verdict"]["witness_images"].size() == 18);
  CHECK(j["stats"]["millis"] == 0.0);
  CHECK(replay_report(j));
  CHECK(to_json(reports[1], true)["verdict"]["kind"] == "CCA");
  CHECK(to_string(reports[2].verdict.kind) == "pair-yes");
  CHECK(to_string(reports[3].verdict.kind) == "pair-no");

  j["verdict"]["witness_images"][0] = j["verdict"]["witness_images"][1];
  CHECK_THROWS_AS(replay_report(j), std::invalid_argument);
  auto k = to_json(reports[0], true);
  auto imgs = k["verdict"]["witness_images"];
  std::swap(imgs[4], imgs[5]);
  k["verdict"]["witness_images"] = imgs;
  CHECK_FALSE(replay_report(k));
}

TEST_CASE("DOT output for Cay(C3 x D6, C)") {
  RunOptions opt;
  opt.seedless = true;
  auto r = run_program(parse_program("check-graph C(3) x D(3) {r1 r2, s2} +inv"), opt);
  REQUIRE(r.size() == 1);
  REQUIRE(r[0].dots.size() == 1);
  const auto& dot = r[0].dots[0].second;
  std::size_t edges = 0;
  std::set<std::string> colours;
  for (std::size_t pos = dot.find(" -- "); pos != std::string::npos; pos = dot.find(" -- ", pos + 1)) {
    ++edges;
    auto c = dot.find("color=", pos);
    colours.insert(dot.substr(c, dot.find(',', c) - c));
  }
  CHECK(edges == 27);
  CHECK(colours.size() == 2);
}

TEST_CASE("seedless runs are byte-identical") {
  RunOptions opt;
  opt.seedless = true;
  auto prog = parse_program(kCorpus);
  auto a = run_program(prog, opt);
  auto b = run_program(prog, opt);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_json(a[i], true).dump() == to_json(b[i], true).dump());
}

TEST_CASE("parallel runs keep task order and verdicts") {
  RunOptions seq;
  seq.seedless = true;
  RunOptions par;
  auto prog = parse_program("witness-thm31 5\ncheck-group C(5)\nwitness-prop33 3\ncensus 6..8");
  auto a = run_program(prog, seq);
  auto b = run_program(prog, par);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].task == b[i].task);
    CHECK(a[i].verdict.kind == b[i].verdict.kind);
  }
}

TEST_CASE("cap exhaustion is a verdict, not an error") {
  RunOptions opt;
  opt.seedless = true;
  opt.cap = 100;
  auto r = run_program(parse_program("witness-thm31 9\ncheck-group C(200)"), opt);
  REQUIRE(r.size() == 2);
  CHECK(r[0].verdict.kind == VerdictKind::unknown_cap);
  CHECK(r[1].verdict.kind == VerdictKind::unknown_cap);
  opt.cap = kDefaultOrderCap;
  auto s = run_program(parse_program("check-group C(2) x C(2) x C(2) x C(2) cap 3"), opt);
  CHECK(s[0].verdict.kind == VerdictKind::unknown_cap);
}

TEST_CASE("group certificates round-trip") {
  auto g = build("Dic(C(6), r^3)");
  auto h = group_from_json(group_to_json(g));
  CHECK(std::ranges::equal(h.names(), g.names()));
  CHECK(std::ranges::equal(h.table(), g.table()));
  CHECK(is_isomorphism(g, h, [&] {
    std::vector<ElemId> id(g.order());
    for (ElemId i = 0; i < g.order(); ++i) id[i] = i;
    return id;
  }()));
}

TEST_CASE("census catalogue has one group per isomorphism class") {
  auto cat = census_catalogue(1, 12, kDefaultOrderCap);
  for (std::size_t i = 0; i < cat.size(); ++i) {
    for (std::size_t j = i + 1; j < cat.size(); ++j) {
      if (cat[i].second.order() == cat[j].second.order()) {
        CHECK_FALSE(are_isomorphic(cat[i].second, cat[j].second));
      }
    }
  }
  std::set<std::size_t> orders;
  for (const auto& [t, g] : cat) orders.insert(g.order());
  CHECK(orders.size() == 12);
}

TEST_CASE("a let over the order cap makes dependent tasks unknown-cap") {
  RunOptions opt;
  opt.seedless = true;
  auto r = run_program(parse_program("let W = Wr2(D(3)) x (C(2) x Q8)\nlet V = W x C(2)\n"
                                     "check-group V\ncheck-group C(3)"),
                       opt);
  REQUIRE(r.size() == 2);
  CHECK(r[0].verdict.kind == VerdictKind::unknown_cap);
  CHECK(r[0].verdict.checks[0].detail.find("'W'") != std::string::npos);
  CHECK(r[1].verdict.kind == VerdictKind::cca);
}
