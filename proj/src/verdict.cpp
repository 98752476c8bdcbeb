#include "cca/verdict.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

#include "cca/affine.hpp"

namespace cca {
namespace {

constexpr std::array<std::pair<VerdictKind, std::string_view>, 7> kNames = {{
    {VerdictKind::cca, "CCA"},
    {VerdictKind::non_cca, "non-CCA"},
    {VerdictKind::pair_yes, "pair-yes"},
    {VerdictKind::pair_no, "pair-no"},
    {VerdictKind::hypotheses_ok, "hypotheses-ok"},
    {VerdictKind::hypotheses_fail, "hypotheses-fail"},
    {VerdictKind::unknown_cap, "unknown-cap"},
}};

}  // namespace

std::string_view to_string(VerdictKind kind) {
  for (const auto& [k, s] : kNames) {
    if (k == kind) return s;
  }
  return "unknown";
}

std::optional<VerdictKind> verdict_kind_from_string(std::string_view s) {
  for (const auto& [k, name] : kNames) {
    if (name == s) return k;
  }
  return std::nullopt;
}

bool Verdict::all_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

bool replay_witness(const Verdict& v) {
  if (!v.witness || !v.subject) {
    throw std::invalid_argument("verdict carries no witness to replay");
  }
  const auto& cg = *v.subject;
  const auto& w = *v.witness;
  if (w.degree() != cg.graph.vertex_count()) return false;
  if (!is_colour_preserving(cg.graph, w)) return false;
  return !is_affine(cg.group, w).affine;
}

}  // namespace cca
