#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cca/automorphism_search.hpp"
#include "cca/cayley_graph.hpp"
#include "cca/permutation.hpp"

namespace cca {

enum class VerdictKind {
  cca,
  non_cca,
  pair_yes,
  pair_no,
  hypotheses_ok,
  hypotheses_fail,
  unknown_cap,
};

/// "CCA", "non-CCA", "pair-yes", ... as used in reports.
std::string_view to_string(VerdictKind kind);
std::optional<VerdictKind> verdict_kind_from_string(std::string_view s);

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

/// A decision plus everything needed to re-validate it without searching.
/// A non-CCA verdict always carries the witness permutation and the Cayley
/// graph it acts on.
struct Verdict {
  VerdictKind kind = VerdictKind::unknown_cap;
  std::optional<Permutation> witness;
  std::optional<CayleyColouredGraph> subject;
  std::vector<Check> checks;
  std::vector<std::string> assumptions;
  SearchStats stats;

  /// Appends a check and returns `pass`.
  bool check(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
    return pass;
  }
  bool all_checks_pass() const;
};

/// Re-validates a non-CCA witness from scratch: it must be a colour-preserving
/// permutation of the subject graph that is not affine. Returns false for a
/// stale or tampered witness; throws std::invalid_argument if the verdict
/// carries no witness at all.
bool replay_witness(const Verdict& v);

}  // namespace cca
