#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cca/finite_group.hpp"
#include "cca/program.hpp"
#include "cca/verdict.hpp"

namespace cca {

inline constexpr const char* kToolVersion = "1.0.0";

using GroupEnv = std::map<std::string, FiniteGroup>;

/// Builds the group an expression denotes. Dih and Dic need abelian
/// arguments and the Dic word must name an involution. Throws SourceError
/// for ill-typed expressions and CapExceeded when a group outgrows `cap`.
FiniteGroup elaborate(const Expr& e, const GroupEnv& env, std::size_t cap = kDefaultOrderCap);

/// Throws SourceError naming the unknown generator.
ElemId evaluate_word(const Word& w, const FiniteGroup& g, Location loc = {});

/// Evaluates the words, applies +inv, and refuses sets that contain the
/// identity, are not inverse-closed, or do not generate the group.
std::vector<ElemId> elaborate_connection(const Connection& c, const FiniteGroup& g);

struct PreparedTask {
  Task task;
  std::vector<FiniteGroup> groups;
  std::vector<ElemId> connection;
  std::vector<std::pair<std::string, FiniteGroup>> census;
};

PreparedTask prepare(const Task& t, const GroupEnv& env, std::size_t cap = kDefaultOrderCap);

/// Groups of order lo..hi reachable from a fixed list of constructions, one
/// per isomorphism class, keyed by the expression that built them.
std::vector<std::pair<std::string, FiniteGroup>> census_catalogue(long lo, long hi,
                                                                  std::size_t cap);

struct RunOptions {
  std::size_t cap = kDefaultOrderCap;
  bool seedless = false;
  bool verify = false;
};

struct Report {
  std::string task;
  Verdict verdict;
  nlohmann::json details = nlohmann::json::object();
  std::vector<std::pair<std::string, std::string>> dots;  // (graph name, DOT text)
};

/// Runs one prepared task. Witnesses are replayed before returning; with
/// `verify` the JSON form is also replayed. A replay failure throws
/// InternalInconsistency.
std::vector<Report> execute(const PreparedTask& p, const RunOptions& options);

/// Elaborates statements in order, then executes tasks, concurrently unless
/// `seedless`. Reports come back in task order. Cap exhaustion while
/// building a group yields an unknown-cap report.
std::vector<Report> run_program(const Program& prog, const RunOptions& options);

nlohmann::json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const nlohmann::json& j);

/// Report schema: {version, task, verdict{kind, witness_images, checks,
/// assumptions}, certificate{group, connection}, details, stats{nodes,
/// millis}}. `seedless` zeroes timings.
nlohmann::json to_json(const Report& r, bool seedless);

/// Rebuilds the verdict, with subject graph and witness, from a report.
/// Throws std::invalid_argument on malformed input.
Verdict verdict_from_json(const nlohmann::json& j);

/// replay_witness on the rebuilt verdict.
bool replay_report(const nlohmann::json& j);

}  // namespace cca
