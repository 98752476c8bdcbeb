#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cca/permutation.hpp"

namespace cca {

struct Location {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Syntax or elaboration error at a source location; what() reads
/// "line:column: message".
class SourceError : public std::invalid_argument {
 public:
  SourceError(Location loc, const std::string& message);
  Location location() const noexcept { return loc_; }
  const std::string& message() const noexcept { return message_; }

 private:
  Location loc_;
  std::string message_;
};

struct WordFactor {
  std::string name;
  long power = 1;
  friend bool operator==(const WordFactor&, const WordFactor&) = default;
};
/// Juxtaposed generator powers; empty is the identity, written "e".
using Word = std::vector<WordFactor>;

enum class ExprKind { cyclic, dihedral, quaternion, dih, dic, product, wreath, perm, ref };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind = ExprKind::cyclic;
  long n = 0;                    // C(n), D(n)
  std::vector<ExprPtr> args;     // Dih, Dic, Wr2: one; product: two
  Word word;                     // Dic
  std::vector<std::vector<std::vector<Point>>> perm_cycles;  // Perm: per generator
  std::optional<std::size_t> perm_degree;                    // Perm[...; d]
  std::string name;              // ref
  Location loc;
};

/// Structural equality, ignoring locations.
bool same_expr(const Expr& a, const Expr& b);

struct Connection {
  std::vector<Word> words;
  bool plus_inv = false;
  Location loc;
  friend bool operator==(const Connection& a, const Connection& b) {
    return a.words == b.words && a.plus_inv == b.plus_inv;
  }
};

enum class Command { check_graph, check_group, pair, witness_thm31, witness_prop33, harness, census };

std::string_view command_name(Command c);

struct Task {
  Command command = Command::check_group;
  std::vector<ExprPtr> exprs;
  std::optional<Connection> connection;
  long n = 0;                       // witness and harness commands
  std::optional<std::size_t> cap;   // check-group
  long lo = 0, hi = 0;              // census
  Location loc;
};

struct Let {
  std::string name;
  ExprPtr expr;
  Location loc;
};

using Statement = std::variant<Let, Task>;

struct Program {
  std::vector<Statement> statements;
};

bool same_task(const Task& a, const Task& b);
bool same_program(const Program& a, const Program& b);

/// One statement per line; '#' starts a comment. Statements:
///   let NAME = EXPR
///   check-graph EXPR { WORD, ... } [+inv]
///   check-group EXPR [cap INT]
///   pair EXPR , EXPR
///   witness-thm31 INT | witness-prop33 INT | harness-4-10 INT
///   census INT..INT
/// Expressions: C(n) D(n) Q8 Dih(E) Dic(E, WORD) E x E Wr2(E)
///   Perm[CYCLES, ...] Perm[CYCLES, ...; DEGREE] NAME (E)
Program parse_program(std::string_view text);
ExprPtr parse_expr(std::string_view text);
Connection parse_connection(std::string_view text);
Word parse_word(std::string_view text);

std::string print_expr(const Expr& e);
std::string print_word(const Word& w);
std::string print_connection(const Connection& c);
std::string print_task(const Task& t);
std::string print_program(const Program& p);

}  // namespace cca
