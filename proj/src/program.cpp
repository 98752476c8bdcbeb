#include "cca/program.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace cca {

SourceError::SourceError(Location loc, const std::string& message)
    : std::invalid_argument(std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " +
                            message),
      loc_(loc),
      message_(message) {}

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 7> kCommands = {{
    {Command::check_graph, "check-graph"},
    {Command::check_group, "check-group"},
    {Command::pair, "pair"},
    {Command::witness_thm31, "witness-thm31"},
    {Command::witness_prop33, "witness-prop33"},
    {Command::harness, "harness-4-10"},
    {Command::census, "census"},
}};

const std::set<std::string, std::less<>> kReserved = {"C",  "D",    "Q8",  "Dih", "Dic", "Wr2",
                                                      "Perm", "x", "e",   "let", "cap"};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  Location here() const { return {line_, pos_ + 1}; }
  Location mark() {
    skip_space();
    return here();
  }
  [[noreturn]] void fail(const std::string& msg) const { throw SourceError(here(), msg); }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'" + found());
    }
  }
  std::string found() {
    if (at_end()) return ", found end of line";
    return std::string(", found '") + text_[pos_] + "'";
  }
  bool accept_text(std::string_view s) {
    skip_space();
    if (text_.substr(pos_, s.size()) != s) return false;
    pos_ += s.size();
    return true;
  }

  std::string peek_ident() {
    skip_space();
    std::size_t p = pos_;
    if (p >= text_.size() || !ident_start(text_[p])) return {};
    while (p < text_.size() && ident_char(text_[p])) ++p;
    return std::string(text_.substr(pos_, p - pos_));
  }
  std::string ident() {
    auto s = peek_ident();
    if (s.empty()) fail("expected a name" + found());
    pos_ += s.size();
    return s;
  }
  std::string command_word() {
    skip_space();
    std::size_t p = pos_;
    while (p < text_.size() && (ident_char(text_[p]) || text_[p] == '-')) ++p;
    auto s = std::string(text_.substr(pos_, p - pos_));
    pos_ = p;
    return s;
  }
  long integer(bool allow_negative = false) {
    skip_space();
    Location at = here();
    std::size_t p = pos_;
    if (allow_negative && p < text_.size() && text_[p] == '-') ++p;
    std::size_t digits = p;
    while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
    if (p == digits) fail("expected an integer" + found());
    long v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + p, v);
    if (ec != std::errc{}) throw SourceError(at, "integer out of range");
    pos_ = p;
    return v;
  }

  ExprPtr expr() {
    auto left = term();
    while (peek_ident() == "x") {
      Location at = mark();
      pos_ += 1;
      auto right = term();
      auto e = std::make_shared<Expr>();
      e->kind = ExprKind::product;
      e->args = {left, right};
      e->loc = at;
      left = e;
    }
    return left;
  }

  ExprPtr term() {
    auto e = std::make_shared<Expr>();
    e->loc = mark();
    if (accept('(')) {
      auto inner = expr();
      expect(')');
      return inner;
    }
    auto name = peek_ident();
    if (name.empty()) fail("expected a group expression" + found());
    pos_ += name.size();
    if (name == "C" || name == "D") {
      e->kind = name == "C" ? ExprKind::cyclic : ExprKind::dihedral;
      expect('(');
      e->n = integer();
      expect(')');
    } else if (name == "Q8") {
      e->kind = ExprKind::quaternion;
    } else if (name == "Dih" || name == "Wr2") {
      e->kind = name == "Dih" ? ExprKind::dih : ExprKind::wreath;
      expect('(');
      e->args = {expr()};
      expect(')');
    } else if (name == "Dic") {
      e->kind = ExprKind::dic;
      expect('(');
      e->args = {expr()};
      expect(',');
      e->word = word();
      expect(')');
    } else if (name == "Perm") {
      e->kind = ExprKind::perm;
      perm_body(*e);
    } else if (kReserved.count(name)) {
      throw SourceError(e->loc, "'" + name + "' is reserved");
    } else {
      e->kind = ExprKind::ref;
      e->name = name;
    }
    return e;
  }

  void perm_body(Expr& e) {
    expect('[');
    do {
      std::vector<std::vector<Point>> cycles;
      if (peek() != '(') fail("expected a cycle" + found());
      while (accept('(')) {
        std::vector<Point> cycle;
        while (!accept(')')) {
          long p = integer();
          if (p < 0) fail("negative point");
          cycle.push_back(static_cast<Point>(p));
        }
        if (!cycle.empty()) cycles.push_back(std::move(cycle));
      }
      e.perm_cycles.push_back(std::move(cycles));
    } while (accept(','));
    if (accept(';')) {
      long d = integer();
      if (d < 1) fail("degree must be positive");
      e.perm_degree = static_cast<std::size_t>(d);
    }
    expect(']');
  }

  Word word() {
    Word w;
    if (peek_ident() == "e") {
      pos_ += 1;
      return w;
    }
    while (!peek_ident().empty()) {
      WordFactor f{ident(), 1};
      if (f.name == "e") fail("'e' cannot appear inside a longer word");
      if (accept('^')) f.power = integer(true);
      w.push_back(std::move(f));
    }
    if (w.empty()) fail("expected a word" + found());
    return w;
  }

  Connection connection() {
    Connection c;
    c.loc = mark();
    expect('{');
    if (!accept('}')) {
      do {
        c.words.push_back(word());
      } while (accept(','));
      expect('}');
    }
    c.plus_inv = accept_text("+inv");
    return c;
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing input" + found());
  }

  Statement statement() {
    Location at = mark();
    auto word_s = command_word();
    if (word_s == "let") {
      Let l;
      l.loc = at;
      Location name_at = mark();
      l.name = ident();
      if (kReserved.count(l.name)) throw SourceError(name_at, "'" + l.name + "' is reserved");
      expect('=');
      l.expr = expr();
      return l;
    }
    Task t;
    t.loc = at;
    auto it = std::find_if(kCommands.begin(), kCommands.end(),
                           [&](const auto& c) { return c.second == word_s; });
    if (it == kCommands.end()) throw SourceError(at, "unknown command '" + word_s + "'");
    t.command = it->first;
    switch (t.command) {
      case Command::check_graph:
        t.exprs = {expr()};
        t.connection = connection();
        break;
      case Command::check_group:
        t.exprs = {expr()};
        if (peek_ident() == "cap") {
          pos_ += 3;
          long c = integer();
          if (c < 1) fail("cap must be positive");
          t.cap = static_cast<std::size_t>(c);
        }
        break;
      case Command::pair:
        t.exprs.push_back(expr());
        expect(',');
        t.exprs.push_back(expr());
        break;
      case Command::witness_thm31:
      case Command::witness_prop33:
      case Command::harness:
        t.n = integer();
        break;
      case Command::census:
        t.lo = integer();
        if (!accept_text("..")) fail("expected '..'" + found());
        t.hi = integer();
        if (t.lo < 1 || t.hi < t.lo) throw SourceError(at, "census range must satisfy 1 <= a <= b");
        break;
    }
    return t;
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

template <typename T, typename F>
T parse_whole(std::string_view text, F f) {
  if (text.find('\n') != std::string_view::npos) {
    throw SourceError({1, text.find('\n') + 1}, "unexpected line break");
  }
  Parser p(text, 1);
  T out = f(p);
  p.finish();
  return out;
}

std::string print_cycles(const std::vector<std::vector<Point>>& cycles) {
  if (cycles.empty()) return "()";
  std::string s;
  for (const auto& c : cycles) {
    s += "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
    s += ")";
  }
  return s;
}

}  // namespace

bool same_expr(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.n != b.n || a.word != b.word || a.perm_cycles != b.perm_cycles ||
      a.perm_degree != b.perm_degree || a.name != b.name || a.args.size() != b.args.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!same_expr(*a.args[i], *b.args[i])) return false;
  }
  return true;
}

std::string_view command_name(Command c) {
  for (const auto& [k, s] : kCommands) {
    if (k == c) return s;
  }
  return "?";
}

bool same_task(const Task& a, const Task& b) {
  if (a.command != b.command || a.connection != b.connection || a.n != b.n || a.cap != b.cap ||
      a.lo != b.lo || a.hi != b.hi || a.exprs.size() != b.exprs.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.exprs.size(); ++i) {
    if (!same_expr(*a.exprs[i], *b.exprs[i])) return false;
  }
  return true;
}

bool same_program(const Program& a, const Program& b) {
  if (a.statements.size() != b.statements.size()) return false;
  for (std::size_t i = 0; i < a.statements.size(); ++i) {
    const auto& x = a.statements[i];
    const auto& y = b.statements[i];
    if (x.index() != y.index()) return false;
    if (const auto* lx = std::get_if<Let>(&x)) {
      const auto& ly = std::get<Let>(y);
      if (lx->name != ly.name || !same_expr(*lx->expr, *ly.expr)) return false;
    } else if (!same_task(std::get<Task>(x), std::get<Task>(y))) {
      return false;
    }
  }
  return true;
}

Program parse_program(std::string_view text) {
  Program prog;
  std::set<std::string> names;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Parser p(line, line_no);
    if (!p.at_end()) {
      auto st = p.statement();
      p.finish();
      if (const auto* l = std::get_if<Let>(&st)) {
        if (!names.insert(l->name).second) {
          throw SourceError(l->loc, "'" + l->name + "' is already defined");
        }
      }
      prog.statements.push_back(std::move(st));
    }
    start = end + 1;
  }
  return prog;
}

ExprPtr parse_expr(std::string_view text) {
  return parse_whole<ExprPtr>(text, [](Parser& p) { return p.expr(); });
}

Connection parse_connection(std::string_view text) {
  return parse_whole<Connection>(text, [](Parser& p) { return p.connection(); });
}

Word parse_word(std::string_view text) {
  return parse_whole<Word>(text, [](Parser& p) { return p.word(); });
}

std::string print_word(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += w[i].name;
    if (w[i].power != 1) s += "^" + std::to_string(w[i].power);
  }
  return s;
}

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case ExprKind::cyclic:
      return "C(" + std::to_string(e.n) + ")";
    case ExprKind::dihedral:
      return "D(" + std::to_string(e.n) + ")";
    case ExprKind::quaternion:
      return "Q8";
    case ExprKind::dih:
      return "Dih(" + print_expr(*e.args[0]) + ")";
    case ExprKind::wreath:
      return "Wr2(" + print_expr(*e.args[0]) + ")";
    case ExprKind::dic:
      return "Dic(" + print_expr(*e.args[0]) + ", " + print_word(e.word) + ")";
    case ExprKind::product: {
      std::string right = print_expr(*e.args[1]);
      if (e.args[1]->kind == ExprKind::product) right = "(" + right + ")";
      return print_expr(*e.args[0]) + " x " + right;
    }
    case ExprKind::perm: {
      std::string s = "Perm[";
      for (std::size_t i = 0; i < e.perm_cycles.size(); ++i) {
        s += (i ? ", " : "") + print_cycles(e.perm_cycles[i]);
      }
      if (e.perm_degree) s += "; " + std::to_string(*e.perm_degree);
      return s + "]";
    }
    case ExprKind::ref:
      return e.name;
  }
  return {};
}

std::string print_connection(const Connection& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.words.size(); ++i) s += (i ? ", " : "") + print_word(c.words[i]);
  s += "}";
  if (c.plus_inv) s += " +inv";
  return s;
}

std::string print_task(const Task& t) {
  std::string s(command_name(t.command));
  switch (t.command) {
    case Command::check_graph:
      return s + " " + print_expr(*t.exprs[0]) + " " + print_connection(*t.connection);
    case Command::check_group:
      s += " " + print_expr(*t.exprs[0]);
      if (t.cap) s += " cap " + std::to_string(*t.cap);
      return s;
    case Command::pair:
      return s + " " + print_expr(*t.exprs[0]) + ", " + print_expr(*t.exprs[1]);
    case Command::witness_thm31:
    case Command::witness_prop33:
    case Command::harness:
      return s + " " + std::to_string(t.n);
    case Command::census:
      return s + " " + std::to_string(t.lo) + ".." + std::to_string(t.hi);
  }
  return s;
}

std::string print_program(const Program& p) {
  std::ostringstream os;
  for (const auto& st : p.statements) {
    if (const auto* l = std::get_if<Let>(&st)) {
      os << "let " << l->name << " = " << print_expr(*l->expr) << "\n";
    } else {
      os << print_task(std::get<Task>(st)) << "\n";
    }
  }
  return os.str();
}

}  // namespace cca
