#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cca/errors.hpp"
#include "cca/runner.hpp"

namespace fs = std::filesystem;
using namespace cca;

namespace {

enum Exit { kOk = 0, kUsage = 1, kCap = 2, kInconsistent = 3 };

std::size_t order_cap_from_env() {
  const char* raw = std::getenv("CCA_MAX_ORDER");
  if (!raw || !*raw) return kDefaultOrderCap;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) {
    throw std::invalid_argument(std::string("CCA_MAX_ORDER must be a positive integer, got '") +
                                raw + "'");
  }
  return static_cast<std::size_t>(v);
}

std::string slug(const std::string& task, std::size_t index) {
  std::string s;
  for (char c : task) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      s += c;
    } else if (!s.empty() && s.back() != '_') {
      s += '_';
    }
  }
  while (!s.empty() && s.back() == '_') s.pop_back();
  if (s.size() > 60) s.resize(60);
  char prefix[8];
  std::snprintf(prefix, sizeof prefix, "%03zu_", index);
  return prefix + s;
}

struct Output {
  std::string emit = "json";
  std::string out_dir;
  bool verify = false;
  bool seedless = false;
  bool strict = false;
};

int emit_reports(const std::vector<Report>& reports, const Output& o) {
  const bool want_json = o.emit == "json" || o.emit == "both";
  const bool want_dot = o.emit == "dot" || o.emit == "both";
  if (!o.out_dir.empty()) {
    fs::create_directories(o.out_dir);
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      auto base = fs::path(o.out_dir) / slug(r.task, i);
      if (want_json) {
        std::ofstream f(base.string() + ".json");
        f << to_json(r, o.seedless).dump(2) << "\n";
        if (!f) throw std::runtime_error("cannot write " + base.string() + ".json");
      }
      if (want_dot) {
        for (const auto& [name, text] : r.dots) {
          std::ofstream f(base.string() + "." + name + ".dot");
          f << text;
          if (!f) throw std::runtime_error("cannot write " + base.string() + ".dot");
        }
      }
      std::cout << r.task << ": " << to_string(r.verdict.kind) << "\n";
    }
  } else {
    if (want_json) {
      if (reports.size() == 1) {
        std::cout << to_json(reports[0], o.seedless).dump(2) << "\n";
      } else {
        auto arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(to_json(r, o.seedless));
        std::cout << arr.dump(2) << "\n";
      }
    }
    if (want_dot) {
      for (const auto& r : reports) {
        for (const auto& d : r.dots) std::cout << d.second;
      }
    }
  }
  if (o.strict) {
    for (const auto& r : reports) {
      if (r.verdict.kind == VerdictKind::unknown_cap) return kCap;
    }
  }
  return kOk;
}

int replay_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  std::vector<nlohmann::json> reports;
  if (j.is_array()) {
    for (auto& r : j) reports.push_back(r);
  } else {
    reports.push_back(j);
  }
  int status = kOk;
  for (const auto& r : reports) {
    const std::string task = r.value("task", std::string("?"));
    auto v = verdict_from_json(r);
    if (!v.witness) {
      std::cout << task << ": no witness\n";
      continue;
    }
    bool ok = replay_witness(v);
    std::cout << task << ": replay " << (ok ? "ok" : "FAILED") << "\n";
    if (!ok) status = kInconsistent;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley colour automorphism workbench"};
  app.require_subcommand(1);
  Output o;
  app.add_option("--emit", o.emit, "json, dot or both")
      ->check(CLI::IsMember({"json", "dot", "both"}));
  app.add_option("--out", o.out_dir, "write one file per report into this directory");
  app.add_flag("--verify", o.verify, "replay witnesses from their serialized form");
  app.add_flag("--seedless", o.seedless, "sequential execution, zeroed timings");
  app.add_flag("--strict", o.strict, "exit 2 when a cap prevents an answer");

  std::string group, connection, second, file, range;
  long n = 0;
  std::size_t cap = 0;

  auto* check_graph = app.add_subcommand("check-graph", "is Cay(G, C) CCA");
  check_graph->add_option("group", group)->required();
  check_graph->add_option("connection", connection, "{w, ...} [+inv]")->required();
  auto* check_group = app.add_subcommand("check-group", "is G CCA");
  check_group->add_option("group", group)->required();
  check_group->add_option("--cap", cap, "connection sets examined before unknown-cap");
  auto* pair = app.add_subcommand("pair", "is (G, B) a complete colour pair");
  pair->add_option("G", group)->required();
  pair->add_option("B", second)->required();
  auto* thm = app.add_subcommand("witness-thm31", "non-CCA witness on Cay(C_n x D_2n, C)");
  thm->add_option("--n", n)->required();
  auto* prop = app.add_subcommand("witness-prop33", "non-CCA witness on Cay(D_2n x D_2n, C ∪ {gamma})");
  prop->add_option("--n", n)->required();
  auto* harness = app.add_subcommand("harness-4-10", "line-subdivision harness on K_{n,n}");
  harness->add_option("--n", n)->required();
  auto* census = app.add_subcommand("census", "CCA verdicts for catalogued groups");
  census->add_option("--orders", range, "a..b")->required();
  auto* run = app.add_subcommand("run", "run a program file");
  run->add_option("file", file)->required()->check(CLI::ExistingFile);
  auto* replay = app.add_subcommand("replay", "replay witnesses in a JSON report");
  replay->add_option("file", file)->required()->check(CLI::ExistingFile);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    RunOptions options;
    options.cap = order_cap_from_env();
    options.seedless = o.seedless;
    options.verify = o.verify;
    if (replay->parsed()) return replay_file(file);

    Program prog;
    if (run->parsed()) {
      std::ifstream f(file);
      std::stringstream ss;
      ss << f.rdbuf();
      prog = parse_program(ss.str());
    } else {
      std::string line;
      if (check_graph->parsed()) line = "check-graph " + group + " " + connection;
      if (check_group->parsed()) {
        line = "check-group " + group + (cap ? " cap " + std::to_string(cap) : "");
      }
      if (pair->parsed()) line = "pair " + group + ", " + second;
      if (thm->parsed()) line = "witness-thm31 " + std::to_string(n);
      if (prop->parsed()) line = "witness-prop33 " + std::to_string(n);
      if (harness->parsed()) line = "harness-4-10 " + std::to_string(n);
      if (census->parsed()) line = "census " + range;
      prog = parse_program(line);
    }
    return emit_reports(run_program(prog, options), o);
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
