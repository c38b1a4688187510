#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "gsa/gsa.hpp"

namespace {

using namespace gsa;
using json = nlohmann::json;

enum Exit { kOk = 0, kInvalid = 1, kUsage = 2, kInternal = 3 };

// Thrown for bad input files; maps to exit code 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LabeledGraph load(const std::string& path) {
  try {
    LabeledGraph g = path == "-" ? read_graph(std::cin) : read_graph_file(path);
    return g;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

LabeledGraph load_valid(const std::string& path) {
  LabeledGraph g = load(path);
  const auto report = validate(g);
  if (!report.ok()) {
    std::ostringstream msg;
    msg << "invalid graph: " << report.violations.front().message;
    if (report.violations.size() > 1) msg << " (and " << report.violations.size() - 1 << " more)";
    throw InputError(msg.str());
  }
  return g;
}

void print_groups(const Partition& p, bool as_json) {
  if (as_json) {
    std::cout << json{{"groups", p.groups}}.dump() << "\n";
    return;
  }
  for (const auto& group : p.groups) {
    for (std::size_t i = 0; i < group.size(); ++i) std::cout << (i ? " " : "") << group[i];
    std::cout << "\n";
  }
}

std::string key_text(const MinMaxKey& k) { return std::string(k.kind == Kind::Min ? "m:" : "M:") + std::to_string(k.node); }

void print_groups(const MinMaxPartition& p, bool as_json) {
  if (as_json) {
    json groups = json::array();
    for (const auto& group : p.groups) {
      json g = json::array();
      for (const auto& k : group) g.push_back(key_text(k));
      groups.push_back(g);
    }
    std::cout << json{{"groups", groups}}.dump() << "\n";
    return;
  }
  for (const auto& group : p.groups) {
    for (std::size_t i = 0; i < group.size(); ++i) std::cout << (i ? " " : "") << key_text(group[i]);
    std::cout << "\n";
  }
}

Kind parse_kind(const std::string& s) { return s == "max" ? Kind::Max : Kind::Min; }

int cmd_validate(const std::string& path, bool as_json) {
  const auto g = load(path);
  const auto report = validate(g);
  if (as_json) {
    json v = json::array();
    for (const auto& x : report.violations) v.push_back({{"rule", x.rule}, {"node", x.node}, {"message", x.message}});
    std::cout << json{{"ok", report.ok()}, {"nodes", g.size()}, {"edges", g.edge_count()}, {"violations", v}}.dump()
              << "\n";
  } else if (report.ok()) {
    std::cout << "ok " << g.size() << " nodes " << g.edge_count() << " edges sigma " << g.sigma() << "\n";
  } else {
    for (const auto& x : report.violations) std::cout << x.rule << "\t" << x.message << "\n";
  }
  return report.ok() ? kOk : kInvalid;
}

int cmd_tau(const std::string& path, const std::string& kind, bool as_json) {
  const auto g = load_valid(path);
  const auto tau = compute_tau(g, std::vector<Kind>(static_cast<std::size_t>(g.size()), parse_kind(kind)));
  if (as_json) {
    std::cout << json{{"tau", std::vector<int>(tau.begin(), tau.end())}}.dump() << "\n";
    return kOk;
  }
  for (NodeId u = 0; u < g.size(); ++u) std::cout << u << "\t" << int(tau[u]) << "\n";
  return kOk;
}

int cmd_partition(const std::string& path, const std::string& which, bool as_json, bool verify) {
  const auto g = load_valid(path);
  if (which == "minmax") {
    const auto p = minmax_partition(g);
    if (verify && p != oracle_minmax(g)) {
      std::cerr << "oracle disagreement\n";
      return kInternal;
    }
    print_groups(p, as_json);
    return kOk;
  }
  const Kind kind = parse_kind(which);
  const auto p = kind == Kind::Min ? min_partition(g) : max_partition(g);
  if (verify && p != oracle_partition(g, kind)) {
    std::cerr << "oracle disagreement\n";
    return kInternal;
  }
  print_groups(p, as_json);
  return kOk;
}

int cmd_oracle(const std::string& path, const std::string& kind, bool as_json) {
  const auto g = load_valid(path);
  if (kind == "minmax") {
    print_groups(oracle_minmax(g), as_json);
  } else {
    print_groups(oracle_partition(g, parse_kind(kind)), as_json);
  }
  return kOk;
}

int cmd_reduce(const std::string& path, bool as_json) {
  const auto g = load_valid(path);
  const auto tau = compute_tau(g);
  NodeId n1 = 0, n3 = 0;
  for (Tau t : tau) {
    n1 += t == 1;
    n3 += t == 3;
  }
  const Direction dir = n3 <= n1 ? Direction::Type3 : Direction::Type1;
  const LabeledGraph work = dir == Direction::Type3 ? trim(g, tau) : g;
  Explorer ex(work, tau);
  std::vector<ExplorationRecord> recs;
  for (NodeId u = 0; u < g.size(); ++u) {
    if (tau[u] == (dir == Direction::Type3 ? 3 : 1)) recs.push_back(ex.explore(u, dir));
  }
  const auto red = build_reduced_graph(recs, dir, g.size());
  if (as_json) {
    json letters = json::array();
    for (const auto& [gamma, t] : red.letter_key) letters.push_back({{"gamma", gamma}, {"t", t}});
    json edges = json::array();
    for (const Edge& e : red.graph.edges()) edges.push_back({e.from, e.to});
    std::cout << json{{"direction", to_string(dir)},
                      {"nodes", red.to_parent},
                      {"labels", std::vector<Symbol>(red.graph.labels().begin(), red.graph.labels().end())},
                      {"letters", letters},
                      {"edges", edges}}
                     .dump()
              << "\n";
    return kOk;
  }
  std::cout << "direction " << to_string(dir) << "\n";
  std::cout << "nodes";
  for (NodeId v = 0; v < red.graph.size(); ++v) std::cout << " " << red.to_parent[v] << ":" << red.graph.label(v);
  std::cout << "\n";
  for (std::size_t c = 0; c < red.letter_key.size(); ++c) {
    std::cout << "letter " << c << "\t";
    for (std::size_t i = 0; i < red.letter_key[c].first.size(); ++i) {
      std::cout << (i ? " " : "") << red.letter_key[c].first[i];
    }
    std::cout << "\tt=" << int(red.letter_key[c].second) << "\n";
  }
  for (const Edge& e : red.graph.edges()) std::cout << "edge " << e.from << "\t" << e.to << "\n";
  return kOk;
}

int cmd_gen(const GenOptions& o, const std::string& out) {
  const auto g = generate(o);
  if (out.empty() || out == "-") {
    write_graph(std::cout, g);
  } else {
    std::ofstream f(out);
    if (!f) throw InputError("cannot write " + out);
    write_graph(f, g);
  }
  return kOk;
}

int cmd_bench(const BenchConfig& c, bool as_json) {
  const auto r = bench_scaling(c);
  if (as_json) {
    json rows = json::array();
    for (const auto& rec : r.records) {
      rows.push_back({{"kind", to_string(rec.kind)}, {"n", rec.n}, {"m", rec.m}, {"seed", rec.seed},
                      {"wall_ns", rec.wall_ns}, {"max_edge_work", rec.max_edge_work}, {"depth", rec.depth}});
    }
    std::cout << json{{"records", rows}, {"slope", r.slope}}.dump(2) << "\n";
    return kOk;
  }
  std::cout << "kind,n,m,seed,wall_ns,max_edge_work,depth\n";
  for (const auto& rec : r.records) {
    std::cout << to_string(rec.kind) << "," << rec.n << "," << rec.m << "," << rec.seed << "," << rec.wall_ns << ","
              << rec.max_edge_work << "," << rec.depth << "\n";
  }
  std::cout << "# slope " << r.slope << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Min/max partitions of input-consistent labelled graphs"};
  app.require_subcommand(1);
  bool as_json = false;
  bool verify = false;
  std::string path;
  std::string kind = "min";

  auto file_cmd = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", path, "graph file, - for stdin")->required();
    sub->add_flag("--json", as_json, "JSON output");
    return sub;
  };

  auto* validate_cmd = file_cmd("validate", "check the graph assumptions");
  auto* tau_cmd = file_cmd("tau", "print node<TAB>tau");
  tau_cmd->add_option("--kind", kind, "min or max")->check(CLI::IsMember({"min", "max"}));
  auto* min_cmd = file_cmd("min", "min-partition");
  auto* max_cmd = file_cmd("max", "max-partition");
  auto* minmax_cmd = file_cmd("minmax", "joint min/max-partition");
  for (auto* sub : {min_cmd, max_cmd, minmax_cmd}) sub->add_flag("--verify", verify, "compare with the oracle");
  auto* oracle_cmd = file_cmd("oracle", "brute-force partition");
  oracle_cmd->add_option("--kind", kind, "min, max or minmax")->check(CLI::IsMember({"min", "max", "minmax"}));
  auto* reduce_cmd = file_cmd("reduce", "print the first reduced graph");

  GenOptions gen;
  std::string gen_kind = "random";
  std::string out;
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph");
  gen_cmd->add_option("--kind", gen_kind, "random, cycle, debruijn or chain")
      ->check(CLI::IsMember({"random", "cycle", "debruijn", "chain"}));
  gen_cmd->add_option("-n,--nodes", gen.n, "node count")->required();
  gen_cmd->add_option("--sigma", gen.sigma, "alphabet size");
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->add_option("--density", gen.density, "random: chance of filling a free slot");
  gen_cmd->add_option("-o,--output", out, "output file");

  BenchConfig bench;
  std::string bench_kind = "random";
  auto* bench_cmd = app.add_subcommand("bench", "time min_partition over sizes");
  bench_cmd->add_option("--kind", bench_kind, "generator")
      ->check(CLI::IsMember({"random", "cycle", "debruijn", "chain"}));
  bench_cmd->add_option("--sizes", bench.sizes, "node counts, comma separated")->delimiter(',')->required();
  bench_cmd->add_option("--repeats", bench.repeats, "timed runs per size");
  bench_cmd->add_option("--seed", bench.seed, "random seed");
  bench_cmd->add_option("--sigma", bench.sigma, "alphabet size, 0 for n/2");
  bench_cmd->add_option("--density", bench.density, "random: chance of filling a free slot");
  bench_cmd->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(path, as_json);
    if (*tau_cmd) return cmd_tau(path, kind, as_json);
    if (*min_cmd) return cmd_partition(path, "min", as_json, verify);
    if (*max_cmd) return cmd_partition(path, "max", as_json, verify);
    if (*minmax_cmd) return cmd_partition(path, "minmax", as_json, verify);
    if (*oracle_cmd) return cmd_oracle(path, kind, as_json);
    if (*reduce_cmd) return cmd_reduce(path, as_json);
    if (*gen_cmd) {
      gen.kind = parse_gen_kind(gen_kind);
      return cmd_gen(gen, out);
    }
    if (*bench_cmd) {
      bench.kind = parse_gen_kind(bench_kind);
      return cmd_bench(bench, as_json);
    }
  } catch (const InputError& e) {
    std::cerr << "gsa: " << e.what() << "\n";
    return kInvalid;
  } catch (const InvariantViolation& e) {
    std::cerr << "gsa: internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gsa: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "gsa: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
