#include "nashgraph/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "nashgraph/cycles.hpp"
#include "nashgraph/dominance_graph.hpp"
#include "nashgraph/equilibrium.hpp"
#include "nashgraph/stats.hpp"

namespace nashgraph {

namespace {

struct RunConfig {
  std::string input;
  std::string method = "gr";
  std::string graph = "gr";
  std::optional<std::size_t> k;
  std::optional<std::size_t> l;
  std::optional<std::size_t> max_length;
  std::uint64_t seed = 1;
  std::size_t trials = 10;
  std::string sizes = "7..7";
  std::uint64_t budget = std::uint64_t{1} << 20;
  std::string output = "text";
  bool dump_graph = false;
  bool no_eliminate = false;
  std::size_t rows = 2;
  std::size_t cols = 2;
  std::string out_path;
  std::string p;
  std::string q;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Game load_game(const std::string& path) {
  if (path == "-") return parse_game(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return parse_game(in);
}

bool structured(const RunConfig& cfg) { return cfg.output == "structured"; }

std::string plain_list(const IndexSet& set) {
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(set[i] + 1);
  }
  return out;
}

void check_caps(const RunConfig& cfg, const Game& g) {
  if (cfg.k && (*cfg.k < 1 || *cfg.k > g.m())) throw UsageError("--k must lie in 1.." + std::to_string(g.m()));
  if (cfg.l && (*cfg.l < 1 || *cfg.l > g.n())) throw UsageError("--l must lie in 1.." + std::to_string(g.n()));
}

EngineOptions engine_options(const RunConfig& cfg) {
  EngineOptions opts;
  opts.candidate_budget = cfg.budget;
  opts.eliminate = !cfg.no_eliminate;
  opts.gi_max_cycle_length = cfg.max_length;
  return opts;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Game g = load_game(cfg.input);
  check_caps(cfg, g);
  const auto started = std::chrono::steady_clock::now();
  EquilibriumSet omega;
  const EngineOptions opts = engine_options(cfg);
  if (cfg.method == "supports") {
    omega = enumerate_by_supports(g, opts);
  } else if (cfg.method == "gr") {
    omega = enumerate_by_gr(g, opts);
  } else {
    omega = enumerate_by_gi(g, cfg.k.value_or(g.m()), cfg.l.value_or(g.n()), opts);
  }
  const double wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();

  for (const auto& e : omega.entries) {
    if (structured(cfg)) {
      out << "record=equilibrium rows=" << plain_list(e.support.rows) << " cols=" << plain_list(e.support.cols)
          << " p=" << join(e.p.probs()) << " q=" << join(e.q.probs()) << " u1=" << to_string(e.u1)
          << " u2=" << to_string(e.u2) << '\n';
    } else {
      out << "rows=" << format_index_set(e.support.rows) << " cols=" << format_index_set(e.support.cols) << " p=("
          << join(e.p.probs()) << ") q=(" << join(e.q.probs()) << ") u1=" << to_string(e.u1)
          << " u2=" << to_string(e.u2) << '\n';
    }
  }
  const auto& s = omega.stats;
  if (structured(cfg)) {
    out << "record=stats method=" << method_name(omega.method) << " game=" << omega.game_hash
        << " equilibria=" << omega.entries.size() << " candidates=" << s.candidates << " fp1_calls=" << s.fp1_calls
        << " feasible=" << s.feasible << '\n';
    err << "wall_ms=" << std::fixed << std::setprecision(3) << wall_ms << '\n';
  } else {
    out << "# method=" << method_name(omega.method) << " equilibria=" << omega.entries.size()
        << " candidates=" << s.candidates << " fp1_calls=" << s.fp1_calls << " feasible=" << s.feasible
        << " wall_ms=" << std::fixed << std::setprecision(3) << wall_ms << '\n';
  }
  return kExitOk;
}

std::string vertex_list(const BipartiteDigraph& g, const std::vector<std::size_t>& ids, bool left,
                        const std::vector<Index>& map, bool nested) {
  const auto& labels = left ? g.left() : g.right();
  if (!nested) {
    IndexSet flat;
    for (auto i : ids) flat.push_back(labels[i].front());
    return format_index_set(map_indices(flat, map));
  }
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += format_index_set(map_indices(labels[ids[i]], map));
  }
  return out + "}";
}

int cmd_cycles(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Game g = load_game(cfg.input);
  check_caps(cfg, g);
  ReducedGame reduced{g, {}, {}};
  if (cfg.no_eliminate) {
    for (Index i = 0; i < g.m(); ++i) reduced.row_map.push_back(i);
    for (Index j = 0; j < g.n(); ++j) reduced.col_map.push_back(j);
  } else {
    reduced = iterated_elimination(g);
  }
  const Game& game = reduced.game;

  std::optional<BipartiteDigraph> graph;
  std::optional<std::size_t> max_length = cfg.max_length;
  if (cfg.graph == "gr") {
    graph = build_gr(game);
  } else {
    const std::size_t k = std::min(cfg.k.value_or(game.m()), game.m());
    const std::size_t l = std::min(cfg.l.value_or(game.n()), game.n());
    graph = cfg.graph == "gd" ? build_gd(game, k, l) : build_gi(game, k, l);
    if (!max_length) max_length = (k == game.m() && l == game.n()) ? 3 : 5;
  }
  const bool nested = cfg.graph != "gr";

  if (cfg.dump_graph) {
    if (!structured(cfg)) out << "# graph " << cfg.graph << '\n';
    write_graph(out, *graph, reduced.row_map, reduced.col_map);
  }

  const auto basis = cycle_basis(*graph, max_length);
  std::size_t three = 0;
  std::size_t artificial = 0;
  for (const auto& e : basis) {
    three += e.distinct_count() == 2;
    artificial += e.artificial;
    const std::string left = vertex_list(*graph, e.left_set, true, reduced.row_map, nested);
    const std::string right = vertex_list(*graph, e.right_set, false, reduced.col_map, nested);
    if (structured(cfg)) {
      out << "record=cycle k=" << e.distinct_count() << " left=" << left << " right=" << right
          << " artificial=" << (e.artificial ? 1 : 0) << '\n';
    } else {
      out << "k=" << e.distinct_count() << " left=" << left << " right=" << right << (e.artificial ? " artificial" : "")
          << '\n';
    }
  }
  const Rational space = support_pair_count(g.m(), g.n());
  const Rational ratio = Rational(static_cast<unsigned long>(basis.size())) / space;
  char decimal[32];
  std::snprintf(decimal, sizeof decimal, "%.4f", ratio.get_d());
  if (structured(cfg)) {
    out << "record=summary graph=" << cfg.graph << " basis=" << basis.size() << " three_cycles=" << three
        << " artificial=" << artificial << " support_pairs=" << to_string(space) << " ratio=" << to_string(ratio)
        << '\n';
  } else {
    out << "# graph=" << cfg.graph << " basis=" << basis.size() << " three_cycles=" << three
        << " artificial=" << artificial << " support_pairs=" << to_string(space) << " ratio=" << to_string(ratio)
        << " (" << decimal << ")\n";
  }
  return kExitOk;
}

std::pair<std::size_t, std::size_t> parse_sizes(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      std::size_t v = std::stoul(text);
      return {v, v};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("--sizes expects A..B, got '" + text + "'");
  }
}

int cmd_stats(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto [lo, hi] = parse_sizes(cfg.sizes);
  if (lo < 1 || hi < lo) throw UsageError("--sizes must satisfy 1 <= A <= B");
  if (cfg.trials < 1) throw UsageError("--trials must be at least 1");

  std::vector<BasisStats> rows;
  for (std::size_t s = lo; s <= hi; ++s) rows.push_back(basis_statistics(s, cfg.trials, cfg.seed));

  if (structured(cfg)) {
    for (const auto& r : rows) {
      out << "record=stats size=" << r.size << " trials=" << r.trials << " mean_basis=" << to_string(r.mean_basis)
          << " mean_ratio=" << to_string(r.mean_ratio) << '\n';
      err << "size=" << r.size << " mean_seconds=" << std::fixed << std::setprecision(4) << r.mean_seconds << '\n';
    }
    return kExitOk;
  }

  auto cell = [](const std::string& s) {
    std::ostringstream o;
    o << std::setw(12) << s;
    return o.str();
  };
  auto fmt = [](double v, int digits) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(digits) << v;
    return o.str();
  };
  out << std::left << std::setw(14) << "m=n=" << std::right;
  for (const auto& r : rows) out << cell(std::to_string(r.size));
  out << '\n' << std::left << std::setw(14) << "|delta|" << std::right;
  for (const auto& r : rows) out << cell(fmt(r.mean_basis.get_d(), 1));
  out << '\n' << std::left << std::setw(14) << "|delta|/|S|" << std::right;
  for (const auto& r : rows) out << cell(fmt(r.mean_ratio.get_d(), 4));
  out << '\n' << std::left << std::setw(14) << "T(sec)" << std::right;
  for (const auto& r : rows) out << cell(fmt(r.mean_seconds, 4));
  out << '\n';
  out << "# trials=" << cfg.trials << " seed=" << cfg.seed << '\n';
  return kExitOk;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.rows < 1 || cfg.cols < 1) throw UsageError("-m and -n must be positive");
  const Game g = generate_random_game(cfg.rows, cfg.cols, cfg.seed);
  if (cfg.out_path.empty()) {
    write_game(out, g);
    return kExitOk;
  }
  std::ofstream file(cfg.out_path);
  if (!file) throw UsageError("cannot write '" + cfg.out_path + "'");
  write_game(file, g);
  if (!file) throw UsageError("cannot write '" + cfg.out_path + "'");
  return kExitOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Game g = load_game(cfg.input);
  RationalVector p;
  RationalVector q;
  try {
    p = parse_rational_list(cfg.p);
    q = parse_rational_list(cfg.q);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("malformed strategy vector: ") + e.what());
  }
  if (p.size() != g.m() || q.size() != g.n()) {
    throw UsageError("strategy lengths must be " + std::to_string(g.m()) + " and " + std::to_string(g.n()));
  }
  std::optional<MixedStrategy> ps;
  std::optional<MixedStrategy> qs;
  try {
    ps.emplace(Player::One, p);
    qs.emplace(Player::Two, q);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const VerificationReport report = verify_equilibrium(g, *ps, *qs);
  const Payoffs u = expected_payoffs(g, *ps, *qs);
  out << (report.valid ? "valid" : "invalid") << " u1=" << to_string(u.u1) << " u2=" << to_string(u.u2) << '\n';
  for (const auto& v : report.violations) out << "violation: " << v << '\n';
  return report.valid ? kExitOk : kExitInvalid;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nash equilibrium support enumeration via dominance graphs", "nashgraph"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto output_opt = [&](CLI::App* sub) {
    sub->add_option("--output", cfg.output, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  };

  auto* solve = app.add_subcommand("solve", "Compute all equilibrium support pairs");
  solve->add_option("game", cfg.input, "Game file ('-' for stdin)")->required();
  solve->add_option("--method", cfg.method, "supports, gr or gi")->check(CLI::IsMember({"supports", "gr", "gi"}));
  solve->add_option("--k", cfg.k, "Largest row-vertex size for gi");
  solve->add_option("--l", cfg.l, "Largest column-vertex size for gi");
  solve->add_option("--max-len", cfg.max_length, "Longest cycle collected from the gi graph");
  solve->add_option("--budget", cfg.budget, "Candidate budget");
  solve->add_flag("--no-eliminate", cfg.no_eliminate, "Skip iterated elimination");
  output_opt(solve);

  auto* cycles = app.add_subcommand("cycles", "Print the support cycle basis of a dominance graph");
  cycles->add_option("game", cfg.input, "Game file ('-' for stdin)")->required();
  cycles->add_option("--graph", cfg.graph, "gr, gd or gi")->check(CLI::IsMember({"gr", "gd", "gi"}));
  cycles->add_option("--k", cfg.k, "Largest row-vertex size");
  cycles->add_option("--l", cfg.l, "Largest column-vertex size");
  cycles->add_option("--max-len", cfg.max_length, "Longest cycle to collect");
  cycles->add_flag("--dump-graph", cfg.dump_graph, "Print the arcs first");
  cycles->add_flag("--no-eliminate", cfg.no_eliminate, "Skip iterated elimination");
  output_opt(cycles);

  auto* stats = app.add_subcommand("stats", "Average relevancy-graph basis size over random games");
  stats->add_option("--sizes", cfg.sizes, "Square sizes A..B");
  stats->add_option("--trials", cfg.trials, "Games per size");
  stats->add_option("--seed", cfg.seed, "Base seed");
  output_opt(stats);

  auto* gen = app.add_subcommand("gen", "Write a random game");
  gen->add_option("-m", cfg.rows, "Row strategies")->required();
  gen->add_option("-n", cfg.cols, "Column strategies")->required();
  gen->add_option("--seed", cfg.seed, "Seed");
  gen->add_option("-o", cfg.out_path, "Output path (stdout when omitted)");

  auto* check = app.add_subcommand("check", "Verify a strategy pair");
  check->add_option("game", cfg.input, "Game file ('-' for stdin)")->required();
  check->add_option("--p", cfg.p, "Row mixture, e.g. 1/2,1/2")->required();
  check->add_option("--q", cfg.q, "Column mixture")->required();

  std::vector<const char*> argv{"nashgraph"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(cfg, out, err);
    if (cycles->parsed()) return cmd_cycles(cfg, out, err);
    if (stats->parsed()) return cmd_stats(cfg, out, err);
    if (gen->parsed()) return cmd_gen(cfg, out, err);
    if (check->parsed()) return cmd_check(cfg, out, err);
  } catch (const GameParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  }
  return kExitUsage;
}

}  // namespace nashgraph
