#include "nashgraph/equilibrium.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>

#include "nashgraph/cycles.hpp"
#include "nashgraph/dominance_graph.hpp"

namespace nashgraph {

const char* method_name(Method m) {
  switch (m) {
    case Method::Supports:
      return "supports";
    case Method::Gr:
      return "gr";
    case Method::Gi:
      return "gi";
  }
  return "?";
}

std::vector<SupportPair> EquilibriumSet::supports() const {
  std::vector<SupportPair> out;
  for (const auto& e : entries) out.push_back(e.support);
  return out;
}

std::string game_hash(const Game& g) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : write_game(g)) h = (h ^ c) * 1099511628211ULL;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

ReducedGame prepare(const Game& g, const EngineOptions& options) {
  if (options.eliminate) return iterated_elimination(g);
  IndexSet rows(g.m());
  IndexSet cols(g.n());
  std::iota(rows.begin(), rows.end(), Index{0});
  std::iota(cols.begin(), cols.end(), Index{0});
  return {g, rows, cols};
}

// Candidates are checked smallest total size first.
struct CandidateOrder {
  bool operator()(const SupportPair& a, const SupportPair& b) const {
    std::size_t sa = a.rows.size() + a.cols.size();
    std::size_t sb = b.rows.size() + b.cols.size();
    if (sa != sb) return sa < sb;
    return a < b;
  }
};
using CandidateSet = std::set<SupportPair, CandidateOrder>;

EquilibriumSet check_candidates(const Game& original, const ReducedGame& reduced, const CandidateSet& candidates,
                                Method method, EnumerationStats stats) {
  EquilibriumSet result;
  result.game_hash = game_hash(original);
  result.method = method;
  for (const SupportPair& sp : candidates) {
    ++stats.fp1_calls;
    Fp1Result fp = fp1_check(reduced.game, sp);
    if (!fp.is_equilibrium) continue;
    ++stats.feasible;
    RationalVector p(original.m(), Rational(0));
    RationalVector q(original.n(), Rational(0));
    for (Index i = 0; i < reduced.row_map.size(); ++i) p[reduced.row_map[i]] = fp.witness->p[i];
    for (Index j = 0; j < reduced.col_map.size(); ++j) q[reduced.col_map[j]] = fp.witness->q[j];
    result.entries.push_back({SupportPair{map_indices(sp.rows, reduced.row_map), map_indices(sp.cols, reduced.col_map)},
                              MixedStrategy(Player::One, std::move(p)), MixedStrategy(Player::Two, std::move(q)),
                              fp.witness->u1, fp.witness->u2});
  }
  std::sort(result.entries.begin(), result.entries.end(),
            [](const Equilibrium& a, const Equilibrium& b) { return a.support < b.support; });
  result.stats = stats;
  return result;
}

// Collects tree supports, charging each generated tree against the budget.
EquilibriumSet from_trees(const Game& original, const ReducedGame& reduced, const BipartiteDigraph& graph,
                          const std::vector<CycleBasisEntry>& basis, TreeMode mode, TreeCaps caps, Method method,
                          const EngineOptions& options) {
  CandidateSet candidates;
  EnumerationStats stats;
  bool over = false;
  enumerate_support_trees(graph, basis, mode, caps, [&](const SupportTree& tree) {
    if (++stats.candidates > options.candidate_budget) {
      over = true;
      return false;
    }
    candidates.insert(tree_support(graph, basis, tree));
    return true;
  });
  if (over) {
    throw BudgetExceeded(std::string(method_name(method)) + ": more than " + std::to_string(options.candidate_budget) +
                         " candidate trees");
  }
  return check_candidates(original, reduced, candidates, method, stats);
}

}  // namespace

EquilibriumSet enumerate_by_supports(const Game& g, const EngineOptions& options) {
  ReducedGame reduced = prepare(g, options);
  const std::size_t m = reduced.game.m();
  const std::size_t n = reduced.game.n();
  // (2^m - 1)(2^n - 1) without overflow for any realistic budget.
  if (m >= 63 || n >= 63 || ((std::uint64_t{1} << m) - 1) > options.candidate_budget / ((std::uint64_t{1} << n) - 1)) {
    throw BudgetExceeded("supports: " + std::to_string(m) + "x" + std::to_string(n) +
                         " support space exceeds the candidate budget of " + std::to_string(options.candidate_budget));
  }
  CandidateSet candidates;
  const auto rows = subsets_by_size(m, m);
  const auto cols = subsets_by_size(n, n);
  for (const auto& r : rows) {
    for (const auto& c : cols) candidates.insert({r, c});
  }
  EnumerationStats stats;
  stats.candidates = candidates.size();
  return check_candidates(g, reduced, candidates, Method::Supports, stats);
}

EquilibriumSet enumerate_by_gr(const Game& g, const EngineOptions& options) {
  ReducedGame reduced = prepare(g, options);
  BipartiteDigraph graph = build_gr(reduced.game, options.relevancy_budget);
  auto basis = cycle_basis(graph);
  return from_trees(g, reduced, graph, basis, TreeMode::Gr, {reduced.game.m(), reduced.game.n()}, Method::Gr, options);
}

EquilibriumSet enumerate_by_gi(const Game& g, std::size_t k, std::size_t l, const EngineOptions& options) {
  if (k == 0 || l == 0) throw std::invalid_argument("gi caps must be positive");
  ReducedGame reduced = prepare(g, options);
  const Game& game = reduced.game;
  k = std::min(k, game.m());
  l = std::min(l, game.n());
  const bool full = k == game.m() && l == game.n();
  BipartiteDigraph graph = build_gi(game, k, l);
  auto basis = cycle_basis(graph, options.gi_max_cycle_length.value_or(full ? 3 : 5));
  return from_trees(g, reduced, graph, basis, TreeMode::Gi, {game.m(), game.n()}, Method::Gi, options);
}

EliminableStrategies eliminable_strategies(const Game& g, const EquilibriumSet& omega) {
  std::vector<bool> row_used(g.m(), false);
  std::vector<bool> col_used(g.n(), false);
  for (const auto& e : omega.entries) {
    for (Index x : e.support.rows) row_used[x] = true;
    for (Index y : e.support.cols) col_used[y] = true;
  }
  EliminableStrategies out;
  for (Index x = 0; x < g.m(); ++x) {
    if (!row_used[x]) out.rows.push_back(x);
  }
  for (Index y = 0; y < g.n(); ++y) {
    if (!col_used[y]) out.cols.push_back(y);
  }
  return out;
}

VerificationReport verify_equilibrium(const Game& g, const MixedStrategy& p, const MixedStrategy& q) {
  if (p.size() != g.m() || q.size() != g.n()) throw std::invalid_argument("strategy length does not match game");
  const Payoffs u = expected_payoffs(g, p, q);
  VerificationReport report;
  for (Index x = 0; x < g.m(); ++x) {
    Rational earn = pure_payoff(g, Player::One, x, q);
    if (earn > u.u1) {
      report.violations.push_back("row " + std::to_string(x + 1) + " earns " + to_string(earn) + " > u1 = " +
                                  to_string(u.u1));
    }
  }
  for (Index y = 0; y < g.n(); ++y) {
    Rational earn = pure_payoff(g, Player::Two, y, p);
    if (earn > u.u2) {
      report.violations.push_back("col " + std::to_string(y + 1) + " earns " + to_string(earn) + " > u2 = " +
                                  to_string(u.u2));
    }
  }
  report.valid = report.violations.empty();
  return report;
}

}  // namespace nashgraph
