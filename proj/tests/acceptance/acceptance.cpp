// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nashgraph/cli.hpp"
#include "nashgraph/cycles.hpp"
#include "nashgraph/dominance_graph.hpp"
#include "nashgraph/equilibrium.hpp"
#include "nashgraph/programs.hpp"

using namespace nashgraph;

namespace {

std::set<int> failed;

void report(int id, const std::string& name, bool ok, const std::string& detail, double seconds) {
  std::printf("%s criterion %d: %s (%s; %.1fs)\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) failed.insert(id);
}

double since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

Game make_game(std::vector<std::vector<long>> a, std::vector<std::vector<long>> b) {
  RationalMatrix ma(a.size(), a[0].size());
  RationalMatrix mb(a.size(), a[0].size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[0].size(); ++j) {
      ma(i, j) = a[i][j];
      mb(i, j) = b[i][j];
    }
  }
  return Game(ma, mb);
}

// Rank of a rational matrix by Gaussian elimination.
std::size_t rank(std::vector<RationalVector> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

// The indifference system for q (A rows x cols, u1 unknown, sum q = 1) and its
// mirror for p have unique solutions iff their coefficient matrices have full
// column rank.
bool witness_unique(const Game& g, const SupportPair& s) {
  std::vector<RationalVector> qsys;
  for (auto x : s.rows) {
    RationalVector row;
    for (auto y : s.cols) row.push_back(g.a()(x, y));
    row.push_back(-1);
    qsys.push_back(row);
  }
  qsys.push_back(RationalVector(s.cols.size(), 1));
  qsys.back().push_back(0);
  std::vector<RationalVector> psys;
  for (auto y : s.cols) {
    RationalVector row;
    for (auto x : s.rows) row.push_back(g.b()(x, y));
    row.push_back(-1);
    psys.push_back(row);
  }
  psys.push_back(RationalVector(s.rows.size(), 1));
  psys.back().push_back(0);
  return rank(qsys) == s.cols.size() + 1 && rank(psys) == s.rows.size() + 1;
}

std::string show(const std::vector<SupportPair>& v) {
  std::string out;
  for (const auto& s : v) out += "(" + format_index_set(s.rows) + "," + format_index_set(s.cols) + ")";
  return out;
}

// Criteria 1, 7 and 9 share one corpus.
void corpus_criteria() {
  const auto started = std::chrono::steady_clock::now();
  std::size_t mismatches = 0;
  std::size_t realization_failures = 0;
  std::size_t equilibria = 0;
  std::size_t unique_games = 0;
  std::size_t unbalanced_in_unique = 0;
  std::string first_mismatch;
  double realization_seconds = 0;
  double balance_seconds = 0;

  for (std::size_t i = 0; i < 200; ++i) {
    const std::size_t m = 2 + i % 4;
    const std::size_t n = 2 + (i / 4) % 4;
    const Game g = generate_random_game(m, n, 7000 + i);
    const auto oracle = enumerate_by_supports(g);
    const auto gr = enumerate_by_gr(g);
    const auto gi = enumerate_by_gi(g, m, n);
    if (gr.supports() != oracle.supports() || gi.supports() != oracle.supports()) {
      ++mismatches;
      if (first_mismatch.empty()) {
        first_mismatch = "game " + std::to_string(i) + " oracle " + show(oracle.supports()) + " gr " +
                         show(gr.supports()) + " gi " + show(gi.supports());
      }
    }
    equilibria += oracle.entries.size();

    auto t7 = std::chrono::steady_clock::now();
    const ReducedGame reduced = iterated_elimination(g);
    const BipartiteDigraph graph = build_gr(reduced.game);
    const auto basis = cycle_basis(graph);
    for (const auto& e : oracle.entries) {
      const std::set<Index> rows(e.support.rows.begin(), e.support.rows.end());
      const std::set<Index> cols(e.support.cols.begin(), e.support.cols.end());
      const std::size_t want = 2 * std::min(rows.size(), cols.size());
      bool found = false;
      for (const auto& b : basis) {
        if (b.distinct_count() != want) continue;
        IndexSet br;
        IndexSet bc;
        for (auto v : b.left_set) br.push_back(reduced.row_map[graph.left()[v].front()]);
        for (auto v : b.right_set) bc.push_back(reduced.col_map[graph.right()[v].front()]);
        const bool inside = std::all_of(br.begin(), br.end(), [&](Index x) { return rows.count(x); }) &&
                            std::all_of(bc.begin(), bc.end(), [&](Index y) { return cols.count(y); });
        if (!inside) continue;
        if (rows.size() == cols.size()) {
          std::sort(br.begin(), br.end());
          std::sort(bc.begin(), bc.end());
          if (br != e.support.rows || bc != e.support.cols) continue;
        }
        found = true;
        break;
      }
      if (!found) ++realization_failures;
    }
    realization_seconds += since(t7);

    auto t9 = std::chrono::steady_clock::now();
    const bool unique = std::all_of(oracle.entries.begin(), oracle.entries.end(),
                                    [&](const Equilibrium& e) { return witness_unique(g, e.support); });
    if (unique) {
      ++unique_games;
      for (const auto& e : oracle.entries) unbalanced_in_unique += e.support.rows.size() != e.support.cols.size();
    }
    balance_seconds += since(t9);
  }

  const double total = since(started);
  std::string d1 = "200 games, " + std::to_string(equilibria) + " equilibria, " + std::to_string(mismatches) +
                   " mismatching games";
  if (!first_mismatch.empty()) d1 += "; first: " + first_mismatch;
  report(1, "oracle equivalence of gr and full-cap gi", mismatches == 0 && total < 300, d1, total);
  report(7, "every equilibrium is realized by a relevancy-graph basis entry", realization_failures == 0,
         std::to_string(equilibria - realization_failures) + "/" + std::to_string(equilibria) + " realized",
         realization_seconds);
  report(9, "unique-witness games have balanced supports", unique_games > 0 && unbalanced_in_unique == 0,
         std::to_string(unique_games) + " qualifying games, " + std::to_string(unbalanced_in_unique) +
             " unbalanced equilibria",
         balance_seconds);
}

void golden_vectors() {
  const auto started = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += what + " ";
    }
  };
  const Game pd = make_game({{3, 0}, {5, 1}}, {{3, 5}, {0, 1}});
  const Game mp = make_game({{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}});
  const Game bos = make_game({{2, 0}, {0, 1}}, {{1, 0}, {0, 2}});
  const Rational half(1, 2);
  for (auto method : {Method::Supports, Method::Gr, Method::Gi}) {
    auto run = [&](const Game& g) {
      if (method == Method::Supports) return enumerate_by_supports(g);
      if (method == Method::Gr) return enumerate_by_gr(g);
      return enumerate_by_gi(g, g.m(), g.n());
    };
    const std::string tag = method_name(method);
    const auto a = run(pd);
    expect(a.supports() == std::vector<SupportPair>{{{1}, {1}}}, tag + ":pd");
    expect(a.entries.size() == 1 && a.entries[0].u1 == 1 && a.entries[0].u2 == 1, tag + ":pd-payoff");
    const auto b = run(mp);
    expect(b.supports() == std::vector<SupportPair>{{{0, 1}, {0, 1}}}, tag + ":mp");
    expect(b.entries.size() == 1 && b.entries[0].p.probs() == RationalVector{half, half} &&
               b.entries[0].q.probs() == RationalVector{half, half},
           tag + ":mp-witness");
    const auto c = run(bos);
    expect(c.supports() == std::vector<SupportPair>{{{0}, {0}}, {{0, 1}, {0, 1}}, {{1}, {1}}}, tag + ":bos");
    bool mixed = false;
    for (const auto& e : c.entries) {
      if (e.support.rows.size() == 2) {
        mixed = e.p.probs() == RationalVector{Rational(2, 3), Rational(1, 3)} &&
                e.q.probs() == RationalVector{Rational(1, 3), Rational(2, 3)} && e.u1 == Rational(2, 3) &&
                e.u2 == Rational(2, 3);
      }
    }
    expect(mixed, tag + ":bos-witness");
  }
  report(2, "golden vectors for PD, matching pennies, battle of the sexes", ok,
         ok ? "all three methods exact" : detail, since(started));
}

void three_cycle_soundness() {
  const auto started = std::chrono::steady_clock::now();
  std::size_t cycles = 0;
  std::size_t failed = 0;
  std::string first;
  for (std::size_t i = 0; i < 50; ++i) {
    const Game g = generate_random_game(4, 4, 9100 + i);
    const BipartiteDigraph gd = build_gd(g, 4, 4);
    for (const auto& e : cycle_basis(gd, 3)) {
      if (e.distinct_count() != 2 || e.artificial) continue;
      ++cycles;
      const SupportPair sp{gd.left()[e.left_set[0]], gd.right()[e.right_set[0]]};
      if (!fp1_check(g, sp).is_equilibrium) {
        ++failed;
        if (first.empty()) {
          first = "seed " + std::to_string(9100 + i) + " " + format_index_set(sp.rows) + "x" +
                  format_index_set(sp.cols);
        }
      }
    }
  }
  std::string detail = std::to_string(cycles - failed) + "/" + std::to_string(cycles) + " 3-cycles feasible";
  if (!first.empty()) detail += "; first counterexample " + first;
  const double t = since(started);
  report(3, "every 3-cycle of the full domain graph is an equilibrium", failed == 0 && t < 120, detail, t);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void basis_combinatorics() {
  const auto started = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto g = BipartiteDigraph::complete(m, n);
      std::uint64_t want = 0;
      for (std::size_t k = 1; k <= std::min(m, n); ++k) want += binomial(m, k) * binomial(n, k);
      const auto basis = cycle_basis(g);
      std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> from_basis;
      for (const auto& e : basis) from_basis.insert({e.left_set, e.right_set});
      std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> from_johnson;
      for (const auto& c : johnson_cycles(g)) {
        std::set<std::size_t> l;
        std::set<std::size_t> r;
        for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i) {
          if (g.is_left(c.vertices[i])) {
            l.insert(c.vertices[i]);
          } else {
            r.insert(c.vertices[i] - m);
          }
        }
        from_johnson.insert({{l.begin(), l.end()}, {r.begin(), r.end()}});
      }
      if (basis.size() != want || from_basis != from_johnson) {
        ok = false;
        detail += std::to_string(m) + "+" + std::to_string(n) + " ";
      }
    }
  }
  const bool anchors = cycle_basis(BipartiteDigraph::complete(2, 2)).size() == 5 &&
                       cycle_basis(BipartiteDigraph::complete(3, 3)).size() == 19;
  report(4, "complete-graph basis sizes match the binomial sum and deduplicated circuits", ok && anchors,
         ok ? "all sides 1..4, 2+2=5, 3+3=19" : "mismatch at " + detail, since(started));
}

std::size_t brute_force_cycles(const Digraph& g) {
  std::size_t count = 0;
  const std::size_t n = g.size();
  std::vector<bool> on_path(n, false);
  std::function<void(VertexId, VertexId)> walk = [&](VertexId start, VertexId v) {
    for (auto w : g.out[v]) {
      if (w == start) {
        ++count;
      } else if (w > start && !on_path[w]) {
        on_path[w] = true;
        walk(start, w);
        on_path[w] = false;
      }
    }
  };
  for (VertexId s = 0; s < n; ++s) {
    on_path[s] = true;
    walk(s, s);
    on_path[s] = false;
  }
  return count;
}

void johnson_correctness() {
  const auto started = std::chrono::steady_clock::now();
  std::mt19937_64 rng(5150);
  std::size_t bad = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 8;
    const double density = 0.1 + 0.3 * static_cast<double>(rng() % 1000) / 1000.0;
    std::bernoulli_distribution coin(density);
    Digraph g(n);
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = 0; b < n; ++b) {
        if (coin(rng)) g.add_arc(a, b);
      }
    }
    if (johnson_cycles(g).size() != brute_force_cycles(g)) ++bad;
  }
  const std::size_t complete = johnson_cycles(BipartiteDigraph::complete(2, 2)).size();
  report(5, "circuit counts match brute force", bad == 0 && complete == 6,
         std::to_string(100 - bad) + "/100 random graphs agree, complete 2+2 has " + std::to_string(complete),
         since(started));
}

void dominance_invariants() {
  const auto started = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  std::size_t dominated_total = 0;
  for (std::size_t t = 0; t < 20; ++t) {
    // Random 3x3 base plus a row lying pointwise below a base row and a
    // column lying pointwise below a base column.
    const Game base = generate_random_game(3, 3, 4400 + t);
    const Index donor_row = t % 3;
    const Index donor_col = (t + 1) % 3;
    RationalMatrix a(4, 4);
    RationalMatrix b(4, 4);
    for (Index x = 0; x < 4; ++x) {
      for (Index y = 0; y < 4; ++y) {
        const Index bx = x == 3 ? donor_row : x;
        const Index by = y == 3 ? donor_col : y;
        a(x, y) = base.a()(bx, by) - (x == 3 ? Rational(1, 10) : Rational(0));
        b(x, y) = base.b()(bx, by) - (y == 3 ? Rational(1, 10) : Rational(0));
      }
    }
    const Game g(a, b);

    IndexSet dom_rows;
    IndexSet dom_cols;
    for (Index x = 0; x < 4; ++x) {
      if (lp1_dominance(g, Player::One, x).dominated) dom_rows.push_back(x);
      if (lp1_dominance(g, Player::Two, x).dominated) dom_cols.push_back(x);
    }
    if (std::find(dom_rows.begin(), dom_rows.end(), 3) == dom_rows.end() ||
        std::find(dom_cols.begin(), dom_cols.end(), 3) == dom_cols.end()) {
      ok = false;
      detail += "planted strategy not dominated; ";
    }
    dominated_total += dom_rows.size() + dom_cols.size();
    auto is_dominated = [&](Player who, Index s) {
      const auto& set = who == Player::One ? dom_rows : dom_cols;
      return std::find(set.begin(), set.end(), s) != set.end();
    };

    for (auto x : dom_rows) {
      if (!compute_domain(g, Player::One, x, 4).empty()) ok = false, detail += "non-empty row domain; ";
      if (!compute_relevancy(g, Player::One, x).members.empty()) ok = false, detail += "row relevancy; ";
    }
    for (auto y : dom_cols) {
      if (!compute_domain(g, Player::Two, y, 4).empty()) ok = false, detail += "non-empty col domain; ";
      if (!compute_relevancy(g, Player::Two, y).members.empty()) ok = false, detail += "col relevancy; ";
    }

    // The relevancy graph the pipelines build never leans on a dominated
    // strategy, neither as a member nor inside a backing witness.
    const ReducedGame reduced = iterated_elimination(g);
    const RelevancyTable table = compute_relevancy_table(reduced.game);
    auto scan = [&](const std::vector<RelevancyRow>& rows, Player owner) {
      const auto& own_map = owner == Player::One ? reduced.row_map : reduced.col_map;
      const auto& opp_map = owner == Player::One ? reduced.col_map : reduced.row_map;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (is_dominated(owner, own_map[i])) ok = false, detail += "dominated vertex kept; ";
        for (const auto& mem : rows[i].members) {
          if (is_dominated(opponent(owner), opp_map[mem.strategy])) ok = false, detail += "dominated member; ";
          if (mem.witness) {
            for (auto s : mem.witness->support()) {
              if (is_dominated(opponent(owner), opp_map[s])) ok = false, detail += "dominated in witness; ";
            }
          }
        }
      }
    };
    scan(table.rows, Player::One);
    scan(table.cols, Player::Two);

    EngineOptions raw;
    raw.eliminate = false;
    for (const auto& s : enumerate_by_supports(g, raw).supports()) {
      for (auto x : s.rows) {
        if (is_dominated(Player::One, x)) ok = false, detail += "dominated row in equilibrium; ";
      }
      for (auto y : s.cols) {
        if (is_dominated(Player::Two, y)) ok = false, detail += "dominated col in equilibrium; ";
      }
    }
  }
  report(6, "dominated strategies have empty domains, no relevancy backing and no equilibrium role", ok,
         ok ? "20 games, " + std::to_string(dominated_total) + " dominated strategies" : detail, since(started));
}

void table_pipeline() {
  const auto started = std::chrono::steady_clock::now();
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli({"stats", "--sizes", "7..7", "--trials", "10", "--output", "structured"}, out, err);
  const std::string text = out.str();
  bool ok = code == 0;
  std::string mean_basis;
  std::string mean_ratio;
  std::istringstream fields(text);
  std::string field;
  while (fields >> field) {
    if (field.rfind("mean_basis=", 0) == 0) mean_basis = field.substr(11);
    if (field.rfind("mean_ratio=", 0) == 0) mean_ratio = field.substr(11);
  }
  ok = ok && !mean_basis.empty() && !mean_ratio.empty();
  if (ok) ok = parse_rational(mean_ratio) <= Rational(3431, 16129);
  const double t = since(started);
  char buf[160];
  std::snprintf(buf, sizeof buf, "mean basis %s, mean ratio %s = %.4f, bound 0.2127",
                mean_basis.c_str(), mean_ratio.c_str(), mean_ratio.empty() ? 0.0 : parse_rational(mean_ratio).get_d());
  report(8, "relevancy-graph statistics for 7x7 stay under the complete-graph ratio", ok && t < 120, buf, t);
}

void degenerate_case() {
  const auto started = std::chrono::steady_clock::now();
  const Game g = make_game({{1, 1}, {0, 0}}, {{1, 1}, {0, 0}});
  const std::vector<SupportPair> want{{{0}, {0}}, {{0}, {1}}, {{0}, {0, 1}}};
  auto covers = [&](const EquilibriumSet& s) {
    const auto got = s.supports();
    return std::all_of(want.begin(), want.end(),
                       [&](const SupportPair& w) { return std::find(got.begin(), got.end(), w) != got.end(); });
  };
  const auto oracle = enumerate_by_supports(g);
  const auto gr = enumerate_by_gr(g);
  report(10, "unbalanced supports of a degenerate game through support trees", covers(oracle) && covers(gr),
         "oracle " + show(oracle.supports()) + " gr " + show(gr.supports()), since(started));
}

}  // namespace

// --known-failure N (repeatable) names criteria that are expected to print
// FAIL. The exit status is zero only when the failing criteria are exactly
// the known ones, so any other regression, or a known failure starting to
// pass, still breaks the run.
int main(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--known-failure") known.insert(std::stoi(argv[++i]));
  }

  corpus_criteria();
  golden_vectors();
  three_cycle_soundness();
  basis_combinatorics();
  johnson_correctness();
  dominance_invariants();
  table_pipeline();
  degenerate_case();
  std::printf("%zu of 10 criteria failed", failed.size());
  for (int id : failed) std::printf(" [%d%s]", id, known.count(id) ? ", known" : "");
  std::printf("\n");
  if (failed != known) {
    std::printf("failing set differs from the known failures\n");
    return 1;
  }
  return 0;
}
