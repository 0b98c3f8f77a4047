#include "nashgraph/programs.hpp"

namespace nashgraph {

namespace {

// Variables: q_0..q_{k-1} over the opponent's strategies, then eps (free).
LinearProgram best_response_program(const Game& g, Player who, Index own, bool with_eps_in_rows) {
  const std::size_t opp = g.strategy_count(opponent(who));
  const std::size_t eps = opp;
  LinearProgram lp(opp + 1);
  lp.set_free(eps);
  lp.set_objective(eps, 1);
  for (Index other = 0; other < g.strategy_count(who); ++other) {
    if (other == own) continue;
    RationalVector row(opp + 1, Rational(0));
    for (Index j = 0; j < opp; ++j) row[j] = g.payoff(who, other, j) - g.payoff(who, own, j);
    if (with_eps_in_rows) row[eps] = 1;
    lp.add_constraint(std::move(row), Relation::LessEqual, 0);
  }
  RationalVector simplex(opp + 1, Rational(1));
  simplex[eps] = 0;
  lp.add_constraint(std::move(simplex), Relation::Equal, 1);
  return lp;
}

MixedStrategy opponent_mixture(Player who, const RationalVector& assignment, std::size_t opp) {
  return MixedStrategy(opponent(who), RationalVector(assignment.begin(), assignment.begin() + static_cast<std::ptrdiff_t>(opp)));
}

}  // namespace

DominanceResult lp1_dominance(const Game& g, Player who, Index own) {
  const std::size_t opp = g.strategy_count(opponent(who));
  if (g.strategy_count(who) == 1) {
    return {false, std::nullopt, MixedStrategy::uniform(opponent(who), opp)};
  }
  LpOutcome out = solve_lp(best_response_program(g, who, own, true));
  // Always feasible and bounded: eps is capped by the payoff gaps.
  DominanceResult result;
  result.epsilon = out.objective_value;
  result.dominated = out.objective_value < 0;
  if (!result.dominated) result.witness = opponent_mixture(who, out.assignment, opp);
  return result;
}

bool mod_lp1_relevancy(const Game& g, Player who, Index own, Index forced_zero) {
  const std::size_t opp = g.strategy_count(opponent(who));
  LinearProgram lp = best_response_program(g, who, own, true);
  RationalVector fix(opp + 1, Rational(0));
  fix[forced_zero] = 1;
  lp.add_constraint(std::move(fix), Relation::Equal, 0);
  LpOutcome out = solve_lp(lp);
  switch (out.status) {
    case LpStatus::Optimal:
      return out.objective_value < 0;
    case LpStatus::Infeasible:
      // Every opponent mixture uses forced_zero.
      return true;
    case LpStatus::Unbounded:
      return false;
  }
  return false;
}

DomainCheck lp2_domain_check(const Game& g, Player who, Index own, const IndexSet& positive, const IndexSet& zero) {
  const std::size_t opp = g.strategy_count(opponent(who));
  const std::size_t eps = opp;
  LinearProgram lp = best_response_program(g, who, own, false);
  for (Index j : positive) {
    RationalVector row(opp + 1, Rational(0));
    row[j] = 1;
    row[eps] = -1;
    lp.add_constraint(std::move(row), Relation::GreaterEqual, 0);
  }
  for (Index k : zero) {
    RationalVector row(opp + 1, Rational(0));
    row[k] = 1;
    lp.add_constraint(std::move(row), Relation::Equal, 0);
  }
  LpOutcome out = solve_lp(lp);
  DomainCheck result;
  if (out.status == LpStatus::Optimal && out.objective_value > 0) {
    result.member = true;
    result.witness = opponent_mixture(who, out.assignment, opp);
  }
  return result;
}

Fp1Result fp1_check(const Game& g, const SupportPair& sp) {
  const std::size_t kp = sp.rows.size();
  const std::size_t kq = sp.cols.size();
  // Layout: p over sp.rows, q over sp.cols, u1, u2, eps.
  const std::size_t u1 = kp + kq;
  const std::size_t u2 = u1 + 1;
  const std::size_t eps = u1 + 2;
  const std::size_t nv = eps + 1;
  LinearProgram lp(nv);
  lp.set_free(u1);
  lp.set_free(u2);
  lp.set_free(eps);
  lp.set_objective(eps, 1);

  const IndexSet out_rows = complement(sp.rows, g.m());
  const IndexSet out_cols = complement(sp.cols, g.n());

  auto row_constraint = [&](Index x, Relation rel) {
    RationalVector c(nv, Rational(0));
    for (std::size_t j = 0; j < kq; ++j) c[kp + j] = g.a()(x, sp.cols[j]);
    c[u1] = -1;
    lp.add_constraint(std::move(c), rel, 0);
  };
  auto col_constraint = [&](Index y, Relation rel) {
    RationalVector c(nv, Rational(0));
    for (std::size_t i = 0; i < kp; ++i) c[i] = g.b()(sp.rows[i], y);
    c[u2] = -1;
    lp.add_constraint(std::move(c), rel, 0);
  };
  for (Index x : sp.rows) row_constraint(x, Relation::Equal);
  for (Index x : out_rows) row_constraint(x, Relation::LessEqual);
  for (Index y : sp.cols) col_constraint(y, Relation::Equal);
  for (Index y : out_cols) col_constraint(y, Relation::LessEqual);

  RationalVector sum_p(nv, Rational(0));
  RationalVector sum_q(nv, Rational(0));
  for (std::size_t i = 0; i < kp; ++i) sum_p[i] = 1;
  for (std::size_t j = 0; j < kq; ++j) sum_q[kp + j] = 1;
  lp.add_constraint(std::move(sum_p), Relation::Equal, 1);
  lp.add_constraint(std::move(sum_q), Relation::Equal, 1);
  for (std::size_t v = 0; v < kp + kq; ++v) {
    RationalVector c(nv, Rational(0));
    c[v] = 1;
    c[eps] = -1;
    lp.add_constraint(std::move(c), Relation::GreaterEqual, 0);
  }

  LpOutcome out = solve_lp(lp);
  Fp1Result result;
  if (out.status != LpStatus::Optimal || out.objective_value <= 0) return result;

  RationalVector p(g.m(), Rational(0));
  RationalVector q(g.n(), Rational(0));
  for (std::size_t i = 0; i < kp; ++i) p[sp.rows[i]] = out.assignment[i];
  for (std::size_t j = 0; j < kq; ++j) q[sp.cols[j]] = out.assignment[kp + j];
  result.is_equilibrium = true;
  result.witness = EquilibriumWitness{MixedStrategy(Player::One, std::move(p)), MixedStrategy(Player::Two, std::move(q)),
                                      out.assignment[u1], out.assignment[u2]};
  return result;
}

}  // namespace nashgraph
