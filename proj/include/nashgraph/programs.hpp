#pragma once

#include <optional>

#include "nashgraph/game.hpp"
#include "nashgraph/lp.hpp"

namespace nashgraph {

// Dominance, relevancy, domain and equilibrium feasibility programs. In every
// program `who` is the player owning strategy `own`; the q variables range
// over the opponent's pure strategies.

struct DominanceResult {
  bool dominated = false;
  // Optimal epsilon; absent when the player has a single strategy (epsilon
  // is then unconstrained).
  std::optional<Rational> epsilon;
  // Opponent mixture to which `own` is a best response (when not dominated).
  std::optional<MixedStrategy> witness;
};

// maximize eps s.t. payoff(own', q) + eps <= payoff(own, q) for all own' != own,
// q in the simplex. Dominated iff optimal eps < 0. A lone strategy is never
// dominated.
DominanceResult lp1_dominance(const Game& g, Player who, Index own);

// The same program with q[forced_zero] = 0 added. True certifies that
// forced_zero is in the relevancy set of `own`; false is inconclusive.
bool mod_lp1_relevancy(const Game& g, Player who, Index own, Index forced_zero);

struct DomainCheck {
  bool member = false;
  std::optional<MixedStrategy> witness;
};

// maximize eps s.t. `own` is a best response to q, sum q = 1, q_j >= eps on
// positive, q_k = 0 on zero. Member iff optimal with eps > 0.
DomainCheck lp2_domain_check(const Game& g, Player who, Index own, const IndexSet& positive, const IndexSet& zero);

struct EquilibriumWitness {
  MixedStrategy p;
  MixedStrategy q;
  Rational u1;
  Rational u2;
};

struct Fp1Result {
  bool is_equilibrium = false;
  std::optional<EquilibriumWitness> witness;
};

// Feasibility program for a support pair: indifference on the supports, no
// profitable deviation outside them, and every support probability >= eps
// with eps maximized. Equilibrium iff eps > 0, so the witness has exactly
// the requested supports.
Fp1Result fp1_check(const Game& g, const SupportPair& support);

}  // namespace nashgraph
