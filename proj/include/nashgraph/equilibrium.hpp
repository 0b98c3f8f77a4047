#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nashgraph/game.hpp"
#include "nashgraph/programs.hpp"

namespace nashgraph {

struct Equilibrium {
  SupportPair support;
  MixedStrategy p;
  MixedStrategy q;
  Rational u1;
  Rational u2;
};

enum class Method { Supports, Gr, Gi };

const char* method_name(Method m);

struct EnumerationStats {
  std::uint64_t candidates = 0;  // candidate structures generated (before dedup)
  std::uint64_t fp1_calls = 0;
  std::uint64_t feasible = 0;
};

struct EquilibriumSet {
  std::string game_hash;
  Method method = Method::Supports;
  std::vector<Equilibrium> entries;  // sorted by support, distinct
  EnumerationStats stats;

  std::vector<SupportPair> supports() const;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EngineOptions {
  std::uint64_t candidate_budget = std::uint64_t{1} << 20;
  // Run iterated elimination first; indices in the result always refer to
  // the game passed in.
  bool eliminate = true;
  // Probe budget for relevancy sets; 0 picks twice the opponent count.
  std::size_t relevancy_budget = 0;
  // Longest cycle (sequence entries) collected from the G_i basis. Unset:
  // 3 when the caps are full (only 3-cycles of the complete domain graph can
  // matter), 5 otherwise.
  std::optional<std::size_t> gi_max_cycle_length;
};

// Hex FNV-1a of the serialized game.
std::string game_hash(const Game& g);

// FP1 over every support pair, smallest total size first.
EquilibriumSet enumerate_by_supports(const Game& g, const EngineOptions& options = {});

// Relevancy graph, its cycle basis and support trees, each tree checked by FP1.
EquilibriumSet enumerate_by_gr(const Game& g, const EngineOptions& options = {});

// Intermediate domain graph with vertex sizes capped at k (rows) and l
// (columns); caps above the reduced game's sizes are clamped. Complete when
// the caps cover the reduced game.
EquilibriumSet enumerate_by_gi(const Game& g, std::size_t k, std::size_t l, const EngineOptions& options = {});

struct EliminableStrategies {
  IndexSet rows;
  IndexSet cols;
};

// Strategies that appear in no support of `omega`.
EliminableStrategies eliminable_strategies(const Game& g, const EquilibriumSet& omega);

struct VerificationReport {
  bool valid = false;
  std::vector<std::string> violations;
};

// Mutual best-response check: every pure strategy earns at most the
// strategy's expected payoff.
VerificationReport verify_equilibrium(const Game& g, const MixedStrategy& p, const MixedStrategy& q);

}  // namespace nashgraph
