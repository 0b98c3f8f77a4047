#include "nashgraph/stats.hpp"

#include <chrono>

#include "nashgraph/cycles.hpp"
#include "nashgraph/dominance_graph.hpp"
#include "nashgraph/game.hpp"

namespace nashgraph {

std::uint64_t trial_seed(std::uint64_t seed, std::size_t size, std::size_t trial) {
  return seed * 1000003ULL + size * 1009ULL + trial;
}

Rational support_pair_count(std::size_t m, std::size_t n) {
  mpz_class a;
  mpz_class b;
  mpz_ui_pow_ui(a.get_mpz_t(), 2, m);
  mpz_ui_pow_ui(b.get_mpz_t(), 2, n);
  return Rational((a - 1) * (b - 1));
}

BasisStats basis_statistics(std::size_t size, std::size_t trials, std::uint64_t seed) {
  BasisStats stats;
  stats.size = size;
  stats.trials = trials;
  const Rational space = support_pair_count(size, size);
  Rational total_basis = 0;
  Rational total_ratio = 0;
  double total_seconds = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const Game g = generate_random_game(size, size, trial_seed(seed, size, t));
    const auto started = std::chrono::steady_clock::now();
    const ReducedGame reduced = iterated_elimination(g);
    const std::size_t basis = cycle_basis(build_gr(reduced.game)).size();
    total_seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    stats.basis_sizes.push_back(basis);
    total_basis += basis;
    total_ratio += Rational(static_cast<unsigned long>(basis)) / space;
  }
  if (trials > 0) {
    stats.mean_basis = total_basis / static_cast<unsigned long>(trials);
    stats.mean_ratio = total_ratio / static_cast<unsigned long>(trials);
    stats.mean_seconds = total_seconds / static_cast<double>(trials);
  }
  return stats;
}

}  // namespace nashgraph
