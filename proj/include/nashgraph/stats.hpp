#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nashgraph/rational.hpp"

namespace nashgraph {

// Cycle-basis statistics of the relevancy graph over random square games.
struct BasisStats {
  std::size_t size = 0;
  std::size_t trials = 0;
  std::vector<std::size_t> basis_sizes;  // one per trial
  Rational mean_basis;
  // Mean of |basis| / ((2^size - 1)^2), the support pairs of the unreduced game.
  Rational mean_ratio;
  double mean_seconds = 0;
};

std::uint64_t trial_seed(std::uint64_t seed, std::size_t size, std::size_t trial);

BasisStats basis_statistics(std::size_t size, std::size_t trials, std::uint64_t seed);

// (2^m - 1)(2^n - 1)
Rational support_pair_count(std::size_t m, std::size_t n);

}  // namespace nashgraph
