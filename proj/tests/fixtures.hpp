#pragma once

#include <vector>

#include "nashgraph/game.hpp"

namespace fixtures {

inline nashgraph::Game game(const std::vector<std::vector<long>>& a, const std::vector<std::vector<long>>& b) {
  nashgraph::RationalMatrix ma(a.size(), a[0].size());
  nashgraph::RationalMatrix mb(a.size(), a[0].size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[0].size(); ++j) {
      ma(i, j) = a[i][j];
      mb(i, j) = b[i][j];
    }
  }
  return nashgraph::Game(ma, mb);
}

inline nashgraph::Game prisoners_dilemma() { return game({{3, 0}, {5, 1}}, {{3, 5}, {0, 1}}); }
inline nashgraph::Game matching_pennies() { return game({{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}}); }
inline nashgraph::Game battle_of_sexes() { return game({{2, 0}, {0, 1}}, {{1, 0}, {0, 2}}); }
inline nashgraph::Game single() { return game({{7}}, {{7}}); }
// Row 2 is strictly dominated; the column player is indifferent.
inline nashgraph::Game flat_degenerate() { return game({{1, 1}, {0, 0}}, {{1, 1}, {0, 0}}); }

inline nashgraph::MixedStrategy mix(nashgraph::Player who, std::vector<nashgraph::Rational> probs) {
  return nashgraph::MixedStrategy(who, std::move(probs));
}

}  // namespace fixtures
