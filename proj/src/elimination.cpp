#include <numeric>

#include "nashgraph/game.hpp"
#include "nashgraph/programs.hpp"

namespace nashgraph {

ReducedGame iterated_elimination(const Game& g) {
  IndexSet rows(g.m());
  IndexSet cols(g.n());
  std::iota(rows.begin(), rows.end(), Index{0});
  std::iota(cols.begin(), cols.end(), Index{0});

  bool changed = true;
  while (changed) {
    changed = false;
    for (Player who : {Player::One, Player::Two}) {
      IndexSet& own = who == Player::One ? rows : cols;
      bool removed = true;
      while (removed) {
        removed = false;
        const Game current = g.restrict(rows, cols);
        for (Index i = 0; i < own.size(); ++i) {
          if (lp1_dominance(current, who, i).dominated) {
            own.erase(own.begin() + static_cast<std::ptrdiff_t>(i));
            removed = changed = true;
            break;
          }
        }
      }
    }
  }
  return {g.restrict(rows, cols), rows, cols};
}

}  // namespace nashgraph
