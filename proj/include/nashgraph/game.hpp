#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nashgraph/rational.hpp"

namespace nashgraph {

enum class Player : int { One = 1, Two = 2 };

constexpr Player opponent(Player p) { return p == Player::One ? Player::Two : Player::One; }

using Index = std::size_t;
// Sorted, duplicate free.
using IndexSet = std::vector<Index>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  RationalVector data_;
};

// Two-player bimatrix game. Row player (Player::One) has m pure strategies and
// payoff matrix A, column player has n strategies and payoff matrix B; both
// matrices are m x n.
class Game {
 public:
  Game(RationalMatrix a, RationalMatrix b);

  std::size_t m() const { return a_.rows(); }
  std::size_t n() const { return a_.cols(); }
  const RationalMatrix& a() const { return a_; }
  const RationalMatrix& b() const { return b_; }

  std::size_t strategy_count(Player who) const { return who == Player::One ? m() : n(); }

  // Payoff to `who` when it plays `own` and the opponent plays `opp`.
  const Rational& payoff(Player who, Index own, Index opp) const {
    return who == Player::One ? a_(own, opp) : b_(opp, own);
  }

  // Submatrix game on the given (sorted) strategy subsets.
  Game restrict(const IndexSet& rows, const IndexSet& cols) const;

  bool operator==(const Game&) const = default;

 private:
  RationalMatrix a_;
  RationalMatrix b_;
};

class MixedStrategy {
 public:
  // Throws std::invalid_argument unless probabilities are non-negative and
  // sum to exactly one.
  MixedStrategy(Player owner, RationalVector probs);

  static MixedStrategy pure(Player owner, std::size_t size, Index strategy);
  static MixedStrategy uniform(Player owner, std::size_t size);

  Player owner() const { return owner_; }
  const RationalVector& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  const Rational& operator[](Index i) const { return probs_[i]; }

  IndexSet support() const;

  bool operator==(const MixedStrategy&) const = default;

 private:
  Player owner_;
  RationalVector probs_;
};

struct SupportPair {
  IndexSet rows;
  IndexSet cols;

  auto operator<=>(const SupportPair&) const = default;
  bool operator==(const SupportPair&) const = default;
};

// Result of iterated elimination. row_map[i] is the original index of reduced
// row i (and likewise for columns); both maps are increasing.
struct ReducedGame {
  Game game;
  std::vector<Index> row_map;
  std::vector<Index> col_map;
};

class GameParseError : public std::runtime_error {
 public:
  GameParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Game parse_game(std::istream& in);
Game parse_game(std::string_view text);

void write_game(std::ostream& out, const Game& g);
std::string write_game(const Game& g);

// Entries are i.i.d. uniform on {0, 1/1000, ..., 1}. Deterministic in
// (m, n, seed) for a given build.
Game generate_random_game(std::size_t m, std::size_t n, std::uint64_t seed);

struct Payoffs {
  Rational u1;
  Rational u2;
};

Payoffs expected_payoffs(const Game& g, const MixedStrategy& p, const MixedStrategy& q);

// Expected payoff of pure strategy `own` of `who` against the opponent's
// mixture.
Rational pure_payoff(const Game& g, Player who, Index own, const MixedStrategy& opp);

bool is_best_response(const Game& g, Player who, Index own, const MixedStrategy& opp);

// Iterated removal of strategies strictly dominated by a pure or mixed
// strategy (LP test), alternating players until nothing changes.
ReducedGame iterated_elimination(const Game& g);

IndexSet complement(const IndexSet& set, std::size_t universe);
std::string format_index_set(const IndexSet& set);  // "{1,3}" one-based

}  // namespace nashgraph
