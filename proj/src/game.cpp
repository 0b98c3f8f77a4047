#include "nashgraph/game.hpp"

#include <algorithm>
#include <istream>
#include <random>
#include <sstream>

namespace nashgraph {

Game::Game(RationalMatrix a, RationalMatrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() == 0 || a_.cols() == 0) throw std::invalid_argument("game must have at least one strategy per player");
  if (a_.rows() != b_.rows() || a_.cols() != b_.cols()) throw std::invalid_argument("payoff matrices differ in shape");
}

Game Game::restrict(const IndexSet& rows, const IndexSet& cols) const {
  RationalMatrix a(rows.size(), cols.size());
  RationalMatrix b(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      a(i, j) = a_(rows[i], cols[j]);
      b(i, j) = b_(rows[i], cols[j]);
    }
  }
  return Game(std::move(a), std::move(b));
}

MixedStrategy::MixedStrategy(Player owner, RationalVector probs) : owner_(owner), probs_(std::move(probs)) {
  if (probs_.empty()) throw std::invalid_argument("mixed strategy is empty");
  Rational total = 0;
  for (const auto& v : probs_) {
    if (v < 0) throw std::invalid_argument("negative probability " + to_string(v));
    total += v;
  }
  if (total != 1) throw std::invalid_argument("probabilities sum to " + to_string(total) + ", not 1");
}

MixedStrategy MixedStrategy::pure(Player owner, std::size_t size, Index strategy) {
  RationalVector probs(size, Rational(0));
  probs.at(strategy) = 1;
  return MixedStrategy(owner, std::move(probs));
}

MixedStrategy MixedStrategy::uniform(Player owner, std::size_t size) {
  return MixedStrategy(owner, RationalVector(size, Rational(1, static_cast<unsigned long>(size))));
}

IndexSet MixedStrategy::support() const {
  IndexSet s;
  for (Index i = 0; i < probs_.size(); ++i) {
    if (probs_[i] > 0) s.push_back(i);
  }
  return s;
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    std::size_t first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    std::istringstream ss(text);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    lines.push_back(std::move(line));
  }
  return lines;
}

std::size_t parse_dimension(const std::string& tok, std::size_t line) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw GameParseError(line, "bad dimension '" + tok + "'");
  }
  std::size_t v = std::stoul(tok);
  if (v == 0) throw GameParseError(line, "empty matrix");
  return v;
}

}  // namespace

Game parse_game(std::istream& in) {
  auto lines = significant_lines(in);
  if (lines.empty()) throw GameParseError(1, "empty matrix: no header line");
  const Line& header = lines.front();
  if (header.tokens.size() != 2) throw GameParseError(header.number, "header must be 'm n'");
  std::size_t m = parse_dimension(header.tokens[0], header.number);
  std::size_t n = parse_dimension(header.tokens[1], header.number);

  std::size_t cursor = 1;
  auto read_matrix = [&](const char* name) {
    RationalMatrix mat(m, n);
    for (std::size_t r = 0; r < m; ++r, ++cursor) {
      if (cursor >= lines.size()) {
        std::size_t last = lines.back().number;
        throw GameParseError(last, std::string("dimension mismatch: matrix ") + name + " has only " +
                                       std::to_string(r) + " of " + std::to_string(m) + " rows");
      }
      const Line& line = lines[cursor];
      if (line.tokens.size() != n) {
        throw GameParseError(line.number, std::string("dimension mismatch: matrix ") + name + " row has " +
                                              std::to_string(line.tokens.size()) + " entries, expected " +
                                              std::to_string(n));
      }
      for (std::size_t c = 0; c < n; ++c) {
        try {
          mat(r, c) = parse_rational(line.tokens[c]);
        } catch (const std::invalid_argument& e) {
          throw GameParseError(line.number, e.what());
        }
      }
    }
    return mat;
  };
  RationalMatrix a = read_matrix("A");
  RationalMatrix b = read_matrix("B");
  if (cursor != lines.size()) throw GameParseError(lines[cursor].number, "dimension mismatch: trailing rows");
  return Game(std::move(a), std::move(b));
}

Game parse_game(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_game(in);
}

void write_game(std::ostream& out, const Game& g) {
  out << g.m() << ' ' << g.n() << '\n';
  for (const RationalMatrix* mat : {&g.a(), &g.b()}) {
    for (std::size_t r = 0; r < g.m(); ++r) {
      for (std::size_t c = 0; c < g.n(); ++c) {
        if (c) out << ' ';
        out << to_string((*mat)(r, c));
      }
      out << '\n';
    }
  }
}

std::string write_game(const Game& g) {
  std::ostringstream out;
  write_game(out, g);
  return out.str();
}

Game generate_random_game(std::size_t m, std::size_t n, std::uint64_t seed) {
  if (m == 0 || n == 0) throw std::invalid_argument("game dimensions must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> grid(0, 1000);
  RationalMatrix a(m, n);
  RationalMatrix b(m, n);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      a(r, c) = Rational(grid(rng), 1000);
      a(r, c).canonicalize();
    }
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      b(r, c) = Rational(grid(rng), 1000);
      b(r, c).canonicalize();
    }
  }
  return Game(std::move(a), std::move(b));
}

Payoffs expected_payoffs(const Game& g, const MixedStrategy& p, const MixedStrategy& q) {
  if (p.size() != g.m() || q.size() != g.n()) throw std::invalid_argument("strategy length does not match game");
  Payoffs out{0, 0};
  for (Index x = 0; x < g.m(); ++x) {
    if (p[x] == 0) continue;
    for (Index y = 0; y < g.n(); ++y) {
      if (q[y] == 0) continue;
      Rational w = p[x] * q[y];
      out.u1 += w * g.a()(x, y);
      out.u2 += w * g.b()(x, y);
    }
  }
  return out;
}

Rational pure_payoff(const Game& g, Player who, Index own, const MixedStrategy& opp) {
  const std::size_t opp_count = g.strategy_count(opponent(who));
  if (opp.size() != opp_count) throw std::invalid_argument("opponent strategy length does not match game");
  Rational total = 0;
  for (Index j = 0; j < opp_count; ++j) {
    if (opp[j] != 0) total += g.payoff(who, own, j) * opp[j];
  }
  return total;
}

bool is_best_response(const Game& g, Player who, Index own, const MixedStrategy& opp) {
  const Rational mine = pure_payoff(g, who, own, opp);
  for (Index other = 0; other < g.strategy_count(who); ++other) {
    if (other != own && pure_payoff(g, who, other, opp) > mine) return false;
  }
  return true;
}

IndexSet complement(const IndexSet& set, std::size_t universe) {
  IndexSet out;
  std::size_t k = 0;
  for (Index i = 0; i < universe; ++i) {
    if (k < set.size() && set[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

std::string format_index_set(const IndexSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(set[i] + 1);
  }
  return out + "}";
}

}  // namespace nashgraph
