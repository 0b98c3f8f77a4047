#include "nashgraph/lp.hpp"

#include <stdexcept>

namespace nashgraph {

LinearProgram::LinearProgram(std::size_t num_vars)
    : num_vars_(num_vars), objective_(num_vars, Rational(0)), bounds_(num_vars) {}

void LinearProgram::set_objective(std::size_t var, Rational coeff) { objective_.at(var) = std::move(coeff); }

void LinearProgram::add_constraint(RationalVector coeffs, Relation relation, Rational rhs) {
  if (coeffs.size() != num_vars_) throw std::invalid_argument("constraint length does not match variable count");
  constraints_.push_back({std::move(coeffs), relation, std::move(rhs)});
}

void LinearProgram::set_bounds(std::size_t var, std::optional<Rational> lower, std::optional<Rational> upper) {
  if (lower && upper && *lower > *upper) throw std::invalid_argument("lower bound exceeds upper bound");
  bounds_.at(var) = {std::move(lower), std::move(upper)};
}

bool satisfies(const LinearProgram& lp, const RationalVector& x) {
  if (x.size() != lp.num_vars()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const auto& b = lp.bounds()[j];
    if (b.lower && x[j] < *b.lower) return false;
    if (b.upper && x[j] > *b.upper) return false;
  }
  for (const auto& c : lp.constraints()) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (c.coeffs[j] != 0) lhs += c.coeffs[j] * x[j];
    }
    switch (c.relation) {
      case Relation::LessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != c.rhs) return false;
        break;
      case Relation::GreaterEqual:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

namespace {

// Original variable x_j = offset + sign_pos * s[pos] - (neg ? s[neg] : 0),
// where s are the nonnegative standard-form columns.
struct VariableMap {
  Rational offset;
  std::size_t pos;
  int sign;
  std::optional<std::size_t> neg;
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : cols_(cols), cells_(rows, RationalVector(cols + 1, Rational(0))), basis_(rows) {}

  std::size_t rows() const { return cells_.size(); }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
  Rational& rhs(std::size_t r) { return cells_[r][cols_]; }
  std::size_t& basic(std::size_t r) { return basis_[r]; }
  const std::vector<std::size_t>& basis() const { return basis_; }

  void remove_row(std::size_t r) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  void pivot(std::size_t r, std::size_t c, RationalVector& reduced) {
    RationalVector& prow = cells_[r];
    const Rational inv = 1 / prow[c];
    for (auto& v : prow) {
      if (v != 0) v *= inv;
    }
    auto eliminate = [&](RationalVector& row) {
      if (row[c] == 0) return;
      const Rational factor = row[c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (prow[j] != 0) row[j] -= factor * prow[j];
      }
    };
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (i != r) eliminate(cells_[i]);
    }
    eliminate(reduced);
    basis_[r] = c;
  }

  // reduced[j] = c_j - c_B B^-1 A_j for all columns, reduced[cols] = -objective value.
  RationalVector reduced_costs(const RationalVector& cost) const {
    RationalVector reduced(cols_ + 1, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j) reduced[j] = cost[j];
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (cells_[i][j] != 0) reduced[j] -= cb * cells_[i][j];
      }
    }
    return reduced;
  }

  // Maximizes; columns with allowed[j] == false never enter. Returns false
  // when unbounded.
  bool optimize(RationalVector& reduced, const std::vector<bool>& allowed) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (allowed[j] && reduced[j] > 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best_ratio;
      for (std::size_t i = 0; i < cells_.size(); ++i) {
        const Rational& a = cells_[i][*enter];
        if (a <= 0) continue;
        Rational ratio = cells_[i][cols_] / a;
        if (!leave || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter, reduced);
    }
  }

 private:
  std::size_t cols_;
  std::vector<RationalVector> cells_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpOutcome solve_lp(const LinearProgram& lp) {
  const std::size_t nv = lp.num_vars();

  // Standard form: every column nonnegative.
  std::vector<VariableMap> maps(nv);
  std::size_t std_cols = 0;
  struct BoundRow {
    std::size_t col;
    Rational limit;
  };
  std::vector<BoundRow> bound_rows;
  for (std::size_t j = 0; j < nv; ++j) {
    const auto& b = lp.bounds()[j];
    if (b.lower) {
      maps[j] = {*b.lower, std_cols++, 1, std::nullopt};
      if (b.upper) bound_rows.push_back({maps[j].pos, *b.upper - *b.lower});
    } else if (b.upper) {
      maps[j] = {*b.upper, std_cols++, -1, std::nullopt};
    } else {
      std::size_t pos = std_cols++;
      maps[j] = {Rational(0), pos, 1, std_cols++};
    }
  }

  struct Row {
    RationalVector coeffs;
    Relation relation;
    Rational rhs;
  };
  std::vector<Row> rows;
  for (const auto& c : lp.constraints()) {
    Row row{RationalVector(std_cols, Rational(0)), c.relation, c.rhs};
    for (std::size_t j = 0; j < nv; ++j) {
      const Rational& a = c.coeffs[j];
      if (a == 0) continue;
      const auto& mp = maps[j];
      row.rhs -= a * mp.offset;
      row.coeffs[mp.pos] += mp.sign > 0 ? a : Rational(-a);
      if (mp.neg) row.coeffs[*mp.neg] -= a;
    }
    rows.push_back(std::move(row));
  }
  for (const auto& br : bound_rows) {
    Row row{RationalVector(std_cols, Rational(0)), Relation::LessEqual, br.limit};
    row.coeffs[br.col] = 1;
    rows.push_back(std::move(row));
  }
  for (auto& row : rows) {
    if (row.rhs < 0) {
      for (auto& v : row.coeffs) v = -v;
      row.rhs = -row.rhs;
      if (row.relation == Relation::LessEqual) {
        row.relation = Relation::GreaterEqual;
      } else if (row.relation == Relation::GreaterEqual) {
        row.relation = Relation::LessEqual;
      }
    }
  }

  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (const auto& row : rows) {
    if (row.relation != Relation::Equal) ++slack_count;
    if (row.relation != Relation::LessEqual) ++artificial_count;
  }
  const std::size_t first_artificial = std_cols + slack_count;
  const std::size_t total_cols = first_artificial + artificial_count;

  Tableau t(rows.size(), total_cols);
  std::size_t next_slack = std_cols;
  std::size_t next_art = first_artificial;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < std_cols; ++j) t.at(i, j) = rows[i].coeffs[j];
    t.rhs(i) = rows[i].rhs;
    switch (rows[i].relation) {
      case Relation::LessEqual:
        t.at(i, next_slack) = 1;
        t.basic(i) = next_slack++;
        break;
      case Relation::GreaterEqual:
        t.at(i, next_slack++) = -1;
        t.at(i, next_art) = 1;
        t.basic(i) = next_art++;
        break;
      case Relation::Equal:
        t.at(i, next_art) = 1;
        t.basic(i) = next_art++;
        break;
    }
  }

  std::vector<bool> allowed(total_cols, true);
  if (artificial_count > 0) {
    RationalVector phase1_cost(total_cols, Rational(0));
    for (std::size_t j = first_artificial; j < total_cols; ++j) phase1_cost[j] = -1;
    RationalVector reduced = t.reduced_costs(phase1_cost);
    t.optimize(reduced, allowed);  // bounded below by zero
    if (reduced[total_cols] != 0) return {LpStatus::Infeasible, {}, {}};

    // Drive zero-valued artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows();) {
      if (t.basic(i) < first_artificial) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (t.at(i, j) != 0) {
          col = j;
          break;
        }
      }
      if (col) {
        t.pivot(i, *col, reduced);
        ++i;
      } else {
        t.remove_row(i);
      }
    }
    for (std::size_t j = first_artificial; j < total_cols; ++j) allowed[j] = false;
  }

  RationalVector cost(total_cols, Rational(0));
  for (std::size_t j = 0; j < nv; ++j) {
    const Rational& c = lp.objective()[j];
    if (c == 0) continue;
    const auto& mp = maps[j];
    cost[mp.pos] += mp.sign > 0 ? c : Rational(-c);
    if (mp.neg) cost[*mp.neg] -= c;
  }
  RationalVector reduced = t.reduced_costs(cost);
  if (!t.optimize(reduced, allowed)) return {LpStatus::Unbounded, {}, {}};

  RationalVector std_values(total_cols, Rational(0));
  for (std::size_t i = 0; i < t.rows(); ++i) std_values[t.basic(i)] = t.rhs(i);

  LpOutcome out;
  out.status = LpStatus::Optimal;
  out.assignment.assign(nv, Rational(0));
  out.objective_value = 0;
  for (std::size_t j = 0; j < nv; ++j) {
    const auto& mp = maps[j];
    Rational v = mp.offset;
    if (mp.sign > 0) {
      v += std_values[mp.pos];
    } else {
      v -= std_values[mp.pos];
    }
    if (mp.neg) v -= std_values[*mp.neg];
    out.objective_value += lp.objective()[j] * v;
    out.assignment[j] = std::move(v);
  }
  return out;
}

}  // namespace nashgraph
