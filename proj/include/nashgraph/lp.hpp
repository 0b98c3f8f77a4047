#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nashgraph/rational.hpp"

namespace nashgraph {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
  RationalVector coeffs;
  Relation relation;
  Rational rhs;
};

// Missing bound means infinite. A default variable is x >= 0.
struct VariableBounds {
  std::optional<Rational> lower = Rational(0);
  std::optional<Rational> upper;
};

// maximize objective . x subject to the constraints and bounds.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_vars);

  std::size_t num_vars() const { return num_vars_; }
  const RationalVector& objective() const { return objective_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<VariableBounds>& bounds() const { return bounds_; }

  void set_objective(std::size_t var, Rational coeff);
  void add_constraint(RationalVector coeffs, Relation relation, Rational rhs);
  void set_bounds(std::size_t var, std::optional<Rational> lower, std::optional<Rational> upper);
  void set_free(std::size_t var) { set_bounds(var, std::nullopt, std::nullopt); }

 private:
  std::size_t num_vars_;
  RationalVector objective_;
  std::vector<Constraint> constraints_;
  std::vector<VariableBounds> bounds_;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rational objective_value;   // meaningful only when Optimal
  RationalVector assignment;  // meaningful only when Optimal
};

// Two-phase dense-tableau simplex over exact rationals with Bland's rule.
// Deterministic for a given program.
LpOutcome solve_lp(const LinearProgram& lp);

// True when `x` satisfies every constraint and bound exactly.
bool satisfies(const LinearProgram& lp, const RationalVector& x);

}  // namespace nashgraph
