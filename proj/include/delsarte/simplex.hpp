#pragma once

#include "delsarte/rational.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace delsarte {

enum class Direction { maximize, minimize };
enum class Relation { le, eq, ge };
enum class VarBound { nonnegative, free_var };
enum class SolveStatus { optimal, infeasible, unbounded };

struct Constraint {
  std::vector<Rational> coeffs;
  Relation rel = Relation::le;
  Rational rhs;
};

/// An exact LP over m variables. `objective_constant` is added to the
/// reported optimal value; `bounds` defaults to all-nonnegative when empty.
struct LinearProgram {
  Direction direction = Direction::maximize;
  std::vector<Rational> objective;
  Rational objective_constant;
  std::vector<Constraint> constraints;
  std::vector<VarBound> bounds;

  std::size_t num_vars() const { return objective.size(); }
};

struct Solution {
  SolveStatus status = SolveStatus::infeasible;
  Rational value;                   // valid when optimal (includes constant)
  std::vector<Rational> point;      // valid when optimal
  std::vector<std::size_t> basis;   // final basic column set (certificate)
};

/// Two-phase simplex with Bland's rule; exact and deterministic.
Solution solve(const LinearProgram& lp);

struct FaceProbe {
  Rational min, max;
  std::vector<Rational> argmin, argmax;  // vertices of the optimal face
};

/// Min/max of variable `var` over the optimal face {x feasible,
/// objective(x) = opt}. Throws std::invalid_argument if the face is empty
/// and std::runtime_error if the face is unbounded in `var` (cannot happen
/// when the objective dominates every coordinate, as in the Delsarte LPs).
FaceProbe probe_variable_on_optimal_face(const LinearProgram& lp,
                                         const Rational& opt, std::size_t var);

std::pair<Rational, Rational> variable_range_on_optimal_face(
    const LinearProgram& lp, const Rational& opt, std::size_t var);

struct LpUniqueness {
  bool unique = true;
  Rational value;
  std::vector<Rational> point;  // the solver optimum
  std::vector<std::pair<Rational, Rational>> ranges;
  // Two distinct optimal vertices when non-unique, lexicographically ordered.
  std::optional<std::vector<Rational>> witness_a, witness_b;
};

/// Solves, then probes every variable's range on the optimal face.
/// Throws std::invalid_argument when the LP is infeasible or unbounded.
LpUniqueness probe_uniqueness(const LinearProgram& lp);

}  // namespace delsarte
