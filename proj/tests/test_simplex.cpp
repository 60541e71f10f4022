#include "delsarte/simplex.hpp"

#include <doctest.h>

using namespace delsarte;

namespace {

Constraint row(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
  return Constraint{std::move(coeffs), rel, std::move(rhs)};
}

Rational eval(const std::vector<Rational>& coeffs,
              const std::vector<Rational>& x) {
  Rational s;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    s += coeffs[i] * x[i];
  return s;
}

bool satisfies(const LinearProgram& lp, const std::vector<Rational>& x) {
  for (const auto& c : lp.constraints) {
    Rational v = eval(c.coeffs, x);
    if (c.rel == Relation::le && v > c.rhs)
      return false;
    if (c.rel == Relation::ge && v < c.rhs)
      return false;
    if (c.rel == Relation::eq && v != c.rhs)
      return false;
  }
  for (std::size_t i = 0; i < lp.num_vars(); ++i)
    if ((lp.bounds.empty() || lp.bounds[i] == VarBound::nonnegative) &&
        x[i] < Rational(0))
      return false;
  return true;
}

}  // namespace

TEST_CASE("one-variable box") {
  LinearProgram lp;
  lp.direction = Direction::maximize;
  lp.objective = {Rational(1)};
  lp.constraints.push_back(row({Rational(1)}, Relation::le, Rational(1)));
  Solution s = solve(lp);
  REQUIRE(s.status == SolveStatus::optimal);
  CHECK(s.value == Rational(1));
  CHECK(s.point[0] == Rational(1));
}

TEST_CASE("infeasible system") {
  LinearProgram lp;
  lp.direction = Direction::maximize;
  lp.objective = {Rational(1)};
  lp.constraints.push_back(row({Rational(1)}, Relation::ge, Rational(1)));
  lp.constraints.push_back(row({Rational(1)}, Relation::le, Rational(0)));
  CHECK(solve(lp).status == SolveStatus::infeasible);
}

TEST_CASE("unbounded objective") {
  LinearProgram lp;
  lp.direction = Direction::maximize;
  lp.objective = {Rational(1)};
  lp.constraints.push_back(row({Rational(-1)}, Relation::le, Rational(0)));
  CHECK(solve(lp).status == SolveStatus::unbounded);
}

TEST_CASE("equality constraints and free variables") {
  // max x + y s.t. x + y = 3, x - y <= 1, y free
  LinearProgram lp;
  lp.direction = Direction::maximize;
  lp.objective = {Rational(1), Rational(1)};
  lp.bounds = {VarBound::nonnegative, VarBound::free_var};
  lp.constraints.push_back(
      row({Rational(1), Rational(1)}, Relation::eq, Rational(3)));
  lp.constraints.push_back(
      row({Rational(1), Rational(-1)}, Relation::le, Rational(1)));
  Solution s = solve(lp);
  REQUIRE(s.status == SolveStatus::optimal);
  CHECK(s.value == Rational(3));
  CHECK(satisfies(lp, s.point));

  // min y over the same rows: x + y = 3 and x - y <= 1 force y >= 1
  lp.direction = Direction::minimize;
  lp.objective = {Rational(0), Rational(1)};
  Solution t = solve(lp);
  REQUIRE(t.status == SolveStatus::optimal);
  CHECK(t.value == Rational(1));  // x=2, y=1
}

TEST_CASE("negative right-hand sides are normalized") {
  // min x1 + x2 s.t. -x1 - x2 <= -2
  LinearProgram lp;
  lp.direction = Direction::minimize;
  lp.objective = {Rational(1), Rational(1)};
  lp.constraints.push_back(
      row({Rational(-1), Rational(-1)}, Relation::le, Rational(-2)));
  Solution s = solve(lp);
  REQUIRE(s.status == SolveStatus::optimal);
  CHECK(s.value == Rational(2));
}

TEST_CASE("Beale's cycling instance terminates under Bland's rule") {
  // A classic degenerate LP on which Dantzig's rule cycles.
  LinearProgram lp;
  lp.direction = Direction::minimize;
  lp.objective = {Rational(-3, 4), Rational(150), Rational(-1, 50), Rational(6)};
  lp.constraints.push_back(row(
      {Rational(1, 4), Rational(-60), Rational(-1, 25), Rational(9)},
      Relation::le, Rational(0)));
  lp.constraints.push_back(row(
      {Rational(1, 2), Rational(-90), Rational(-1, 50), Rational(3)},
      Relation::le, Rational(0)));
  lp.constraints.push_back(row(
      {Rational(0), Rational(0), Rational(1), Rational(0)},
      Relation::le, Rational(1)));
  Solution s = solve(lp);
  REQUIRE(s.status == SolveStatus::optimal);
  CHECK(s.value == Rational(-1, 20));
  CHECK(satisfies(lp, s.point));
}

TEST_CASE("solutions satisfy their constraints exactly and deterministically") {
  LinearProgram lp;
  lp.direction = Direction::maximize;
  lp.objective = {Rational(3), Rational(2), Rational(4)};
  lp.constraints.push_back(row({Rational(1), Rational(1), Rational(2)},
                               Relation::le, Rational(4)));
  lp.constraints.push_back(row({Rational(2), Rational(0), Rational(3)},
                               Relation::le, Rational(5)));
  lp.constraints.push_back(row({Rational(2), Rational(1), Rational(3)},
                               Relation::le, Rational(7)));
  Solution a = solve(lp);
  REQUIRE(a.status == SolveStatus::optimal);
  CHECK(satisfies(lp, a.point));
  CHECK(eval(lp.objective, a.point) == a.value);
  Solution b = solve(lp);
  CHECK(a.value == b.value);
  CHECK(a.point == b.point);
  CHECK(a.basis == b.basis);
}

TEST_CASE("face probing") {
  // max x + y s.t. x + y <= 2: the optimal face is the segment x+y=2.
  LinearProgram lp;
  lp.direction = Direction::maximize;
  lp.objective = {Rational(1), Rational(1)};
  lp.constraints.push_back(
      row({Rational(1), Rational(1)}, Relation::le, Rational(2)));
  Solution s = solve(lp);
  REQUIRE(s.status == SolveStatus::optimal);
  REQUIRE(s.value == Rational(2));

  auto [lo, hi] = variable_range_on_optimal_face(lp, s.value, 0);
  CHECK(lo == Rational(0));
  CHECK(hi == Rational(2));

  LpUniqueness u = probe_uniqueness(lp);
  CHECK_FALSE(u.unique);
  REQUIRE(u.witness_a.has_value());
  CHECK(*u.witness_a != *u.witness_b);
  CHECK(eval(lp.objective, *u.witness_a) == Rational(2));
  CHECK(eval(lp.objective, *u.witness_b) == Rational(2));
  CHECK(std::lexicographical_compare(u.witness_a->begin(), u.witness_a->end(),
                                     u.witness_b->begin(), u.witness_b->end()));

  CHECK_THROWS_AS(variable_range_on_optimal_face(lp, Rational(3), 0),
                  std::invalid_argument);
}

TEST_CASE("unique vertex probes to degenerate ranges") {
  LinearProgram lp;
  lp.direction = Direction::maximize;
  lp.objective = {Rational(2), Rational(1)};
  lp.constraints.push_back(
      row({Rational(1), Rational(1)}, Relation::le, Rational(2)));
  lp.constraints.push_back(
      row({Rational(1), Rational(0)}, Relation::le, Rational(1)));
  LpUniqueness u = probe_uniqueness(lp);
  CHECK(u.unique);
  for (const auto& [lo, hi] : u.ranges)
    CHECK(lo == hi);
}
