#include "delsarte/delsarte.hpp"

#include "delsarte/krawtchouk.hpp"

#include <doctest.h>

#include <numeric>
#include <sstream>

using namespace delsarte;

namespace {

Rational qsum(const std::vector<Rational>& v) {
  return std::accumulate(v.begin(), v.end(), Rational(0));
}

}  // namespace

TEST_CASE("problem parameters") {
  ProblemParams p(9, 5);
  CHECK(p.h() == 4);
  CHECK(p.k() == 6);
  CHECK(p.upper_half());
  CHECK_FALSE(ProblemParams(17, 5).upper_half());
  CHECK_THROWS_AS(ProblemParams(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(ProblemParams(3, 0), std::invalid_argument);
}

TEST_CASE("primal builder and bounds") {
  // (4,4): a single variable A_4 with constraints C(4,j) + A_4 K_j(4) >= 0
  LinearProgram lp = build_primal(ProblemParams(4, 4));
  CHECK(lp.num_vars() == 1);
  CHECK(lp.constraints.size() == 4);
  const KrawtchoukTable& t = krawtchouk_table(4);
  for (long j = 1; j <= 4; ++j) {
    CHECK(lp.constraints[j - 1].coeffs[0] == Rational(t.at(j, 4)));
    CHECK(lp.constraints[j - 1].rhs == -Rational(binomial(4, j)));
  }
  Solution s = solve(lp);
  REQUIRE(s.status == SolveStatus::optimal);
  CHECK(s.value == Rational(2));
  CHECK(s.point[0] == Rational(1));

  CHECK(lp_bound(ProblemParams(5, 1)) == Rational(32));
  CHECK(lp_bound(ProblemParams(17, 5)) == Rational(2048, 3));
}

TEST_CASE("dual builder values") {
  for (long n : {2L, 4L, 7L})
    CHECK(solve(build_dual(ProblemParams(n, n))).value == Rational(2));
  CHECK(solve(build_dual(ProblemParams(6, 1))).value == Rational(64));
  CHECK(solve(build_dual(ProblemParams(6, 2))).value == Rational(32));
}

TEST_CASE("decomposition LP agrees with the primal") {
  for (long n = 1; n <= 9; ++n)
    for (long d = 1; d <= n; ++d) {
      ProblemParams p(n, d);
      Solution s = solve(build_decomposition_lp(p));
      REQUIRE(s.status == SolveStatus::optimal);
      CHECK(s.value == lp_bound(p));
    }

  Solution s = solve(build_decomposition_lp(ProblemParams(5, 2)));
  CHECK(s.point[0] == Rational(16));
  CHECK(s.point[5] == Rational(16));
  for (long j = 1; j <= 4; ++j)
    CHECK(s.point[j].is_zero());
}

TEST_CASE("closed-form primal") {
  auto q86 = closed_form_primal(ProblemParams(8, 6));
  REQUIRE(q86.has_value());
  CHECK(q86->A[6] == Rational(2));

  auto q95 = closed_form_primal(ProblemParams(9, 5));
  REQUIRE(q95.has_value());
  CHECK(q95->A[5] == Rational(3));
  CHECK(q95->A[6] == Rational(2));

  auto q51 = closed_form_primal(ProblemParams(5, 1));
  REQUIRE(q51.has_value());
  CHECK(q51->A == std::vector<Rational>{Rational(1), Rational(5), Rational(10),
                                        Rational(10), Rational(5), Rational(1)});

  CHECK_FALSE(closed_form_primal(ProblemParams(17, 5)).has_value());
}

TEST_CASE("closed-form dual") {
  auto c86 = closed_form_dual(ProblemParams(8, 6));
  REQUIRE(c86.has_value());
  CHECK(c86->c[0] == Rational(1));
  CHECK(c86->c[1] == Rational(5, 24));
  CHECK(c86->c[7] == Rational(1, 24));

  auto c95 = closed_form_dual(ProblemParams(9, 5));
  REQUIRE(c95.has_value());
  CHECK(c95->c[1] == Rational(1, 2));
  CHECK(c95->c[9] == Rational(1, 2));

  auto c65 = closed_form_dual(ProblemParams(6, 5));
  REQUIRE(c65.has_value());
  CHECK(c65->c == std::vector<Rational>{Rational(1), Rational(1, 5), Rational(0),
                                        Rational(0), Rational(0), Rational(0),
                                        Rational(1, 5)});

  auto c62 = closed_form_dual(ProblemParams(6, 2));
  REQUIRE(c62.has_value());
  for (long j = 0; j <= 6; ++j)
    CHECK(c62->c[j] == Rational(6 - j, 6));
}

TEST_CASE("closed-form decomposition") {
  auto b44 = closed_form_decomposition(ProblemParams(4, 4));
  REQUIRE(b44.has_value());
  CHECK(b44->b == std::vector<Rational>{Rational(2), Rational(0), Rational(2),
                                        Rational(0), Rational(2)});

  auto b33 = closed_form_decomposition(ProblemParams(3, 3));
  REQUIRE(b33.has_value());
  CHECK(b33->b == std::vector<Rational>{Rational(2), Rational(0), Rational(2),
                                        Rational(0)});

  // b_1 vanishes throughout the upper half
  for (long n = 2; n <= 10; ++n)
    for (long d = 1; d <= n; ++d) {
      ProblemParams p(n, d);
      if (auto b = closed_form_decomposition(p))
        CHECK(b->b[1].is_zero());
    }

  CHECK_FALSE(closed_form_decomposition(ProblemParams(10, 3)).has_value());
}

TEST_CASE("primal uniqueness verdicts") {
  CHECK(primal_uniqueness(ProblemParams(12, 7)).unique);
  CHECK(primal_uniqueness(ProblemParams(5, 1)).unique);
  Solution s = solve(build_primal(ProblemParams(5, 1)));
  CHECK(quasicode_from_primal_point(ProblemParams(5, 1), s.point).A ==
        closed_form_primal(ProblemParams(5, 1))->A);

  UniquenessReport rep = primal_uniqueness(ProblemParams(17, 5));
  CHECK_FALSE(rep.unique);
  REQUIRE(rep.witness_a.has_value());
  CHECK(qsum(*rep.witness_a) == Rational(2048, 3));
  CHECK(qsum(*rep.witness_b) == Rational(2048, 3));
  CHECK(*rep.witness_a != *rep.witness_b);
  // A_13 spans [15,20] on the optimal face
  CHECK(rep.variable_ranges[13 - 5] ==
        std::make_pair(Rational(15), Rational(20)));
}

TEST_CASE("dual uniqueness verdicts") {
  CHECK_FALSE(dual_uniqueness(ProblemParams(3, 3)).unique);
  CHECK(dual_uniqueness(ProblemParams(2, 2)).unique);
  CHECK_FALSE(dual_uniqueness(ProblemParams(5, 2)).unique);

  UniquenessReport r65 = dual_uniqueness(ProblemParams(6, 5));
  CHECK(r65.unique);
  CHECK_FALSE(dual_uniqueness(ProblemParams(5, 4)).unique);
}

TEST_CASE("parity pair") {
  ParityPair pp = parity_pair(4, 2);
  CHECK(pp.odd_optimum.A == std::vector<Rational>{Rational(1), Rational(0),
                                                  Rational(0), Rational(1)});
  CHECK(pp.even_optimum.A ==
        std::vector<Rational>{Rational(1), Rational(0), Rational(0),
                              Rational(0), Rational(1)});

  CHECK(lp_bound(ProblemParams(10, 4)) == lp_bound(ProblemParams(9, 3)));

  // (18,6) is unique even though (17,5) is not
  CHECK(primal_uniqueness(ProblemParams(18, 6)).unique);

  CHECK_THROWS_AS(parity_pair(3, 2), std::invalid_argument);
}

TEST_CASE("small scans") {
  std::vector<ScanRow> one = scan_uniqueness(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].n == 1);
  CHECK(one[0].d == 1);
  CHECK(one[0].bound == Rational(2));
  CHECK(one[0].unique);

  std::vector<ScanRow> ten = scan_uniqueness(10, 2);
  CHECK(ten.size() == 55);
  for (const auto& r : ten) {
    CHECK(r.unique);
    ProblemParams p(r.n, r.d);
    if (p.upper_half() && r.d % 2 == 0)
      CHECK(r.bound == Rational(2 * r.d, 2 * r.d - r.n));
  }
}

TEST_CASE("scan serialization") {
  std::vector<ScanRow> rows = scan_uniqueness(3);
  std::ostringstream csv;
  write_scan_csv(rows, csv);
  CHECK(csv.str().rfind("n,d,bound,unique\n", 0) == 0);
  CHECK(csv.str().find("1,1,2,true") != std::string::npos);

  nlohmann::json j = scan_to_json(rows);
  CHECK(j.size() == rows.size());
  CHECK(j[0]["bound"] == "2");
}

TEST_CASE("theorem verification passes on a small range") {
  for (const auto& c : verify_theorems(6)) {
    INFO(c.name, " ", c.counterexample);
    CHECK(c.pass);
  }
}
