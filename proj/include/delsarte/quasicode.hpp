#pragma once

#include "delsarte/rational.hpp"

#include <set>
#include <string>
#include <vector>

namespace delsarte {

/// A feasible-point candidate of the (n,d) Delsarte LP: A_0 = 1, zeros below
/// d, nonnegative entries. The Delsarte inequalities themselves are checked
/// separately by check_feasible.
struct Quasicode {
  long n = 0;
  long d = 1;
  std::vector<Rational> A;  // length n+1
};

/// Krawtchouk decomposition coefficients b_0..b_n of a length-n sequence.
struct Decomposition {
  long n = 0;
  std::vector<Rational> b;  // length n+1
};

/// A dual-feasible candidate: c_0 = 1, c_j >= 0.
struct DualSolution {
  long n = 0;
  long d = 1;
  std::vector<Rational> c;  // length n+1
};

// Throws std::invalid_argument when the structural invariants fail.
void validate(const Quasicode& q);
void validate(const Decomposition& dec);
void validate(const DualSolution& c);

/// b_j = (1/C(n,j)) sum_i A_i K_j(i).
Decomposition decompose(const Quasicode& q);

/// A_i = C(n,i) sum_j b_j K_j(i) / 2^n. Returns the raw sequence; the result
/// need not satisfy the quasicode invariants.
std::vector<Rational> recompose(const Decomposition& dec);

/// Parity-check-bit transform: odd entries zeroed, even entries absorb their
/// predecessor. Maps (n,d) to (n+1, 2*ceil(d/2)) and preserves sum(A).
Quasicode extend(const Quasicode& q);

/// Truncates the last decomposition coefficient; maps (n,d) to (n-1,d-1).
/// Throws std::domain_error when d < 2.
Quasicode puncture(const Quasicode& q);

/// S = { i > 0 : A_i > 0 }.
std::set<long> support(const Quasicode& q);

/// True iff every odd-index entry is zero.
bool is_even(const Quasicode& q);

struct FeasibilityResult {
  bool feasible = true;
  std::string first_violation;  // empty when feasible
};

/// Checks A_0 = 1, zeros below d, nonnegativity, and the Delsarte
/// inequalities sum_i A_i K_j(i) >= 0 for all j in [n], exactly.
FeasibilityResult check_feasible(const Quasicode& q);

/// Checks c_0 = 1, nonnegativity, and sum_j c_j K_j(i) <= 0 for i in [d,n].
FeasibilityResult check_dual_feasible(const DualSolution& c);

struct SlacknessCondition {
  bool primal_constraint;  // true: Delsarte inequality tightness at index j
                           // false: dual constraint tightness at index i
  long index;
  bool satisfied;
};

struct SlacknessReport {
  bool all_satisfied = true;
  std::vector<SlacknessCondition> conditions;
};

/// For each i in [d,n] with A_i > 0 checks sum_j c_j K_j(i) = 0, and for each
/// j in [n] with c_j > 0 checks sum_i A_i K_j(i) = 0. Throws
/// std::invalid_argument when q and c disagree on (n,d).
SlacknessReport check_complementary_slackness(const Quasicode& q,
                                              const DualSolution& c);

}  // namespace delsarte
