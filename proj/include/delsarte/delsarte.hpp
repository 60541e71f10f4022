#pragma once

#include "delsarte/quasicode.hpp"
#include "delsarte/rational.hpp"
#include "delsarte/simplex.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace delsarte {

/// Parameters of the (n,d) Delsarte linear program, with the derived
/// quantities h = n-d and k = 2*ceil(d/2).
struct ProblemParams {
  long n, d;
  ProblemParams(long n_, long d_) : n(n_), d(d_) {
    if (d < 1 || d > n)
      throw std::invalid_argument("ProblemParams: requires 1 <= d <= n");
  }
  long h() const { return n - d; }
  long k() const { return 2 * ((d + 1) / 2); }
  bool upper_half() const { return k() > h(); }
};

// LP formulations. Variables:
//   primal:        A_d .. A_n          (A_0 folded into constants)
//   dual:          c_1 .. c_n          (c_0 folded into constants)
//   decomposition: b_0 .. b_n
//   symmetric:     decomposition variables plus b_j = b_{n-j}; for odd d the
//                  extra variable b_{n+1} with b_{n+1} = b_0 is appended and
//                  the symmetry runs over length n+1.
LinearProgram build_primal(const ProblemParams& p);
LinearProgram build_dual(const ProblemParams& p);
LinearProgram build_decomposition_lp(const ProblemParams& p);
LinearProgram build_symmetric_lp(const ProblemParams& p);

/// Exact optimal value of the (n,d) Delsarte LP.
Rational lp_bound(const ProblemParams& p);

// Closed-form optima where the covering theorems apply; nullopt otherwise.
std::optional<Quasicode> closed_form_primal(const ProblemParams& p);
std::optional<DualSolution> closed_form_dual(const ProblemParams& p);
std::optional<Decomposition> closed_form_decomposition(const ProblemParams& p);

// Helpers to lift solver points back to full-length vectors.
Quasicode quasicode_from_primal_point(const ProblemParams& p,
                                      const std::vector<Rational>& point);
DualSolution dual_from_point(const ProblemParams& p,
                             const std::vector<Rational>& point);
Quasicode quasicode_from_decomposition_point(const ProblemParams& p,
                                             const std::vector<Rational>& point);

enum class Target { primal, dual };

struct UniquenessReport {
  Target target = Target::primal;
  bool unique = true;
  Rational optimum_value;
  // Full-length witness vectors (A resp. c), lexicographically ordered;
  // present exactly when non-unique.
  std::optional<std::vector<Rational>> witness_a, witness_b;
  // Per-LP-variable (min, max) on the optimal face.
  std::vector<std::pair<Rational, Rational>> variable_ranges;
};

UniquenessReport primal_uniqueness(const ProblemParams& p);
UniquenessReport dual_uniqueness(const ProblemParams& p);

struct ParityPair {
  Quasicode even_optimum;  // optimum of (n, 2e)
  Quasicode odd_optimum;   // optimum of (n-1, 2e-1)
};

/// Optima of the (n,2e) and (n-1,2e-1) LPs related by extension/puncturing.
/// Throws std::invalid_argument when 2e > n.
ParityPair parity_pair(long n, long e);

struct ScanRow {
  long n, d;
  Rational bound;
  bool unique;
  std::optional<std::pair<Quasicode, Quasicode>> witnesses;
};

/// Bound and primal uniqueness verdict for every 1 <= d <= n <= n_max.
/// jobs = 0 picks the hardware concurrency.
std::vector<ScanRow> scan_uniqueness(long n_max, unsigned jobs = 0);

void write_scan_csv(const std::vector<ScanRow>& rows, std::ostream& os);
nlohmann::json scan_to_json(const std::vector<ScanRow>& rows);

struct TheoremCheck {
  std::string name;
  bool pass;
  std::string counterexample;  // empty when pass
};

/// Re-derives the library's structural claims with the solver up to n_max:
/// Krawtchouk identities, closed-form optima and their uniqueness, the
/// decomposition formula, parity, symmetry, the extension/puncturing
/// properties, and the symmetry-constrained LP equivalence.
std::vector<TheoremCheck> verify_theorems(long n_max);

}  // namespace delsarte
