#pragma once

#include "delsarte/rational.hpp"

#include <string>
#include <vector>

namespace delsarte {

/// Binomial coefficient with the convention C(a,b) = 0 unless 0 <= b <= a.
Integer binomial(long a, long b);

/// 2^n as an exact integer, n >= 0.
Integer pow2(long n);

/// The (n+1)x(n+1) matrix of binary Krawtchouk values, entries(j,i) = K_j(i;n).
/// Built by the three-term recurrence; immutable after construction.
class KrawtchoukTable {
public:
  explicit KrawtchoukTable(long n);
  // Raw-entry constructor, used by tests to inject corrupted tables.
  KrawtchoukTable(long n, std::vector<std::vector<Integer>> entries);

  long n() const { return n_; }
  // K_j(i;n), returning 0 whenever j or i falls outside [0,n].
  Integer value(long j, long i) const;
  const Integer& at(long j, long i) const { return entries_[j][i]; }

private:
  long n_;
  std::vector<std::vector<Integer>> entries_;
};

/// K_j(i;n) by the defining alternating sum; total in j and i
/// (0 outside [0,n]). Retained as the independent oracle for the table.
Integer krawtchouk_eval(long j, long i, long n);

/// Shared per-n table cache; safe for concurrent readers.
const KrawtchoukTable& krawtchouk_table(long n);

struct IdentityCheck {
  std::string name;
  bool pass;
  std::string counterexample;  // empty when pass
};

/// Checks every classical Krawtchouk identity exhaustively over its index
/// range for the given table: reciprocity, basic symmetries, orthogonality,
/// column sums, three-term recurrence, cross-length recurrences, the
/// magnitude bound at i=1, K^2 = 2^n I, and agreement with the defining sum.
std::vector<IdentityCheck> verify_identities(const KrawtchoukTable& table);
std::vector<IdentityCheck> verify_identities(long n);

}  // namespace delsarte
