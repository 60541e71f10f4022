#include "delsarte/quasicode.hpp"

#include "delsarte/krawtchouk.hpp"

#include <stdexcept>

namespace delsarte {

namespace {

void check_length(long n, std::size_t len, const char* what) {
  if (n < 0 || len != static_cast<std::size_t>(n + 1))
    throw std::invalid_argument(std::string(what) + ": sequence length must be n+1");
}

}  // namespace

void validate(const Quasicode& q) {
  check_length(q.n, q.A.size(), "Quasicode");
  if (q.d < 1 || q.d > q.n)
    throw std::invalid_argument("Quasicode: requires 1 <= d <= n");
  if (q.A[0] != Rational(1))
    throw std::invalid_argument("Quasicode: A_0 must be 1");
  for (long i = 1; i <= q.n; ++i) {
    if (i < q.d && !q.A[i].is_zero())
      throw std::invalid_argument("Quasicode: A_" + std::to_string(i) +
                                  " must be 0 below d");
    if (q.A[i].sign() < 0)
      throw std::invalid_argument("Quasicode: A_" + std::to_string(i) +
                                  " must be nonnegative");
  }
}

void validate(const Decomposition& dec) {
  check_length(dec.n, dec.b.size(), "Decomposition");
}

void validate(const DualSolution& c) {
  check_length(c.n, c.c.size(), "DualSolution");
  if (c.d < 1 || c.d > c.n)
    throw std::invalid_argument("DualSolution: requires 1 <= d <= n");
  if (c.c[0] != Rational(1))
    throw std::invalid_argument("DualSolution: c_0 must be 1");
  for (long j = 1; j <= c.n; ++j)
    if (c.c[j].sign() < 0)
      throw std::invalid_argument("DualSolution: c_" + std::to_string(j) +
                                  " must be nonnegative");
}

Decomposition decompose(const Quasicode& q) {
  check_length(q.n, q.A.size(), "decompose");
  const KrawtchoukTable& t = krawtchouk_table(q.n);
  Decomposition dec{q.n, std::vector<Rational>(q.n + 1)};
  for (long j = 0; j <= q.n; ++j) {
    Rational sum;
    for (long i = 0; i <= q.n; ++i)
      sum += q.A[i] * Rational(t.at(j, i));
    dec.b[j] = sum / Rational(binomial(q.n, j));
  }
  return dec;
}

std::vector<Rational> recompose(const Decomposition& dec) {
  check_length(dec.n, dec.b.size(), "recompose");
  const KrawtchoukTable& t = krawtchouk_table(dec.n);
  const Rational two_n{pow2(dec.n)};
  std::vector<Rational> A(dec.n + 1);
  for (long i = 0; i <= dec.n; ++i) {
    Rational sum;
    for (long j = 0; j <= dec.n; ++j)
      sum += dec.b[j] * Rational(t.at(j, i));
    A[i] = Rational(binomial(dec.n, i)) * sum / two_n;
  }
  return A;
}

Quasicode extend(const Quasicode& q) {
  check_length(q.n, q.A.size(), "extend");
  Quasicode out;
  out.n = q.n + 1;
  out.d = 2 * ((q.d + 1) / 2);
  out.A.assign(out.n + 1, Rational(0));
  for (long i = 0; i <= out.n; i += 2) {
    if (i <= q.n)
      out.A[i] += q.A[i];
    if (i >= 1 && i - 1 <= q.n)
      out.A[i] += q.A[i - 1];
  }
  return out;
}

Quasicode puncture(const Quasicode& q) {
  if (q.d < 2)
    throw std::domain_error("puncture: requires d >= 2");
  Decomposition dec = decompose(q);
  dec.n -= 1;
  dec.b.pop_back();
  Quasicode out;
  out.n = q.n - 1;
  out.d = q.d - 1;
  out.A = recompose(dec);
  return out;
}

std::set<long> support(const Quasicode& q) {
  std::set<long> s;
  for (long i = 1; i <= q.n && static_cast<std::size_t>(i) < q.A.size(); ++i)
    if (q.A[i].sign() > 0)
      s.insert(i);
  return s;
}

bool is_even(const Quasicode& q) {
  for (long i = 1; i <= q.n; i += 2)
    if (!q.A[i].is_zero())
      return false;
  return true;
}

FeasibilityResult check_feasible(const Quasicode& q) {
  check_length(q.n, q.A.size(), "check_feasible");
  if (q.A[0] != Rational(1))
    return {false, "A_0 != 1"};
  for (long i = 1; i < q.d; ++i)
    if (!q.A[i].is_zero())
      return {false, "A_" + std::to_string(i) + " != 0 below d"};
  for (long i = 0; i <= q.n; ++i)
    if (q.A[i].sign() < 0)
      return {false, "A_" + std::to_string(i) + " < 0"};
  const KrawtchoukTable& t = krawtchouk_table(q.n);
  for (long j = 1; j <= q.n; ++j) {
    Rational sum;
    for (long i = 0; i <= q.n; ++i)
      sum += q.A[i] * Rational(t.at(j, i));
    if (sum.sign() < 0)
      return {false, "Delsarte inequality violated at j=" + std::to_string(j) +
                         " (value " + sum.str() + ")"};
  }
  return {};
}

FeasibilityResult check_dual_feasible(const DualSolution& c) {
  check_length(c.n, c.c.size(), "check_dual_feasible");
  if (c.c[0] != Rational(1))
    return {false, "c_0 != 1"};
  for (long j = 1; j <= c.n; ++j)
    if (c.c[j].sign() < 0)
      return {false, "c_" + std::to_string(j) + " < 0"};
  const KrawtchoukTable& t = krawtchouk_table(c.n);
  for (long i = c.d; i <= c.n; ++i) {
    Rational sum;
    for (long j = 0; j <= c.n; ++j)
      sum += c.c[j] * Rational(t.at(j, i));
    if (sum.sign() > 0)
      return {false, "dual constraint violated at i=" + std::to_string(i) +
                         " (value " + sum.str() + ")"};
  }
  return {};
}

SlacknessReport check_complementary_slackness(const Quasicode& q,
                                              const DualSolution& c) {
  if (q.n != c.n || q.d != c.d)
    throw std::invalid_argument(
        "check_complementary_slackness: mismatched (n,d)");
  check_length(q.n, q.A.size(), "check_complementary_slackness");
  check_length(c.n, c.c.size(), "check_complementary_slackness");
  const KrawtchoukTable& t = krawtchouk_table(q.n);
  SlacknessReport report;
  for (long i = q.d; i <= q.n; ++i) {
    if (q.A[i].sign() <= 0)
      continue;
    Rational sum;
    for (long j = 0; j <= q.n; ++j)
      sum += c.c[j] * Rational(t.at(j, i));
    bool ok = sum.is_zero();
    report.conditions.push_back({false, i, ok});
    report.all_satisfied = report.all_satisfied && ok;
  }
  for (long j = 1; j <= q.n; ++j) {
    if (c.c[j].sign() <= 0)
      continue;
    Rational sum;
    for (long i = 0; i <= q.n; ++i)
      sum += q.A[i] * Rational(t.at(j, i));
    bool ok = sum.is_zero();
    report.conditions.push_back({true, j, ok});
    report.all_satisfied = report.all_satisfied && ok;
  }
  return report;
}

}  // namespace delsarte
