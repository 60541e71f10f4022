#include "delsarte/delsarte.hpp"

#include "delsarte/krawtchouk.hpp"
#include "delsarte/serialization.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace delsarte {

LinearProgram build_primal(const ProblemParams& p) {
  const long n = p.n, d = p.d;
  const KrawtchoukTable& t = krawtchouk_table(n);
  const std::size_t m = static_cast<std::size_t>(n - d + 1);
  LinearProgram lp;
  lp.direction = Direction::maximize;
  lp.objective.assign(m, Rational(1));
  lp.objective_constant = 1;  // the folded A_0
  for (long j = 1; j <= n; ++j) {
    Constraint c;
    c.coeffs.resize(m);
    for (long i = d; i <= n; ++i)
      c.coeffs[i - d] = Rational(t.at(j, i));
    c.rel = Relation::ge;
    c.rhs = -Rational(binomial(n, j));
    lp.constraints.push_back(std::move(c));
  }
  return lp;
}

LinearProgram build_dual(const ProblemParams& p) {
  const long n = p.n, d = p.d;
  const KrawtchoukTable& t = krawtchouk_table(n);
  const std::size_t m = static_cast<std::size_t>(n);
  LinearProgram lp;
  lp.direction = Direction::minimize;
  lp.objective.resize(m);
  for (long j = 1; j <= n; ++j)
    lp.objective[j - 1] = Rational(binomial(n, j));
  lp.objective_constant = 1;  // the folded c_0 * C(n,0)
  for (long i = d; i <= n; ++i) {
    Constraint c;
    c.coeffs.resize(m);
    for (long j = 1; j <= n; ++j)
      c.coeffs[j - 1] = Rational(t.at(j, i));
    c.rel = Relation::le;
    c.rhs = Rational(-1);  // moves the folded K_0(i) = 1 across
    lp.constraints.push_back(std::move(c));
  }
  return lp;
}

LinearProgram build_decomposition_lp(const ProblemParams& p) {
  const long n = p.n, d = p.d;
  const KrawtchoukTable& t = krawtchouk_table(n);
  const std::size_t m = static_cast<std::size_t>(n + 1);
  LinearProgram lp;
  lp.direction = Direction::maximize;
  lp.objective.assign(m, Rational(0));
  lp.objective[0] = 1;
  {
    Constraint c;
    c.coeffs.resize(m);
    for (long j = 0; j <= n; ++j)
      c.coeffs[j] = Rational(binomial(n, j));
    c.rel = Relation::eq;
    c.rhs = Rational(pow2(n));
    lp.constraints.push_back(std::move(c));
  }
  for (long i = 1; i <= n; ++i) {
    Constraint c;
    c.coeffs.resize(m);
    for (long j = 0; j <= n; ++j)
      c.coeffs[j] = Rational(t.at(j, i));
    c.rel = (i <= d - 1) ? Relation::eq : Relation::ge;
    c.rhs = Rational(0);
    lp.constraints.push_back(std::move(c));
  }
  return lp;
}

LinearProgram build_symmetric_lp(const ProblemParams& p) {
  LinearProgram lp = build_decomposition_lp(p);
  const long n = p.n;
  if (p.d % 2 == 0) {
    for (long j = 0; 2 * j < n; ++j) {
      Constraint c;
      c.coeffs.assign(lp.num_vars(), Rational(0));
      c.coeffs[j] = 1;
      c.coeffs[n - j] -= Rational(1);
      c.rel = Relation::eq;
      c.rhs = Rational(0);
      lp.constraints.push_back(std::move(c));
    }
    return lp;
  }
  // Odd d: append b_{n+1} with b_{n+1} = b_0 and impose the length-(n+1)
  // symmetry b_j = b_{n+1-j}.
  const std::size_t m = static_cast<std::size_t>(n + 2);
  lp.objective.resize(m, Rational(0));
  for (auto& c : lp.constraints)
    c.coeffs.resize(m, Rational(0));
  {
    Constraint c;
    c.coeffs.assign(m, Rational(0));
    c.coeffs[n + 1] = 1;
    c.coeffs[0] -= Rational(1);
    c.rel = Relation::eq;
    c.rhs = Rational(0);
    lp.constraints.push_back(std::move(c));
  }
  for (long j = 0; 2 * j < n + 1; ++j) {
    Constraint c;
    c.coeffs.assign(m, Rational(0));
    c.coeffs[j] = 1;
    c.coeffs[n + 1 - j] -= Rational(1);
    c.rel = Relation::eq;
    c.rhs = Rational(0);
    lp.constraints.push_back(std::move(c));
  }
  return lp;
}

Rational lp_bound(const ProblemParams& p) {
  Solution s = solve(build_primal(p));
  if (s.status != SolveStatus::optimal)
    throw std::runtime_error("lp_bound: primal did not solve to optimality");
  return s.value;
}

std::optional<Quasicode> closed_form_primal(const ProblemParams& p) {
  const long n = p.n, d = p.d;
  Quasicode q{n, d, std::vector<Rational>(n + 1, Rational(0))};
  q.A[0] = 1;
  if (d == 1) {
    for (long i = 0; i <= n; ++i)
      q.A[i] = Rational(binomial(n, i));
    return q;
  }
  if (d == 2) {
    for (long i = 0; i <= n; i += 2)
      q.A[i] = Rational(binomial(n, i));
    return q;
  }
  if (!p.upper_half())
    return std::nullopt;
  if (d % 2 == 0) {
    q.A[d] = Rational(n, 2 * d - n);
  } else {
    q.A[d] = Rational(d + 1, 2 * d - n + 1);
    if (d + 1 <= n)
      q.A[d + 1] = Rational(n - d, 2 * d - n + 1);
  }
  return q;
}

std::optional<DualSolution> closed_form_dual(const ProblemParams& p) {
  const long n = p.n, d = p.d;
  DualSolution c{n, d, std::vector<Rational>(n + 1, Rational(0))};
  c.c[0] = 1;
  if (d == 1) {
    c.c.assign(n + 1, Rational(1));
    return c;
  }
  if (d == 2) {
    for (long j = 0; j <= n; ++j)
      c.c[j] = Rational(n - j, n);
    return c;
  }
  if (!p.upper_half())
    return std::nullopt;
  if (d % 2 == 0) {
    Rational denom((2 * d - n) * (2 * d - n + 2));
    c.c[1] += Rational(2 * d - n + 1) / denom;
    c.c[n - 1] += Rational(1) / denom;
  } else {
    c.c[1] += Rational(1, 2 * d - n + 1);
    c.c[n] += Rational(1, 2 * d - n + 1);
  }
  return c;
}

std::optional<Decomposition> closed_form_decomposition(const ProblemParams& p) {
  if (!p.upper_half())
    return std::nullopt;
  const long n = p.n;
  const long m = p.h() + p.k();  // n for even d, n+1 for odd d
  const KrawtchoukTable& t = krawtchouk_table(m);
  const Rational pivot{t.at(p.k(), 1)};
  Decomposition dec{n, std::vector<Rational>(n + 1)};
  for (long j = 0; j <= n; ++j)
    dec.b[j] = Rational(1) - Rational(t.at(p.k(), j)) / pivot;
  return dec;
}

Quasicode quasicode_from_primal_point(const ProblemParams& p,
                                      const std::vector<Rational>& point) {
  if (point.size() != static_cast<std::size_t>(p.n - p.d + 1))
    throw std::invalid_argument("quasicode_from_primal_point: size mismatch");
  Quasicode q{p.n, p.d, std::vector<Rational>(p.n + 1, Rational(0))};
  q.A[0] = 1;
  for (long i = p.d; i <= p.n; ++i)
    q.A[i] = point[i - p.d];
  return q;
}

DualSolution dual_from_point(const ProblemParams& p,
                             const std::vector<Rational>& point) {
  if (point.size() != static_cast<std::size_t>(p.n))
    throw std::invalid_argument("dual_from_point: size mismatch");
  DualSolution c{p.n, p.d, std::vector<Rational>(p.n + 1)};
  c.c[0] = 1;
  for (long j = 1; j <= p.n; ++j)
    c.c[j] = point[j - 1];
  return c;
}

Quasicode quasicode_from_decomposition_point(const ProblemParams& p,
                                             const std::vector<Rational>& point) {
  if (point.size() < static_cast<std::size_t>(p.n + 1))
    throw std::invalid_argument("quasicode_from_decomposition_point: size mismatch");
  Decomposition dec{p.n, std::vector<Rational>(point.begin(),
                                               point.begin() + p.n + 1)};
  return Quasicode{p.n, p.d, recompose(dec)};
}

namespace {

UniquenessReport report_from_probe(const ProblemParams& p, Target target,
                                   const LpUniqueness& u) {
  UniquenessReport rep;
  rep.target = target;
  rep.unique = u.unique;
  rep.optimum_value = u.value;
  rep.variable_ranges = u.ranges;
  if (!u.unique) {
    auto lift = [&](const std::vector<Rational>& pt) {
      return target == Target::primal ? quasicode_from_primal_point(p, pt).A
                                      : dual_from_point(p, pt).c;
    };
    rep.witness_a = lift(*u.witness_a);
    rep.witness_b = lift(*u.witness_b);
  }
  return rep;
}

}  // namespace

UniquenessReport primal_uniqueness(const ProblemParams& p) {
  return report_from_probe(p, Target::primal,
                           probe_uniqueness(build_primal(p)));
}

UniquenessReport dual_uniqueness(const ProblemParams& p) {
  return report_from_probe(p, Target::dual, probe_uniqueness(build_dual(p)));
}

ParityPair parity_pair(long n, long e) {
  if (e < 1 || 2 * e > n)
    throw std::invalid_argument("parity_pair: requires 1 <= 2e <= n");
  ProblemParams odd_params(n - 1, 2 * e - 1);
  Solution s = solve(build_primal(odd_params));
  if (s.status != SolveStatus::optimal)
    throw std::runtime_error("parity_pair: odd-parameter LP did not solve");
  Quasicode seed = quasicode_from_primal_point(odd_params, s.point);
  // Extending any odd-parameter optimum gives an even optimum; puncturing it
  // back gives the odd optimum paired with it (the seed itself need not be).
  Quasicode even_opt = extend(seed);
  Quasicode odd_opt = puncture(even_opt);
  return ParityPair{std::move(even_opt), std::move(odd_opt)};
}

namespace {

ScanRow scan_one(long n, long d) {
  ProblemParams p(n, d);
  UniquenessReport rep = primal_uniqueness(p);
  ScanRow row{n, d, rep.optimum_value, rep.unique, std::nullopt};
  if (!rep.unique) {
    Quasicode a{n, d, *rep.witness_a};
    Quasicode b{n, d, *rep.witness_b};
    row.witnesses = std::make_pair(std::move(a), std::move(b));
  }
  return row;
}

}  // namespace

std::vector<ScanRow> scan_uniqueness(long n_max, unsigned jobs) {
  if (n_max < 1)
    throw std::invalid_argument("scan_uniqueness: requires n_max >= 1");
  std::vector<std::pair<long, long>> pairs;
  for (long n = 1; n <= n_max; ++n)
    for (long d = 1; d <= n; ++d)
      pairs.emplace_back(n, d);

  if (jobs == 0)
    jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, pairs.size());

  std::vector<ScanRow> rows(pairs.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      rows[i] = scan_one(pairs[i].first, pairs[i].second);
    return rows;
  }
  std::vector<std::future<void>> tasks;
  for (unsigned w = 0; w < jobs; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < pairs.size(); i += jobs)
        rows[i] = scan_one(pairs[i].first, pairs[i].second);
    }));
  }
  for (auto& t : tasks)
    t.get();
  return rows;
}

void write_scan_csv(const std::vector<ScanRow>& rows, std::ostream& os) {
  os << "n,d,bound,unique\n";
  for (const auto& r : rows)
    os << r.n << ',' << r.d << ',' << r.bound.str() << ','
       << (r.unique ? "true" : "false") << '\n';
}

nlohmann::json scan_to_json(const std::vector<ScanRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row{{"n", r.n},
                       {"d", r.d},
                       {"bound", r.bound.str()},
                       {"unique", r.unique}};
    if (r.witnesses) {
      row["witnesses"] = nlohmann::json::array(
          {to_json(r.witnesses->first), to_json(r.witnesses->second)});
    }
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

Rational quasicode_sum(const Quasicode& q) {
  return std::accumulate(q.A.begin(), q.A.end(), Rational(0));
}

Rational dual_objective(const DualSolution& c) {
  Rational sum;
  for (long j = 0; j <= c.n; ++j)
    sum += c.c[j] * Rational(binomial(c.n, j));
  return sum;
}

std::string nd(long n, long d) {
  return "(n,d)=(" + std::to_string(n) + "," + std::to_string(d) + ")";
}

}  // namespace

std::vector<TheoremCheck> verify_theorems(long n_max) {
  if (n_max < 1)
    throw std::invalid_argument("verify_theorems: requires n_max >= 1");
  std::vector<TheoremCheck> out;
  auto check = [&out](std::string name, auto&& body) {
    TheoremCheck c{std::move(name), true, ""};
    body(c);
    out.push_back(std::move(c));
  };
  auto fail = [](TheoremCheck& c, std::string cx) {
    c.pass = false;
    c.counterexample = std::move(cx);
  };

  check("Krawtchouk identities", [&](TheoremCheck& c) {
    for (long n = 1; n <= n_max && c.pass; ++n)
      for (const auto& id : verify_identities(n))
        if (!id.pass) {
          fail(c, "n=" + std::to_string(n) + " " + id.name + " " +
                      id.counterexample);
          return;
        }
  });

  check("closed-form primal optimality", [&](TheoremCheck& c) {
    for (long n = 1; n <= n_max && c.pass; ++n)
      for (long d = 1; d <= n && c.pass; ++d) {
        ProblemParams p(n, d);
        auto q = closed_form_primal(p);
        if (!q)
          continue;
        if (!check_feasible(*q).feasible)
          fail(c, nd(n, d) + " closed form infeasible");
        else if (quasicode_sum(*q) != lp_bound(p))
          fail(c, nd(n, d) + " closed form misses the bound");
      }
  });

  check("closed-form dual optimality", [&](TheoremCheck& c) {
    for (long n = 1; n <= n_max && c.pass; ++n)
      for (long d = 1; d <= n && c.pass; ++d) {
        ProblemParams p(n, d);
        auto cd = closed_form_dual(p);
        if (!cd)
          continue;
        if (!check_dual_feasible(*cd).feasible)
          fail(c, nd(n, d) + " closed-form dual infeasible");
        else if (dual_objective(*cd) != lp_bound(p))
          fail(c, nd(n, d) + " closed-form dual misses the bound");
      }
  });

  check("complementary slackness of closed forms", [&](TheoremCheck& c) {
    for (long n = 1; n <= n_max && c.pass; ++n)
      for (long d = 1; d <= n && c.pass; ++d) {
        ProblemParams p(n, d);
        auto q = closed_form_primal(p);
        auto cd = closed_form_dual(p);
        if (!q || !cd)
          continue;
        if (!check_complementary_slackness(*q, *cd).all_satisfied)
          fail(c, nd(n, d));
      }
  });

  check("primal uniqueness in closed-form regimes", [&](TheoremCheck& c) {
    for (long n = 1; n <= n_max && c.pass; ++n)
      for (long d = 1; d <= n && c.pass; ++d) {
        ProblemParams p(n, d);
        auto q = closed_form_primal(p);
        if (!q)
          continue;
        UniquenessReport rep = primal_uniqueness(p);
        if (!rep.unique)
          fail(c, nd(n, d) + " solver reports non-unique");
        else {
          Solution s = solve(build_primal(p));
          if (quasicode_from_primal_point(p, s.point).A != q->A)
            fail(c, nd(n, d) + " solver optimum differs from closed form");
        }
      }
  });

  check("upper-half decomposition formula", [&](TheoremCheck& c) {
    for (long n = 1; n <= n_max && c.pass; ++n)
      for (long d = 1; d <= n && c.pass; ++d) {
        ProblemParams p(n, d);
        auto dec = closed_form_decomposition(p);
        if (!dec)
          continue;
        Solution s = solve(build_primal(p));
        Quasicode q = quasicode_from_primal_point(p, s.point);
        if (decompose(q).b != dec->b)
          fail(c, nd(n, d));
        else if (recompose(*dec) != closed_form_primal(p)->A)
          fail(c, nd(n, d) + " recompose mismatch");
      }
  });

  check("parity of optimal values", [&](TheoremCheck& c) {
    for (long n = 2; n <= n_max && c.pass; ++n)
      for (long e = 1; 2 * e <= n && c.pass; ++e)
        if (lp_bound(ProblemParams(n, 2 * e)) !=
            lp_bound(ProblemParams(n - 1, 2 * e - 1)))
          fail(c, "(n,e)=(" + std::to_string(n) + "," + std::to_string(e) + ")");
  });

  check("extension/puncturing pair properties", [&](TheoremCheck& c) {
    for (long n = 2; n <= n_max && c.pass; ++n)
      for (long e = 1; 2 * e <= n && c.pass; ++e) {
        std::string at =
            "(n,e)=(" + std::to_string(n) + "," + std::to_string(e) + ")";
        ParityPair pp = parity_pair(n, e);
        Decomposition bE = decompose(pp.even_optimum);
        Decomposition bO = decompose(pp.odd_optimum);
        for (long j = 0; j <= n; ++j)
          if (bE.b[j] != bE.b[n - j]) {
            fail(c, at + " b^E not symmetric at j=" + std::to_string(j));
            return;
          }
        for (long j = 0; j <= n - 1; ++j)
          if (bO.b[j] != bE.b[j]) {
            fail(c, at + " b^O is not the truncation at j=" + std::to_string(j));
            return;
          }
        for (long i = 2; i <= n; i += 2) {
          Rational prev = (i - 1 <= n - 1) ? pp.odd_optimum.A[i - 1] : Rational(0);
          Rational cur = (i <= n - 1) ? pp.odd_optimum.A[i] : Rational(0);
          if (pp.even_optimum.A[i] != prev + cur ||
              prev * Rational(binomial(n - 1, i)) !=
                  cur * Rational(binomial(n - 1, i - 1))) {
            fail(c, at + " entry relation fails at i=" + std::to_string(i));
            return;
          }
        }
        if (!check_feasible(pp.even_optimum).feasible ||
            !check_feasible(pp.odd_optimum).feasible)
          fail(c, at + " pair member infeasible");
        else if (quasicode_sum(pp.even_optimum) != lp_bound(ProblemParams(n, 2 * e)))
          fail(c, at + " pair member suboptimal");
      }
  });

  check("symmetry-constrained LP equivalence", [&](TheoremCheck& c) {
    for (long n = 2; n <= n_max && c.pass; ++n)
      for (long e = 1; 2 * e <= n && c.pass; ++e) {
        std::string at =
            "(n,e)=(" + std::to_string(n) + "," + std::to_string(e) + ")";
        ProblemParams even_p(n, 2 * e);
        Solution sym_even = solve(build_symmetric_lp(even_p));
        if (sym_even.status != SolveStatus::optimal ||
            sym_even.value != lp_bound(even_p)) {
          fail(c, at + " symmetric value differs from unconstrained");
          continue;
        }
        Quasicode q = quasicode_from_decomposition_point(even_p, sym_even.point);
        if (!is_even(q)) {
          fail(c, at + " symmetric optimum is not even");
          continue;
        }
        ProblemParams odd_p(n - 1, 2 * e - 1);
        Solution sym_odd = solve(build_symmetric_lp(odd_p));
        if (sym_odd.status != SolveStatus::optimal ||
            sym_odd.value != sym_even.value)
          fail(c, at + " the two symmetry-constrained values differ");
      }
  });

  return out;
}

}  // namespace delsarte
