#include "delsarte/simplex.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace delsarte {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

class Tableau {
public:
  Tableau(const LinearProgram& lp) : lp_(lp) {
    const std::size_t m = lp.num_vars();
    if (!lp.bounds.empty() && lp.bounds.size() != m)
      throw std::invalid_argument("solve: bounds size mismatch");
    for (const auto& c : lp.constraints)
      if (c.coeffs.size() != m)
        throw std::invalid_argument("solve: constraint row size mismatch");

    // Split free variables into differences of nonnegative columns.
    pos_col_.resize(m);
    neg_col_.assign(m, npos);
    nstruct_ = 0;
    for (std::size_t v = 0; v < m; ++v) {
      pos_col_[v] = nstruct_++;
      if (!lp.bounds.empty() && lp.bounds[v] == VarBound::free_var)
        neg_col_[v] = nstruct_++;
    }

    const std::size_t nrows = lp.constraints.size();
    std::vector<Relation> rel(nrows);
    rows_.assign(nrows, {});
    std::size_t nslack = 0, nart = 0;
    for (std::size_t r = 0; r < nrows; ++r) {
      rel[r] = lp.constraints[r].rel;
      bool flip = lp.constraints[r].rhs < Rational(0);
      if (flip) {
        if (rel[r] == Relation::le)
          rel[r] = Relation::ge;
        else if (rel[r] == Relation::ge)
          rel[r] = Relation::le;
      }
      if (rel[r] != Relation::eq)
        ++nslack;
      if (rel[r] != Relation::le)
        ++nart;
    }
    art_start_ = nstruct_ + nslack;
    ncols_ = art_start_ + nart;

    basis_.assign(nrows, npos);
    std::size_t slack = nstruct_, art = art_start_;
    for (std::size_t r = 0; r < nrows; ++r) {
      auto& row = rows_[r];
      row.assign(ncols_ + 1, Rational(0));
      const auto& c = lp.constraints[r];
      bool flip = c.rhs < Rational(0);
      for (std::size_t v = 0; v < m; ++v) {
        Rational a = flip ? -c.coeffs[v] : c.coeffs[v];
        row[pos_col_[v]] = a;
        if (neg_col_[v] != npos)
          row[neg_col_[v]] = -a;
      }
      row[ncols_] = flip ? -c.rhs : c.rhs;
      if (rel[r] == Relation::le) {
        row[slack] = 1;
        basis_[r] = slack++;
      } else if (rel[r] == Relation::ge) {
        row[slack++] = -1;
        row[art] = 1;
        basis_[r] = art++;
      } else {
        row[art] = 1;
        basis_[r] = art++;
      }
    }
  }

  Solution run() {
    // Phase 1: drive the artificial variables to zero.
    if (art_start_ < ncols_) {
      std::vector<Rational> obj(ncols_ + 1, Rational(0));
      for (std::size_t j = art_start_; j < ncols_; ++j)
        obj[j] = 1;
      for (std::size_t r = 0; r < rows_.size(); ++r)
        if (basis_[r] >= art_start_)
          for (std::size_t k = 0; k <= ncols_; ++k)
            obj[k] -= rows_[r][k];
      bool bounded = iterate(obj, ncols_);
      assert(bounded);
      (void)bounded;
      if (-obj[ncols_] > Rational(0))
        return Solution{SolveStatus::infeasible, Rational(0), {}, {}};
      drive_out_artificials();
    }

    // Phase 2 on the original objective (as a minimization).
    std::vector<Rational> obj(ncols_ + 1, Rational(0));
    for (std::size_t v = 0; v < lp_.num_vars(); ++v) {
      Rational c = lp_.objective[v];
      if (lp_.direction == Direction::maximize)
        c = -c;
      obj[pos_col_[v]] = c;
      if (neg_col_[v] != npos)
        obj[neg_col_[v]] = -c;
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& cb = obj[basis_[r]];
      if (!cb.is_zero()) {
        Rational f = cb;  // copy; obj[basis_[r]] is about to change
        for (std::size_t k = 0; k <= ncols_; ++k)
          obj[k] -= f * rows_[r][k];
      }
    }
    if (!iterate(obj, art_start_))
      return Solution{SolveStatus::unbounded, Rational(0), {}, {}};

    Solution s;
    s.status = SolveStatus::optimal;
    std::vector<Rational> x(ncols_, Rational(0));
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (basis_[r] < ncols_)
        x[basis_[r]] = rows_[r][ncols_];
    s.point.resize(lp_.num_vars());
    s.value = lp_.objective_constant;
    for (std::size_t v = 0; v < lp_.num_vars(); ++v) {
      s.point[v] = x[pos_col_[v]];
      if (neg_col_[v] != npos)
        s.point[v] -= x[neg_col_[v]];
      s.value += lp_.objective[v] * s.point[v];
    }
    s.basis = basis_;
    std::sort(s.basis.begin(), s.basis.end());
    return s;
  }

private:
  // Bland's rule: lowest-index entering column, lowest basic index on
  // ratio-test ties. Guarantees termination on degenerate instances.
  bool iterate(std::vector<Rational>& obj, std::size_t allowed_cols) {
    for (;;) {
      std::size_t pc = npos;
      for (std::size_t j = 0; j < allowed_cols; ++j)
        if (obj[j] < Rational(0)) {
          pc = j;
          break;
        }
      if (pc == npos)
        return true;
      std::size_t pr = npos;
      Rational best;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r][pc] > Rational(0)) {
          Rational ratio = rows_[r][ncols_] / rows_[r][pc];
          if (pr == npos || ratio < best ||
              (ratio == best && basis_[r] < basis_[pr])) {
            pr = r;
            best = ratio;
          }
        }
      }
      if (pr == npos)
        return false;
      pivot(pr, pc);
      Rational f = obj[pc];
      if (!f.is_zero())
        for (std::size_t k = 0; k <= ncols_; ++k)
          obj[k] -= f * rows_[pr][k];
    }
  }

  void pivot(std::size_t pr, std::size_t pc) {
    Rational piv = rows_[pr][pc];
    for (std::size_t k = 0; k <= ncols_; ++k)
      rows_[pr][k] /= piv;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r == pr || rows_[r][pc].is_zero())
        continue;
      Rational f = rows_[r][pc];
      for (std::size_t k = 0; k <= ncols_; ++k)
        rows_[r][k] -= f * rows_[pr][k];
    }
    basis_[pr] = pc;
  }

  // Pivot basic artificials onto real columns where possible. Rows that
  // cannot be repaired are linearly dependent and stay inert: their rhs is
  // zero and artificial columns are never allowed to re-enter.
  void drive_out_artificials() {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (basis_[r] < art_start_)
        continue;
      for (std::size_t j = 0; j < art_start_; ++j) {
        if (!rows_[r][j].is_zero()) {
          pivot(r, j);
          break;
        }
      }
    }
  }

  const LinearProgram& lp_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> pos_col_, neg_col_;
  std::size_t nstruct_ = 0, art_start_ = 0, ncols_ = 0;
};

LinearProgram face_lp(const LinearProgram& lp, const Rational& opt) {
  LinearProgram p = lp;
  Constraint level;
  level.coeffs = lp.objective;
  level.rel = Relation::eq;
  level.rhs = opt - lp.objective_constant;
  p.constraints.push_back(std::move(level));
  p.objective_constant = Rational(0);
  return p;
}

}  // namespace

Solution solve(const LinearProgram& lp) {
  return Tableau(lp).run();
}

FaceProbe probe_variable_on_optimal_face(const LinearProgram& lp,
                                         const Rational& opt,
                                         std::size_t var) {
  if (var >= lp.num_vars())
    throw std::invalid_argument("probe: variable index out of range");
  LinearProgram p = face_lp(lp, opt);
  p.objective.assign(lp.num_vars(), Rational(0));
  p.objective[var] = 1;

  p.direction = Direction::minimize;
  Solution lo = solve(p);
  if (lo.status == SolveStatus::infeasible)
    throw std::invalid_argument("probe: optimal face is empty");
  p.direction = Direction::maximize;
  Solution hi = solve(p);
  if (lo.status != SolveStatus::optimal || hi.status != SolveStatus::optimal)
    throw std::runtime_error("probe: optimal face unbounded in variable");
  return FaceProbe{lo.value, hi.value, std::move(lo.point), std::move(hi.point)};
}

std::pair<Rational, Rational> variable_range_on_optimal_face(
    const LinearProgram& lp, const Rational& opt, std::size_t var) {
  FaceProbe p = probe_variable_on_optimal_face(lp, opt, var);
  return {p.min, p.max};
}

LpUniqueness probe_uniqueness(const LinearProgram& lp) {
  Solution s = solve(lp);
  if (s.status != SolveStatus::optimal)
    throw std::invalid_argument("probe_uniqueness: LP is not optimal");
  LpUniqueness u;
  u.value = s.value;
  u.point = s.point;
  for (std::size_t v = 0; v < lp.num_vars(); ++v) {
    FaceProbe p = probe_variable_on_optimal_face(lp, s.value, v);
    u.ranges.emplace_back(p.min, p.max);
    if (u.unique && p.min != p.max) {
      u.unique = false;
      bool a_first = std::lexicographical_compare(
          p.argmin.begin(), p.argmin.end(), p.argmax.begin(), p.argmax.end());
      u.witness_a = a_first ? p.argmin : p.argmax;
      u.witness_b = a_first ? p.argmax : p.argmin;
    }
  }
  return u;
}

}  // namespace delsarte
