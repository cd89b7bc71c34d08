// Independent oracles used to derive and cross-check expected values.
// Everything here is deliberately self-contained: brute-force enumeration
// with its own Gaussian elimination, plus a rational bisection that never
// touches the simplex solver or the double-description code it checks.
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "nefkit/bundle.hpp"
#include "nefkit/linprog.hpp"
#include "nefkit/rational.hpp"

namespace oracle {

using nefkit::BundleClass;
using nefkit::BundleModel;
using nefkit::Integer;
using nefkit::LinearProgram;
using nefkit::LPStatus;
using nefkit::Rational;
using nefkit::Relation;
using nefkit::Stratum;
using nefkit::Vec;

// --- tiny standalone linear algebra -------------------------------------

enum class SolveKind { Unique, None, Many };

// Solves rows . x = rhs by Gauss-Jordan on the augmented matrix.
inline SolveKind solve_square(std::vector<std::vector<Rational>> m,
                              std::vector<Rational> rhs, std::size_t n,
                              std::vector<Rational>* solution) {
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    std::swap(rhs[row], rhs[sel]);
    const Rational inv = 1 / m[row][col];
    for (auto& e : m[row]) e *= inv;
    rhs[row] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < n; ++c) m[r][c] -= f * m[row][c];
      rhs[r] -= f * rhs[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < m.size(); ++r) {
    if (rhs[r] != 0) return SolveKind::None;
  }
  if (pivot_col.size() < n) return SolveKind::Many;
  solution->assign(n, Rational(0));
  for (std::size_t r = 0; r < n; ++r) (*solution)[pivot_col[r]] = rhs[r];
  return SolveKind::Unique;
}

// Basis of the homogeneous solution space of rows . x = 0.
inline std::vector<std::vector<Rational>> null_basis(
    std::vector<std::vector<Rational>> m, std::size_t n) {
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = 1 / m[row][col];
    for (auto& e : m[row]) e *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < n; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivot_col) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[col] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
      v[pivot_col[r]] = -m[r][col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// --- exhaustive LP oracle ------------------------------------------------
//
// Complete for programs whose variables are all constrained nonnegative:
// such a feasible region is pointed, so nonemptiness gives a vertex, the
// optimum (when finite) is attained at a vertex, and unboundedness shows up
// on an extreme ray of the recession cone.

struct EnumLP {
  LPStatus status = LPStatus::Optimal;
  Rational value;
};

inline EnumLP enumerate_lp(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();

  // tight-candidate pool: every inequality row and every bound x_j >= 0
  struct Constraint {
    std::vector<Rational> coeffs;
    Rational rhs;
    bool equality;
  };
  std::vector<Constraint> all;
  for (const auto& row : lp.rows) {
    std::vector<Rational> coeffs(n);
    for (std::size_t j = 0; j < n; ++j) coeffs[j] = row.coeffs[j];
    all.push_back({coeffs, row.rhs, row.rel == Relation::Equal});
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> coeffs(n, Rational(0));
    coeffs[j] = 1;
    all.push_back({coeffs, Rational(0), false});
  }
  std::vector<std::size_t> optional_pool;
  std::vector<std::vector<Rational>> mandatory;
  std::vector<Rational> mandatory_rhs;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].equality) {
      mandatory.push_back(all[i].coeffs);
      mandatory_rhs.push_back(all[i].rhs);
    } else {
      optional_pool.push_back(i);
    }
  }

  const auto feasible_point = [&](const std::vector<Rational>& x) {
    for (const auto& c : all) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += c.coeffs[j] * x[j];
      if (c.equality ? lhs != c.rhs : lhs < c.rhs) return false;
    }
    return true;
  };

  // vertices: every subset of optional constraints made tight
  std::optional<Rational> best;
  const std::size_t pool = optional_pool.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << pool); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > n) continue;
    std::vector<std::vector<Rational>> rows = mandatory;
    std::vector<Rational> rhs = mandatory_rhs;
    for (std::size_t b = 0; b < pool; ++b) {
      if (mask & (std::size_t(1) << b)) {
        rows.push_back(all[optional_pool[b]].coeffs);
        rhs.push_back(all[optional_pool[b]].rhs);
      }
    }
    std::vector<Rational> x;
    if (solve_square(rows, rhs, n, &x) != SolveKind::Unique) continue;
    if (!feasible_point(x)) continue;
    Rational value = 0;
    for (std::size_t j = 0; j < n; ++j) value += lp.objective[j] * x[j];
    if (!best || value < *best) best = value;
  }

  if (!best) return {LPStatus::Infeasible, Rational(0)};

  // extreme rays of the recession cone, by the same tight-set enumeration
  const auto feasible_ray = [&](const std::vector<Rational>& d) {
    for (const auto& c : all) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += c.coeffs[j] * d[j];
      if (c.equality ? lhs != 0 : lhs < 0) return false;
    }
    return true;
  };
  for (std::size_t mask = 0; mask < (std::size_t(1) << pool); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > n - 1) continue;
    std::vector<std::vector<Rational>> rows = mandatory;
    for (std::size_t b = 0; b < pool; ++b) {
      if (mask & (std::size_t(1) << b)) rows.push_back(all[optional_pool[b]].coeffs);
    }
    const auto basis = null_basis(rows, n);
    if (basis.size() != 1) continue;
    for (const int sign : {1, -1}) {
      std::vector<Rational> d = basis[0];
      for (auto& e : d) e *= sign;
      if (!feasible_ray(d)) continue;
      Rational drop = 0;
      for (std::size_t j = 0; j < n; ++j) drop += lp.objective[j] * d[j];
      if (drop < 0) return {LPStatus::Unbounded, Rational(0)};
    }
  }
  return {LPStatus::Optimal, *best};
}

// --- simplest rational in an interval ------------------------------------

inline Integer floor_rational(const Rational& r) {
  Integer q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

inline Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("empty interval");
  if (lo == hi) return lo;
  if (lo <= 0 && 0 <= hi) return Rational(0);
  if (hi < 0) return -simplest_between(-hi, -lo);
  const Integer fl = floor_rational(lo);
  const Rational ceil_lo = (Rational(fl) == lo) ? lo : Rational(fl + 1);
  if (ceil_lo <= hi) return ceil_lo;
  return Rational(fl) + 1 / simplest_between(1 / (hi - Rational(fl)),
                                             1 / (lo - Rational(fl)));
}

// --- multiplicity oracle over a curve base --------------------------------
//
// Feasibility of the minimization at a fixed t reduces, over a curve, to a
// single closed-form inequality: the best simplex weights sit on the summand
// of largest degree on each side. The minimum is then recovered by pure
// bisection plus minimal-denominator reconstruction, with the denominator
// bound taken from the instance data.

struct MultOracle {
  bool psef = false;
  Rational nu;
};

inline MultOracle bisect_multiplicity(const BundleModel& model,
                                      const BundleClass& alpha,
                                      const Stratum& stratum) {
  const Rational beta = alpha.beta[0];
  const Rational lambda = alpha.lambda;
  if (lambda < 0) return {false, Rational(0)};

  std::optional<Rational> in_max, out_max;
  for (std::size_t i = 0; i < model.fibers().size(); ++i) {
    const Rational deg = model.fibers()[i][0];
    auto& slot = stratum.contains(i) ? in_max : out_max;
    if (!slot || deg > *slot) slot = deg;
  }
  if (!in_max) {  // whole space: psef-ness only
    const bool psef = beta + lambda * *out_max >= 0;
    return {psef, Rational(0)};
  }

  const auto feasible = [&](const Rational& t) {
    return beta + t * *in_max + (lambda - t) * *out_max >= 0;
  };
  if (feasible(0)) return {true, Rational(0)};
  if (!feasible(lambda)) return {false, Rational(0)};  // affine in t

  // root of (beta + lambda out_max) + t (in_max - out_max); its denominator
  // divides den(offset) * num(slope)
  const Rational offset = beta + lambda * *out_max;
  const Rational slope = *in_max - *out_max;
  const Integer bound_den =
      denominator(offset) * boost::multiprecision::abs(numerator(slope));
  const Rational width_target = Rational(1, 2 * bound_den * bound_den);

  Rational lo = 0, hi = lambda;  // invariant: !feasible(lo), feasible(hi)
  while (hi - lo >= width_target) {
    const Rational mid = (lo + hi) / 2;
    (feasible(mid) ? hi : lo) = mid;
  }
  // the interval is too narrow to hold two rationals within the bound, so
  // the simplest one it contains is the exact minimum
  return {true, simplest_between(lo, hi)};
}

}  // namespace oracle
