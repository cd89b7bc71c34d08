#include "nefkit/linprog.hpp"

#include <cstddef>
#include <limits>
#include <vector>

namespace nefkit {

void LinearProgram::validate() const {
  const std::size_t n = num_vars();
  if (nonneg.size() != n) {
    throw DimensionError("nonneg mask has " + std::to_string(nonneg.size()) +
                         " entries for " + std::to_string(n) + " variables");
  }
  for (const auto& row : rows) {
    if (row.coeffs.size() != n) {
      throw DimensionError("constraint row has " +
                           std::to_string(row.coeffs.size()) +
                           " coefficients for " + std::to_string(n) +
                           " variables");
    }
  }
}

namespace {

constexpr std::size_t kNoCol = std::numeric_limits<std::size_t>::max();

// Dense rational tableau over the standardized program
//   min c.x  s.t.  A x = b, x >= 0
// obtained by splitting free variables and adding one slack per inequality.
// Artificial columns double as a running copy of B^{-1}, which is where the
// dual multipliers are read off.
struct Simplex {
  const LinearProgram& lp;
  std::size_t n_std = 0;   // standardized structural + slack columns
  std::size_t n_cols = 0;  // including artificials
  std::vector<std::size_t> pos_col, neg_col;  // per original variable
  std::vector<std::size_t> slack_col;         // per row, kNoCol for equalities
  std::vector<int> row_sign;                  // +1 / -1 rhs normalization
  std::vector<bool> row_active;

  std::vector<std::vector<Rational>> a;  // m x n_cols
  std::vector<Rational> rhs;             // m
  std::vector<Rational> cost;            // n_cols reduced costs
  std::vector<std::size_t> basis;        // m

  explicit Simplex(const LinearProgram& prog) : lp(prog) {
    const std::size_t n = lp.num_vars();
    const std::size_t m = lp.rows.size();
    pos_col.assign(n, kNoCol);
    neg_col.assign(n, kNoCol);
    for (std::size_t j = 0; j < n; ++j) {
      pos_col[j] = n_std++;
      if (!lp.nonneg[j]) neg_col[j] = n_std++;
    }
    slack_col.assign(m, kNoCol);
    for (std::size_t i = 0; i < m; ++i) {
      if (lp.rows[i].rel == Relation::GreaterEqual) slack_col[i] = n_std++;
    }
    n_cols = n_std + m;  // one artificial per row

    row_sign.assign(m, 1);
    row_active.assign(m, true);
    a.assign(m, std::vector<Rational>(n_cols, Rational(0)));
    rhs.assign(m, Rational(0));
    basis.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      const int sign = lp.rows[i].rhs < 0 ? -1 : 1;
      row_sign[i] = sign;
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& cij = lp.rows[i].coeffs[j];
        a[i][pos_col[j]] = sign * cij;
        if (neg_col[j] != kNoCol) a[i][neg_col[j]] = -sign * cij;
      }
      if (slack_col[i] != kNoCol) a[i][slack_col[i]] = -sign;
      rhs[i] = sign * lp.rows[i].rhs;
      a[i][n_std + i] = 1;
      basis[i] = n_std + i;
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / a[row][col];
    for (auto& e : a[row]) e *= inv;
    rhs[row] *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || !row_active[r] || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n_cols; ++j) a[r][j] -= f * a[row][j];
      rhs[r] -= f * rhs[row];
    }
    if (cost[col] != 0) {
      const Rational f = cost[col];
      for (std::size_t j = 0; j < n_cols; ++j) cost[j] -= f * a[row][j];
    }
    basis[row] = col;
  }

  // Bland's rule: lowest-index entering column, lowest-index basic variable
  // on ratio ties. Returns the entering column, or kNoCol at optimality, or
  // sets *unbounded_col when no row limits the entering column.
  bool iterate(bool allow_artificials, std::size_t* unbounded_col) {
    std::size_t enter = kNoCol;
    for (std::size_t j = 0; j < n_cols; ++j) {
      if (!allow_artificials && j >= n_std) break;
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == kNoCol) return false;

    std::size_t leave = kNoCol;
    Rational best;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (!row_active[r] || a[r][enter] <= 0) continue;
      const Rational ratio = rhs[r] / a[r][enter];
      if (leave == kNoCol || ratio < best ||
          (ratio == best && basis[r] < basis[leave])) {
        best = ratio;
        leave = r;
      }
    }
    if (leave == kNoCol) {
      *unbounded_col = enter;
      return false;
    }
    pivot(leave, enter);
    return true;
  }

  void load_costs(const std::vector<Rational>& c) {
    cost = c;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (!row_active[r] || cost[basis[r]] == 0) continue;
      const Rational f = cost[basis[r]];
      for (std::size_t j = 0; j < n_cols; ++j) cost[j] -= f * a[r][j];
    }
  }

  Rational objective_of_basis(const std::vector<Rational>& c) const {
    Rational v = 0;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (row_active[r]) v += c[basis[r]] * rhs[r];
    }
    return v;
  }

  // Dual multipliers for the original rows; phase-agnostic as long as the
  // current cost row was loaded with zero cost on the artificial columns.
  Vec extract_dual() const {
    Vec y(lp.rows.size());
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
      y[i] = row_active[i] ? Rational(row_sign[i] * -cost[n_std + i])
                           : Rational(0);
    }
    return y;
  }

  Vec extract_primal() const {
    std::vector<Rational> x_std(n_cols, Rational(0));
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (row_active[r]) x_std[basis[r]] = rhs[r];
    }
    Vec x(lp.num_vars());
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
      x[j] = x_std[pos_col[j]];
      if (neg_col[j] != kNoCol) x[j] -= x_std[neg_col[j]];
    }
    return x;
  }

  Vec extract_ray(std::size_t enter) const {
    std::vector<Rational> d(n_cols, Rational(0));
    d[enter] = 1;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (row_active[r]) d[basis[r]] = -a[r][enter];
    }
    Vec ray(lp.num_vars());
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
      ray[j] = d[pos_col[j]];
      if (neg_col[j] != kNoCol) ray[j] -= d[neg_col[j]];
    }
    return ray;
  }
};

}  // namespace

LPOutcome solve_lp(const LinearProgram& lp) {
  lp.validate();
  Simplex s(lp);
  const std::size_t m = lp.rows.size();

  // Phase 1: minimize the sum of artificials.
  std::vector<Rational> phase1(s.n_cols, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[s.n_std + i] = 1;
  s.load_costs(phase1);
  std::size_t unbounded_col = kNoCol;
  while (s.iterate(true, &unbounded_col)) {
  }

  if (s.objective_of_basis(phase1) > 0) {
    // Phase-1 duals certify infeasibility: they combine the rows into
    // an inequality whose left side is nonpositive on the feasible
    // domain while the right side is the positive phase-1 optimum.
    LPOutcome out;
    out.status = LPStatus::Infeasible;
    Vec y(m);
    for (std::size_t i = 0; i < m; ++i) {
      y[i] = s.row_sign[i] * (Rational(1) - s.cost[s.n_std + i]);
    }
    out.farkas = y;
    return out;
  }

  // Drive leftover artificials out of the basis; rows that reduce to 0 = 0
  // are redundant and get dual multiplier zero.
  for (std::size_t r = 0; r < m; ++r) {
    if (s.basis[r] < s.n_std) continue;
    std::size_t col = kNoCol;
    for (std::size_t j = 0; j < s.n_std; ++j) {
      if (s.a[r][j] != 0) {
        col = j;
        break;
      }
    }
    if (col == kNoCol) {
      s.row_active[r] = false;
    } else {
      s.pivot(r, col);
    }
  }

  // Phase 2 over the real objective; artificials may not re-enter.
  std::vector<Rational> phase2(s.n_cols, Rational(0));
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    phase2[s.pos_col[j]] = lp.objective[j];
    if (s.neg_col[j] != kNoCol) phase2[s.neg_col[j]] = -lp.objective[j];
  }
  s.load_costs(phase2);
  while (s.iterate(false, &unbounded_col)) {
  }

  LPOutcome out;
  if (unbounded_col != kNoCol) {
    out.status = LPStatus::Unbounded;
    out.ray = s.extract_ray(unbounded_col);
    return out;
  }
  out.status = LPStatus::Optimal;
  out.primal = s.extract_primal();
  out.value = dot(lp.objective, out.primal);
  out.dual = s.extract_dual();
  return out;
}

bool verify_certificate(const LinearProgram& lp, const LPOutcome& out) {
  try {
    lp.validate();
  } catch (const DimensionError&) {
    return false;
  }
  const std::size_t n = lp.num_vars();
  const std::size_t m = lp.rows.size();

  // y combines the rows; sign conditions depend on each row's relation.
  auto combined_columns = [&](const Vec& y) {
    Vec combo(n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) combo[j] += y[i] * lp.rows[i].coeffs[j];
    }
    return combo;
  };
  auto row_signs_ok = [&](const Vec& y) {
    for (std::size_t i = 0; i < m; ++i) {
      if (lp.rows[i].rel == Relation::GreaterEqual && y[i] < 0) return false;
    }
    return true;
  };

  switch (out.status) {
    case LPStatus::Optimal: {
      if (out.primal.size() != n || out.dual.size() != m) return false;
      for (const auto& row : lp.rows) {
        const Rational lhs = dot(row.coeffs, out.primal);
        if (row.rel == Relation::Equal ? lhs != row.rhs : lhs < row.rhs)
          return false;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (lp.nonneg[j] && out.primal[j] < 0) return false;
      }
      if (dot(lp.objective, out.primal) != out.value) return false;
      if (!row_signs_ok(out.dual)) return false;
      const Vec combo = combined_columns(out.dual);
      for (std::size_t j = 0; j < n; ++j) {
        if (lp.nonneg[j] ? combo[j] > lp.objective[j]
                         : combo[j] != lp.objective[j])
          return false;
      }
      Rational dual_value = 0;
      for (std::size_t i = 0; i < m; ++i) dual_value += out.dual[i] * lp.rows[i].rhs;
      return dual_value == out.value;  // zero duality gap
    }
    case LPStatus::Infeasible: {
      if (out.farkas.size() != m) return false;
      if (!row_signs_ok(out.farkas)) return false;
      const Vec combo = combined_columns(out.farkas);
      for (std::size_t j = 0; j < n; ++j) {
        if (lp.nonneg[j] ? combo[j] > 0 : combo[j] != 0) return false;
      }
      Rational rhs_combo = 0;
      for (std::size_t i = 0; i < m; ++i) rhs_combo += out.farkas[i] * lp.rows[i].rhs;
      return rhs_combo > 0;  // 0 >= positive: contradiction
    }
    case LPStatus::Unbounded: {
      if (out.ray.size() != n) return false;
      for (const auto& row : lp.rows) {
        const Rational lhs = dot(row.coeffs, out.ray);
        if (row.rel == Relation::Equal ? lhs != 0 : lhs < 0) return false;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (lp.nonneg[j] && out.ray[j] < 0) return false;
      }
      return dot(lp.objective, out.ray) < 0;
    }
  }
  return false;
}

}  // namespace nefkit
