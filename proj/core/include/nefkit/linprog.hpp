#pragma once

#include <cstddef>
#include <vector>

#include "nefkit/rational.hpp"

namespace nefkit {

enum class Relation { GreaterEqual, Equal };

struct LPRow {
  Vec coeffs;
  Rational rhs;
  Relation rel = Relation::GreaterEqual;
};

/// minimize objective . x subject to the rows; variables with nonneg[j] set
/// are constrained to x_j >= 0, the rest are free.
struct LinearProgram {
  Vec objective;
  std::vector<LPRow> rows;
  std::vector<bool> nonneg;

  std::size_t num_vars() const { return objective.size(); }

  /// Throws DimensionError if any row or the mask disagrees with the
  /// objective length. Malformed shapes are a structural error, never
  /// an Infeasible outcome.
  void validate() const;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

/// Every outcome carries an exactly checkable certificate:
///   Optimal    — primal point, dual multipliers, zero duality gap
///   Infeasible — Farkas multipliers deriving 0 >= positive from the rows
///   Unbounded  — feasible direction with negative objective
struct LPOutcome {
  LPStatus status = LPStatus::Optimal;
  Rational value;  // Optimal only
  Vec primal;      // Optimal only
  Vec dual;        // Optimal: one multiplier per row
  Vec farkas;      // Infeasible: one multiplier per row
  Vec ray;         // Unbounded only
};

/// Exact two-phase simplex with Bland's least-index pivot rule, so it
/// terminates on every rational input and is deterministic.
LPOutcome solve_lp(const LinearProgram& lp);

/// Checks the certificate by exact substitution only; never re-solves.
/// Returns false on invalid data (wrong shapes included).
bool verify_certificate(const LinearProgram& lp, const LPOutcome& out);

}  // namespace nefkit
