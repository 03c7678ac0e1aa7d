#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "flowkit/matrix.hpp"
#include "flowkit/network.hpp"
#include "flowkit/rational.hpp"

namespace flowkit {

enum class Sense { kMaximize, kMinimize };

/// Inequality-form LP over exact rationals, in the symmetric form used for
/// duality:
///
///     max c.x  s.t.  A x <= b      or      min c.x  s.t.  A x >= b
///
/// with x_j >= 0 wherever `nonnegative[j]` is set (the rest are free).
struct LinearProgram {
  Sense sense = Sense::kMaximize;
  std::vector<Rational> objective;
  Matrix<Rational> constraints;
  std::vector<Rational> bounds;
  std::vector<bool> nonnegative;

  std::size_t variable_count() const { return objective.size(); }
  std::size_t row_count() const { return bounds.size(); }

  /// Throws Malformed on inconsistent dimensions.
  void check_shape() const;
};

enum class LPStatus { kOptimal, kUnbounded, kInfeasible };

const char* status_name(LPStatus status);

struct LPResult {
  LPStatus status = LPStatus::kInfeasible;
  std::vector<Rational> point;  // set when optimal
  Rational value;               // set when optimal
};

/// Two-phase dense-tableau simplex with Bland's rule; exact and always
/// terminating.
LPResult simplex_solve(const LinearProgram& lp);

bool is_feasible(const LinearProgram& lp, const std::vector<Rational>& x);
Rational objective_value(const LinearProgram& lp, const std::vector<Rational>& x);

/// Mechanical dual of `max c.x, Ax <= b, x >= 0`: `min b.y, A^T y >= c,
/// y >= 0`. Throws Malformed for any other shape.
LinearProgram build_dual(const LinearProgram& primal);

/// Maximum-flow LP: one variable per arc, objective = source row of the
/// incidence matrix, rows [Φ*; -Φ*; I] x <= [0; 0; c] where Φ* drops the
/// source and sink rows. Unbounded arcs get no capacity row.
LinearProgram build_primal(const Network& net);

/// Reduced maximum-flow dual: free potentials for the internal vertices (in
/// vertex order) followed by one non-negative variable per arc; minimizes
/// c.e subject to v_i - v_j + e_k >= 0 for every arc (i, j) with the source
/// fixed at -1 and the sink at 0. Requires finite capacities.
LinearProgram build_cut_dual(const Network& net);

/// A point of the reduced dual. `potential` is indexed by vertex id and
/// must hold -1 at the source and 0 at the sink.
struct CutDualPoint {
  std::vector<Rational> potential;
  std::vector<Rational> arc;
};

std::vector<Rational> to_lp_vector(const Network& net, const CutDualPoint& point);
CutDualPoint from_lp_vector(const Network& net, const std::vector<Rational>& x);

bool is_dual_feasible(const Network& net, const CutDualPoint& point);
Rational dual_objective(const Network& net, const CutDualPoint& point);

/// e = 1 on arcs crossing the cut, potential -1 on the source side, 0 else.
CutDualPoint dual_from_cut(const Network& net, const Cut& cut);

/// Threshold rounding: among the cuts {v : potential(v) <= χ} for every
/// distinct potential χ in [-1, 0), returns one of least capacity. Its
/// capacity never exceeds the dual objective. Throws Infeasible.
Cut cut_from_dual(const Network& net, const CutDualPoint& point);

struct Submatrix {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  long determinant = 0;
};

struct TUResult {
  bool unimodular = true;
  std::optional<Submatrix> witness;  // smallest violating square submatrix
};

/// Exact integer determinant (Bareiss).
long determinant(const IntMatrix& m);

/// Checks every square submatrix, smallest first. Entries outside {-1,0,1}
/// fail immediately with a 1x1 witness. Throws BudgetExceeded when the number
/// of square submatrices exceeds `budget`.
TUResult is_totally_unimodular(const IntMatrix& m, std::uint64_t budget = 10'000'000);

/// Plain-text LP: a `max`/`min` line, `c <c1> ... <cn>`, one
/// `a <a1> ... <an> | <b>` per row, and `nonneg <0|1> ...`. `#` starts a
/// comment line.
void write_lp(std::ostream& out, const LinearProgram& lp);
LinearProgram read_lp(std::istream& in);

/// Whitespace-separated integer rows; blank lines and `#` comments skipped.
IntMatrix read_int_matrix(std::istream& in);
void write_int_matrix(std::ostream& out, const IntMatrix& m);

}  // namespace flowkit
