#include <algorithm>
#include <optional>

#include "flowkit/error.hpp"
#include "flowkit/lp.hpp"

namespace flowkit {

void LinearProgram::check_shape() const {
  if (constraints.rows() != bounds.size())
    throw FlowError(ErrorCode::kMalformed, "row count of A does not match b");
  if (constraints.rows() > 0 && constraints.cols() != objective.size())
    throw FlowError(ErrorCode::kMalformed, "column count of A does not match c");
  if (nonnegative.size() != objective.size())
    throw FlowError(ErrorCode::kMalformed, "nonnegativity flags do not match c");
}

const char* status_name(LPStatus status) {
  switch (status) {
    case LPStatus::kOptimal: return "optimal";
    case LPStatus::kUnbounded: return "unbounded";
    case LPStatus::kInfeasible: return "infeasible";
  }
  return "?";
}

Rational objective_value(const LinearProgram& lp, const std::vector<Rational>& x) {
  Rational v = 0;
  for (std::size_t j = 0; j < lp.variable_count(); ++j) v += lp.objective[j] * x[j];
  return v;
}

bool is_feasible(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (x.size() != lp.variable_count()) return false;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (lp.nonnegative[j] && x[j] < 0) return false;
  for (std::size_t i = 0; i < lp.row_count(); ++i) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += lp.constraints(i, j) * x[j];
    if (lp.sense == Sense::kMaximize ? lhs > lp.bounds[i] : lhs < lp.bounds[i]) return false;
  }
  return true;
}

namespace {

/// Equality-form tableau: rows T x = rhs with one basic column per row.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : a_(rows, std::vector<Rational>(cols)), rhs_(rows), basis_(rows) {}

  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;

  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return a_.empty() ? 0 : a_[0].size(); }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = a_[r][c];
    for (auto& x : a_[r]) x /= p;
    rhs_[r] /= p;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const Rational factor = a_[i][c];
      for (std::size_t j = 0; j < cols(); ++j)
        if (a_[r][j] != 0) a_[i][j] -= factor * a_[r][j];
      rhs_[i] -= factor * rhs_[r];
    }
    basis_[r] = c;
  }

  /// Maximizes cost.x over columns with `allowed` set. Bland's rule: lowest
  /// improving column enters, ratio ties leave by lowest basic index.
  /// Returns false when unbounded.
  bool maximize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < cols() && !entering; ++j) {
        if (!allowed[j]) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows(); ++i)
          if (a_[i][j] != 0) reduced -= cost[basis_[i]] * a_[i][j];
        if (reduced > 0) entering = j;
      }
      if (!entering) return true;
      const std::size_t c = *entering;
      std::optional<std::size_t> leave;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (a_[i][c] <= 0) continue;
        Rational ratio = rhs_[i] / a_[i][c];
        if (!leave || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, c);
    }
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }
};

}  // namespace

LPResult simplex_solve(const LinearProgram& lp) {
  lp.check_shape();
  const std::size_t n = lp.variable_count();
  const std::size_t m = lp.row_count();

  // Column layout: structural (free variables split in two), slacks, artificials.
  std::vector<std::size_t> plus_col(n), minus_col(n, SIZE_MAX);
  std::size_t structural = 0;
  for (std::size_t j = 0; j < n; ++j) {
    plus_col[j] = structural++;
    if (!lp.nonnegative[j]) minus_col[j] = structural++;
  }
  const std::size_t slack0 = structural;
  const std::size_t art0 = slack0 + m;
  const std::size_t cols = art0 + m;

  Tableau t(m, cols);
  const Rational slack_sign = lp.sense == Sense::kMaximize ? 1 : -1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t.a_[i][plus_col[j]] = lp.constraints(i, j);
      if (minus_col[j] != SIZE_MAX) t.a_[i][minus_col[j]] = -lp.constraints(i, j);
    }
    t.a_[i][slack0 + i] = slack_sign;
    t.rhs_[i] = lp.bounds[i];
    if (t.rhs_[i] < 0) {
      for (auto& x : t.a_[i]) x = -x;
      t.rhs_[i] = -t.rhs_[i];
    }
    t.a_[i][art0 + i] = 1;
    t.basis_[i] = art0 + i;
  }

  // Phase 1: drive the artificials to zero.
  std::vector<Rational> phase1(cols, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[art0 + i] = -1;
  std::vector<bool> all(cols, true);
  t.maximize(phase1, all);
  Rational infeasibility = 0;
  for (std::size_t i = 0; i < t.rows(); ++i)
    if (t.basis_[i] >= art0) infeasibility += t.rhs_[i];
  if (infeasibility > 0) return {LPStatus::kInfeasible, {}, Rational(0)};

  // Pivot remaining (zero-valued) artificials out, dropping redundant rows.
  for (std::size_t i = 0; i < t.rows();) {
    if (t.basis_[i] < art0) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < art0 && !col; ++j)
      if (t.a_[i][j] != 0) col = j;
    if (col) {
      t.pivot(i, *col);
      ++i;
    } else {
      t.drop_row(i);
    }
  }

  // Phase 2 on the real objective (as a maximization).
  std::vector<Rational> cost(cols, Rational(0));
  const Rational sign = lp.sense == Sense::kMaximize ? 1 : -1;
  for (std::size_t j = 0; j < n; ++j) {
    cost[plus_col[j]] = sign * lp.objective[j];
    if (minus_col[j] != SIZE_MAX) cost[minus_col[j]] = -sign * lp.objective[j];
  }
  std::vector<bool> allowed(cols, true);
  for (std::size_t j = art0; j < cols; ++j) allowed[j] = false;
  if (!t.maximize(cost, allowed)) return {LPStatus::kUnbounded, {}, Rational(0)};

  std::vector<Rational> column_value(cols, Rational(0));
  for (std::size_t i = 0; i < t.rows(); ++i) column_value[t.basis_[i]] = t.rhs_[i];
  LPResult result{LPStatus::kOptimal, std::vector<Rational>(n), Rational(0)};
  for (std::size_t j = 0; j < n; ++j) {
    result.point[j] = column_value[plus_col[j]];
    if (minus_col[j] != SIZE_MAX) result.point[j] -= column_value[minus_col[j]];
  }
  result.value = objective_value(lp, result.point);
  return result;
}

LinearProgram build_dual(const LinearProgram& primal) {
  primal.check_shape();
  if (primal.sense != Sense::kMaximize ||
      !std::all_of(primal.nonnegative.begin(), primal.nonnegative.end(), [](bool b) { return b; }))
    throw FlowError(ErrorCode::kMalformed, "build_dual expects max c.x, Ax <= b, x >= 0");
  LinearProgram dual;
  dual.sense = Sense::kMinimize;
  dual.objective = primal.bounds;
  dual.constraints = primal.constraints.transposed();
  if (primal.row_count() == 0) dual.constraints = Matrix<Rational>(primal.variable_count(), 0);
  dual.bounds = primal.objective;
  dual.nonnegative.assign(primal.row_count(), true);
  return dual;
}

}  // namespace flowkit
