#include "pmat/linprog.hpp"

#include <stdexcept>

namespace pmat::lp {

namespace {

// Full-tableau simplex state. Columns 0..n-1 are structural, n..n+r-1 are
// the phase-1 artificials whose block carries B^{-1} throughout.
struct Tableau {
  MatrixXr body;            // r x (n + r)
  VectorXr rhs;             // r, kept nonnegative
  std::vector<int> basis;   // basic column per row
  VectorXr reduced;         // current reduced costs, n + r
  Rational value = 0;       // current objective value
  int n = 0, r = 0;

  void price(const VectorXr& cost) {
    reduced = cost;
    value = 0;
    for (int i = 0; i < r; ++i) {
      const Rational& cb = cost[basis[i]];
      if (cb == 0) continue;
      value += cb * rhs[i];
      for (int j = 0; j < n + r; ++j)
        if (body(i, j) != 0) reduced[j] -= cb * body(i, j);
    }
  }

  void pivot(int row, int col) {
    Rational inv = Rational(1) / body(row, col);
    for (int j = 0; j < n + r; ++j) body(row, j) *= inv;
    rhs[row] *= inv;
    body(row, col) = 1;  // exact
    for (int i = 0; i < r; ++i) {
      if (i == row || body(i, col) == 0) continue;
      Rational f = body(i, col);
      for (int j = 0; j < n + r; ++j)
        if (body(row, j) != 0) body(i, j) -= f * body(row, j);
      body(i, col) = 0;
      rhs[i] -= f * rhs[row];
    }
    if (reduced[col] != 0) {
      Rational f = reduced[col];
      for (int j = 0; j < n + r; ++j)
        if (body(row, j) != 0) reduced[j] -= f * body(row, j);
      reduced[col] = 0;
      value += f * rhs[row];
    }
    basis[row] = col;
  }

  // Dantzig pricing for speed, switching permanently to Bland's rule after
  // a pivot budget so termination stays guaranteed. `limit` excludes
  // columns >= limit from entering.
  SolveStatus iterate(int limit, const std::optional<Rational>& stop_below) {
    const int dantzig_budget = 4 * (r + 8);
    for (int step = 0;; ++step) {
      if (stop_below && value <= *stop_below) return SolveStatus::early_stopped;
      const bool bland = step >= dantzig_budget;
      int entering = -1;
      for (int j = 0; j < limit; ++j) {
        if (!(reduced[j] < 0)) continue;
        if (bland) {
          entering = j;
          break;
        }
        if (entering < 0 || reduced[j] < reduced[entering]) entering = j;
      }
      if (entering < 0) return SolveStatus::optimal;
      int leaving = -1;
      Rational best;
      for (int i = 0; i < r; ++i) {
        if (body(i, entering) <= 0) continue;
        Rational ratio = rhs[i] / body(i, entering);
        if (leaving < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (leaving < 0) return SolveStatus::unbounded;
      pivot(leaving, entering);
    }
  }
};

}  // namespace

SimplexResult simplex_min(MatrixXr A, VectorXr b, VectorXr c,
                          std::optional<Rational> stop_below,
                          const std::vector<int>* warm_basis) {
  const int r = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  std::vector<int> row_sign(r, 1);
  if (!warm_basis)
    for (int i = 0; i < r; ++i)
      if (b[i] < 0) {
        row_sign[i] = -1;
        b[i] = -b[i];
        A.row(i) = -A.row(i);
      }

  Tableau t;
  t.n = n;
  t.r = r;
  t.body = MatrixXr::Zero(r, n + r);
  t.body.leftCols(n) = A;
  for (int i = 0; i < r; ++i) t.body(i, n + i) = 1;
  t.rhs = b;
  t.basis.resize(r);
  for (int i = 0; i < r; ++i) t.basis[i] = n + i;

  if (warm_basis) {
    // Pivot the provided feasible basis in; rows stay nonnegative by the
    // caller's contract, so phase 1 is unnecessary.
    t.reduced = VectorXr::Zero(n + r);
    for (int i = 0; i < r; ++i) {
      int col = (*warm_basis)[i];
      if (col == n + i) continue;
      if (t.body(i, col) == 0)
        throw std::logic_error("warm basis column is singular in its row");
      t.pivot(i, col);
    }
    for (int i = 0; i < r; ++i)
      if (t.rhs[i] < 0) throw std::logic_error("warm basis is infeasible");
  } else {
    // Phase 1: minimize the artificial sum.
    VectorXr phase1_cost = VectorXr::Zero(n + r);
    for (int i = 0; i < r; ++i) phase1_cost[n + i] = 1;
    t.price(phase1_cost);
    if (t.iterate(n + r, std::nullopt) != SolveStatus::optimal)
      throw std::logic_error("phase-1 simplex cannot be unbounded");
    if (t.value > 0)
      return SimplexResult{SolveStatus::infeasible, t.value, {}, {}};
  }

  // Any artificial still basic sits at zero. Pivot a structural column in
  // where the row has one; rows without any stay all-zero structurally, so
  // later pivots can never lift their artificial off zero.
  for (int i = 0; i < r; ++i) {
    if (t.basis[i] < n) continue;
    for (int j = 0; j < n; ++j)
      if (t.body(i, j) != 0) {
        t.pivot(i, j);
        break;
      }
  }

  // Phase 2 on the real costs; artificials may not re-enter.
  VectorXr phase2_cost = VectorXr::Zero(n + r);
  phase2_cost.head(n) = c;
  t.price(phase2_cost);
  SolveStatus status = t.iterate(n, stop_below);
  if (status == SolveStatus::unbounded)
    return SimplexResult{SolveStatus::unbounded, {}, {}, {}};
  if (status == SolveStatus::early_stopped)
    return SimplexResult{SolveStatus::early_stopped, t.value, {}, {}};

  SimplexResult result;
  result.status = SolveStatus::optimal;
  result.objective = t.value;
  result.solution = VectorXr::Zero(n);
  for (int i = 0; i < r; ++i)
    if (t.basis[i] < n) result.solution[t.basis[i]] = t.rhs[i];
  // B^{-1} sits in the artificial block, so the duals are one pass away.
  result.multipliers = VectorXr::Zero(r);
  for (int k = 0; k < r; ++k) {
    Rational pi = 0;
    for (int i = 0; i < r; ++i) {
      const Rational& cb = phase2_cost[t.basis[i]];
      if (cb != 0 && t.body(i, n + k) != 0) pi += cb * t.body(i, n + k);
    }
    result.multipliers[k] = row_sign[k] == 1 ? pi : Rational(-pi);
  }
  return result;
}

InteriorPointResult interior_point(const std::vector<Constraint>& constraints,
                                   int dim, bool allow_early_stop,
                                   const Rational& margin_cap) {
  // Constant constraints (zero normal) never join the LP: they are either
  // vacuous or make the region empty outright.
  std::vector<const Constraint*> rows;
  rows.reserve(constraints.size());
  for (const Constraint& c : constraints) {
    if (c.normal.size() != dim)
      throw std::logic_error("constraint dimension mismatch");
    if (c.normal.isZero()) {
      bool ok = c.strict ? Rational(0) > c.rhs : Rational(0) >= c.rhs;
      if (!ok) return InteriorPointResult{false, Rational(-1), {}};
      continue;
    }
    rows.push_back(&c);
  }

  // Primal: max t over (x, t) with
  //   -a.x + s_a t <= -rhs   (strict rows, s_a = l1(a))
  //   -a.x         <= -rhs   (closed rows)
  //            t   <= margin_cap.
  // It is always feasible and capped, so the dual below is solvable and its
  // equality multipliers are a primal maximizer.
  const int q = static_cast<int>(rows.size());
  const int vars = dim + 1;
  MatrixXr A = MatrixXr::Zero(vars, q + 1);
  VectorXr cost = VectorXr::Zero(q + 1);
  for (int j = 0; j < q; ++j) {
    const Constraint& c = *rows[j];
    for (int i = 0; i < dim; ++i) A(i, j) = -c.normal[i];
    A(dim, j) = c.strict ? l1_norm(c.normal) : Rational(0);
    cost[j] = -c.rhs;
  }
  A(dim, q) = 1;
  cost[q] = margin_cap;
  VectorXr b = VectorXr::Zero(vars);
  b[dim] = 1;

  // The cap column with weight 1 satisfies the equality system on its own,
  // so the dual always starts from a known feasible basis.
  std::vector<int> warm(vars);
  for (int i = 0; i < dim; ++i) warm[i] = q + 1 + i;  // zero-row artificials
  warm[dim] = q;
  SimplexResult dual = simplex_min(
      std::move(A), std::move(b), std::move(cost),
      allow_early_stop ? std::optional<Rational>(0) : std::nullopt, &warm);
  if (dual.status == SolveStatus::early_stopped)
    return InteriorPointResult{false, dual.objective, {}};
  if (dual.status != SolveStatus::optimal)
    throw std::logic_error("interior-point dual must be solvable");

  InteriorPointResult result;
  result.margin = dual.objective;
  result.feasible = dual.objective > 0;
  if (result.feasible) {
    result.point = dual.multipliers.head(dim);
    if (dual.multipliers[dim] != dual.objective)
      throw std::logic_error("dual multipliers disagree with the margin");
  }
  return result;
}

}  // namespace pmat::lp
