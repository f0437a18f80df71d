#ifndef PMAT_LINPROG_HPP
#define PMAT_LINPROG_HPP

#include "pmat/rational.hpp"

#include <optional>
#include <vector>

namespace pmat::lp {

enum class SolveStatus { optimal, infeasible, unbounded, early_stopped };

struct SimplexResult {
  SolveStatus status = SolveStatus::infeasible;
  Rational objective;    // set for optimal and early_stopped
  VectorXr solution;     // primal point, set for optimal
  VectorXr multipliers;  // one dual value per equality row, set for optimal
};

/// Exact two-phase primal simplex with Bland's rule for
///     min c.z  subject to  A z = b, z >= 0.
/// Terminates on every input. When `stop_below` is given, phase 2 returns
/// early_stopped as soon as the running objective reaches that bound (the
/// optimum can only be lower); used to cut off infeasibility probes.
/// A caller that knows a basic feasible start (b >= 0 and one basic column
/// per row, artificial columns n..n+rows-1 allowed for zero rows) may pass
/// it as `warm_basis` to skip phase 1.
SimplexResult simplex_min(MatrixXr A, VectorXr b, VectorXr c,
                          std::optional<Rational> stop_below = std::nullopt,
                          const std::vector<int>* warm_basis = nullptr);

/// Half-space constraint normal.dot(x) >= rhs; strict constraints demand a
/// positive slack, closed ones hold as written.
struct Constraint {
  VectorXr normal;
  Rational rhs;
  bool strict = true;
};

struct InteriorPointResult {
  bool feasible = false;  // true iff the optimal margin is positive
  Rational margin = 0;
  VectorXr point;         // witness, set when feasible
};

/// Maximizes the common slack t with every strict constraint relaxed to
///     normal.dot(x) >= rhs + t * l1_norm(normal)
/// and t capped at `margin_cap` (Chebyshev-center style, with the L1 norm so
/// everything stays rational). The region of points satisfying all strict
/// constraints strictly and all closed ones weakly is nonempty if and only
/// if the optimal margin is positive, in which case the maximizer is
/// returned as an exact interior witness. `allow_early_stop` permits
/// answering "not feasible" without computing the exact optimal margin.
InteriorPointResult interior_point(const std::vector<Constraint>& constraints,
                                   int dim, bool allow_early_stop = false,
                                   const Rational& margin_cap = Rational(1));

}  // namespace pmat::lp

#endif  // PMAT_LINPROG_HPP
