#ifndef PMAT_ARRANGEMENT_HPP
#define PMAT_ARRANGEMENT_HPP

#include "pmat/hyperplane.hpp"
#include "pmat/linprog.hpp"
#include "pmat/weights.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pmat {

/// Per-hyperplane side classification of a cell: -1 below, +1 above.
/// Cells are open, so no entry is ever 0.
using SignVector = std::vector<std::int8_t>;

struct Cell {
  int id = -1;
  SignVector sign;
  VectorXr representative;  // strictly interior rational point
  std::vector<int> tight;   // hyperplanes supporting (d-1)-dimensional facets
};

/// Facet adjacency: the two cells' sign vectors differ exactly in
/// `hyperplane`, and they share a (d-1)-dimensional face on it.
struct AdjacencyEdge {
  int cell_a;
  int cell_b;
  int hyperplane;
};

struct EnumerationOptions {
  /// Half-width of the clip box used when hunting representatives of
  /// unbounded cells; grown automatically beyond every arrangement vertex.
  std::optional<Rational> clip_half_width;
  /// Optional strict constraints restricting enumeration to an open convex
  /// subset of the box (used for refinements within a parent cell).
  std::vector<lp::Constraint> domain;
};

struct Arrangement {
  std::vector<Hyperplane> hyperplanes;
  ParameterBox box;
  std::vector<lp::Constraint> domain;
  std::vector<Cell> cells;
  std::vector<AdjacencyEdge> adjacency;
  Rational clip_half_width;

  int dim() const { return box.dim(); }

  /// Lowest-id cell whose closure contains the point (sign-compatible on
  /// every hyperplane), or nullptr.
  const Cell* locate(const VectorXr& point) const;

  /// The cell's hyperplane-induced half-space constraints; strict for the
  /// open cell, closed for its closure. Box and domain constraints are not
  /// included.
  std::vector<lp::Constraint> cell_constraints(const Cell& cell, bool strict) const;
};

/// Maximum number of cells of q hyperplanes in R^d: sum of C(q, i), i <= d.
Integer cell_count_bound(int q, int d);

/// Strict half-space constraints for the finite bounds of a box.
std::vector<lp::Constraint> box_constraints(const ParameterBox& box);

/// Enumerates every cell of the arrangement that intersects the open box
/// (and open domain, if any): breadth-first search over sign-vector flips,
/// each flip certified or refuted by an exact LP. Each cell carries an
/// interior representative; adjacency lists every shared facet labeled with
/// its hyperplane. Duplicate hyperplane loci are a precondition violation.
Arrangement enumerate_cells(std::vector<Hyperplane> hyperplanes,
                            const ParameterBox& box,
                            const EnumerationOptions& options = {});

}  // namespace pmat

#endif  // PMAT_ARRANGEMENT_HPP
