#ifndef PMAT_INTERDICTION_HPP
#define PMAT_INTERDICTION_HPP

#include "pmat/param_solver.hpp"

#include <optional>
#include <vector>

namespace pmat {

/// Raised under RankDropPolicy::strict when deleting an element destroys
/// full rank (a violation of the interdiction rank assumption).
class RankDropError : public std::runtime_error {
 public:
  RankDropError(std::string what, int element)
      : std::runtime_error(std::move(what)), element(element) {}
  int element;
};

/// The deletion value function y_e of one element, materialized as a
/// cell -> (basis, value) map over the shared full-instance arrangement.
/// If deleting the element drops the rank, y_e is identically infinite and
/// no map is stored.
struct DeletionValueFunction {
  int element = -1;
  bool infinite = false;
  std::vector<Basis> cell_bases;
  std::vector<AffineValue> cell_values;
};

/// All deletion value functions expressed over one arrangement.
struct DeletionValueAtlas {
  Arrangement arrangement;
  std::vector<DeletionValueFunction> functions;  // one per active element
  SolveStats stats;
  int rank = 0;
};

/// Convex part of a piece: the winner region of one deletion value function
/// inside one primary cell, as a closed H-representation.
struct InterdictionChunk {
  int primary_cell = -1;
  std::vector<lp::Constraint> constraints;  // closed half-spaces
  VectorXr representative;
};

/// Maximal connected patch of the upper envelope with one most vital
/// element and one affine value function; the union of its chunks, which
/// need not be convex.
struct InterdictionPiece {
  int most_vital = -1;
  AffineValue value;
  VectorXr representative;
  std::vector<InterdictionChunk> chunks;
};

struct InterdictionSolution {
  Arrangement arrangement;
  std::vector<DeletionValueFunction> per_element;
  std::vector<InterdictionPiece> pieces;
  std::optional<int> infinite_everywhere;
  SolveStats stats;
};

enum class RankDropPolicy { strict, permissive };

struct InterdictionOptions {
  RankDropPolicy rank_drop = RankDropPolicy::permissive;
  std::optional<Rational> perturb_epsilon;
  unsigned long long perturb_seed = 0;
  std::optional<Rational> clip_half_width;
};

/// Runs the pivoting solver on every single-element deletion minor over the
/// one shared arrangement of the full instance.
DeletionValueAtlas deletion_value_functions(const Matroid& instance,
                                            const WeightVector& weights,
                                            const ParameterBox& box,
                                            const InterdictionOptions& options = {});

/// Exact upper envelope of the deletion value functions: within each
/// arrangement cell every y_e is affine, so the envelope is refined by the
/// secondary arrangement of pairwise tie hyperplanes clipped to the cell;
/// equal-(element, value) regions merge across both primary and secondary
/// facets. Exact value ties between elements resolve to the smaller id.
InterdictionSolution solve_interdiction(const Matroid& instance,
                                        const WeightVector& weights,
                                        const ParameterBox& box,
                                        const InterdictionOptions& options = {});

/// Most vital element and interdicted optimum at a point of the box.
std::pair<int, Rational> evaluate_interdiction(const InterdictionSolution& solution,
                                               const VectorXr& point);

}  // namespace pmat

#endif  // PMAT_INTERDICTION_HPP
