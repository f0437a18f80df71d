#ifndef PMAT_PARAM_SOLVER_HPP
#define PMAT_PARAM_SOLVER_HPP

#include "pmat/arrangement.hpp"
#include "pmat/matroid.hpp"
#include "pmat/weights.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pmat {

/// Raised when the weight data violates Assumption 1 (identical weight
/// functions or duplicate separating hyperplanes) and no perturbation was
/// requested.
class DegeneracyError : public std::runtime_error {
 public:
  DegeneracyError(std::string what, SeparatingSystem system, AssumptionReport report)
      : std::runtime_error(std::move(what)),
        system(std::move(system)),
        report(std::move(report)) {}

  SeparatingSystem system;
  AssumptionReport report;
};

/// Maximal union of adjacent cells sharing one minimum weight basis; one
/// polyhedron of the graph of the optimal value function.
struct Region {
  std::vector<int> cell_ids;  // sorted ascending
  Basis basis;
  AffineValue value;
  VectorXr representative;    // inherited from the lowest-id member cell
};

struct SolveStats {
  std::uint64_t oracle_calls = 0;
  int hyperplanes = 0;
  int cells = 0;
  int regions = 0;
};

struct ParametricSolution {
  Arrangement arrangement;
  std::vector<Region> regions;
  std::vector<int> cell_to_region;
  SolveStats stats;

  const Region& region_of_cell(int cell_id) const {
    return regions[cell_to_region[cell_id]];
  }
};

struct SolveOptions {
  bool merge = true;
  /// Perturb the weights before solving instead of failing on degeneracy.
  std::optional<Rational> perturb_epsilon;
  unsigned long long perturb_seed = 0;
  std::optional<Rational> clip_half_width;
};

/// One greedy run per cell representative.
ParametricSolution solve_per_cell(const Matroid& instance, const WeightVector& weights,
                                  const ParameterBox& box, const SolveOptions& options = {});

/// One greedy run at a start cell, then basis updates along breadth-first
/// search over the incidence graph: at most one independence test per
/// newly reached cell.
ParametricSolution solve_pivot(const Matroid& instance, const WeightVector& weights,
                               const ParameterBox& box, const SolveOptions& options = {});

/// Connected components of equal-basis adjacency.
std::vector<Region> merge_regions(const Arrangement& arrangement,
                                  const std::vector<Basis>& cell_bases,
                                  const WeightVector& weights);

/// Minimum weight basis and optimal value at a point of the box. Points on
/// region boundaries match several regions; all agree in value.
std::pair<Basis, Rational> evaluate_solution(const ParametricSolution& solution,
                                             const VectorXr& point);

namespace internal {

// Shared plumbing between the solvers, the weight set decomposition and the
// interdiction pipeline.
Arrangement build_solver_arrangement(const Matroid& instance, WeightVector& weights,
                                     const ParameterBox& box,
                                     const SolveOptions& options);
int start_cell(const Arrangement& arrangement);
std::vector<Basis> pivot_bases(const Matroid& instance, const WeightVector& weights,
                               const Arrangement& arrangement);

}  // namespace internal

}  // namespace pmat

#endif  // PMAT_PARAM_SOLVER_HPP
