#ifndef PMAT_WSD_HPP
#define PMAT_WSD_HPP

#include "pmat/param_solver.hpp"

#include <optional>
#include <vector>

namespace pmat {

/// Image of a basis under the cost vectors, with one witness basis.
struct ImagePoint {
  VectorXr y;
  Basis witness;
};

/// Maximal union of projected-arrangement cells on which one image is the
/// weighted-sum optimum. representative_weight is a full, strictly positive
/// p-vector on the weight set.
struct WeightSetComponent {
  ImagePoint image;
  std::vector<int> cell_ids;  // ascending
  VectorXr representative_weight;
};

struct WsdSolution {
  int p = 0;
  /// Projected arrangement in R^{p-1}: filtered separating hyperplanes plus
  /// the p weight-set boundary hyperplanes, over the simplex bounding box.
  Arrangement arrangement;
  std::vector<ImagePoint> extreme_points;
  std::vector<WeightSetComponent> components;
  /// Component of each cell; -1 for cells outside the open simplex.
  std::vector<int> cell_to_component;
  /// Bases propagated to every cell (inside and outside alike).
  std::vector<Basis> cell_bases;
  SolveStats stats;
};

/// Separating hyperplanes (in R^p, through the origin) of exactly the
/// componentwise-incomparable cost pairs; comparable pairs never change
/// order over positive weights and are skipped.
std::vector<Hyperplane> filter_dominated_pairs(const std::vector<VectorXr>& costs);

/// The parametric weights over the projected weight set: substituting
/// lambda_p = 1 - sum(mu) into lambda . c_e gives an affine function of mu.
WeightVector weight_set_weights(const std::vector<VectorXr>& costs);

struct WsdOptions {
  std::optional<Rational> perturb_epsilon;
  unsigned long long perturb_seed = 0;
};

/// Algorithm-3 style decomposition: filter, project, add boundaries,
/// enumerate, pivot bases across cells, merge equal-image cells inside the
/// open simplex into components.
WsdSolution decompose_weight_set(const Matroid& instance,
                                 const std::vector<VectorXr>& costs,
                                 const WsdOptions& options = {});

/// Distinct component images, each validated as the strict weighted-sum
/// argmin over all images at its component's representative weight.
std::vector<ImagePoint> extreme_points(const WsdSolution& solution);

}  // namespace pmat

#endif  // PMAT_WSD_HPP
