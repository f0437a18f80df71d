#ifndef PMAT_HYPERPLANE_HPP
#define PMAT_HYPERPLANE_HPP

#include "pmat/rational.hpp"
#include "pmat/weights.hpp"

#include <utility>
#include <vector>

namespace pmat {

/// Hyperplane normal.dot(lambda) = offset in canonical form: integer
/// coefficients in lowest terms with the first nonzero normal entry
/// positive, so geometric identity is plain field equality.
///
/// Separating hyperplanes carry their element pair oriented such that
/// normal.dot(lambda) < offset exactly where w(elem_a) < w(elem_b).
/// Weight-set boundary hyperplanes carry boundary_index instead.
struct Hyperplane {
  VectorXr normal;
  Rational offset;
  int elem_a = -1;
  int elem_b = -1;
  int boundary_index = -1;

  int dim() const { return static_cast<int>(normal.size()); }

  bool same_locus(const Hyperplane& other) const {
    return offset == other.offset && normal == other.normal;
  }
};

/// Sign of normal.dot(point) - offset: -1 below, 0 on, +1 above.
int side(const Hyperplane& h, const VectorXr& point);

/// Canonicalizes coefficients in place; returns -1 if the scaling flipped
/// orientation, +1 otherwise. The normal must be nonzero.
int canonicalize(VectorXr& normal, Rational& offset);

/// Output of separating-hyperplane construction. Pairs whose weight
/// functions are identical admit no hyperplane and break Assumption 1;
/// pairs with equal linear parts but different constants never intersect
/// and are simply skipped.
struct SeparatingSystem {
  std::vector<Hyperplane> hyperplanes;
  std::vector<std::pair<int, int>> identical_pairs;
  std::vector<std::pair<int, int>> parallel_pairs;
};

/// One canonical hyperplane per unordered element pair with distinct,
/// non-parallel weight functions. `active` defaults to all elements.
SeparatingSystem build_separating_hyperplanes(const WeightVector& weights);
SeparatingSystem build_separating_hyperplanes(const WeightVector& weights,
                                              const std::vector<int>& active);

/// Assumption check over canonical hyperplanes: duplicate loci violate
/// Assumption 1.1; a zero coefficient on the last coordinate makes the
/// hyperplane vertical (Assumption 1.2). Vertical hyperplanes are reported
/// but harmless to the LP-based enumeration, so only duplicates (and
/// identical weight functions) count as degeneracies.
struct AssumptionReport {
  std::vector<std::pair<int, int>> duplicate_pairs;  // hyperplane indices
  std::vector<int> vertical;                         // hyperplane indices

  bool clean() const { return duplicate_pairs.empty() && vertical.empty(); }
  bool duplicates_clean() const { return duplicate_pairs.empty(); }
};

AssumptionReport check_assumptions(const std::vector<Hyperplane>& hyperplanes);

/// Distinct deterministic rationals in (0,1) drawn from the seed; the
/// shared source of perturbation offsets.
std::vector<Rational> perturbation_offsets(std::size_t count,
                                           unsigned long long seed);

/// Adds epsilon * r_e to every constant term, with distinct deterministic
/// r_e in (0,1) drawn from the seed. epsilon = 0 is the identity.
WeightVector perturb_weights(const WeightVector& weights,
                             unsigned long long seed, const Rational& epsilon);

/// Result of restricting hyperplanes to the affine hull of the weight set
/// (substituting lambda_p = 1 - sum of the first p-1 coordinates) and
/// projecting onto the first p-1 coordinates.
struct RestrictionResult {
  std::vector<Hyperplane> hyperplanes;
  std::vector<int> dropped_coincident;   // inputs that contain the hull
  std::vector<int> dropped_disjoint;     // inputs that never meet it
};

RestrictionResult restrict_to_weight_set(const std::vector<Hyperplane>& hyperplanes);

/// The p hyperplanes bounding the projected weight set simplex in R^{p-1}:
/// lambda_i = 0 for i < p-1 and sum = 1 for the eliminated coordinate.
/// boundary_index runs 0..p-1.
std::vector<Hyperplane> weight_set_boundaries(int p);

}  // namespace pmat

#endif  // PMAT_HYPERPLANE_HPP
