#ifndef PMAT_WEIGHTS_HPP
#define PMAT_WEIGHTS_HPP

#include "pmat/matroid.hpp"
#include "pmat/rational.hpp"

#include <optional>
#include <vector>

namespace pmat {

/// Affine weight a + b.dot(lambda) of one element over the parameter vector.
struct ParametricWeight {
  Rational a;
  VectorXr b;

  int dim() const { return static_cast<int>(b.size()); }
  Rational at(const VectorXr& point) const { return a + b.dot(point); }
};

using WeightVector = std::vector<ParametricWeight>;

/// Affine value of a basis: the coefficient-wise sum of its element weights.
struct AffineValue {
  Rational a;
  VectorXr b;

  Rational at(const VectorXr& point) const { return a + b.dot(point); }

  bool operator==(const AffineValue& other) const {
    return a == other.a && b == other.b;
  }
};

/// Axis-aligned parameter box; an absent bound means the coordinate is
/// unbounded on that side. The interior must be nonempty.
struct ParameterBox {
  std::vector<std::optional<Rational>> lower;
  std::vector<std::optional<Rational>> upper;

  static ParameterBox unbounded(int dim) {
    ParameterBox box;
    box.lower.resize(dim);
    box.upper.resize(dim);
    return box;
  }

  int dim() const { return static_cast<int>(lower.size()); }

  /// Closed containment on the finite bounds.
  bool contains(const VectorXr& point) const;

  /// Throws InputError unless lower_i < upper_i wherever both are finite.
  void validate() const;
};

/// Minimum weight basis at a fixed point, by greedy over the weight order.
/// Elements are sorted by (evaluated weight, element id) ascending, so exact
/// ties break deterministically. Issues at most num_active() oracle calls.
Basis greedy_min_basis(const Matroid& instance, const WeightVector& weights,
                       const VectorXr& point);

/// Sum of the weights of the basis elements, as an affine function.
AffineValue basis_value_function(const Basis& basis, const WeightVector& weights);

/// If out_elem sits in the basis, in_elem does not, and basis - out + in is
/// independent, returns the swapped basis (one oracle call); otherwise
/// returns the input unchanged (no oracle call unless the test ran).
Basis swap_update(const Basis& basis, int out_elem, int in_elem,
                  const Matroid& instance);

}  // namespace pmat

#endif  // PMAT_WEIGHTS_HPP
