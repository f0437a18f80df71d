#include "pmat/weights.hpp"

#include <algorithm>

namespace pmat {

bool ParameterBox::contains(const VectorXr& point) const {
  if (point.size() != dim()) return false;
  for (int i = 0; i < dim(); ++i) {
    if (lower[i] && point[i] < *lower[i]) return false;
    if (upper[i] && point[i] > *upper[i]) return false;
  }
  return true;
}

void ParameterBox::validate() const {
  if (lower.size() != upper.size())
    throw InputError("parameter box bound lists differ in length");
  for (int i = 0; i < dim(); ++i)
    if (lower[i] && upper[i] && !(*lower[i] < *upper[i]))
      throw InputError("parameter box has empty interior in coordinate " +
                       std::to_string(i));
}

Basis greedy_min_basis(const Matroid& instance, const WeightVector& weights,
                       const VectorXr& point) {
  std::vector<int> order = instance.active_elements();
  std::vector<Rational> value(instance.num_elements());
  for (int e : order) value[e] = weights[e].at(point);
  std::sort(order.begin(), order.end(), [&](int lhs, int rhs) {
    if (value[lhs] != value[rhs]) return value[lhs] < value[rhs];
    return lhs < rhs;
  });

  Basis basis;
  for (int e : order) {
    auto pos = basis.insert(std::lower_bound(basis.begin(), basis.end(), e), e);
    if (!instance.is_independent(basis)) basis.erase(pos);
  }
  return basis;
}

AffineValue basis_value_function(const Basis& basis, const WeightVector& weights) {
  int p = weights.empty() ? 0 : weights.front().dim();
  AffineValue value{Rational(0), VectorXr::Zero(p)};
  for (int e : basis) {
    value.a += weights[e].a;
    value.b += weights[e].b;
  }
  return value;
}

Basis swap_update(const Basis& basis, int out_elem, int in_elem,
                  const Matroid& instance) {
  if (!std::binary_search(basis.begin(), basis.end(), out_elem)) return basis;
  if (std::binary_search(basis.begin(), basis.end(), in_elem)) return basis;
  Basis candidate;
  candidate.reserve(basis.size());
  for (int e : basis)
    if (e != out_elem) candidate.push_back(e);
  candidate.insert(std::upper_bound(candidate.begin(), candidate.end(), in_elem),
                   in_elem);
  return instance.is_independent(candidate) ? candidate : basis;
}

}  // namespace pmat
