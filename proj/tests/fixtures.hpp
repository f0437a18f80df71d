#ifndef PMAT_TESTS_FIXTURES_HPP
#define PMAT_TESTS_FIXTURES_HPP

#include "pmat/matroid.hpp"
#include "pmat/weights.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace pmat::testing {

inline Rational rat(const std::string& text) { return parse_rational(text); }

inline VectorXr vec(std::initializer_list<std::string> entries) {
  VectorXr out(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const std::string& e : entries) out[i++] = parse_rational(e);
  return out;
}

inline VectorXr vec(std::initializer_list<long> entries) {
  VectorXr out(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (long e : entries) out[i++] = e;
  return out;
}

// The running example: a 3-node multigraph with four edges e,f,g,h
// (ids 0..3), e and g parallel between the same node pair.
constexpr int kE = 0, kF = 1, kG = 2, kH = 3;

inline Matroid example_matroid() {
  return Matroid::graphic(3, {{0, 1}, {2, 0}, {0, 1}, {2, 1}});
}

inline WeightVector example_weights() {
  return {
      {Rational(0), vec({6L, 4L})},   // e
      {Rational(2), vec({4L, 2L})},   // f
      {Rational(1), vec({2L, 8L})},   // g
      {Rational(6), vec({4L, 12L})},  // h
  };
}

inline std::vector<VectorXr> example_costs() {
  return {vec({6L, 4L}), vec({4L, 2L}), vec({2L, 8L}), vec({4L, 12L})};
}

}  // namespace pmat::testing

#endif  // PMAT_TESTS_FIXTURES_HPP
