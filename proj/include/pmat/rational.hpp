#ifndef PMAT_RATIONAL_HPP
#define PMAT_RATIONAL_HPP

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace pmat {

/// Exact arbitrary-precision rational scalar used throughout the library.
using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;

using VectorXr = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using MatrixXr = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Thrown on malformed user input (bad rational strings, schema violations,
/// unknown element ids).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "num", "-num/den" (den a positive integer) or a power of two
/// written "2^k" / "-2^k" with integer k. Anything else is an InputError.
Rational parse_rational(const std::string& text);

/// Canonical text form: "num" or "num/den" with positive denominator.
std::string to_string(const Rational& value);

inline int sign(const Rational& x) { return x.sign(); }

inline Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

/// Sum of absolute values; the scaling used for interior-point margins.
Rational l1_norm(const VectorXr& v);

}  // namespace pmat

#endif  // PMAT_RATIONAL_HPP
