#ifndef PMAT_VERIFY_HPP
#define PMAT_VERIFY_HPP

#include "pmat/interdiction.hpp"
#include "pmat/param_solver.hpp"
#include "pmat/wsd.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pmat::oracle {

/// Raised when a brute-force enumeration would exceed its size cap.
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kDefaultCap = 1'000'000;

/// All bases, by filtering the rank-sized subsets through the oracle.
std::vector<Basis> enumerate_bases(const Matroid& instance,
                                   std::uint64_t cap = kDefaultCap);

/// Exact minimum over all enumerated bases; value ties resolve to the
/// lexicographically smallest basis.
std::pair<Basis, Rational> brute_min_basis(const Matroid& instance,
                                           const WeightVector& weights,
                                           const VectorXr& point,
                                           std::uint64_t cap = kDefaultCap);

struct InterdictionValue {
  int element = -1;
  bool infinite = false;
  Rational value;  // meaningless when infinite
};

/// max over elements e of the minimum basis weight of the deletion minor,
/// with rank drops counted as infinite; ties resolve to the smallest id.
InterdictionValue brute_interdiction_value(const Matroid& instance,
                                           const WeightVector& weights,
                                           const VectorXr& point,
                                           std::uint64_t cap = kDefaultCap);

struct GridWsdEntry {
  VectorXr weight;                  // full p-vector, strictly positive
  Rational value;                   // optimal weighted sum
  std::vector<Basis> argmin_bases;  // every basis attaining it
  std::vector<VectorXr> argmin_images;
};

/// Weighted-sum argmin by basis enumeration on a rational grid over the
/// open weight set simplex (per-coordinate step 1/resolution).
std::vector<GridWsdEntry> grid_wsd(const Matroid& instance,
                                   const std::vector<VectorXr>& costs,
                                   int resolution,
                                   std::uint64_t cap = kDefaultCap);

struct AuditMismatch {
  VectorXr point;
  std::string expected;
  std::string actual;
};

struct AuditReport {
  int samples = 0;
  std::vector<AuditMismatch> mismatches;
  bool passed() const { return mismatches.empty(); }
};

/// Draws n deterministic rational points in the box (denominators 2^16,
/// unbounded coordinates sampled in [-1024, 1024]) and compares the
/// solution's value against the brute-force optimum, exactly.
AuditReport sample_audit(const ParametricSolution& solution, const Matroid& instance,
                         const WeightVector& weights, int n, std::uint64_t seed,
                         std::uint64_t cap = kDefaultCap);

/// Same point sampling; compares against brute_interdiction_value.
AuditReport sample_audit(const InterdictionSolution& solution, const Matroid& instance,
                         const WeightVector& weights, int n, std::uint64_t seed,
                         std::uint64_t cap = kDefaultCap);

/// Deterministic sample points used by the audits.
std::vector<VectorXr> sample_points(const ParameterBox& box, int n,
                                    std::uint64_t seed);

}  // namespace pmat::oracle

#endif  // PMAT_VERIFY_HPP
