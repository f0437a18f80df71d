#include "pmat/verify.hpp"

#include <algorithm>
#include <random>

namespace pmat::oracle {

namespace {

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer result = 1;
  for (int i = 0; i < k; ++i) result = result * (n - i) / (i + 1);
  return result;
}

}  // namespace

std::vector<Basis> enumerate_bases(const Matroid& instance, std::uint64_t cap) {
  const std::vector<int> active = instance.active_elements();
  const int k = instance.rank();
  if (binomial(static_cast<int>(active.size()), k) > Integer(cap))
    throw CapError("basis enumeration exceeds the cap");

  std::vector<Basis> bases;
  if (k == 0) {
    bases.push_back({});
    return bases;
  }
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  const int n = static_cast<int>(active.size());
  if (n < k) return bases;
  for (;;) {
    Basis candidate(k);
    for (int i = 0; i < k; ++i) candidate[i] = active[pick[i]];
    if (instance.is_independent(candidate)) bases.push_back(std::move(candidate));
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return bases;
}

std::pair<Basis, Rational> brute_min_basis(const Matroid& instance,
                                           const WeightVector& weights,
                                           const VectorXr& point,
                                           std::uint64_t cap) {
  std::vector<Basis> bases = enumerate_bases(instance, cap);
  if (bases.empty()) throw InputError("instance has no basis");
  const Basis* best = nullptr;
  Rational best_value;
  for (const Basis& basis : bases) {
    Rational value = 0;
    for (int e : basis) value += weights[e].at(point);
    if (!best || value < best_value ||
        (value == best_value && basis < *best)) {
      best = &basis;
      best_value = value;
    }
  }
  return {*best, best_value};
}

InterdictionValue brute_interdiction_value(const Matroid& instance,
                                           const WeightVector& weights,
                                           const VectorXr& point,
                                           std::uint64_t cap) {
  const int k = instance.rank();
  InterdictionValue best;
  for (int e : instance.active_elements()) {
    Matroid minor = instance.deleted(e);
    if (minor.rank() < k) {
      if (!best.infinite) {
        best.element = e;
        best.infinite = true;
      }
      continue;
    }
    if (best.infinite) continue;
    Rational value = brute_min_basis(minor, weights, point, cap).second;
    if (best.element < 0 || value > best.value) {
      best.element = e;
      best.value = value;
    }
  }
  return best;
}

std::vector<GridWsdEntry> grid_wsd(const Matroid& instance,
                                   const std::vector<VectorXr>& costs,
                                   int resolution,
                                   std::uint64_t cap) {
  if (resolution < 8) throw InputError("grid resolution must be at least 8");
  if (costs.empty()) throw InputError("grid_wsd needs cost vectors");
  const int p = static_cast<int>(costs.front().size());
  if (p < 2 || p > 3) throw InputError("grid_wsd supports p in {2, 3}");
  std::vector<Basis> bases = enumerate_bases(instance, cap);
  if (bases.empty()) throw InputError("instance has no basis");

  std::vector<VectorXr> images;
  images.reserve(bases.size());
  for (const Basis& basis : bases) {
    VectorXr y = VectorXr::Zero(p);
    for (int e : basis) y += costs[e];
    images.push_back(std::move(y));
  }

  std::vector<GridWsdEntry> out;
  auto emit = [&](const VectorXr& weight) {
    GridWsdEntry entry;
    entry.weight = weight;
    for (std::size_t i = 0; i < bases.size(); ++i) {
      Rational value = weight.dot(images[i]);
      if (entry.argmin_bases.empty() || value < entry.value) {
        entry.value = value;
        entry.argmin_bases = {bases[i]};
        entry.argmin_images = {images[i]};
      } else if (value == entry.value) {
        entry.argmin_bases.push_back(bases[i]);
        entry.argmin_images.push_back(images[i]);
      }
    }
    out.push_back(std::move(entry));
  };

  if (p == 2) {
    for (int i = 1; i < resolution; ++i) {
      VectorXr w(2);
      w[0] = Rational(i, resolution);
      w[1] = 1 - w[0];
      emit(w);
    }
  } else {
    for (int i = 1; i < resolution; ++i)
      for (int j = 1; i + j < resolution; ++j) {
        VectorXr w(3);
        w[0] = Rational(i, resolution);
        w[1] = Rational(j, resolution);
        w[2] = 1 - w[0] - w[1];
        emit(w);
      }
  }
  return out;
}

std::vector<VectorXr> sample_points(const ParameterBox& box, int n,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::int64_t den = 1 << 16;
  std::vector<VectorXr> points;
  points.reserve(n);
  for (int s = 0; s < n; ++s) {
    VectorXr point(box.dim());
    for (int i = 0; i < box.dim(); ++i) {
      Rational lo = box.lower[i] ? *box.lower[i] : Rational(-1024);
      Rational hi = box.upper[i] ? *box.upper[i] : Rational(1024);
      std::uint64_t num = rng() % (den - 1) + 1;  // strictly interior fraction
      point[i] = lo + (hi - lo) * Rational(num, den);
    }
    points.push_back(std::move(point));
  }
  return points;
}

AuditReport sample_audit(const ParametricSolution& solution, const Matroid& instance,
                         const WeightVector& weights, int n, std::uint64_t seed,
                         std::uint64_t cap) {
  AuditReport report;
  report.samples = n;
  for (const VectorXr& point : sample_points(solution.arrangement.box, n, seed)) {
    Rational expected = brute_min_basis(instance, weights, point, cap).second;
    Rational actual = evaluate_solution(solution, point).second;
    if (expected != actual)
      report.mismatches.push_back({point, to_string(expected), to_string(actual)});
  }
  return report;
}

AuditReport sample_audit(const InterdictionSolution& solution, const Matroid& instance,
                         const WeightVector& weights, int n, std::uint64_t seed,
                         std::uint64_t cap) {
  AuditReport report;
  report.samples = n;
  for (const VectorXr& point : sample_points(solution.arrangement.box, n, seed)) {
    InterdictionValue expected = brute_interdiction_value(instance, weights, point, cap);
    if (expected.infinite)
      throw std::logic_error("audited interdiction solution lacks infinite marker");
    Rational actual = evaluate_interdiction(solution, point).second;
    if (expected.value != actual)
      report.mismatches.push_back(
          {point, to_string(expected.value), to_string(actual)});
  }
  return report;
}

}  // namespace pmat::oracle
