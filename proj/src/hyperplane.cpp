#include "pmat/hyperplane.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace pmat {

int side(const Hyperplane& h, const VectorXr& point) {
  return sign(h.normal.dot(point) - h.offset);
}

int canonicalize(VectorXr& normal, Rational& offset) {
  if (normal.isZero()) throw std::logic_error("cannot canonicalize zero normal");
  Integer lcm = 1;
  auto fold_den = [&lcm](const Rational& x) {
    lcm = boost::multiprecision::lcm(lcm, Integer(denominator(x)));
  };
  for (Eigen::Index i = 0; i < normal.size(); ++i) fold_den(normal[i]);
  fold_den(offset);
  Integer gcd = 0;
  auto fold_num = [&](const Rational& x) {
    gcd = boost::multiprecision::gcd(gcd, Integer(numerator(Rational(x * lcm))));
  };
  for (Eigen::Index i = 0; i < normal.size(); ++i) fold_num(normal[i]);
  fold_num(offset);
  Rational scale = Rational(lcm, gcd);
  int orientation = 1;
  for (Eigen::Index i = 0; i < normal.size(); ++i)
    if (normal[i] != 0) {
      if (normal[i] < 0) orientation = -1;
      break;
    }
  if (orientation < 0) scale = -scale;
  normal *= scale;
  offset *= scale;
  return orientation;
}

namespace {

// Separating hyperplane of one element pair, or nullopt if the weight
// functions have equal linear parts (identical or parallel).
std::optional<Hyperplane> separating_hyperplane(const ParametricWeight& we,
                                                const ParametricWeight& wf,
                                                int e, int f) {
  VectorXr normal = we.b - wf.b;
  if (normal.isZero()) return std::nullopt;
  Rational offset = wf.a - we.a;  // w(e) - w(f) = (a_e - a_f) + normal.lambda
  int orientation = canonicalize(normal, offset);
  Hyperplane h;
  h.normal = std::move(normal);
  h.offset = std::move(offset);
  h.elem_a = orientation > 0 ? e : f;
  h.elem_b = orientation > 0 ? f : e;
  return h;
}

}  // namespace

SeparatingSystem build_separating_hyperplanes(const WeightVector& weights) {
  std::vector<int> active(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) active[i] = static_cast<int>(i);
  return build_separating_hyperplanes(weights, active);
}

SeparatingSystem build_separating_hyperplanes(const WeightVector& weights,
                                              const std::vector<int>& active) {
  SeparatingSystem out;
  for (std::size_t i = 0; i < active.size(); ++i) {
    for (std::size_t j = i + 1; j < active.size(); ++j) {
      int e = active[i], f = active[j];
      auto h = separating_hyperplane(weights[e], weights[f], e, f);
      if (h) {
        out.hyperplanes.push_back(std::move(*h));
      } else if (weights[e].a == weights[f].a) {
        out.identical_pairs.emplace_back(e, f);
      } else {
        out.parallel_pairs.emplace_back(e, f);
      }
    }
  }
  return out;
}

AssumptionReport check_assumptions(const std::vector<Hyperplane>& hyperplanes) {
  AssumptionReport report;
  for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
    for (std::size_t j = i + 1; j < hyperplanes.size(); ++j)
      if (hyperplanes[i].same_locus(hyperplanes[j]))
        report.duplicate_pairs.emplace_back(static_cast<int>(i),
                                            static_cast<int>(j));
    const VectorXr& n = hyperplanes[i].normal;
    if (n.size() > 0 && n[n.size() - 1] == 0)
      report.vertical.push_back(static_cast<int>(i));
  }
  return report;
}

std::vector<Rational> perturbation_offsets(std::size_t count,
                                           unsigned long long seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t den = std::uint64_t(1) << 32;
  std::set<std::uint64_t> used;
  std::vector<Rational> out;
  out.reserve(count);
  while (out.size() < count) {
    std::uint64_t num = rng() % (den - 1) + 1;
    if (used.insert(num).second) out.emplace_back(num, den);
  }
  return out;
}

WeightVector perturb_weights(const WeightVector& weights,
                             unsigned long long seed, const Rational& epsilon) {
  if (epsilon < 0) throw InputError("perturbation epsilon must be nonnegative");
  if (epsilon == 0) return weights;
  std::vector<Rational> offsets = perturbation_offsets(weights.size(), seed);
  WeightVector out = weights;
  for (std::size_t e = 0; e < out.size(); ++e) out[e].a += epsilon * offsets[e];
  return out;
}

RestrictionResult restrict_to_weight_set(const std::vector<Hyperplane>& hyperplanes) {
  RestrictionResult out;
  for (std::size_t idx = 0; idx < hyperplanes.size(); ++idx) {
    const Hyperplane& h = hyperplanes[idx];
    const int p = h.dim();
    if (p < 2) throw InputError("weight-set restriction needs p >= 2");
    const Rational& last = h.normal[p - 1];
    VectorXr normal = h.normal.head(p - 1) - VectorXr::Constant(p - 1, last);
    Rational offset = h.offset - last;
    if (normal.isZero()) {
      (offset == 0 ? out.dropped_coincident : out.dropped_disjoint)
          .push_back(static_cast<int>(idx));
      continue;
    }
    int orientation = canonicalize(normal, offset);
    Hyperplane proj;
    proj.normal = std::move(normal);
    proj.offset = std::move(offset);
    proj.elem_a = orientation > 0 ? h.elem_a : h.elem_b;
    proj.elem_b = orientation > 0 ? h.elem_b : h.elem_a;
    proj.boundary_index = h.boundary_index;
    out.hyperplanes.push_back(std::move(proj));
  }
  return out;
}

std::vector<Hyperplane> weight_set_boundaries(int p) {
  if (p < 2) throw InputError("weight set needs p >= 2");
  std::vector<Hyperplane> out;
  for (int i = 0; i < p - 1; ++i) {
    Hyperplane h;
    h.normal = VectorXr::Zero(p - 1);
    h.normal[i] = 1;
    h.offset = 0;
    h.boundary_index = i;
    out.push_back(std::move(h));
  }
  Hyperplane last;
  last.normal = VectorXr::Constant(p - 1, 1);
  last.offset = 1;
  last.boundary_index = p - 1;
  out.push_back(std::move(last));
  return out;
}

}  // namespace pmat
