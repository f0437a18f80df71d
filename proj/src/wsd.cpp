#include "pmat/wsd.hpp"

#include <algorithm>
#include <numeric>

namespace pmat {

namespace {

bool componentwise_leq(const VectorXr& a, const VectorXr& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

void validate_costs(const Matroid& instance, const std::vector<VectorXr>& costs) {
  if (static_cast<int>(costs.size()) != instance.num_elements())
    throw InputError("one cost vector per element required");
  if (costs.empty() || costs.front().size() < 2)
    throw InputError("cost vectors need p >= 2 objectives");
  for (const VectorXr& c : costs)
    if (c.size() != costs.front().size())
      throw InputError("cost vectors differ in length");
}

VectorXr basis_image(const Basis& basis, const std::vector<VectorXr>& costs, int p) {
  VectorXr y = VectorXr::Zero(p);
  for (int e : basis) y += costs[e];
  return y;
}

VectorXr lift_weight(const VectorXr& mu) {
  VectorXr lambda(mu.size() + 1);
  lambda.head(mu.size()) = mu;
  lambda[mu.size()] = Rational(1) - mu.sum();
  return lambda;
}

}  // namespace

std::vector<Hyperplane> filter_dominated_pairs(const std::vector<VectorXr>& costs) {
  std::vector<Hyperplane> out;
  for (std::size_t e = 0; e < costs.size(); ++e) {
    for (std::size_t f = e + 1; f < costs.size(); ++f) {
      if (componentwise_leq(costs[e], costs[f]) ||
          componentwise_leq(costs[f], costs[e]))
        continue;
      VectorXr normal = costs[e] - costs[f];
      Rational offset = 0;
      int orientation = canonicalize(normal, offset);
      Hyperplane h;
      h.normal = std::move(normal);
      h.offset = std::move(offset);
      h.elem_a = orientation > 0 ? static_cast<int>(e) : static_cast<int>(f);
      h.elem_b = orientation > 0 ? static_cast<int>(f) : static_cast<int>(e);
      out.push_back(std::move(h));
    }
  }
  return out;
}

WeightVector weight_set_weights(const std::vector<VectorXr>& costs) {
  WeightVector weights;
  weights.reserve(costs.size());
  for (const VectorXr& c : costs) {
    const Eigen::Index p = c.size();
    ParametricWeight w;
    w.a = c[p - 1];
    w.b = c.head(p - 1) - VectorXr::Constant(p - 1, c[p - 1]);
    weights.push_back(std::move(w));
  }
  return weights;
}

WsdSolution decompose_weight_set(const Matroid& instance,
                                 const std::vector<VectorXr>& costs,
                                 const WsdOptions& options) {
  validate_costs(instance, costs);
  const int p = static_cast<int>(costs.front().size());
  const std::vector<int> active = instance.active_elements();

  // Degenerate inputs are fixed by perturbing the last cost coordinate, so
  // that images, filtering and the projected arrangement all describe the
  // same (perturbed) instance.
  std::vector<VectorXr> used_costs = costs;
  if (options.perturb_epsilon && *options.perturb_epsilon != 0) {
    std::vector<Rational> offsets =
        perturbation_offsets(costs.size(), options.perturb_seed);
    for (std::size_t e = 0; e < used_costs.size(); ++e)
      used_costs[e][p - 1] += *options.perturb_epsilon * offsets[e];
  }

  WeightVector derived = weight_set_weights(used_costs);

  // Projected separating hyperplanes of the incomparable pairs. Building
  // them from the derived weights equals projecting h(e,f) onto the weight
  // set.
  std::vector<Hyperplane> hyperplanes;
  for (std::size_t i = 0; i < active.size(); ++i) {
    for (std::size_t j = i + 1; j < active.size(); ++j) {
      int e = active[i], f = active[j];
      if (componentwise_leq(used_costs[e], used_costs[f]) ||
          componentwise_leq(used_costs[f], used_costs[e]))
        continue;
      VectorXr normal = derived[e].b - derived[f].b;
      Rational offset = derived[f].a - derived[e].a;
      if (normal.isZero())
        throw std::logic_error("incomparable pair with empty projected hyperplane");
      int orientation = canonicalize(normal, offset);
      Hyperplane h;
      h.normal = std::move(normal);
      h.offset = std::move(offset);
      h.elem_a = orientation > 0 ? e : f;
      h.elem_b = orientation > 0 ? f : e;
      hyperplanes.push_back(std::move(h));
    }
  }

  const int num_separating = static_cast<int>(hyperplanes.size());
  for (Hyperplane& b : weight_set_boundaries(p)) hyperplanes.push_back(std::move(b));

  AssumptionReport report = check_assumptions(hyperplanes);
  if (!report.duplicates_clean()) {
    SeparatingSystem system;
    system.hyperplanes = hyperplanes;
    throw DegeneracyError(
        "projected separating hyperplanes are degenerate (duplicates or a "
        "weight-set boundary collision); rerun with a perturbation",
        std::move(system), std::move(report));
  }

  ParameterBox box;
  box.lower.assign(p - 1, Rational(0));
  box.upper.assign(p - 1, Rational(1));

  WsdSolution solution;
  solution.p = p;
  solution.arrangement = enumerate_cells(std::move(hyperplanes), box, {});
  const Arrangement& arr = solution.arrangement;

  const std::uint64_t calls_before = instance.oracle_calls();
  solution.cell_bases = internal::pivot_bases(instance, derived, arr);

  // A cell lies inside the open simplex iff it sits on the centroid side of
  // every boundary hyperplane.
  const int num_cells = static_cast<int>(arr.cells.size());
  VectorXr centroid = VectorXr::Constant(p - 1, Rational(1, p));
  std::vector<std::int8_t> inside_sign(arr.hyperplanes.size(), 0);
  for (int h = num_separating; h < static_cast<int>(arr.hyperplanes.size()); ++h)
    inside_sign[h] = static_cast<std::int8_t>(side(arr.hyperplanes[h], centroid));
  std::vector<bool> inside(num_cells, true);
  for (int c = 0; c < num_cells; ++c)
    for (std::size_t h = num_separating; h < arr.hyperplanes.size(); ++h)
      if (arr.cells[c].sign[h] != inside_sign[h]) {
        inside[c] = false;
        break;
      }

  std::vector<VectorXr> images(num_cells);
  for (int c = 0; c < num_cells; ++c)
    if (inside[c]) images[c] = basis_image(solution.cell_bases[c], used_costs, p);

  // Merge neighboring inside cells with equal image.
  std::vector<int> parent(num_cells);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const AdjacencyEdge& e : arr.adjacency) {
    if (!inside[e.cell_a] || !inside[e.cell_b]) continue;
    if (images[e.cell_a] != images[e.cell_b]) continue;
    int ra = find(e.cell_a), rb = find(e.cell_b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }

  std::vector<std::vector<int>> members(num_cells);
  for (int c = 0; c < num_cells; ++c)
    if (inside[c]) members[find(c)].push_back(c);

  solution.cell_to_component.assign(num_cells, -1);
  for (int root = 0; root < num_cells; ++root) {
    if (members[root].empty()) continue;
    WeightSetComponent component;
    component.image = ImagePoint{images[root], solution.cell_bases[root]};
    component.cell_ids = members[root];
    component.representative_weight = lift_weight(arr.cells[root].representative);
    for (int c : members[root])
      solution.cell_to_component[c] = static_cast<int>(solution.components.size());
    solution.components.push_back(std::move(component));
  }

  solution.stats.oracle_calls = instance.oracle_calls() - calls_before;
  solution.stats.hyperplanes = static_cast<int>(arr.hyperplanes.size());
  solution.stats.cells = num_cells;
  solution.stats.regions = static_cast<int>(solution.components.size());
  solution.extreme_points = extreme_points(solution);
  return solution;
}

std::vector<ImagePoint> extreme_points(const WsdSolution& solution) {
  std::vector<ImagePoint> points;
  for (const WeightSetComponent& component : solution.components) {
    bool known = false;
    for (const ImagePoint& seen : points)
      if (seen.y == component.image.y) {
        known = true;
        break;
      }
    if (!known) points.push_back(component.image);
  }
  // Strict argmin validation at each component's representative weight.
  for (const WeightSetComponent& component : solution.components) {
    const VectorXr& lambda = component.representative_weight;
    Rational own = lambda.dot(component.image.y);
    for (const ImagePoint& other : points) {
      if (other.y == component.image.y) continue;
      if (!(own < lambda.dot(other.y)))
        throw std::logic_error(
            "weight set component image is not the strict weighted-sum "
            "argmin at its representative");
    }
  }
  return points;
}

}  // namespace pmat
