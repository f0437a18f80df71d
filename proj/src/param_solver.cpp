#include "pmat/param_solver.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace pmat {

namespace internal {

// Shared front end of Algorithms 1 and 2: perturbation, separating
// hyperplanes, assumption check, cell enumeration.
Arrangement build_solver_arrangement(const Matroid& instance, WeightVector& weights,
                                     const ParameterBox& box,
                                     const SolveOptions& options) {
  box.validate();
  if (static_cast<int>(weights.size()) != instance.num_elements())
    throw InputError("one weight function per element required");
  for (const ParametricWeight& w : weights)
    if (w.dim() != box.dim()) throw InputError("weight dimension != box dimension");

  if (options.perturb_epsilon)
    weights = perturb_weights(weights, options.perturb_seed, *options.perturb_epsilon);

  SeparatingSystem system =
      build_separating_hyperplanes(weights, instance.active_elements());
  AssumptionReport report = check_assumptions(system.hyperplanes);
  if (!system.identical_pairs.empty() || !report.duplicates_clean())
    throw DegeneracyError(
        "weights are degenerate (identical weight functions or duplicate "
        "separating hyperplanes); rerun with a perturbation",
        std::move(system), std::move(report));

  EnumerationOptions enum_options;
  enum_options.clip_half_width = options.clip_half_width;
  return enumerate_cells(std::move(system.hyperplanes), box, enum_options);
}

// Start cell rule: the cell containing the clipped centroid, else cell 0.
int start_cell(const Arrangement& arrangement) {
  const int d = arrangement.dim();
  VectorXr centroid(d);
  for (int i = 0; i < d; ++i) {
    Rational lo = arrangement.box.lower[i] ? *arrangement.box.lower[i]
                                           : -arrangement.clip_half_width;
    Rational hi = arrangement.box.upper[i] ? *arrangement.box.upper[i]
                                           : arrangement.clip_half_width;
    centroid[i] = (lo + hi) / 2;
  }
  const Cell* cell = arrangement.locate(centroid);
  return cell ? cell->id : 0;
}

// Algorithm-2 propagation: greedy once at the start cell, then one swap
// test per newly reached cell, crossing the labeled hyperplane's pair.
std::vector<Basis> pivot_bases(const Matroid& instance, const WeightVector& weights,
                               const Arrangement& arrangement) {
  const int n = static_cast<int>(arrangement.cells.size());
  std::vector<std::vector<std::pair<int, int>>> neighbors(n);  // (cell, hyperplane)
  for (const AdjacencyEdge& e : arrangement.adjacency) {
    neighbors[e.cell_a].emplace_back(e.cell_b, e.hyperplane);
    neighbors[e.cell_b].emplace_back(e.cell_a, e.hyperplane);
  }

  std::vector<Basis> bases(n);
  std::vector<bool> seen(n, false);
  const int root = start_cell(arrangement);
  bases[root] = greedy_min_basis(instance, weights, arrangement.cells[root].representative);
  seen[root] = true;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const auto& [v, h] : neighbors[u]) {
      if (seen[v]) continue;
      const Hyperplane& plane = arrangement.hyperplanes[h];
      // In u, sign -1 means w(elem_a) < w(elem_b); crossing into v reverses
      // the pair, so the previously cheaper element is the swap-out side.
      int out = arrangement.cells[u].sign[h] < 0 ? plane.elem_a : plane.elem_b;
      int in = arrangement.cells[u].sign[h] < 0 ? plane.elem_b : plane.elem_a;
      if (out >= 0 && in >= 0 && !instance.is_deleted(in))
        bases[v] = swap_update(bases[u], out, in, instance);
      else
        bases[v] = bases[u];
      seen[v] = true;
      queue.push_back(v);
    }
  }
  return bases;
}

}  // namespace internal

std::vector<Region> merge_regions(const Arrangement& arrangement,
                                  const std::vector<Basis>& cell_bases,
                                  const WeightVector& weights) {
  const int n = static_cast<int>(arrangement.cells.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const AdjacencyEdge& e : arrangement.adjacency)
    if (cell_bases[e.cell_a] == cell_bases[e.cell_b]) {
      int ra = find(e.cell_a), rb = find(e.cell_b);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }

  std::vector<std::vector<int>> members(n);
  for (int c = 0; c < n; ++c) members[find(c)].push_back(c);

  std::vector<Region> regions;
  for (int root = 0; root < n; ++root) {
    if (members[root].empty()) continue;
    Region region;
    region.cell_ids = members[root];  // ascending; root is the minimum
    region.basis = cell_bases[root];
    region.value = basis_value_function(region.basis, weights);
    region.representative = arrangement.cells[root].representative;
    regions.push_back(std::move(region));
  }
  return regions;
}

namespace {

ParametricSolution assemble(Arrangement arrangement, std::vector<Basis> cell_bases,
                            const WeightVector& weights, bool merge,
                            std::uint64_t oracle_calls) {
  ParametricSolution solution;
  solution.arrangement = std::move(arrangement);
  if (merge) {
    solution.regions = merge_regions(solution.arrangement, cell_bases, weights);
  } else {
    for (const Cell& cell : solution.arrangement.cells) {
      Region region;
      region.cell_ids = {cell.id};
      region.basis = cell_bases[cell.id];
      region.value = basis_value_function(region.basis, weights);
      region.representative = cell.representative;
      solution.regions.push_back(std::move(region));
    }
  }
  solution.cell_to_region.assign(solution.arrangement.cells.size(), -1);
  for (std::size_t r = 0; r < solution.regions.size(); ++r)
    for (int c : solution.regions[r].cell_ids)
      solution.cell_to_region[c] = static_cast<int>(r);
  solution.stats.oracle_calls = oracle_calls;
  solution.stats.hyperplanes = static_cast<int>(solution.arrangement.hyperplanes.size());
  solution.stats.cells = static_cast<int>(solution.arrangement.cells.size());
  solution.stats.regions = static_cast<int>(solution.regions.size());
  return solution;
}

}  // namespace

ParametricSolution solve_per_cell(const Matroid& instance, const WeightVector& weights,
                                  const ParameterBox& box, const SolveOptions& options) {
  WeightVector w = weights;
  Arrangement arrangement = internal::build_solver_arrangement(instance, w, box, options);
  const std::uint64_t calls_before = instance.oracle_calls();
  std::vector<Basis> bases(arrangement.cells.size());
  for (const Cell& cell : arrangement.cells)
    bases[cell.id] = greedy_min_basis(instance, w, cell.representative);
  return assemble(std::move(arrangement), std::move(bases), w, options.merge,
                  instance.oracle_calls() - calls_before);
}

ParametricSolution solve_pivot(const Matroid& instance, const WeightVector& weights,
                               const ParameterBox& box, const SolveOptions& options) {
  WeightVector w = weights;
  Arrangement arrangement = internal::build_solver_arrangement(instance, w, box, options);
  const std::uint64_t calls_before = instance.oracle_calls();
  std::vector<Basis> bases = internal::pivot_bases(instance, w, arrangement);
  return assemble(std::move(arrangement), std::move(bases), w, options.merge,
                  instance.oracle_calls() - calls_before);
}

std::pair<Basis, Rational> evaluate_solution(const ParametricSolution& solution,
                                             const VectorXr& point) {
  if (!solution.arrangement.box.contains(point))
    throw InputError("evaluation point outside the parameter box");
  const Cell* cell = solution.arrangement.locate(point);
  if (!cell) throw std::logic_error("point in box but in no cell closure");
  const Region& region = solution.region_of_cell(cell->id);
  return {region.basis, region.value.at(point)};
}

}  // namespace pmat
