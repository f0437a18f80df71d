#include "pmat/interdiction.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pmat {

namespace {

struct FunctionGroup {
  AffineValue value;
  int lead_element;                 // smallest element id in the group
  std::vector<lp::Constraint> dominance_strict;  // filled after grouping
};

// Distinct deletion value functions on one cell, in order of their smallest
// element id.
std::vector<FunctionGroup> group_functions(const DeletionValueAtlas& atlas, int cell) {
  std::vector<FunctionGroup> groups;
  for (const DeletionValueFunction& f : atlas.functions) {
    const AffineValue& v = f.cell_values[cell];
    bool found = false;
    for (FunctionGroup& g : groups)
      if (g.value == v) {
        found = true;
        break;
      }
    if (!found) groups.push_back(FunctionGroup{v, f.element, {}});
  }
  return groups;
}

}  // namespace

DeletionValueAtlas deletion_value_functions(const Matroid& instance,
                                            const WeightVector& weights,
                                            const ParameterBox& box,
                                            const InterdictionOptions& options) {
  if (instance.num_active() < 2)
    throw InputError("interdiction needs at least two elements");

  SolveOptions solve_options;
  solve_options.perturb_epsilon = options.perturb_epsilon;
  solve_options.perturb_seed = options.perturb_seed;
  solve_options.clip_half_width = options.clip_half_width;

  DeletionValueAtlas atlas;
  WeightVector w = weights;
  atlas.arrangement = internal::build_solver_arrangement(instance, w, box, solve_options);
  atlas.rank = instance.rank();

  std::uint64_t calls = 0;
  for (int e : instance.active_elements()) {
    Matroid minor = instance.deleted(e);
    const std::uint64_t before = minor.oracle_calls();
    DeletionValueFunction f;
    f.element = e;
    if (minor.rank() < atlas.rank) {
      if (options.rank_drop == RankDropPolicy::strict)
        throw RankDropError("deleting element " + std::to_string(e) +
                                " drops the matroid rank",
                            e);
      f.infinite = true;
    } else {
      f.cell_bases = internal::pivot_bases(minor, w, atlas.arrangement);
      f.cell_values.reserve(f.cell_bases.size());
      for (const Basis& basis : f.cell_bases)
        f.cell_values.push_back(basis_value_function(basis, w));
    }
    calls += minor.oracle_calls() - before;
    atlas.functions.push_back(std::move(f));
  }

  atlas.stats.oracle_calls = calls;
  atlas.stats.hyperplanes = static_cast<int>(atlas.arrangement.hyperplanes.size());
  atlas.stats.cells = static_cast<int>(atlas.arrangement.cells.size());
  return atlas;
}

InterdictionSolution solve_interdiction(const Matroid& instance,
                                        const WeightVector& weights,
                                        const ParameterBox& box,
                                        const InterdictionOptions& options) {
  DeletionValueAtlas atlas = deletion_value_functions(instance, weights, box, options);

  InterdictionSolution solution;
  solution.stats = atlas.stats;
  for (const DeletionValueFunction& f : atlas.functions)
    if (f.infinite) {
      solution.infinite_everywhere = f.element;
      break;
    }
  if (solution.infinite_everywhere) {
    solution.arrangement = std::move(atlas.arrangement);
    solution.per_element = std::move(atlas.functions);
    return solution;
  }

  const Arrangement& arr = atlas.arrangement;
  const int d = arr.dim();
  const std::vector<lp::Constraint> box_rows = box_constraints(arr.box);

  // Per-cell refinement: the winner regions of the distinct affine deletion
  // values, cut out by the secondary arrangement of their tie hyperplanes.
  struct ChunkRecord {
    InterdictionChunk chunk;
    int group_lead;
    AffineValue value;
    std::vector<lp::Constraint> strict_rows;  // cell signs + dominance, strict
  };
  std::vector<ChunkRecord> records;
  std::vector<std::vector<int>> cell_chunks(arr.cells.size());

  for (const Cell& cell : arr.cells) {
    std::vector<FunctionGroup> groups = group_functions(atlas, cell.id);
    std::vector<lp::Constraint> cell_strict = arr.cell_constraints(cell, true);

    for (std::size_t i = 0; i < groups.size(); ++i)
      for (std::size_t j = 0; j < groups.size(); ++j) {
        if (i == j) continue;
        VectorXr normal = groups[i].value.b - groups[j].value.b;
        Rational rhs = groups[j].value.a - groups[i].value.a;
        groups[i].dominance_strict.push_back({std::move(normal), std::move(rhs), true});
      }

    // Tie hyperplanes that actually cross the open cell, deduplicated.
    std::vector<Hyperplane> ties;
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (std::size_t j = i + 1; j < groups.size(); ++j) {
        VectorXr normal = groups[i].value.b - groups[j].value.b;
        if (normal.isZero()) continue;  // parallel values never tie
        Rational offset = groups[j].value.a - groups[i].value.a;
        canonicalize(normal, offset);
        Hyperplane tie;
        tie.normal = std::move(normal);
        tie.offset = std::move(offset);
        bool duplicate = false;
        for (const Hyperplane& seen : ties)
          if (seen.same_locus(tie)) {
            duplicate = true;
            break;
          }
        if (duplicate) continue;
        std::vector<lp::Constraint> probe = cell_strict;
        probe.insert(probe.end(), box_rows.begin(), box_rows.end());
        probe.push_back({tie.normal, tie.offset, false});
        probe.push_back({Rational(-1) * tie.normal, Rational(-1) * tie.offset, false});
        if (lp::interior_point(probe, d, true).feasible)
          ties.push_back(std::move(tie));
      }

    EnumerationOptions sub_options;
    sub_options.clip_half_width = arr.clip_half_width;
    sub_options.domain = cell_strict;
    Arrangement refinement = enumerate_cells(std::move(ties), arr.box, sub_options);

    // Winner per sub-cell; one chunk per winning group in this cell.
    std::map<int, int> chunk_of_group;  // group index -> record index
    for (const Cell& sub : refinement.cells) {
      int winner = -1;
      for (std::size_t g = 0; g < groups.size(); ++g) {
        if (winner < 0) {
          winner = static_cast<int>(g);
          continue;
        }
        Rational current = groups[winner].value.at(sub.representative);
        Rational candidate = groups[g].value.at(sub.representative);
        if (candidate > current) winner = static_cast<int>(g);
        else if (candidate == current)
          throw std::logic_error("tied deletion values at a sub-cell interior point");
      }
      auto [it, inserted] = chunk_of_group.try_emplace(winner, -1);
      if (!inserted) continue;
      ChunkRecord record;
      record.group_lead = groups[winner].lead_element;
      record.value = groups[winner].value;
      record.chunk.primary_cell = cell.id;
      record.chunk.representative = sub.representative;
      record.chunk.constraints = arr.cell_constraints(cell, false);
      for (const lp::Constraint& dom : groups[winner].dominance_strict)
        record.chunk.constraints.push_back({dom.normal, dom.rhs, false});
      record.strict_rows = cell_strict;
      record.strict_rows.insert(record.strict_rows.end(),
                                groups[winner].dominance_strict.begin(),
                                groups[winner].dominance_strict.end());
      it->second = static_cast<int>(records.size());
      cell_chunks[cell.id].push_back(it->second);
      records.push_back(std::move(record));
    }
  }

  // Merge equal-labeled chunks across shared facets (primary and secondary
  // facets alike: within a cell the winner region is already one chunk, so
  // only primary facets need a test).
  std::vector<int> parent(records.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const AdjacencyEdge& edge : arr.adjacency) {
    const Hyperplane& plane = arr.hyperplanes[edge.hyperplane];
    for (int ia : cell_chunks[edge.cell_a])
      for (int ib : cell_chunks[edge.cell_b]) {
        const ChunkRecord& a = records[ia];
        const ChunkRecord& b = records[ib];
        if (a.group_lead != b.group_lead || !(a.value == b.value)) continue;
        if (find(ia) == find(ib)) continue;
        // Shared (d-1)-dimensional face test on the crossed hyperplane.
        std::vector<lp::Constraint> rows;
        rows.push_back({plane.normal, plane.offset, false});
        rows.push_back({Rational(-1) * plane.normal, Rational(-1) * plane.offset, false});
        auto add_strict = [&rows](const std::vector<lp::Constraint>& src,
                                  const Hyperplane& skip) {
          for (const lp::Constraint& c : src)
            if (!(c.normal == skip.normal && c.rhs == skip.offset) &&
                !(c.normal == -skip.normal && c.rhs == -skip.offset))
              rows.push_back(c);
        };
        add_strict(a.strict_rows, plane);
        add_strict(b.strict_rows, plane);
        for (const lp::Constraint& c : box_rows) rows.push_back(c);
        if (lp::interior_point(rows, d, true).feasible) {
          int ra = find(ia), rb = find(ib);
          parent[std::max(ra, rb)] = std::min(ra, rb);
        }
      }
  }

  std::vector<std::vector<int>> piece_members(records.size());
  for (std::size_t i = 0; i < records.size(); ++i)
    piece_members[find(static_cast<int>(i))].push_back(static_cast<int>(i));
  for (std::size_t root = 0; root < records.size(); ++root) {
    if (piece_members[root].empty()) continue;
    InterdictionPiece piece;
    piece.most_vital = records[root].group_lead;
    piece.value = records[root].value;
    piece.representative = records[root].chunk.representative;
    for (int i : piece_members[root]) piece.chunks.push_back(records[i].chunk);
    solution.pieces.push_back(std::move(piece));
  }

  solution.arrangement = std::move(atlas.arrangement);
  solution.per_element = std::move(atlas.functions);
  solution.stats.regions = static_cast<int>(solution.pieces.size());
  return solution;
}

std::pair<int, Rational> evaluate_interdiction(const InterdictionSolution& solution,
                                               const VectorXr& point) {
  if (solution.infinite_everywhere)
    throw InputError("interdiction value is infinite everywhere");
  if (!solution.arrangement.box.contains(point))
    throw InputError("evaluation point outside the parameter box");
  for (const InterdictionPiece& piece : solution.pieces)
    for (const InterdictionChunk& chunk : piece.chunks) {
      bool ok = true;
      for (const lp::Constraint& c : chunk.constraints)
        if (c.normal.dot(point) < c.rhs) {
          ok = false;
          break;
        }
      if (ok) return {piece.most_vital, piece.value.at(point)};
    }
  throw std::logic_error("point in box but in no piece closure");
}

}  // namespace pmat
