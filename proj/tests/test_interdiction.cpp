#include "pmat/interdiction.hpp"
#include "pmat/verify.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <random>

using namespace pmat;
using namespace pmat::testing;

namespace {

Rational dvf_value(const InterdictionSolution& s, int element, const VectorXr& point) {
  const Cell* cell = s.arrangement.locate(point);
  REQUIRE(cell);
  for (const DeletionValueFunction& f : s.per_element)
    if (f.element == element) return f.cell_values[cell->id].at(point);
  FAIL("unknown element");
  return 0;
}

bool chunk_contains(const InterdictionChunk& chunk, const VectorXr& point) {
  for (const lp::Constraint& c : chunk.constraints)
    if (c.normal.dot(point) < c.rhs) return false;
  return true;
}

}  // namespace

TEST_CASE("the running example's most vital element at the optimum cell") {
  InterdictionSolution s = solve_interdiction(example_matroid(), example_weights(),
                                              ParameterBox::unbounded(2));
  REQUIRE_FALSE(s.infinite_everywhere);

  VectorXr point = vec({"-3/5", "-3/5"});
  auto [element, value] = evaluate_interdiction(s, point);
  CHECK(element == kH);
  CHECK(value == rat("-38/5"));

  // Deletion minima at the point, element by element.
  CHECK(dvf_value(s, kE, point) == rat("-43/5"));
  CHECK(dvf_value(s, kF, point) == rat("-48/5"));
  CHECK(dvf_value(s, kG, point) == rat("-48/5"));
  CHECK(dvf_value(s, kH, point) == rat("-38/5"));

  auto [element2, value2] = evaluate_interdiction(s, vec({2L, 2L}));
  CHECK(element2 == kF);
  CHECK(value2 == Rational(58));
}

TEST_CASE("deletion value functions match pivot solves of the minors") {
  DeletionValueAtlas atlas = deletion_value_functions(
      example_matroid(), example_weights(), ParameterBox::unbounded(2));
  REQUIRE(atlas.functions.size() == 4);
  for (const DeletionValueFunction& f : atlas.functions) {
    REQUIRE_FALSE(f.infinite);
    Matroid minor = example_matroid().deleted(f.element);
    for (const Cell& cell : atlas.arrangement.cells) {
      Basis fresh = greedy_min_basis(minor, example_weights(), cell.representative);
      CHECK(f.cell_bases[cell.id] == fresh);
      CHECK(f.cell_values[cell.id].at(cell.representative) ==
            basis_value_function(fresh, example_weights()).at(cell.representative));
    }
  }
}

TEST_CASE("envelope dominance and per-piece constancy") {
  InterdictionSolution s = solve_interdiction(example_matroid(), example_weights(),
                                              ParameterBox::unbounded(2));
  std::mt19937_64 rng(3);
  for (const VectorXr& point :
       oracle::sample_points(s.arrangement.box, 40, rng())) {
    auto [element, value] = evaluate_interdiction(s, point);
    for (const DeletionValueFunction& f : s.per_element) {
      Rational ye = dvf_value(s, f.element, point);
      CHECK(value >= ye);
      if (f.element == element) CHECK(value == ye);
    }
  }

  // The labeled element re-derives as the argmax at every chunk
  // representative (ascending id on exact ties).
  for (const InterdictionPiece& piece : s.pieces) {
    for (const InterdictionChunk& chunk : piece.chunks) {
      CHECK(chunk_contains(chunk, chunk.representative));
      int best = -1;
      Rational best_value;
      for (const DeletionValueFunction& f : s.per_element) {
        Rational v = dvf_value(s, f.element, chunk.representative);
        if (best < 0 || v > best_value) {
          best = f.element;
          best_value = v;
        }
      }
      CHECK(best == piece.most_vital);
      CHECK(best_value == piece.value.at(chunk.representative));
    }
  }
}

TEST_CASE("each deletion value function is concave; their envelope need not be") {
  InterdictionSolution s = solve_interdiction(example_matroid(), example_weights(),
                                              ParameterBox::unbounded(2));
  std::mt19937_64 rng(5);
  std::vector<VectorXr> points = oracle::sample_points(s.arrangement.box, 40, rng());
  for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
    VectorXr mid = ((points[i] + points[i + 1]) / 2).eval();
    for (const DeletionValueFunction& f : s.per_element) {
      Rational lhs = dvf_value(s, f.element, mid);
      Rational rhs = (dvf_value(s, f.element, points[i]) +
                      dvf_value(s, f.element, points[i + 1])) /
                     2;
      CHECK(lhs >= rhs);
    }
  }
}

TEST_CASE("envelope continuity across facets") {
  InterdictionSolution s = solve_interdiction(example_matroid(), example_weights(),
                                              ParameterBox::unbounded(2));
  // A point in the relative interior of each primary facet; every piece
  // whose closure contains it must agree on the value there.
  for (const AdjacencyEdge& edge : s.arrangement.adjacency) {
    const Hyperplane& plane = s.arrangement.hyperplanes[edge.hyperplane];
    std::vector<lp::Constraint> rows;
    rows.push_back({plane.normal, plane.offset, false});
    rows.push_back({-plane.normal, -plane.offset, false});
    const Cell& cell = s.arrangement.cells[edge.cell_a];
    for (std::size_t h = 0; h < s.arrangement.hyperplanes.size(); ++h) {
      if (static_cast<int>(h) == edge.hyperplane) continue;
      const Hyperplane& other = s.arrangement.hyperplanes[h];
      if (cell.sign[h] > 0)
        rows.push_back({other.normal, other.offset, true});
      else
        rows.push_back({-other.normal, -other.offset, true});
    }
    lp::InteriorPointResult facet = lp::interior_point(rows, 2);
    REQUIRE(facet.feasible);

    std::optional<Rational> value;
    int containing = 0;
    for (const InterdictionPiece& piece : s.pieces)
      for (const InterdictionChunk& chunk : piece.chunks)
        if (chunk_contains(chunk, facet.point)) {
          Rational v = piece.value.at(facet.point);
          if (value) CHECK(*value == v);
          value = v;
          ++containing;
        }
    CHECK(containing >= 2);
  }
}

TEST_CASE("audit against the brute-force interdiction oracle") {
  InterdictionSolution s = solve_interdiction(example_matroid(), example_weights(),
                                              ParameterBox::unbounded(2));
  oracle::AuditReport report =
      oracle::sample_audit(s, example_matroid(), example_weights(), 60, 17);
  CHECK(report.passed());
}

TEST_CASE("a bridge makes the interdiction value infinite everywhere") {
  Matroid path = Matroid::graphic(3, {{0, 1}, {1, 2}, {0, 1}});
  WeightVector w = {{Rational(0), vec({1L, 0L})},
                    {Rational(1), vec({0L, 1L})},
                    {Rational(2), vec({1L, 1L})}};
  InterdictionSolution s =
      solve_interdiction(path, w, ParameterBox::unbounded(2));
  REQUIRE(s.infinite_everywhere);
  CHECK(*s.infinite_everywhere == 1);  // the bridge 1-2
  CHECK(s.pieces.empty());
  CHECK_THROWS_AS(evaluate_interdiction(s, vec({0L, 0L})), InputError);

  InterdictionOptions strict;
  strict.rank_drop = RankDropPolicy::strict;
  CHECK_THROWS_AS(solve_interdiction(path, w, ParameterBox::unbounded(2), strict),
                  RankDropError);
}

TEST_CASE("two elements of rank one: deleting the cheaper one is most vital") {
  Matroid m = Matroid::uniform(1, 2);
  WeightVector w = {{Rational(0), vec({1L, 0L})}, {Rational(5), vec({1L, 0L})}};
  // Parallel weight functions, always w0 < w1: no hyperplanes at all.
  InterdictionSolution s = solve_interdiction(m, w, ParameterBox::unbounded(2));
  REQUIRE(s.pieces.size() == 1);
  CHECK(s.pieces[0].most_vital == 0);
  auto [element, value] = evaluate_interdiction(s, vec({3L, 4L}));
  CHECK(element == 0);
  CHECK(value == w[1].at(vec({3L, 4L})));
}

TEST_CASE("interdiction needs at least two elements") {
  Matroid single = Matroid::uniform(1, 1);
  WeightVector w = {{Rational(0), vec({1L, 0L})}};
  CHECK_THROWS_AS(
      solve_interdiction(single, w, ParameterBox::unbounded(2)), InputError);
}
