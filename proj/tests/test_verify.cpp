#include "pmat/verify.hpp"

#include "fixtures.hpp"

#include <doctest.h>

using namespace pmat;
using namespace pmat::testing;

TEST_CASE("brute-force minimum basis on the running example") {
  auto [basis, value] =
      oracle::brute_min_basis(example_matroid(), example_weights(), vec({"-3/5", "-3/5"}));
  CHECK(basis == Basis{kE, kH});
  CHECK(value == rat("-48/5"));

  auto [basis2, value2] =
      oracle::brute_min_basis(example_matroid(), example_weights(), vec({2L, 2L}));
  CHECK(basis2 == Basis{kE, kF});
  CHECK(value2 == Rational(34));
}

TEST_CASE("brute-force value is a lower bound over all bases") {
  std::vector<Basis> bases = oracle::enumerate_bases(example_matroid());
  VectorXr point = vec({"7/3", "-11/5"});
  Rational best = oracle::brute_min_basis(example_matroid(), example_weights(), point).second;
  for (const Basis& b : bases)
    CHECK(best <= basis_value_function(b, example_weights()).at(point));
}

TEST_CASE("brute-force interdiction value") {
  auto low = oracle::brute_interdiction_value(example_matroid(), example_weights(),
                                              vec({"-3/5", "-3/5"}));
  CHECK_FALSE(low.infinite);
  CHECK(low.element == kH);
  CHECK(low.value == rat("-38/5"));

  auto high = oracle::brute_interdiction_value(example_matroid(), example_weights(),
                                               vec({2L, 2L}));
  CHECK(high.element == kF);
  CHECK(high.value == Rational(58));

  Matroid path = Matroid::graphic(3, {{0, 1}, {1, 2}, {0, 1}});
  WeightVector w = {{Rational(0), vec({1L, 0L})},
                    {Rational(1), vec({0L, 1L})},
                    {Rational(2), vec({1L, 1L})}};
  auto bridge = oracle::brute_interdiction_value(path, w, vec({0L, 0L}));
  CHECK(bridge.infinite);
  CHECK(bridge.element == 1);
}

TEST_CASE("grid oracle entries of the bi-objective example") {
  std::vector<oracle::GridWsdEntry> grid =
      oracle::grid_wsd(example_matroid(), example_costs(), 16);
  REQUIRE(grid.size() == 15);

  const oracle::GridWsdEntry& quarter = grid[3];  // lambda_1 = 4/16
  CHECK(quarter.weight[0] == rat("1/4"));
  CHECK(quarter.value == Rational(7));
  REQUIRE(quarter.argmin_bases.size() == 1);
  CHECK(quarter.argmin_bases[0] == Basis{kE, kF});
  CHECK(quarter.argmin_images[0] == vec({10L, 6L}));

  const oracle::GridWsdEntry& three_quarters = grid[11];  // lambda_1 = 12/16
  CHECK(three_quarters.value == Rational(7));
  REQUIRE(three_quarters.argmin_bases.size() == 1);
  CHECK(three_quarters.argmin_bases[0] == Basis{kF, kG});
  CHECK(three_quarters.argmin_images[0] == vec({6L, 10L}));

  const oracle::GridWsdEntry& half = grid[7];  // lambda_1 = 1/2: the tie
  CHECK(half.value == Rational(8));
  CHECK(half.argmin_bases.size() == 2);
}

TEST_CASE("sample points are deterministic and in the box") {
  ParameterBox box = ParameterBox::unbounded(2);
  box.lower[0] = Rational(-2);
  box.upper[0] = Rational(3);
  std::vector<VectorXr> a = oracle::sample_points(box, 50, 9);
  std::vector<VectorXr> b = oracle::sample_points(box, 50, 9);
  std::vector<VectorXr> c = oracle::sample_points(box, 50, 10);
  REQUIRE(a.size() == 50);
  bool all_equal = true;
  for (int i = 0; i < 50; ++i) {
    CHECK(a[i] == b[i]);
    CHECK(a[i][0] > Rational(-2));
    CHECK(a[i][0] < Rational(3));
    CHECK(abs(a[i][1]) <= Rational(1024));
    if (!(a[i] == c[i])) all_equal = false;
  }
  CHECK_FALSE(all_equal);
}

TEST_CASE("sample audit passes on a correct solution and catches corruption") {
  Matroid m = example_matroid();
  WeightVector w = example_weights();
  ParametricSolution s = solve_pivot(m, w, ParameterBox::unbounded(2));

  oracle::AuditReport clean = oracle::sample_audit(s, m, w, 100, 7);
  CHECK(clean.samples == 100);
  CHECK(clean.passed());

  oracle::AuditReport vacuous = oracle::sample_audit(s, m, w, 0, 7);
  CHECK(vacuous.passed());

  // Corrupt one region's value function: the audit must notice.
  ParametricSolution corrupted = s;
  corrupted.regions[0].value.a += 1;
  oracle::AuditReport bad = oracle::sample_audit(corrupted, m, w, 100, 7);
  CHECK_FALSE(bad.passed());
  CHECK_FALSE(bad.mismatches.empty());
}
