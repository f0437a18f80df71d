#include "pmat/hyperplane.hpp"

#include "fixtures.hpp"

#include <doctest.h>

using namespace pmat;
using namespace pmat::testing;

namespace {

const Hyperplane* find_pair(const SeparatingSystem& system, int e, int f) {
  for (const Hyperplane& h : system.hyperplanes)
    if ((h.elem_a == e && h.elem_b == f) || (h.elem_a == f && h.elem_b == e))
      return &h;
  return nullptr;
}

}  // namespace

TEST_CASE("the six separating hyperplanes of the running example") {
  SeparatingSystem system = build_separating_hyperplanes(example_weights());
  REQUIRE(system.hyperplanes.size() == 6);
  CHECK(system.identical_pairs.empty());
  CHECK(system.parallel_pairs.empty());

  const Hyperplane* ef = find_pair(system, kE, kF);
  REQUIRE(ef);
  CHECK(ef->normal == vec({1L, 1L}));
  CHECK(ef->offset == Rational(1));

  const Hyperplane* eg = find_pair(system, kE, kG);
  REQUIRE(eg);
  CHECK(eg->normal == vec({4L, -4L}));
  CHECK(eg->offset == Rational(1));

  const Hyperplane* eh = find_pair(system, kE, kH);
  REQUIRE(eh);
  CHECK(eh->normal == vec({1L, -4L}));
  CHECK(eh->offset == Rational(3));

  const Hyperplane* fg = find_pair(system, kF, kG);
  REQUIRE(fg);
  CHECK(fg->normal == vec({2L, -6L}));
  CHECK(fg->offset == Rational(-1));

  const Hyperplane* fh = find_pair(system, kF, kH);
  REQUIRE(fh);
  CHECK(fh->normal == vec({0L, 5L}));
  CHECK(fh->offset == Rational(-2));

  const Hyperplane* gh = find_pair(system, kG, kH);
  REQUIRE(gh);
  CHECK(gh->normal == vec({2L, 4L}));
  CHECK(gh->offset == Rational(-5));
}

TEST_CASE("orientation: below means the first element is cheaper") {
  SeparatingSystem system = build_separating_hyperplanes(example_weights());
  WeightVector w = example_weights();
  // A point on the cheap side of each hyperplane must favor elem_a.
  for (const Hyperplane& h : system.hyperplanes) {
    VectorXr point = vec({0L, 0L});
    // Walk along -normal to reach the below side.
    point -= h.normal;
    Rational scale = 1;
    while (side(h, point) >= 0) {
      scale *= 2;
      point = -scale * h.normal;
    }
    CHECK(w[h.elem_a].at(point) < w[h.elem_b].at(point));
  }
}

TEST_CASE("identical and parallel weight pairs are separated out") {
  WeightVector w = {{Rational(1), vec({2L, 3L})},
                    {Rational(1), vec({2L, 3L})},    // identical to 0
                    {Rational(5), vec({2L, 3L})},    // parallel to 0
                    {Rational(0), vec({1L, 0L})}};
  SeparatingSystem system = build_separating_hyperplanes(w);
  CHECK(system.identical_pairs == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(system.parallel_pairs ==
        std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});
  CHECK(system.hyperplanes.size() == 3);  // pairs with element 3
}

TEST_CASE("assumption report is clean for the running example") {
  SeparatingSystem system = build_separating_hyperplanes(example_weights());
  AssumptionReport report = check_assumptions(system.hyperplanes);
  CHECK(report.clean());
}

TEST_CASE("duplicate hyperplanes are detected after canonicalization") {
  WeightVector w = {{Rational(0), vec({1L, 0L})},
                    {Rational(0), vec({0L, 0L})},
                    {Rational(0), vec({-1L, 0L})}};
  SeparatingSystem system = build_separating_hyperplanes(w);
  REQUIRE(system.hyperplanes.size() == 3);  // all canonicalize to lambda_1 = 0
  AssumptionReport report = check_assumptions(system.hyperplanes);
  CHECK(report.duplicate_pairs ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
  // All three have zero coefficient on the last coordinate.
  CHECK(report.vertical == std::vector<int>{0, 1, 2});
}

TEST_CASE("a vertical hyperplane is reported") {
  WeightVector w = {{Rational(0), vec({1L, 0L})}, {Rational(0), vec({2L, 0L})}};
  SeparatingSystem system = build_separating_hyperplanes(w);
  REQUIRE(system.hyperplanes.size() == 1);
  CHECK(system.hyperplanes[0].normal == vec({1L, 0L}));
  CHECK(system.hyperplanes[0].offset == 0);
  CHECK(check_assumptions(system.hyperplanes).vertical == std::vector<int>{0});
}

TEST_CASE("perturbation resolves duplicates deterministically") {
  WeightVector w = {{Rational(0), vec({1L, 0L})},
                    {Rational(0), vec({0L, 0L})},
                    {Rational(0), vec({-1L, 0L})}};
  WeightVector p1 = perturb_weights(w, 1, rat("2^-20"));
  WeightVector p2 = perturb_weights(w, 1, rat("2^-20"));
  for (std::size_t e = 0; e < w.size(); ++e) {
    CHECK(p1[e].a == p2[e].a);
    CHECK(p1[e].a > w[e].a);
    CHECK(p1[e].a - w[e].a < rat("2^-20"));
    CHECK(p1[e].b == w[e].b);
  }
  SeparatingSystem system = build_separating_hyperplanes(p1);
  CHECK(check_assumptions(system.hyperplanes).duplicates_clean());
  CHECK(system.identical_pairs.empty());

  // Zero epsilon is the identity.
  WeightVector same = perturb_weights(w, 1, Rational(0));
  for (std::size_t e = 0; e < w.size(); ++e) CHECK(same[e].a == w[e].a);
}

TEST_CASE("perturbation keeps the region structure of a generic instance") {
  WeightVector w = example_weights();
  WeightVector p = perturb_weights(w, 3, rat("2^-20"));
  SeparatingSystem system = build_separating_hyperplanes(p);
  CHECK(check_assumptions(system.hyperplanes).clean());
}

TEST_CASE("restriction to the weight set substitutes the last coordinate") {
  // lambda_1 + lambda_2 = 1 coincides with the affine hull.
  Hyperplane hull;
  hull.normal = vec({1L, 1L});
  hull.offset = 1;
  // lambda_2 = -2/5 meets it at lambda_1 = 7/5.
  Hyperplane low;
  low.normal = vec({0L, 5L});
  low.offset = -2;
  // Parallel to the hull: never meets it.
  Hyperplane parallel;
  parallel.normal = vec({1L, 1L});
  parallel.offset = 3;

  RestrictionResult result = restrict_to_weight_set({hull, low, parallel});
  CHECK(result.dropped_coincident == std::vector<int>{0});
  CHECK(result.dropped_disjoint == std::vector<int>{2});
  REQUIRE(result.hyperplanes.size() == 1);
  CHECK(result.hyperplanes[0].normal == vec({5L}));
  CHECK(result.hyperplanes[0].offset == Rational(7));
}

TEST_CASE("restriction in three parameters") {
  Hyperplane h;  // lambda_1 = lambda_3
  h.normal = vec({1L, 0L, -1L});
  h.offset = 0;
  RestrictionResult result = restrict_to_weight_set({h});
  REQUIRE(result.hyperplanes.size() == 1);
  CHECK(result.hyperplanes[0].normal == vec({2L, 1L}));
  CHECK(result.hyperplanes[0].offset == Rational(1));
}

TEST_CASE("weight set boundaries bound the projected simplex") {
  std::vector<Hyperplane> b2 = weight_set_boundaries(2);
  REQUIRE(b2.size() == 2);
  CHECK(b2[0].normal == vec({1L}));
  CHECK(b2[0].offset == 0);
  CHECK(b2[0].boundary_index == 0);
  CHECK(b2[1].normal == vec({1L}));
  CHECK(b2[1].offset == Rational(1));
  CHECK(b2[1].boundary_index == 1);

  std::vector<Hyperplane> b3 = weight_set_boundaries(3);
  REQUIRE(b3.size() == 3);
  CHECK(b3[2].normal == vec({1L, 1L}));
  CHECK(b3[2].offset == Rational(1));
}

TEST_CASE("canonicalization scales to coprime integers with a sign rule") {
  VectorXr normal = vec({"-2/3", "4/3"});
  Rational offset = rat("-2");
  int orientation = canonicalize(normal, offset);
  CHECK(orientation == -1);
  CHECK(normal == vec({1L, -2L}));
  CHECK(offset == Rational(3));
}
