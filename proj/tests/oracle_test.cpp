#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "lipkr/admissible.hpp"
#include "lipkr/faces.hpp"
#include "lipkr/metric.hpp"
#include "lipkr/oracle.hpp"
#include "test_util.hpp"

using namespace lipkr;
using testutil::q;
using testutil::thrown_code;

TEST_CASE("single edges pass the cyclic oracle") {
  MetricSpace ms = rearrangement_metric(3);
  for (Point x = 1; x <= 4; ++x) {
    for (Point y = 1; y <= 4; ++y) {
      if (x != y) CHECK(brute_admissible(ms, DirectedEdgeSet{{x, y}}));
    }
  }
}

TEST_CASE("the cyclic oracle rejects the inversion and the chain") {
  MetricSpace ms = rearrangement_metric(3);
  CHECK_FALSE(brute_admissible(ms, DirectedEdgeSet{{1, 4}, {2, 3}}));
  CHECK_FALSE(brute_admissible(ms, DirectedEdgeSet{{1, 2}, {2, 3}}));
  CHECK_FALSE(brute_admissible(ms, DirectedEdgeSet{{2, 1}, {1, 3}}));
  CHECK(brute_admissible(ms, DirectedEdgeSet{{1, 3}, {2, 4}}));
}

TEST_CASE("the empty graph is vacuously admissible") {
  MetricSpace ms = rearrangement_metric(3);
  auto readings = brute_admissible_detail(ms, DirectedEdgeSet{});
  CHECK(readings.tails_heads_distinct);
  CHECK(readings.all_distinct);
}

TEST_CASE("the strict reading implies the relaxed one") {
  MetricSpace ms = random_generic_metric(4, 19);
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 200; ++trial) {
    DirectedEdgeSet g;
    const int edges = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < edges; ++i) {
      Point a = 1 + static_cast<Point>(rng() % 5);
      Point b = 1 + static_cast<Point>(rng() % 5);
      if (a != b) g.insert({a, b});
    }
    auto readings = brute_admissible_detail(ms, g);
    CAPTURE(canonical_key(g));
    if (readings.tails_heads_distinct) CHECK(readings.all_distinct);
    CHECK(readings.tails_heads_distinct == brute_admissible(ms, g));
    CHECK(readings.tails_heads_distinct == is_admissible(ms, g));
  }
}

TEST_CASE("the cyclic oracle is budgeted") {
  std::vector<std::vector<Rational>> big(8, std::vector<Rational>(8));
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      if (i != j) {
        big[static_cast<size_t>(i)][static_cast<size_t>(j)] = q(7) + q(1, 3 + i + j);
      }
    }
  }
  MetricSpace ms = MetricSpace::validate(big);
  CHECK(thrown_code([&] {
          brute_admissible(ms, DirectedEdgeSet{{1, 2}});
        }) == "BudgetExceeded");
}

TEST_CASE("exhaustive faces of the equilateral triangle") {
  BruteFaces faces = brute_faces(testutil::uniform_metric(3));
  REQUIRE(faces.by_dim.size() == 2);
  CHECK(faces.by_dim[0].size() == 6);
  CHECK(faces.by_dim[1].size() == 6);
}

TEST_CASE("exhaustive faces at four points match the fast module") {
  MetricSpace ms = rearrangement_metric(3);
  BruteFaces faces = brute_faces(ms);
  REQUIRE(faces.by_dim.size() == 3);
  CHECK(faces.by_dim[0].size() == 12);
  CHECK(faces.by_dim[1].size() == 30);
  CHECK(faces.by_dim[2].size() == 20);

  std::set<DirectedEdgeSet> top(faces.by_dim[2].begin(), faces.by_dim[2].end());
  std::set<DirectedEdgeSet> facets;
  for (const Facet& f : enumerate_facets(ms)) facets.insert(f.tree);
  CHECK(top == facets);

  auto fv = f_vector(ms);
  for (size_t d = 0; d < faces.by_dim.size(); ++d) {
    CHECK(Integer(faces.by_dim[d].size()) == fv[d + 1]);
  }
}

TEST_CASE("the face oracle is budgeted") {
  CHECK(thrown_code([] { brute_faces(random_generic_metric(5, 1)); }) ==
        "BudgetExceeded");
}

TEST_CASE("pairing oracle on dirac differences and the split measure") {
  MetricSpace ms = rearrangement_metric(3);
  SignedMeasure diff;
  diff.coeffs[2] = Rational(1);
  diff.coeffs[3] = Rational(-1);
  CHECK(brute_transport(ms, diff) == ms.dist(2, 3));

  SignedMeasure split;
  split.coeffs[1] = Rational(1);
  split.coeffs[2] = Rational(1);
  split.coeffs[3] = Rational(-1);
  split.coeffs[4] = Rational(-1);
  CHECK(brute_transport(ms, split) == q(17, 6));

  CHECK(brute_transport(ms, SignedMeasure{}) == 0);
}

TEST_CASE("pairing oracle handles fractional masses") {
  MetricSpace ms = rearrangement_metric(3);
  SignedMeasure mu;
  mu.coeffs[1] = q(1, 2);
  mu.coeffs[2] = q(1, 3);
  mu.coeffs[4] = q(-5, 6);
  CHECK(brute_transport(ms, mu) == kr_norm(ms, mu));
}

TEST_CASE("pairing oracle enforces balance and budget") {
  MetricSpace ms = rearrangement_metric(3);
  SignedMeasure lopsided;
  lopsided.coeffs[1] = Rational(2);
  CHECK(thrown_code([&] { brute_transport(ms, lopsided); }) == "NotBalanced");

  SignedMeasure heavy;
  heavy.coeffs[1] = Rational(9);
  heavy.coeffs[2] = Rational(-9);
  CHECK(thrown_code([&] { brute_transport(ms, heavy); }) == "BudgetExceeded");
}
