#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "lipkr/assignment.hpp"
#include "lipkr/metric.hpp"
#include "test_util.hpp"

using namespace lipkr;
using testutil::q;
using testutil::thrown_code;

namespace {

// Independent check: walk every permutation.
struct BruteOptimum {
  Rational value;
  int optima = 0;
};

BruteOptimum brute_assignment(const std::vector<std::vector<Rational>>& cost) {
  const int k = static_cast<int>(cost.size());
  std::vector<int> perm(static_cast<size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  BruteOptimum best;
  bool first = true;
  do {
    Rational total = 0;
    for (int i = 0; i < k; ++i) {
      total += cost[static_cast<size_t>(i)][static_cast<size_t>(perm[static_cast<size_t>(i)])];
    }
    if (first || total < best.value) {
      best.value = total;
      best.optima = 1;
      first = false;
    } else if (total == best.value) {
      best.optima++;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST_CASE("assignment solves a 2x2 with a clear diagonal") {
  auto r = min_cost_assignment({{q(1), q(2)}, {q(2), q(1)}});
  CHECK(r.value == 2);
  CHECK(r.optimal == std::vector<int>{0, 1});
  CHECK(r.unique);
  CHECK_FALSE(r.tie_witness.has_value());
}

TEST_CASE("assignment reports the tie on a constant matrix") {
  auto r = min_cost_assignment({{q(1), q(1)}, {q(1), q(1)}});
  CHECK(r.value == 2);
  CHECK_FALSE(r.unique);
  REQUIRE(r.tie_witness.has_value());
  CHECK(*r.tie_witness != r.optimal);
  CHECK(std::is_permutation(r.tie_witness->begin(), r.tie_witness->end(),
                            r.optimal.begin()));
}

TEST_CASE("assignment on the rearrangement cross block") {
  MetricSpace ms = rearrangement_metric(3);
  auto r = min_cost_assignment({{ms.dist(1, 3), ms.dist(1, 4)},
                                {ms.dist(2, 3), ms.dist(2, 4)}});
  CHECK(r.value == q(17, 6));
  CHECK(r.optimal == std::vector<int>{0, 1});
  CHECK(r.unique);
  CHECK(ms.dist(1, 4) + ms.dist(2, 3) == q(35, 12));
}

TEST_CASE("assignment of size one") {
  auto r = min_cost_assignment({{q(5, 3)}});
  CHECK(r.value == q(5, 3));
  CHECK(r.unique);
}

TEST_CASE("assignment rejects an empty matrix") {
  CHECK(thrown_code([] { min_cost_assignment({}); }) == "InvalidArgument");
}

TEST_CASE("assignment agrees with permutation enumeration on random matrices") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 5);
    std::vector<std::vector<Rational>> cost(static_cast<size_t>(k),
                                            std::vector<Rational>(static_cast<size_t>(k)));
    for (auto& row : cost) {
      for (auto& c : row) {
        c = Rational(static_cast<long long>(rng() % 12),
                     1 + static_cast<long long>(rng() % 7));
      }
    }
    auto fast = min_cost_assignment(cost);
    auto brute = brute_assignment(cost);
    CAPTURE(trial);
    CHECK(fast.value == brute.value);
    CHECK(fast.unique == (brute.optima == 1));
    Rational chosen = 0;
    for (int i = 0; i < k; ++i) {
      chosen += cost[static_cast<size_t>(i)][static_cast<size_t>(fast.optimal[static_cast<size_t>(i)])];
    }
    CHECK(chosen == brute.value);
    if (fast.tie_witness) {
      Rational tied = 0;
      for (int i = 0; i < k; ++i) {
        tied += cost[static_cast<size_t>(i)]
                    [static_cast<size_t>((*fast.tie_witness)[static_cast<size_t>(i)])];
      }
      CHECK(tied == brute.value);
      CHECK(*fast.tie_witness != fast.optimal);
    }
  }
}

TEST_CASE("transportation with one source is forced") {
  MetricSpace ms = rearrangement_metric(3);
  auto r = min_cost_transportation({{ms.dist(1, 3), ms.dist(1, 4)}}, {2});
  CHECK(r.value == q(31, 12));
  CHECK(r.plan == std::vector<int>{0, 0});
  CHECK(r.unique);
}

TEST_CASE("transportation with unit supplies matches the assignment") {
  MetricSpace ms = rearrangement_metric(3);
  auto r = min_cost_transportation({{ms.dist(1, 3), ms.dist(1, 4)},
                                    {ms.dist(2, 3), ms.dist(2, 4)}},
                                   {1, 1});
  CHECK(r.value == q(17, 6));
  CHECK(r.plan == std::vector<int>{0, 1});
  CHECK(r.unique);
}

TEST_CASE("transportation reports ties on a constant matrix") {
  auto r = min_cost_transportation({{q(1), q(1)}, {q(1), q(1)}}, {1, 1});
  CHECK(r.value == 2);
  CHECK_FALSE(r.unique);
  REQUIRE(r.tie_witness.has_value());
  CHECK(*r.tie_witness != r.plan);
}

TEST_CASE("replica symmetry is not a tie") {
  auto r = min_cost_transportation({{q(1), q(1)}, {q(5), q(5)}}, {2, 0});
  CHECK(r.value == 2);
  CHECK(r.plan == std::vector<int>{0, 0});
  CHECK(r.unique);
}

TEST_CASE("transportation validates supplies") {
  CHECK(thrown_code([] {
          min_cost_transportation({{q(1), q(1)}}, {1});
        }) == "SupplyMismatch");
  CHECK(thrown_code([] {
          min_cost_transportation({{q(1), q(1)}}, {-1, 3});
        }) == "SupplyMismatch");
  CHECK(thrown_code([] {
          min_cost_transportation({{q(1), q(1)}}, {1, 1, 1});
        }) == "SupplyMismatch");
}

TEST_CASE("transportation agrees with replicated brute assignments") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 3);
    const int m = k + static_cast<int>(rng() % 3);
    std::vector<std::vector<Rational>> cost(static_cast<size_t>(k),
                                            std::vector<Rational>(static_cast<size_t>(m)));
    for (auto& row : cost) {
      for (auto& c : row) {
        c = Rational(static_cast<long long>(rng() % 9),
                     1 + static_cast<long long>(rng() % 5));
      }
    }
    std::vector<int> supplies(static_cast<size_t>(k), 0);
    for (int unit = 0; unit < m; ++unit) {
      supplies[rng() % static_cast<size_t>(k)]++;
    }
    std::vector<std::vector<Rational>> replicated;
    for (int i = 0; i < k; ++i) {
      for (int c = 0; c < supplies[static_cast<size_t>(i)]; ++c) {
        replicated.push_back(cost[static_cast<size_t>(i)]);
      }
    }
    auto fast = min_cost_transportation(cost, supplies);
    auto brute = brute_assignment(replicated);
    CAPTURE(trial);
    CHECK(fast.value == brute.value);
    std::vector<int> shipped(static_cast<size_t>(k), 0);
    Rational total = 0;
    for (int j = 0; j < m; ++j) {
      shipped[static_cast<size_t>(fast.plan[static_cast<size_t>(j)])]++;
      total += cost[static_cast<size_t>(fast.plan[static_cast<size_t>(j)])][static_cast<size_t>(j)];
    }
    CHECK(shipped == supplies);
    CHECK(total == fast.value);
  }
}
