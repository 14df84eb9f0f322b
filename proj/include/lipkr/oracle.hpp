#pragma once

#include <vector>

#include "lipkr/digraph.hpp"
#include "lipkr/metric.hpp"
#include "lipkr/norms.hpp"

namespace lipkr {

// The cyclic-inequality condition comes in two readings that differ on
// whether a tail may coincide with a head of another pair; both are reported.
struct AdmissibleReadings {
  bool tails_heads_distinct = false;  // tails distinct, heads distinct
  bool all_distinct = false;          // additionally no tail equals a head
};

// Exhaustive check of the cyclic inequality over every qualifying ordered
// arrangement of edge subsets. Shares no logic with the constraint solver.
AdmissibleReadings brute_admissible_detail(const MetricSpace& ms,
                                           const DirectedEdgeSet& g);

// The stricter reading (tails distinct, heads distinct, overlap allowed).
bool brute_admissible(const MetricSpace& ms, const DirectedEdgeSet& g);

// All faces found by filtering every properly oriented forest through
// brute_admissible; index d holds the faces of dimension d.
struct BruteFaces {
  std::vector<std::vector<DirectedEdgeSet>> by_dim;
};

BruteFaces brute_faces(const MetricSpace& ms);

// Exact transport minimum by enumerating all unit-mass pairings.
Rational brute_transport(const MetricSpace& ms, const SignedMeasure& mu);

}  // namespace lipkr
