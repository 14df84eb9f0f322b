#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lipkr/digraph.hpp"
#include "lipkr/metric.hpp"
#include "lipkr/rational.hpp"

namespace lipkr {

// A 1-Lipschitz function on the points, normalized to 0 at a base point,
// achieving f(x) - f(y) = rho(x,y) on every edge of the graph it witnesses.
class WitnessFunction {
 public:
  WitnessFunction(std::vector<Rational> values, Point base);

  const Rational& value(Point x) const;
  Point base() const { return base_; }
  int points() const { return static_cast<int>(values_.size()); }
  const std::vector<Rational>& values() const { return values_; }

 private:
  std::vector<Rational> values_;
  Point base_ = 0;
};

// True iff some 1-Lipschitz function is tight on every edge of g; decided by
// feasibility of the difference constraints f(y) - f(x) <= rho(x,y) for all
// ordered pairs, sharpened to f(y) - f(x) <= -rho(x,y) on edges (x,y).
bool is_admissible(const MetricSpace& ms, const DirectedEdgeSet& g);

WitnessFunction witness_function(const MetricSpace& ms,
                                 const DirectedEdgeSet& g, Point base);

// Path criterion for properly oriented trees: checks the cyclic inequality
// on every simple path that starts at an edge head and ends at an edge tail.
// Agrees with is_admissible on trees but needs no feasibility solve.
bool tree_admissible_fast(const MetricSpace& ms, const DirectedEdgeSet& t);

// Two equal-cost pairings between disjoint point tuples.
struct TieWitness {
  std::vector<Point> rows;
  std::vector<Point> cols;
  std::vector<int> first;   // rows[i] paired with cols[first[i]]
  std::vector<int> second;  // a different pairing of equal total cost
};

std::string describe(const TieWitness& tie);

struct GenericityReport {
  bool generic = false;
  std::optional<TieWitness> tie;
};

// Exhaustive certificate: every pair of disjoint equal-size point tuples has
// a unique minimum-cost pairing. Refuses beyond 10 points (the enumeration
// is the certificate; sampling would not be one).
GenericityReport is_generic(const MetricSpace& ms);

void require_generic(const MetricSpace& ms);

}  // namespace lipkr
