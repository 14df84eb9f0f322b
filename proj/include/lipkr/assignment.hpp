#pragma once

#include <optional>
#include <vector>

#include "lipkr/rational.hpp"

namespace lipkr {

// Minimum of sum cost[i][perm[i]] over all permutations.
struct AssignmentResult {
  Rational value;
  // optimal[i] is the column assigned to row i.
  std::vector<int> optimal;
  bool unique = false;
  std::optional<std::vector<int>> tie_witness;
};

// Transportation with unit sink demands: each sink receives exactly one unit
// from some source, source i ships supplies[i] units in total.
struct TransportResult {
  Rational value;
  // plan[j] is the source row serving sink j.
  std::vector<int> plan;
  bool unique = false;
  std::optional<std::vector<int>> tie_witness;
};

// Exact Hungarian method with potentials. Uniqueness is certified by
// forbidding each chosen cell in turn and re-solving: unique iff every
// re-solve is strictly costlier (or infeasible).
AssignmentResult min_cost_assignment(const std::vector<std::vector<Rational>>& cost);

// Reduces to min_cost_assignment by replicating row i supplies[i] times.
// `unique` is about the sink-to-source plan, so the re-solve step forbids all
// replicas of a chosen source at once; replica symmetry never counts as a tie.
TransportResult min_cost_transportation(
    const std::vector<std::vector<Rational>>& cost,
    const std::vector<int>& supplies);

}  // namespace lipkr
