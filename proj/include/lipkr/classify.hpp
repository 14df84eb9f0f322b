#pragma once

#include <cstdint>
#include <vector>

#include "lipkr/faces.hpp"
#include "lipkr/metric.hpp"

namespace lipkr {

// The sorted list of facet trees; two metrics on the same labelled point set
// are combinatorially equivalent iff their structures are equal.
struct CombinatorialStructure {
  int n_points = 0;
  std::vector<DirectedEdgeSet> facet_trees;

  friend bool operator==(const CombinatorialStructure&,
                         const CombinatorialStructure&) = default;
};

CombinatorialStructure combinatorial_structure(const MetricSpace& ms,
                                               int jobs = 1);

bool equivalent(const MetricSpace& a, const MetricSpace& b, int jobs = 1);

// Two disjoint tuples of distinct points, indexing a cyclic inequality.
struct CycleConfig {
  std::vector<Point> x;
  std::vector<Point> y;
};

// sum rho(x_i, y_i) - sum rho(x_i, y_(i+1)) with y_(k+1) = y_1. Negative
// means the identity pairing strictly beats the shifted one; zero puts the
// metric on the wall where the structure can change.
Rational cycle_functional(const MetricSpace& ms, const CycleConfig& c);

std::uint64_t structure_hash(const CombinatorialStructure& s);

// Quotients the structure by point relabeling: the lexicographically least
// relabeled tree list. Exhaustive over permutations, so gated at 8 points.
// This coarser equivalence compares metrics across different labelings; the
// plain mode is the definitional one.
CombinatorialStructure canonical_relabel(const CombinatorialStructure& s);

struct ClassReport {
  int count = 0;
  std::vector<int> representative;  // first metric index in each class
  std::vector<int> class_of;        // class index per input metric
  std::vector<int> class_size;
  std::vector<std::uint64_t> hashes;
};

// Partitions the family by structure equality; classes are numbered by first
// occurrence, so the report is independent of the job count.
ClassReport count_classes(const std::vector<MetricSpace>& family, int jobs = 1,
                          bool unlabelled = false);

}  // namespace lipkr
