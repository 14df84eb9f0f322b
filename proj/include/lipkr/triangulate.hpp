#pragma once

#include <string>
#include <vector>

#include "lipkr/faces.hpp"
#include "lipkr/metric.hpp"

namespace lipkr {

// The cone over a facet tree's edge vectors delta_x - delta_y, written in the
// lattice basis delta_i - delta_(n+1).
struct LatticeSimplex {
  DirectedEdgeSet tree;
  std::vector<std::vector<Integer>> vectors;
  Integer det;
};

struct Triangulation {
  int n_points = 0;
  std::vector<LatticeSimplex> simplices;
};

// delta_x - delta_y in the basis above; length points-1.
std::vector<Integer> edge_vector(int n_points, Edge e);

// One simplex per facet of the dual ball, in facet order.
Triangulation triangulate_root_polytope(const MetricSpace& ms, int jobs = 1);
Triangulation triangulate_root_polytope(const MetricSpace& ms,
                                        const std::vector<Facet>& facets);

struct UnimodularityReport {
  bool ok = false;
  std::vector<std::string> violations;
};

// Every determinant must be +1 or -1 and the simplex count must match the
// central binomial coefficient.
UnimodularityReport check_unimodular(const Triangulation& t);

struct RegularityCertificate {
  Rational margin;  // smallest slack 1 - <e_{x,y}, f> over non-edges
  Edge tightest;    // first non-edge pair attaining it
};

// Checks that the facet witness pairs to exactly 1 on tree edges and to
// strictly less on every other ordered pair.
RegularityCertificate regularity_certificate(const MetricSpace& ms,
                                             const Facet& facet);

// Maximal cells of the induced triangulation of the product of simplices cut
// out by the bipartition (plus, complement): the facet trees whose outdegree
// sequence is positive exactly on plus.
std::vector<DirectedEdgeSet> product_triangulation(
    const MetricSpace& ms, const std::vector<Point>& plus);

}  // namespace lipkr
