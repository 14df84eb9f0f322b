#pragma once

#include <utility>
#include <vector>

#include "lipkr/admissible.hpp"
#include "lipkr/digraph.hpp"
#include "lipkr/metric.hpp"

namespace lipkr {

struct OutdegreeSequence {
  std::vector<int> p;  // one entry per point

  int m() const {
    int s = 0;
    for (int v : p) s += v;
    return s;
  }
};

struct Face {
  DirectedEdgeSet edges;
  int dim = -1;
};

// An admissible spanning tree together with its outdegree sequence and the
// tight 1-Lipschitz function it supports (normalized to 0 at the last point).
struct Facet {
  DirectedEdgeSet tree;
  OutdegreeSequence outdeg;
  WitnessFunction witness;
};

Integer binomial(int a, int b);

// (n+m)! / (m! m! (n-m)!) - the expected number of faces with m edges.
Integer face_count_formula(int n, int m);

// n minus the number of weakly connected components, isolated points included;
// the empty edge set gets dimension -1.
int face_dimension(const MetricSpace& ms, const DirectedEdgeSet& g);

// The unique cheapest directed graph in which white point i sends exactly
// p[i] edges and every non-white point receives exactly one edge.
DirectedEdgeSet min_constellation(const MetricSpace& ms,
                                  const std::vector<Point>& whites,
                                  const std::vector<int>& p);

// The unique admissible spanning tree whose outdegrees equal p; built as the
// union over white points u of the constellation with supplies
// (p[u] at u, p[x]-1 at the other whites).
Facet build_facet_tree(const MetricSpace& ms, const OutdegreeSequence& p);

// One facet per composition of n into points() non-negative parts, sorted by
// outdegree sequence. Certifies genericity first.
std::vector<Facet> enumerate_facets(const MetricSpace& ms, int jobs = 1);

// Every distinct nonempty subset of a facet's edge set, sorted by dimension
// then edge set.
std::vector<Face> enumerate_faces(const MetricSpace& ms, int jobs = 1);

// Entry m counts the faces with m edges (dimension m-1); entry 0 is 1 by
// convention. Checked against face_count_formula before returning.
std::vector<Integer> f_vector(const MetricSpace& ms, int jobs = 1);

// All faces whose outdegree sequence is exactly p; checked against
// binomial(n, m).
std::vector<DirectedEdgeSet> faces_with_outdegrees(const MetricSpace& ms,
                                                   const OutdegreeSequence& p);

// The constellation H(T,u) of tree edges (x,y) whose path from u reaches x
// before y, together with the sum of their lengths.
std::pair<DirectedEdgeSet, Rational> phi_functional(const MetricSpace& ms,
                                                    const Facet& t, Point u);

}  // namespace lipkr
