#include "lipkr/triangulate.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "lipkr/error.hpp"

namespace lipkr {

namespace {

// Fraction-free Gaussian elimination; exact and division-free in effect
// because every division is known to be exact.
Integer bareiss_determinant(std::vector<std::vector<Integer>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return Integer(1);
  Integer prev(1);
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n && pivot < 0; ++r) {
      if (a[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0) pivot = r;
    }
    if (pivot < 0) return Integer(0);
    if (pivot != k) {
      std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(k)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            (a[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                 a[static_cast<size_t>(k)][static_cast<size_t>(k)] -
             a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                 a[static_cast<size_t>(k)][static_cast<size_t>(j)]) /
            prev;
      }
    }
    prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }
  return sign * a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
}

std::string pair_text(Edge e) {
  return "(" + std::to_string(e.from) + "," + std::to_string(e.to) + ")";
}

}  // namespace

std::vector<Integer> edge_vector(int n_points, Edge e) {
  std::vector<Integer> v(static_cast<size_t>(n_points - 1), Integer(0));
  if (e.from < n_points) v[static_cast<size_t>(e.from - 1)] += 1;
  if (e.to < n_points) v[static_cast<size_t>(e.to - 1)] -= 1;
  return v;
}

Triangulation triangulate_root_polytope(const MetricSpace& ms, int jobs) {
  return triangulate_root_polytope(ms, enumerate_facets(ms, jobs));
}

Triangulation triangulate_root_polytope(const MetricSpace& ms,
                                        const std::vector<Facet>& facets) {
  const int n_points = ms.points();
  Triangulation t;
  t.n_points = n_points;
  for (const Facet& facet : facets) {
    LatticeSimplex s;
    s.vectors.reserve(facet.tree.edges().size());
    for (Edge e : facet.tree) s.vectors.push_back(edge_vector(n_points, e));
    s.det = bareiss_determinant(s.vectors);
    s.tree = facet.tree;
    t.simplices.push_back(std::move(s));
  }
  return t;
}

UnimodularityReport check_unimodular(const Triangulation& t) {
  UnimodularityReport report;
  for (const LatticeSimplex& s : t.simplices) {
    if (s.det != 1 && s.det != -1) {
      report.violations.push_back("simplex " + canonical_key(s.tree) +
                                  " has determinant " + s.det.str());
    }
  }
  const int n = t.n_points - 1;
  const Integer expected = binomial(2 * n, n);
  if (Integer(t.simplices.size()) != expected) {
    report.violations.push_back(
        "triangulation has " + std::to_string(t.simplices.size()) +
        " simplices, expected " + expected.str());
  }
  report.ok = report.violations.empty();
  return report;
}

RegularityCertificate regularity_certificate(const MetricSpace& ms,
                                             const Facet& facet) {
  const int n_points = ms.points();
  const WitnessFunction& f = facet.witness;
  std::optional<Rational> margin;
  Edge tightest{0, 0};
  for (Point x = 1; x <= n_points; ++x) {
    for (Point y = 1; y <= n_points; ++y) {
      if (x == y) continue;
      const Rational pairing = (f.value(x) - f.value(y)) / ms.dist(x, y);
      if (facet.tree.contains({x, y})) {
        if (pairing != 1) {
          throw Error(ErrorCode::RegularityViolation,
                      "witness pairs to " + to_string(pairing) +
                          " on tree edge " + pair_text({x, y}));
        }
        continue;
      }
      const Rational slack = 1 - pairing;
      if (slack <= 0) {
        throw Error(ErrorCode::RegularityViolation,
                    "witness pairs to " + to_string(pairing) +
                        " on the non-edge pair " + pair_text({x, y}));
      }
      if (!margin || slack < *margin) {
        margin = slack;
        tightest = {x, y};
      }
    }
  }
  return RegularityCertificate{*margin, tightest};
}

std::vector<DirectedEdgeSet> product_triangulation(
    const MetricSpace& ms, const std::vector<Point>& plus) {
  const int n_points = ms.points();
  const int n = n_points - 1;
  std::vector<char> in_plus(static_cast<size_t>(n_points + 1), 0);
  for (Point v : plus) {
    ms.check_point(v);
    if (in_plus[static_cast<size_t>(v)]) {
      throw Error(ErrorCode::InvalidArgument,
                  "point " + std::to_string(v) + " repeats in the bipartition");
    }
    in_plus[static_cast<size_t>(v)] = 1;
  }
  const int k = static_cast<int>(plus.size());
  if (k == 0 || k == n_points) {
    throw Error(ErrorCode::EmptyPart,
                "bipartition needs a non-empty part on each side");
  }
  require_generic(ms);
  std::vector<Point> sorted_plus(plus);
  std::sort(sorted_plus.begin(), sorted_plus.end());
  // Positive compositions of n over the plus points, in lexicographic order.
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  auto recurse = [&](auto&& self, int remaining, int slots) -> void {
    if (slots == 1) {
      cur.push_back(remaining);
      parts.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int first = 1; first + (slots - 1) <= remaining; ++first) {
      cur.push_back(first);
      self(self, remaining - first, slots - 1);
      cur.pop_back();
    }
  };
  recurse(recurse, n, k);
  std::vector<DirectedEdgeSet> cells;
  std::set<DirectedEdgeSet> seen;
  for (const std::vector<int>& part : parts) {
    OutdegreeSequence p;
    p.p.assign(static_cast<size_t>(n_points), 0);
    for (int i = 0; i < k; ++i) {
      p.p[static_cast<size_t>(sorted_plus[static_cast<size_t>(i)] - 1)] =
          part[static_cast<size_t>(i)];
    }
    Facet facet = build_facet_tree(ms, p);
    for (Edge e : facet.tree) {
      if (!in_plus[static_cast<size_t>(e.from)] ||
          in_plus[static_cast<size_t>(e.to)]) {
        throw Error(ErrorCode::InternalContradiction,
                    "cell edge " + pair_text(e) + " does not cross the "
                    "bipartition");
      }
    }
    if (!seen.insert(facet.tree).second) {
      throw Error(ErrorCode::FormulaMismatch,
                  "two compositions produced the same cell " +
                      canonical_key(facet.tree));
    }
    cells.push_back(std::move(facet.tree));
  }
  const Integer expected = binomial(n - 1, k - 1);
  if (Integer(cells.size()) != expected) {
    throw Error(ErrorCode::FormulaMismatch,
                "found " + std::to_string(cells.size()) + " cells, expected " +
                    expected.str());
  }
  return cells;
}

}  // namespace lipkr
