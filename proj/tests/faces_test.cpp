#include <algorithm>
#include <map>
#include <vector>

#include "doctest.h"
#include "lipkr/faces.hpp"
#include "lipkr/metric.hpp"
#include "test_util.hpp"

using namespace lipkr;
using testutil::q;
using testutil::thrown_code;

namespace {

// Independent reading of the constellation at u: edges whose head is reached
// through its tail on the unique tree path from u.
DirectedEdgeSet constellation_at(const DirectedEdgeSet& tree, int n_points, Point u) {
  std::vector<std::vector<Point>> adj(static_cast<size_t>(n_points + 1));
  for (Edge e : tree) {
    adj[static_cast<size_t>(e.from)].push_back(e.to);
    adj[static_cast<size_t>(e.to)].push_back(e.from);
  }
  std::vector<Point> parent(static_cast<size_t>(n_points + 1), 0);
  std::vector<Point> stack = {u};
  parent[static_cast<size_t>(u)] = u;
  while (!stack.empty()) {
    Point v = stack.back();
    stack.pop_back();
    for (Point w : adj[static_cast<size_t>(v)]) {
      if (parent[static_cast<size_t>(w)] == 0) {
        parent[static_cast<size_t>(w)] = v;
        stack.push_back(w);
      }
    }
  }
  DirectedEdgeSet h;
  for (Edge e : tree) {
    if (parent[static_cast<size_t>(e.to)] == e.from) h.insert(e);
  }
  return h;
}

Rational phi_of(const MetricSpace& ms, const DirectedEdgeSet& h) {
  Rational total = 0;
  for (Edge e : h) total += ms.dist(e.from, e.to);
  return total;
}

}  // namespace

TEST_CASE("binomials and the face count formula") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(face_count_formula(3, 1) == 12);
  CHECK(face_count_formula(3, 2) == 30);
  CHECK(face_count_formula(3, 3) == 20);
  CHECK(face_count_formula(4, 4) == 70);
}

TEST_CASE("face dimension counts components") {
  MetricSpace ms = rearrangement_metric(3);
  CHECK(face_dimension(ms, DirectedEdgeSet{{1, 3}, {2, 4}}) == 1);
  CHECK(face_dimension(ms, DirectedEdgeSet{}) == -1);
  CHECK(face_dimension(ms, DirectedEdgeSet{{1, 3}, {1, 4}, {2, 4}}) == 2);
  CHECK(face_dimension(ms, DirectedEdgeSet{{1, 3}}) == 0);
  CHECK(thrown_code([&] {
          face_dimension(ms, DirectedEdgeSet{{1, 4}, {2, 3}});
        }) == "NotAdmissible");
}

TEST_CASE("min constellation picks the sorted pairing") {
  MetricSpace ms = rearrangement_metric(3);
  DirectedEdgeSet g = min_constellation(ms, {1, 2}, {1, 1});
  CHECK(g == DirectedEdgeSet{{1, 3}, {2, 4}});
  CHECK(phi_of(ms, g) == q(17, 6));
}

TEST_CASE("min constellation with a single white is the star") {
  MetricSpace ms = rearrangement_metric(3);
  CHECK(min_constellation(ms, {1}, {3}) ==
        DirectedEdgeSet{{1, 2}, {1, 3}, {1, 4}});
}

TEST_CASE("min constellation surfaces transport ties") {
  CHECK(thrown_code([] {
          min_constellation(testutil::uniform_metric(4), {1, 2}, {1, 1});
        }) == "NotGeneric");
}

TEST_CASE("min constellation validates arity") {
  MetricSpace ms = rearrangement_metric(3);
  CHECK(thrown_code([&] { min_constellation(ms, {1, 2}, {1}); }) ==
        "ArityMismatch");
  CHECK(thrown_code([&] { min_constellation(ms, {1, 2}, {2, 1}); }) ==
        "ArityMismatch");
  CHECK(thrown_code([&] { min_constellation(ms, {1, 1}, {1, 1}); }) ==
        "ArityMismatch");
  CHECK(thrown_code([&] { min_constellation(ms, {}, {}); }) ==
        "ArityMismatch");
}

TEST_CASE("facet trees on the rearrangement space") {
  MetricSpace ms = rearrangement_metric(3);
  Facet a = build_facet_tree(ms, OutdegreeSequence{{2, 1, 0, 0}});
  CHECK(a.tree == DirectedEdgeSet{{1, 3}, {1, 4}, {2, 4}});
  Facet b = build_facet_tree(ms, OutdegreeSequence{{3, 0, 0, 0}});
  CHECK(b.tree == DirectedEdgeSet{{1, 2}, {1, 3}, {1, 4}});
  Facet c = build_facet_tree(ms, OutdegreeSequence{{0, 0, 1, 2}});
  CHECK(c.tree == DirectedEdgeSet{{3, 1}, {4, 1}, {4, 2}});
}

TEST_CASE("facet witness is tight on tree edges and normalized at the last point") {
  MetricSpace ms = rearrangement_metric(3);
  Facet f = build_facet_tree(ms, OutdegreeSequence{{2, 1, 0, 0}});
  CHECK(f.witness.value(4) == 0);
  for (Edge e : f.tree) {
    CHECK(f.witness.value(e.from) - f.witness.value(e.to) ==
          ms.dist(e.from, e.to));
  }
  CHECK(f.outdeg.p == std::vector<int>{2, 1, 0, 0});
}

TEST_CASE("build_facet_tree validates the outdegree sequence") {
  MetricSpace ms = rearrangement_metric(3);
  CHECK(thrown_code([&] {
          build_facet_tree(ms, OutdegreeSequence{{1, 1, 0, 0}});
        }) == "ArityMismatch");
  CHECK(thrown_code([&] {
          build_facet_tree(ms, OutdegreeSequence{{3, 0, 0}});
        }) == "ArityMismatch");
  CHECK(thrown_code([&] {
          build_facet_tree(ms, OutdegreeSequence{{4, -1, 0, 0}});
        }) == "ArityMismatch");
}

TEST_CASE("facet enumeration counts the central binomial") {
  CHECK(enumerate_facets(random_generic_metric(2, 3)).size() == 6);
  auto facets = enumerate_facets(rearrangement_metric(3));
  CHECK(facets.size() == 20);
  bool found = false;
  for (const Facet& f : facets) {
    if (f.tree == DirectedEdgeSet{{1, 3}, {1, 4}, {2, 4}}) found = true;
    for (Edge e : f.tree) {
      CHECK(f.outdeg.p[static_cast<size_t>(e.from) - 1] > 0);
    }
  }
  CHECK(found);
}

TEST_CASE("facet enumeration is independent of the job count") {
  MetricSpace ms = random_generic_metric(4, 9);
  auto serial = enumerate_facets(ms, 1);
  auto parallel = enumerate_facets(ms, 4);
  REQUIRE(serial.size() == parallel.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].tree == parallel[i].tree);
    CHECK(serial[i].outdeg.p == parallel[i].outdeg.p);
    CHECK(serial[i].witness.values() == parallel[i].witness.values());
  }
}

TEST_CASE("facet enumeration refuses non-generic spaces") {
  CHECK(thrown_code([] { enumerate_facets(testutil::uniform_metric(4)); }) ==
        "NotGeneric");
}

TEST_CASE("every facet tree uses each point in one role only") {
  MetricSpace ms = random_generic_metric(4, 21);
  for (const Facet& f : enumerate_facets(ms)) {
    auto outs = out_degrees(f.tree, 5);
    auto ins = in_degrees(f.tree, 5);
    for (int i = 0; i < 5; ++i) {
      CHECK((outs[static_cast<size_t>(i)] == 0 || ins[static_cast<size_t>(i)] == 0));
    }
    CHECK(f.tree.size() == 4);
  }
}

TEST_CASE("f-vector of the hexagon") {
  auto fv = f_vector(random_generic_metric(2, 5));
  REQUIRE(fv.size() == 3);
  CHECK(fv[0] == 1);
  CHECK(fv[1] == 6);
  CHECK(fv[2] == 6);
}

TEST_CASE("f-vector at three and four points matches the multinomials") {
  auto fv3 = f_vector(rearrangement_metric(3));
  CHECK(fv3 == std::vector<Integer>{Integer(1), Integer(12), Integer(30), Integer(20)});
  CHECK(fv3[1] - fv3[2] + fv3[3] == 2);
  auto fv4 = f_vector(random_generic_metric(4, 1));
  CHECK(fv4 == std::vector<Integer>{Integer(1), Integer(20), Integer(90),
                                    Integer(140), Integer(70)});
  CHECK(fv4[1] - fv4[2] + fv4[3] - fv4[4] == 0);
}

TEST_CASE("faces grouped by outdegrees") {
  MetricSpace ms = rearrangement_metric(3);
  auto faces = faces_with_outdegrees(ms, OutdegreeSequence{{1, 1, 0, 0}});
  std::vector<DirectedEdgeSet> expected = {
      DirectedEdgeSet{{1, 3}, {2, 3}},
      DirectedEdgeSet{{1, 3}, {2, 4}},
      DirectedEdgeSet{{1, 4}, {2, 4}},
  };
  std::sort(expected.begin(), expected.end());
  std::sort(faces.begin(), faces.end());
  CHECK(faces == expected);

  auto empty = faces_with_outdegrees(ms, OutdegreeSequence{{0, 0, 0, 0}});
  REQUIRE(empty.size() == 1);
  CHECK(empty.front().empty());

  auto star = faces_with_outdegrees(ms, OutdegreeSequence{{3, 0, 0, 0}});
  REQUIRE(star.size() == 1);
  CHECK(star.front() == DirectedEdgeSet{{1, 2}, {1, 3}, {1, 4}});
}

TEST_CASE("face listing is sorted by dimension and complete per facet") {
  MetricSpace ms = rearrangement_metric(3);
  auto faces = enumerate_faces(ms);
  CHECK(faces.size() == 62);
  int last_dim = -1;
  for (const Face& f : faces) {
    CHECK(f.dim >= last_dim);
    last_dim = f.dim;
    CHECK(f.dim == face_dimension(ms, f.edges));
  }
}

TEST_CASE("constellation of a facet at each white point") {
  MetricSpace ms = rearrangement_metric(3);
  Facet t = build_facet_tree(ms, OutdegreeSequence{{2, 1, 0, 0}});
  auto [h1, phi1] = phi_functional(ms, t, 1);
  CHECK(h1 == DirectedEdgeSet{{1, 3}, {1, 4}});
  CHECK(phi1 == q(31, 12));
  auto [h2, phi2] = phi_functional(ms, t, 2);
  CHECK(h2 == DirectedEdgeSet{{1, 3}, {2, 4}});
  CHECK(phi2 == q(17, 6));
  CHECK(thrown_code([&] { phi_functional(ms, t, 3); }) == "NotWhite");
}

TEST_CASE("constellation at the center of a star is the whole star") {
  MetricSpace ms = rearrangement_metric(3);
  Facet t = build_facet_tree(ms, OutdegreeSequence{{3, 0, 0, 0}});
  auto [h, phi] = phi_functional(ms, t, 1);
  CHECK(h == t.tree);
  CHECK(phi == ms.dist(1, 2) + ms.dist(1, 3) + ms.dist(1, 4));
}

TEST_CASE("each facet minimizes the constellation functional at every white") {
  MetricSpace ms = rearrangement_metric(3);
  auto trees = testutil::all_labeled_trees(4);
  for (const Facet& facet : enumerate_facets(ms)) {
    for (Point u = 1; u <= 4; ++u) {
      if (facet.outdeg.p[static_cast<size_t>(u) - 1] == 0) continue;
      Rational built = phi_functional(ms, facet, u).second;
      CHECK(built == phi_of(ms, constellation_at(facet.tree, 4, u)));
      for (const auto& tree : trees) {
        for (const auto& oriented : testutil::proper_orientations(tree, 4)) {
          DirectedEdgeSet g;
          for (auto [a, b] : oriented) g.insert({a, b});
          if (out_degrees(g, 4) != facet.outdeg.p) continue;
          CHECK(built <= phi_of(ms, constellation_at(g, 4, u)));
        }
      }
    }
  }
}

TEST_CASE("facet constellations equal the direct transport optimum") {
  for (int n : {4, 5}) {
    MetricSpace ms = rearrangement_metric(n);
    for (const Facet& facet : enumerate_facets(ms)) {
      std::vector<Point> whites;
      for (Point x = 1; x <= n + 1; ++x) {
        if (facet.outdeg.p[static_cast<size_t>(x) - 1] > 0) whites.push_back(x);
      }
      for (Point u : whites) {
        std::vector<int> supplies;
        for (Point x : whites) {
          int base = facet.outdeg.p[static_cast<size_t>(x) - 1];
          supplies.push_back(x == u ? base : base - 1);
        }
        CAPTURE(n);
        CAPTURE(canonical_key(facet.tree));
        CAPTURE(u);
        CHECK(phi_functional(ms, facet, u).first ==
              min_constellation(ms, whites, supplies));
      }
    }
  }
}
