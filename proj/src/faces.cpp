#include "lipkr/faces.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "lipkr/assignment.hpp"
#include "lipkr/error.hpp"
#include "lipkr/parallel.hpp"

namespace lipkr {

namespace {

int component_count(const DirectedEdgeSet& g, int n_points) {
  std::vector<int> root(static_cast<size_t>(n_points + 1));
  for (int v = 1; v <= n_points; ++v) root[static_cast<size_t>(v)] = v;
  auto find = [&](int v) {
    while (root[static_cast<size_t>(v)] != v) {
      root[static_cast<size_t>(v)] =
          root[static_cast<size_t>(root[static_cast<size_t>(v)])];
      v = root[static_cast<size_t>(v)];
    }
    return v;
  };
  int components = n_points;
  for (Edge e : g) {
    const int a = find(e.from);
    const int b = find(e.to);
    if (a != b) {
      root[static_cast<size_t>(a)] = b;
      --components;
    }
  }
  return components;
}

std::string plan_text(const std::vector<Point>& whites,
                      const std::vector<Point>& sinks,
                      const std::vector<int>& plan) {
  std::string out;
  for (size_t j = 0; j < sinks.size(); ++j) {
    if (j) out += ",";
    out += std::to_string(whites[static_cast<size_t>(plan[j])]) + ">" +
           std::to_string(sinks[j]);
  }
  return out;
}

void append_compositions(int total, int parts, std::vector<int>& cur,
                         std::vector<OutdegreeSequence>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(OutdegreeSequence{cur});
    cur.pop_back();
    return;
  }
  for (int first = 0; first <= total; ++first) {
    cur.push_back(first);
    append_compositions(total - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<OutdegreeSequence> compositions(int total, int parts) {
  std::vector<OutdegreeSequence> out;
  std::vector<int> cur;
  append_compositions(total, parts, cur, out);
  return out;
}

}  // namespace

Integer binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  Integer r = 1;
  for (int i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

Integer face_count_formula(int n, int m) {
  // (n+m)! / (m! m! (n-m)!) = C(n+m, m) * C(n, m)
  return binomial(n + m, m) * binomial(n, m);
}

int face_dimension(const MetricSpace& ms, const DirectedEdgeSet& g) {
  check_points(g, ms.points());
  if (!is_admissible(ms, g)) {
    throw Error(ErrorCode::NotAdmissible,
                "no 1-Lipschitz function is tight on " + canonical_key(g));
  }
  return ms.points() - 1 - component_count(g, ms.points());
}

DirectedEdgeSet min_constellation(const MetricSpace& ms,
                                  const std::vector<Point>& whites,
                                  const std::vector<int>& p) {
  const int n_points = ms.points();
  if (whites.empty() || whites.size() != p.size()) {
    throw Error(ErrorCode::ArityMismatch,
                "need one outdegree per white point");
  }
  std::vector<char> is_white(static_cast<size_t>(n_points + 1), 0);
  long long total = 0;
  for (size_t i = 0; i < whites.size(); ++i) {
    ms.check_point(whites[i]);
    if (is_white[static_cast<size_t>(whites[i])]) {
      throw Error(ErrorCode::ArityMismatch,
                  "white point " + std::to_string(whites[i]) + " repeats");
    }
    is_white[static_cast<size_t>(whites[i])] = 1;
    if (p[i] < 0) {
      throw Error(ErrorCode::ArityMismatch, "outdegrees must be non-negative");
    }
    total += p[i];
  }
  if (total + static_cast<long long>(whites.size()) != n_points) {
    throw Error(ErrorCode::ArityMismatch,
                "outdegrees sum to " + std::to_string(total) + " but " +
                    std::to_string(n_points - whites.size()) +
                    " points need an edge");
  }
  std::vector<Point> sinks;
  for (Point v = 1; v <= n_points; ++v) {
    if (!is_white[static_cast<size_t>(v)]) sinks.push_back(v);
  }
  if (sinks.empty()) return DirectedEdgeSet{};
  std::vector<std::vector<Rational>> cost(
      whites.size(), std::vector<Rational>(sinks.size()));
  for (size_t i = 0; i < whites.size(); ++i) {
    for (size_t j = 0; j < sinks.size(); ++j) {
      cost[i][j] = ms.dist(whites[i], sinks[j]);
    }
  }
  TransportResult tr = min_cost_transportation(cost, p);
  if (!tr.unique) {
    throw Error(ErrorCode::NotGeneric,
                "tied minimum-cost constellations: (" +
                    plan_text(whites, sinks, tr.plan) + ") and (" +
                    plan_text(whites, sinks, *tr.tie_witness) + ")");
  }
  DirectedEdgeSet out;
  for (size_t j = 0; j < sinks.size(); ++j) {
    out.insert({whites[static_cast<size_t>(tr.plan[j])], sinks[j]});
  }
  return out;
}

Facet build_facet_tree(const MetricSpace& ms, const OutdegreeSequence& p) {
  const int n_points = ms.points();
  const int n = n_points - 1;
  if (static_cast<int>(p.p.size()) != n_points) {
    throw Error(ErrorCode::ArityMismatch,
                "need one outdegree per point, got " +
                    std::to_string(p.p.size()) + " for " +
                    std::to_string(n_points) + " points");
  }
  for (int v : p.p) {
    if (v < 0) {
      throw Error(ErrorCode::ArityMismatch, "outdegrees must be non-negative");
    }
  }
  if (p.m() != n) {
    throw Error(ErrorCode::ArityMismatch,
                "facet outdegrees must sum to " + std::to_string(n) +
                    ", got " + std::to_string(p.m()));
  }
  std::vector<Point> whites;
  for (Point v = 1; v <= n_points; ++v) {
    if (p.p[static_cast<size_t>(v - 1)] > 0) whites.push_back(v);
  }
  DirectedEdgeSet tree;
  for (Point u : whites) {
    std::vector<int> supplies;
    supplies.reserve(whites.size());
    for (Point x : whites) {
      supplies.push_back(x == u ? p.p[static_cast<size_t>(u - 1)]
                                : p.p[static_cast<size_t>(x - 1)] - 1);
    }
    for (Edge e : min_constellation(ms, whites, supplies)) tree.insert(e);
  }
  if (tree.size() != n || component_count(tree, n_points) != 1 ||
      out_degrees(tree, n_points) != p.p) {
    throw Error(ErrorCode::InternalContradiction,
                "constellation union is not a spanning tree with the "
                "requested outdegrees: " +
                    canonical_key(tree));
  }
  if (!tree_admissible_fast(ms, tree)) {
    throw Error(ErrorCode::InternalContradiction,
                "constellation union fails the tree path criterion: " +
                    canonical_key(tree));
  }
  WitnessFunction witness = witness_function(ms, tree, n_points);
  return Facet{std::move(tree), p, std::move(witness)};
}

std::vector<Facet> enumerate_facets(const MetricSpace& ms, int jobs) {
  require_generic(ms);
  const int n_points = ms.points();
  const std::vector<OutdegreeSequence> seqs =
      compositions(n_points - 1, n_points);
  std::vector<std::optional<Facet>> slots(seqs.size());
  parallel_for(static_cast<int>(seqs.size()), jobs,
               [&](int i) { slots[static_cast<size_t>(i)] = build_facet_tree(ms, seqs[static_cast<size_t>(i)]); });
  std::vector<Facet> out;
  out.reserve(slots.size());
  std::set<DirectedEdgeSet> seen;
  for (auto& slot : slots) {
    if (!seen.insert(slot->tree).second) {
      throw Error(ErrorCode::InternalContradiction,
                  "two outdegree sequences produced the same tree: " +
                      canonical_key(slot->tree));
    }
    out.push_back(std::move(*slot));
  }
  return out;
}

std::vector<Face> enumerate_faces(const MetricSpace& ms, int jobs) {
  const int n_points = ms.points();
  std::vector<Facet> facets = enumerate_facets(ms, jobs);
  std::set<DirectedEdgeSet> seen;
  for (const Facet& facet : facets) {
    const auto& edges = facet.tree.edges();
    const int n = static_cast<int>(edges.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      DirectedEdgeSet sub;
      for (int b = 0; b < n; ++b) {
        if (mask & (1u << b)) sub.insert(edges[static_cast<size_t>(b)]);
      }
      seen.insert(std::move(sub));
    }
  }
  std::vector<Face> out;
  out.reserve(seen.size());
  for (const DirectedEdgeSet& g : seen) {
    out.push_back(Face{g, n_points - 1 - component_count(g, n_points)});
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.edges < b.edges;
  });
  return out;
}

std::vector<Integer> f_vector(const MetricSpace& ms, int jobs) {
  const int n = ms.points() - 1;
  std::vector<Integer> counts(static_cast<size_t>(n + 1), Integer(0));
  counts[0] = 1;
  for (const Face& face : enumerate_faces(ms, jobs)) {
    ++counts[static_cast<size_t>(face.edges.size())];
  }
  for (int m = 0; m <= n; ++m) {
    const Integer expected = face_count_formula(n, m);
    if (counts[static_cast<size_t>(m)] != expected) {
      throw Error(ErrorCode::FormulaMismatch,
                  "measured " + counts[static_cast<size_t>(m)].str() +
                      " faces with " + std::to_string(m) + " edges, expected " +
                      expected.str());
    }
  }
  return counts;
}

std::vector<DirectedEdgeSet> faces_with_outdegrees(const MetricSpace& ms,
                                                   const OutdegreeSequence& p) {
  const int n_points = ms.points();
  const int n = n_points - 1;
  if (static_cast<int>(p.p.size()) != n_points) {
    throw Error(ErrorCode::ArityMismatch,
                "need one outdegree per point, got " +
                    std::to_string(p.p.size()) + " for " +
                    std::to_string(n_points) + " points");
  }
  const int m = p.m();
  if (m > n) {
    throw Error(ErrorCode::ArityMismatch,
                "outdegrees sum to " + std::to_string(m) +
                    ", above the facet total " + std::to_string(n));
  }
  std::vector<DirectedEdgeSet> out;
  if (m == 0) {
    require_generic(ms);
    out.emplace_back();
  } else {
    for (const Face& face : enumerate_faces(ms, 1)) {
      if (out_degrees(face.edges, n_points) == p.p) out.push_back(face.edges);
    }
  }
  const Integer expected = binomial(n, m);
  if (Integer(out.size()) != expected) {
    throw Error(ErrorCode::FormulaMismatch,
                "found " + std::to_string(out.size()) + " faces, expected " +
                    expected.str());
  }
  return out;
}

std::pair<DirectedEdgeSet, Rational> phi_functional(const MetricSpace& ms,
                                                    const Facet& t, Point u) {
  const int n_points = ms.points();
  ms.check_point(u);
  if (t.outdeg.p[static_cast<size_t>(u - 1)] <= 0) {
    throw Error(ErrorCode::NotWhite,
                "point " + std::to_string(u) + " has outdegree 0");
  }
  std::vector<std::vector<Point>> adj(static_cast<size_t>(n_points + 1));
  for (Edge e : t.tree) {
    adj[static_cast<size_t>(e.from)].push_back(e.to);
    adj[static_cast<size_t>(e.to)].push_back(e.from);
  }
  std::vector<Point> parent(static_cast<size_t>(n_points + 1), 0);
  parent[static_cast<size_t>(u)] = u;
  std::vector<Point> order = {u};
  for (size_t q = 0; q < order.size(); ++q) {
    for (Point w : adj[static_cast<size_t>(order[q])]) {
      if (parent[static_cast<size_t>(w)] == 0) {
        parent[static_cast<size_t>(w)] = order[q];
        order.push_back(w);
      }
    }
  }
  DirectedEdgeSet h;
  Rational phi(0);
  for (Edge e : t.tree) {
    if (parent[static_cast<size_t>(e.to)] == e.from) {
      h.insert(e);
      phi += ms.dist(e.from, e.to);
    }
  }
  return {std::move(h), std::move(phi)};
}

}  // namespace lipkr
