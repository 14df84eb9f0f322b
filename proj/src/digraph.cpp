#include "lipkr/digraph.hpp"

#include <algorithm>

#include "lipkr/error.hpp"

namespace lipkr {

namespace {

void check_edge(Edge e) {
  if (e.from == e.to) {
    throw Error(ErrorCode::InvalidArgument,
                "self-loop at point " + std::to_string(e.from));
  }
  if (e.from < 1 || e.to < 1) {
    throw Error(ErrorCode::UnknownPoint, "points are labelled from 1");
  }
}

}  // namespace

DirectedEdgeSet::DirectedEdgeSet(std::initializer_list<Edge> edges) {
  for (Edge e : edges) insert(e);
}

DirectedEdgeSet::DirectedEdgeSet(const std::vector<Edge>& edges) {
  for (Edge e : edges) insert(e);
}

void DirectedEdgeSet::insert(Edge e) {
  check_edge(e);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return;
  edges_.insert(it, e);
}

bool DirectedEdgeSet::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<int> out_degrees(const DirectedEdgeSet& g, int n_points) {
  std::vector<int> deg(static_cast<size_t>(n_points), 0);
  for (Edge e : g) deg[static_cast<size_t>(e.from - 1)]++;
  return deg;
}

std::vector<int> in_degrees(const DirectedEdgeSet& g, int n_points) {
  std::vector<int> deg(static_cast<size_t>(n_points), 0);
  for (Edge e : g) deg[static_cast<size_t>(e.to - 1)]++;
  return deg;
}

void check_points(const DirectedEdgeSet& g, int n_points) {
  for (Edge e : g) {
    if (e.from > n_points || e.to > n_points) {
      throw Error(ErrorCode::UnknownPoint,
                  "edge " + std::to_string(e.from) + ">" + std::to_string(e.to) +
                      " leaves the space of " + std::to_string(n_points) + " points");
    }
  }
}

std::string canonical_key(const DirectedEdgeSet& g) {
  if (g.empty()) return "-";
  std::string key;
  bool first = true;
  for (Edge e : g) {
    if (!first) key += ",";
    first = false;
    key += std::to_string(e.from);
    key += ">";
    key += std::to_string(e.to);
  }
  return key;
}

DirectedEdgeSet relabel(const DirectedEdgeSet& g,
                        const std::vector<Point>& to_new) {
  const int n = static_cast<int>(to_new.size());
  DirectedEdgeSet out;
  for (Edge e : g) {
    if (e.from > n || e.to > n) {
      throw Error(ErrorCode::UnknownPoint,
                  "edge endpoint outside the relabeling of " +
                      std::to_string(n) + " points");
    }
    out.insert({to_new[static_cast<size_t>(e.from - 1)],
                to_new[static_cast<size_t>(e.to - 1)]});
  }
  return out;
}

std::string to_dot(const DirectedEdgeSet& g, int n_points) {
  std::string out = "digraph {\n";
  for (int v = 1; v <= n_points; ++v) {
    out += "  " + std::to_string(v) + ";\n";
  }
  for (Edge e : g) {
    out += "  " + std::to_string(e.from) + " -> " + std::to_string(e.to) + ";\n";
  }
  out += "}\n";
  return out;
}

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace lipkr
