#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "lipkr/metric.hpp"

namespace lipkr {

struct Edge {
  Point from = 0;
  Point to = 0;
  auto operator<=>(const Edge&) const = default;
};

// A set of directed edges without self-loops, kept sorted, so equal sets
// compare equal and the iteration order is canonical.
class DirectedEdgeSet {
 public:
  DirectedEdgeSet() = default;
  DirectedEdgeSet(std::initializer_list<Edge> edges);
  explicit DirectedEdgeSet(const std::vector<Edge>& edges);

  void insert(Edge e);
  bool contains(Edge e) const;

  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return edges_.empty(); }

  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }
  const std::vector<Edge>& edges() const { return edges_; }

  auto operator<=>(const DirectedEdgeSet&) const = default;

 private:
  std::vector<Edge> edges_;
};

// Per-point outdegrees, 0-indexed by point-1.
std::vector<int> out_degrees(const DirectedEdgeSet& g, int n_points);
std::vector<int> in_degrees(const DirectedEdgeSet& g, int n_points);

void check_points(const DirectedEdgeSet& g, int n_points);

// "1>3,2>4" with edges in canonical order; "-" for the empty set.
std::string canonical_key(const DirectedEdgeSet& g);

// Maps every endpoint through to_new (indexed by point-1).
DirectedEdgeSet relabel(const DirectedEdgeSet& g,
                        const std::vector<Point>& to_new);

std::string to_dot(const DirectedEdgeSet& g, int n_points);

std::uint64_t fnv1a64(const std::string& text);

}  // namespace lipkr
