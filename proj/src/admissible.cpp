#include "lipkr/admissible.hpp"

#include <algorithm>

#include "lipkr/assignment.hpp"
#include "lipkr/error.hpp"

namespace lipkr {

namespace {

// Bellman-Ford on the constraint graph with an implicit zero source: one arc
// per ordered pair, weight -rho on graph edges and +rho elsewhere. Returns
// potentials with d[y] <= d[x] + w(x,y) everywhere, or nothing when the
// constraints carry a negative cycle.
std::optional<std::vector<Rational>> relax_potentials(const MetricSpace& ms,
                                                      const DirectedEdgeSet& g) {
  const int n = ms.points();
  std::vector<Rational> d(static_cast<size_t>(n), Rational(0));
  for (int round = 0; round <= n; ++round) {
    bool changed = false;
    for (Point x = 1; x <= n; ++x) {
      for (Point y = 1; y <= n; ++y) {
        if (x == y) continue;
        Rational w = ms.dist(x, y);
        if (g.contains({x, y})) w = -w;
        if (d[static_cast<size_t>(y - 1)] > d[static_cast<size_t>(x - 1)] + w) {
          d[static_cast<size_t>(y - 1)] = d[static_cast<size_t>(x - 1)] + w;
          changed = true;
        }
      }
    }
    if (!changed) return d;
  }
  return std::nullopt;
}

}  // namespace

WitnessFunction::WitnessFunction(std::vector<Rational> values, Point base)
    : values_(std::move(values)), base_(base) {
  if (base_ < 1 || base_ > static_cast<Point>(values_.size())) {
    throw Error(ErrorCode::UnknownPoint,
                "base point " + std::to_string(base_) + " is outside 1.." +
                    std::to_string(values_.size()));
  }
  const Rational shift = values_[static_cast<size_t>(base_ - 1)];
  if (shift != 0) {
    for (Rational& v : values_) v -= shift;
  }
}

const Rational& WitnessFunction::value(Point x) const {
  if (x < 1 || x > static_cast<Point>(values_.size())) {
    throw Error(ErrorCode::UnknownPoint,
                "point " + std::to_string(x) + " is outside 1.." +
                    std::to_string(values_.size()));
  }
  return values_[static_cast<size_t>(x - 1)];
}

bool is_admissible(const MetricSpace& ms, const DirectedEdgeSet& g) {
  check_points(g, ms.points());
  return relax_potentials(ms, g).has_value();
}

WitnessFunction witness_function(const MetricSpace& ms,
                                 const DirectedEdgeSet& g, Point base) {
  check_points(g, ms.points());
  ms.check_point(base);
  auto d = relax_potentials(ms, g);
  if (!d) {
    throw Error(ErrorCode::NotAdmissible,
                "no 1-Lipschitz function is tight on " + canonical_key(g));
  }
  return WitnessFunction(std::move(*d), base);
}

bool tree_admissible_fast(const MetricSpace& ms, const DirectedEdgeSet& t) {
  const int n = ms.points();
  check_points(t, n);
  const int k = t.size();
  std::vector<int> indeg = in_degrees(t, n);
  std::vector<int> outdeg = out_degrees(t, n);
  std::vector<char> support(static_cast<size_t>(n + 1), 0);
  int support_size = 0;
  for (Point v = 1; v <= n; ++v) {
    if (indeg[static_cast<size_t>(v - 1)] > 0 &&
        outdeg[static_cast<size_t>(v - 1)] > 0) {
      throw Error(ErrorCode::BadOrientation,
                  "point " + std::to_string(v) +
                      " has both incoming and outgoing edges");
    }
    if (indeg[static_cast<size_t>(v - 1)] + outdeg[static_cast<size_t>(v - 1)] >
        0) {
      support[static_cast<size_t>(v)] = 1;
      ++support_size;
    }
  }
  if (k == 0 || support_size != k + 1) {
    throw Error(ErrorCode::NotATree,
                "edge set does not span a tree on its support");
  }
  std::vector<std::vector<Point>> adj(static_cast<size_t>(n + 1));
  for (Edge e : t) {
    adj[static_cast<size_t>(e.from)].push_back(e.to);
    adj[static_cast<size_t>(e.to)].push_back(e.from);
  }
  // Connectivity over the support; acyclicity then follows from the count.
  {
    Point start = 0;
    for (Point v = 1; v <= n && start == 0; ++v) {
      if (support[static_cast<size_t>(v)]) start = v;
    }
    std::vector<char> seen(static_cast<size_t>(n + 1), 0);
    std::vector<Point> stack = {start};
    seen[static_cast<size_t>(start)] = 1;
    int reached = 0;
    while (!stack.empty()) {
      const Point v = stack.back();
      stack.pop_back();
      ++reached;
      for (Point w : adj[static_cast<size_t>(v)]) {
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    if (reached != support_size) {
      throw Error(ErrorCode::NotATree,
                  "edge set does not span a tree on its support");
    }
  }
  // Walk the unique path from each head vertex to each tail vertex; the
  // traversal alternates heads and tails, the odd-position edges contribute
  // to the left sum, the even-position ones plus the closing chord to the
  // right sum.
  std::vector<Point> parent(static_cast<size_t>(n + 1), 0);
  std::vector<Point> order;
  for (Point start = 1; start <= n; ++start) {
    if (!support[static_cast<size_t>(start)] ||
        indeg[static_cast<size_t>(start - 1)] == 0) {
      continue;
    }
    std::fill(parent.begin(), parent.end(), 0);
    parent[static_cast<size_t>(start)] = start;
    order.assign(1, start);
    for (size_t q = 0; q < order.size(); ++q) {
      const Point v = order[q];
      for (Point w : adj[static_cast<size_t>(v)]) {
        if (parent[static_cast<size_t>(w)] == 0) {
          parent[static_cast<size_t>(w)] = v;
          order.push_back(w);
        }
      }
    }
    for (Point finish = 1; finish <= n; ++finish) {
      if (!support[static_cast<size_t>(finish)] ||
          outdeg[static_cast<size_t>(finish - 1)] == 0 || finish == start) {
        continue;
      }
      std::vector<Point> path;
      for (Point v = finish; v != start; v = parent[static_cast<size_t>(v)]) {
        path.push_back(v);
      }
      path.push_back(start);
      std::reverse(path.begin(), path.end());
      Rational lhs(0), rhs(0);
      for (size_t e = 0; e + 1 < path.size(); ++e) {
        const Rational& w = ms.dist(path[e], path[e + 1]);
        if (e % 2 == 0) {
          lhs += w;
        } else {
          rhs += w;
        }
      }
      rhs += ms.dist(finish, start);
      if (lhs > rhs) return false;
    }
  }
  return true;
}

std::string describe(const TieWitness& tie) {
  auto tuple_text = [](const std::vector<Point>& pts) {
    std::string out = "{";
    for (size_t i = 0; i < pts.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(pts[i]);
    }
    return out + "}";
  };
  auto pairing_text = [&](const std::vector<int>& perm) {
    std::string out;
    for (size_t i = 0; i < perm.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(tie.rows[i]) + ">" +
             std::to_string(tie.cols[static_cast<size_t>(perm[i])]);
    }
    return out;
  };
  return "tied minimum-cost pairings on " + tuple_text(tie.rows) + " x " +
         tuple_text(tie.cols) + ": (" + pairing_text(tie.first) + ") and (" +
         pairing_text(tie.second) + ")";
}

GenericityReport is_generic(const MetricSpace& ms) {
  if (!ms.strict()) {
    throw Error(ErrorCode::NotStrict,
                "genericity is defined for strict metrics only");
  }
  const int n = ms.points();
  if (n > 10) {
    throw Error(ErrorCode::BudgetExceeded,
                "genericity certification is exhaustive and refuses beyond "
                "10 points, got " +
                    std::to_string(n));
  }
  std::vector<Point> rows, cols;
  // Lexicographic enumeration of unordered pairs {rows, cols} of disjoint
  // k-subsets; the first tie found is therefore deterministic.
  auto next_combination = [n](std::vector<Point>& c) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
      if (c[static_cast<size_t>(i)] < n - (k - 1 - i)) {
        ++c[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
          c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
        }
        return true;
      }
    }
    return false;
  };
  for (int k = 2; 2 * k <= n; ++k) {
    rows.resize(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) rows[static_cast<size_t>(i)] = i + 1;
    do {
      cols = rows;
      while (next_combination(cols)) {
        if (cols < rows) continue;
        bool disjoint = true;
        for (Point c : cols) {
          if (std::binary_search(rows.begin(), rows.end(), c)) {
            disjoint = false;
            break;
          }
        }
        if (!disjoint) continue;
        std::vector<std::vector<Rational>> cost(
            static_cast<size_t>(k), std::vector<Rational>(static_cast<size_t>(k)));
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) {
            cost[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                ms.dist(rows[static_cast<size_t>(i)], cols[static_cast<size_t>(j)]);
          }
        }
        AssignmentResult r = min_cost_assignment(cost);
        if (!r.unique) {
          GenericityReport report;
          report.generic = false;
          report.tie = TieWitness{rows, cols, r.optimal, *r.tie_witness};
          return report;
        }
      }
    } while (next_combination(rows));
  }
  return GenericityReport{true, std::nullopt};
}

void require_generic(const MetricSpace& ms) {
  GenericityReport r = is_generic(ms);
  if (!r.generic) {
    throw Error(ErrorCode::NotGeneric, describe(*r.tie));
  }
}

}  // namespace lipkr
