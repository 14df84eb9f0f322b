#include "lipkr/norms.hpp"

#include <algorithm>
#include <optional>

#include "lipkr/error.hpp"

namespace lipkr {

namespace {

struct FlowEdge {
  int to;
  Integer cap;
  Rational cost;
  size_t rev;
};

class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : adj_(static_cast<size_t>(nodes)) {}

  void add_edge(int u, int v, Integer cap, Rational cost) {
    adj_[static_cast<size_t>(u)].push_back(
        FlowEdge{v, std::move(cap), cost, adj_[static_cast<size_t>(v)].size()});
    adj_[static_cast<size_t>(v)].push_back(
        FlowEdge{u, Integer(0), -cost, adj_[static_cast<size_t>(u)].size() - 1});
  }

  // Successive shortest augmenting paths; exact over rationals, terminates
  // because every augmentation ships at least one unit.
  Rational min_cost_max_flow(int s, int t) {
    const int n = static_cast<int>(adj_.size());
    Rational total(0);
    for (;;) {
      std::vector<std::optional<Rational>> dist(static_cast<size_t>(n));
      std::vector<std::pair<int, size_t>> prev(static_cast<size_t>(n),
                                               {-1, 0});
      dist[static_cast<size_t>(s)] = Rational(0);
      for (int round = 0; round < n; ++round) {
        bool changed = false;
        for (int u = 0; u < n; ++u) {
          if (!dist[static_cast<size_t>(u)]) continue;
          for (size_t k = 0; k < adj_[static_cast<size_t>(u)].size(); ++k) {
            const FlowEdge& e = adj_[static_cast<size_t>(u)][k];
            if (e.cap == 0) continue;
            Rational cand = *dist[static_cast<size_t>(u)] + e.cost;
            if (!dist[static_cast<size_t>(e.to)] ||
                cand < *dist[static_cast<size_t>(e.to)]) {
              dist[static_cast<size_t>(e.to)] = std::move(cand);
              prev[static_cast<size_t>(e.to)] = {u, k};
              changed = true;
            }
          }
        }
        if (!changed) break;
      }
      if (!dist[static_cast<size_t>(t)]) return total;
      Integer push(-1);
      for (int v = t; v != s; v = prev[static_cast<size_t>(v)].first) {
        const auto [u, k] = prev[static_cast<size_t>(v)];
        const Integer& cap = adj_[static_cast<size_t>(u)][k].cap;
        if (push < 0 || cap < push) push = cap;
      }
      for (int v = t; v != s; v = prev[static_cast<size_t>(v)].first) {
        const auto [u, k] = prev[static_cast<size_t>(v)];
        FlowEdge& e = adj_[static_cast<size_t>(u)][k];
        e.cap -= push;
        adj_[static_cast<size_t>(e.to)][e.rev].cap += push;
      }
      total += Rational(push) * *dist[static_cast<size_t>(t)];
    }
  }

 private:
  std::vector<std::vector<FlowEdge>> adj_;
};

void check_measure_points(const MetricSpace& ms, const SignedMeasure& mu) {
  for (const auto& [x, c] : mu.coeffs) {
    (void)c;
    ms.check_point(x);
  }
}

void check_balanced(const SignedMeasure& mu) {
  if (mu.total() != 0) {
    throw Error(ErrorCode::NotBalanced,
                "coefficients sum to " + to_string(mu.total()) +
                    ", expected 0");
  }
}

}  // namespace

Rational SignedMeasure::total() const {
  Rational s(0);
  for (const auto& [x, c] : coeffs) {
    (void)x;
    s += c;
  }
  return s;
}

Rational SignedMeasure::coeff(Point x) const {
  auto it = coeffs.find(x);
  return it == coeffs.end() ? Rational(0) : it->second;
}

Rational lip_norm(const MetricSpace& ms, const PointFunction& f) {
  const int n = ms.points();
  if (static_cast<int>(f.values.size()) != n) {
    throw Error(ErrorCode::ArityMismatch,
                "need one value per point, got " +
                    std::to_string(f.values.size()) + " for " +
                    std::to_string(n) + " points");
  }
  Rational best(0);
  for (Point x = 1; x <= n; ++x) {
    for (Point y = 1; y <= n; ++y) {
      if (x == y) continue;
      Rational r = (f.values[static_cast<size_t>(y - 1)] -
                    f.values[static_cast<size_t>(x - 1)]) /
                   ms.dist(x, y);
      if (r > best) best = std::move(r);
    }
  }
  return best;
}

SignedMeasure vertex_measure(const MetricSpace& ms, Point x, Point y) {
  ms.check_point(x);
  ms.check_point(y);
  if (x == y) {
    throw Error(ErrorCode::SamePoint,
                "vertex measure needs two distinct points, got " +
                    std::to_string(x) + " twice");
  }
  const Rational c = 1 / ms.dist(x, y);
  SignedMeasure mu;
  mu.coeffs[x] = c;
  mu.coeffs[y] = -c;
  return mu;
}

Rational kr_norm(const MetricSpace& ms, const SignedMeasure& mu) {
  check_measure_points(ms, mu);
  check_balanced(mu);
  Integer scale(1);
  for (const auto& [x, c] : mu.coeffs) {
    (void)x;
    if (c != 0) scale = lcm(scale, denominator(c));
  }
  std::vector<std::pair<Point, Integer>> sources, sinks;
  for (const auto& [x, c] : mu.coeffs) {
    const Integer units = numerator(c) * (scale / denominator(c));
    if (units > 0) {
      sources.emplace_back(x, units);
    } else if (units < 0) {
      sinks.emplace_back(x, -units);
    }
  }
  if (sources.empty()) return Rational(0);
  Integer total_units(0);
  for (const auto& [x, u] : sources) {
    (void)x;
    total_units += u;
  }
  const int s_count = static_cast<int>(sources.size());
  const int t_count = static_cast<int>(sinks.size());
  FlowNetwork net(s_count + t_count + 2);
  const int source_node = 0;
  const int sink_node = s_count + t_count + 1;
  for (int i = 0; i < s_count; ++i) {
    net.add_edge(source_node, 1 + i, sources[static_cast<size_t>(i)].second,
                 Rational(0));
    for (int j = 0; j < t_count; ++j) {
      net.add_edge(1 + i, 1 + s_count + j, total_units,
                   ms.dist(sources[static_cast<size_t>(i)].first,
                           sinks[static_cast<size_t>(j)].first));
    }
  }
  for (int j = 0; j < t_count; ++j) {
    net.add_edge(1 + s_count + j, sink_node,
                 sinks[static_cast<size_t>(j)].second, Rational(0));
  }
  return net.min_cost_max_flow(source_node, sink_node) / Rational(scale);
}

Rational kr_norm_dual(const MetricSpace& ms, const SignedMeasure& mu,
                      const std::vector<Facet>& facets) {
  check_measure_points(ms, mu);
  check_balanced(mu);
  if (facets.empty()) {
    throw Error(ErrorCode::InvalidArgument, "facet list must be non-empty");
  }
  std::optional<Rational> best;
  for (const Facet& facet : facets) {
    Rational v(0);
    for (const auto& [x, c] : mu.coeffs) {
      v += c * facet.witness.value(x);
    }
    if (!best || v > *best) best = std::move(v);
  }
  return *best;
}

Rational kr_norm_dual(const MetricSpace& ms, const SignedMeasure& mu,
                      int jobs) {
  return kr_norm_dual(ms, mu, enumerate_facets(ms, jobs));
}

}  // namespace lipkr
