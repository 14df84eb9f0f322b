#include "lipkr/oracle.hpp"

#include <algorithm>

#include "lipkr/error.hpp"

namespace lipkr {

namespace {

struct CyclicSearch {
  const MetricSpace& ms;
  const std::vector<Edge>& edges;
  std::vector<Edge> seq;
  unsigned tails = 0;
  unsigned heads = 0;
  bool violated = false;       // some qualifying arrangement fails
  bool violated_strict = false;  // ... with all endpoints distinct

  // The cyclic inequality is invariant under rotating the arrangement, so
  // only sequences led by their smallest edge are walked.
  void extend(bool all_distinct) {
    if (seq.size() >= 2 && !(violated && violated_strict)) {
      Rational lhs(0), rhs(0);
      for (size_t i = 0; i < seq.size(); ++i) {
        lhs += ms.dist(seq[i].from, seq[i].to);
        rhs += ms.dist(seq[i].from, seq[(i + 1) % seq.size()].to);
      }
      if (lhs > rhs) {
        violated = true;
        if (all_distinct) violated_strict = true;
      }
    }
    if (violated && violated_strict) return;
    for (const Edge& e : edges) {
      if (!seq.empty() && !(seq.front() < e)) continue;
      if (tails & (1u << e.from)) continue;
      if (heads & (1u << e.to)) continue;
      const unsigned occupied = tails | heads;
      const bool still_distinct = all_distinct &&
                                  !(occupied & (1u << e.from)) &&
                                  !(occupied & (1u << e.to));
      seq.push_back(e);
      tails |= 1u << e.from;
      heads |= 1u << e.to;
      extend(still_distinct);
      tails &= ~(1u << e.from);
      heads &= ~(1u << e.to);
      seq.pop_back();
      if (violated && violated_strict) return;
    }
  }
};

}  // namespace

AdmissibleReadings brute_admissible_detail(const MetricSpace& ms,
                                           const DirectedEdgeSet& g) {
  if (ms.points() > 7) {
    throw Error(ErrorCode::BudgetExceeded,
                "exhaustive arrangement check refuses beyond 7 points, got " +
                    std::to_string(ms.points()));
  }
  check_points(g, ms.points());
  CyclicSearch search{ms, g.edges()};
  search.extend(true);
  return AdmissibleReadings{!search.violated, !search.violated_strict};
}

bool brute_admissible(const MetricSpace& ms, const DirectedEdgeSet& g) {
  return brute_admissible_detail(ms, g).tails_heads_distinct;
}

BruteFaces brute_faces(const MetricSpace& ms) {
  const int n_points = ms.points();
  const int n = n_points - 1;
  if (n_points > 5) {
    throw Error(ErrorCode::BudgetExceeded,
                "exhaustive forest enumeration refuses beyond 5 points, got " +
                    std::to_string(n_points));
  }
  std::vector<Edge> pairs;
  for (Point x = 1; x <= n_points; ++x) {
    for (Point y = 1; y <= n_points; ++y) {
      if (x != y) pairs.push_back({x, y});
    }
  }
  const int p = static_cast<int>(pairs.size());
  BruteFaces out;
  out.by_dim.resize(static_cast<size_t>(n));
  std::vector<int> indeg(static_cast<size_t>(n_points + 1));
  std::vector<int> outdeg(static_cast<size_t>(n_points + 1));
  std::vector<int> root(static_cast<size_t>(n_points + 1));
  for (unsigned mask = 1; mask < (1u << p); ++mask) {
    std::fill(indeg.begin(), indeg.end(), 0);
    std::fill(outdeg.begin(), outdeg.end(), 0);
    for (Point v = 1; v <= n_points; ++v) root[static_cast<size_t>(v)] = v;
    auto find = [&](int v) {
      while (root[static_cast<size_t>(v)] != v) {
        root[static_cast<size_t>(v)] =
            root[static_cast<size_t>(root[static_cast<size_t>(v)])];
        v = root[static_cast<size_t>(v)];
      }
      return v;
    };
    bool keep = true;
    int components = n_points;
    for (int b = 0; b < p && keep; ++b) {
      if (!(mask & (1u << b))) continue;
      const Edge e = pairs[static_cast<size_t>(b)];
      ++outdeg[static_cast<size_t>(e.from)];
      ++indeg[static_cast<size_t>(e.to)];
      if (indeg[static_cast<size_t>(e.from)] > 0 ||
          outdeg[static_cast<size_t>(e.to)] > 0) {
        keep = false;  // a point both sends and receives
        break;
      }
      const int a = find(e.from);
      const int c = find(e.to);
      if (a == c) {
        keep = false;  // undirected cycle
        break;
      }
      root[static_cast<size_t>(a)] = c;
      --components;
    }
    if (!keep) continue;
    DirectedEdgeSet g;
    for (int b = 0; b < p; ++b) {
      if (mask & (1u << b)) g.insert(pairs[static_cast<size_t>(b)]);
    }
    if (!brute_admissible(ms, g)) continue;
    const int dim = n - components;
    out.by_dim[static_cast<size_t>(dim)].push_back(std::move(g));
  }
  for (auto& bucket : out.by_dim) std::sort(bucket.begin(), bucket.end());
  return out;
}

Rational brute_transport(const MetricSpace& ms, const SignedMeasure& mu) {
  for (const auto& [x, c] : mu.coeffs) {
    (void)c;
    ms.check_point(x);
  }
  if (mu.total() != 0) {
    throw Error(ErrorCode::NotBalanced,
                "coefficients sum to " + to_string(mu.total()) +
                    ", expected 0");
  }
  Integer scale(1);
  for (const auto& [x, c] : mu.coeffs) {
    (void)x;
    if (c != 0) scale = lcm(scale, denominator(c));
  }
  std::vector<Point> sources, sinks;
  for (const auto& [x, c] : mu.coeffs) {
    Integer units = numerator(c) * (scale / denominator(c));
    for (; units > 0; --units) sources.push_back(x);
    for (; units < 0; ++units) sinks.push_back(x);
  }
  if (sources.size() > 8) {
    throw Error(ErrorCode::BudgetExceeded,
                "exhaustive transport enumerates pairings of at most 8 units, "
                "got " +
                    std::to_string(sources.size()));
  }
  if (sources.empty()) return Rational(0);
  std::sort(sinks.begin(), sinks.end());
  std::optional<Rational> best;
  do {
    Rational cost(0);
    for (size_t i = 0; i < sources.size(); ++i) {
      cost += ms.dist(sources[i], sinks[i]);
    }
    if (!best || cost < *best) best = std::move(cost);
  } while (std::next_permutation(sinks.begin(), sinks.end()));
  return *best / Rational(scale);
}

}  // namespace lipkr
