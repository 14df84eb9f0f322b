#include "lipkr/assignment.hpp"

#include <utility>

#include "lipkr/error.hpp"

namespace lipkr {

namespace {

struct Solution {
  Rational value;
  std::vector<int> match;  // row -> col
};

// Hungarian method with row/column potentials, kept exact over rationals.
// forbidden[i][j] marks cells that may not be used; returns nothing when no
// perfect matching over the allowed cells exists.
std::optional<Solution> solve(const std::vector<std::vector<Rational>>& a,
                              const std::vector<std::vector<char>>& forbidden) {
  const int k = static_cast<int>(a.size());
  std::vector<Rational> u(static_cast<size_t>(k) + 1, Rational(0));
  std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
  std::vector<int> p(static_cast<size_t>(k) + 1, 0);
  std::vector<int> way(static_cast<size_t>(k) + 1, 0);
  for (int i = 1; i <= k; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<Rational> minv(static_cast<size_t>(k) + 1, Rational(0));
    std::vector<char> minv_inf(static_cast<size_t>(k) + 1, 1);
    std::vector<char> used(static_cast<size_t>(k) + 1, 0);
    do {
      used[static_cast<size_t>(j0)] = 1;
      const int i0 = p[static_cast<size_t>(j0)];
      int j1 = -1;
      Rational delta;
      bool delta_set = false;
      for (int j = 1; j <= k; ++j) {
        if (used[static_cast<size_t>(j)]) continue;
        if (!forbidden[static_cast<size_t>(i0 - 1)][static_cast<size_t>(j - 1)]) {
          Rational cur = a[static_cast<size_t>(i0 - 1)][static_cast<size_t>(j - 1)] -
                         u[static_cast<size_t>(i0)] - v[static_cast<size_t>(j)];
          if (minv_inf[static_cast<size_t>(j)] || cur < minv[static_cast<size_t>(j)]) {
            minv[static_cast<size_t>(j)] = std::move(cur);
            minv_inf[static_cast<size_t>(j)] = 0;
            way[static_cast<size_t>(j)] = j0;
          }
        }
        if (!minv_inf[static_cast<size_t>(j)] &&
            (!delta_set || minv[static_cast<size_t>(j)] < delta)) {
          delta = minv[static_cast<size_t>(j)];
          delta_set = true;
          j1 = j;
        }
      }
      if (!delta_set) return std::nullopt;
      for (int j = 0; j <= k; ++j) {
        if (used[static_cast<size_t>(j)]) {
          u[static_cast<size_t>(p[static_cast<size_t>(j)])] += delta;
          v[static_cast<size_t>(j)] -= delta;
        } else if (!minv_inf[static_cast<size_t>(j)]) {
          minv[static_cast<size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (p[static_cast<size_t>(j0)] != 0);
    do {
      const int j1 = way[static_cast<size_t>(j0)];
      p[static_cast<size_t>(j0)] = p[static_cast<size_t>(j1)];
      j0 = j1;
    } while (j0);
  }
  Solution s;
  s.value = 0;
  s.match.assign(static_cast<size_t>(k), -1);
  for (int j = 1; j <= k; ++j) {
    const int row = p[static_cast<size_t>(j)];
    s.match[static_cast<size_t>(row - 1)] = j - 1;
    s.value += a[static_cast<size_t>(row - 1)][static_cast<size_t>(j - 1)];
  }
  return s;
}

void check_rectangular(const std::vector<std::vector<Rational>>& cost,
                       size_t cols) {
  for (const auto& row : cost) {
    if (row.size() != cols) {
      throw Error(ErrorCode::InvalidArgument, "cost matrix must be rectangular");
    }
  }
}

}  // namespace

AssignmentResult min_cost_assignment(
    const std::vector<std::vector<Rational>>& cost) {
  const int k = static_cast<int>(cost.size());
  if (k < 1) {
    throw Error(ErrorCode::InvalidArgument, "cost matrix must be non-empty");
  }
  check_rectangular(cost, static_cast<size_t>(k));
  std::vector<std::vector<char>> forbidden(
      static_cast<size_t>(k), std::vector<char>(static_cast<size_t>(k), 0));
  auto base = solve(cost, forbidden);
  AssignmentResult out;
  out.value = base->value;
  out.optimal = base->match;
  out.unique = true;
  for (int i = 0; i < k && out.unique; ++i) {
    const int j = out.optimal[static_cast<size_t>(i)];
    forbidden[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
    auto alt = solve(cost, forbidden);
    forbidden[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
    if (alt && alt->value == out.value) {
      out.unique = false;
      out.tie_witness = alt->match;
    }
  }
  return out;
}

TransportResult min_cost_transportation(
    const std::vector<std::vector<Rational>>& cost,
    const std::vector<int>& supplies) {
  const int k = static_cast<int>(cost.size());
  if (k < 1) {
    throw Error(ErrorCode::InvalidArgument, "cost matrix must be non-empty");
  }
  const size_t m = cost[0].size();
  check_rectangular(cost, m);
  if (supplies.size() != static_cast<size_t>(k)) {
    throw Error(ErrorCode::SupplyMismatch,
                "need one supply per source row, got " +
                    std::to_string(supplies.size()) + " for " +
                    std::to_string(k) + " rows");
  }
  long long total = 0;
  for (int s : supplies) {
    if (s < 0) {
      throw Error(ErrorCode::SupplyMismatch, "supplies must be non-negative");
    }
    total += s;
  }
  if (total != static_cast<long long>(m)) {
    throw Error(ErrorCode::SupplyMismatch,
                "supplies sum to " + std::to_string(total) + " but there are " +
                    std::to_string(m) + " unit sinks");
  }
  TransportResult out;
  if (m == 0) {
    out.value = 0;
    out.unique = true;
    return out;
  }
  std::vector<int> orig_of;
  std::vector<std::vector<Rational>> rep;
  for (int i = 0; i < k; ++i) {
    for (int c = 0; c < supplies[static_cast<size_t>(i)]; ++c) {
      orig_of.push_back(i);
      rep.push_back(cost[static_cast<size_t>(i)]);
    }
  }
  std::vector<std::vector<char>> forbidden(m, std::vector<char>(m, 0));
  auto base = solve(rep, forbidden);
  out.value = base->value;
  out.plan.assign(m, -1);
  for (size_t r = 0; r < m; ++r) {
    out.plan[static_cast<size_t>(base->match[r])] = orig_of[r];
  }
  out.unique = true;
  for (size_t j = 0; j < m && out.unique; ++j) {
    const int src = out.plan[j];
    for (size_t r = 0; r < m; ++r) {
      if (orig_of[r] == src) forbidden[r][j] = 1;
    }
    auto alt = solve(rep, forbidden);
    for (size_t r = 0; r < m; ++r) {
      if (orig_of[r] == src) forbidden[r][j] = 0;
    }
    if (alt && alt->value == out.value) {
      out.unique = false;
      std::vector<int> plan2(m, -1);
      for (size_t r = 0; r < m; ++r) {
        plan2[static_cast<size_t>(alt->match[r])] = orig_of[r];
      }
      out.tie_witness = std::move(plan2);
    }
  }
  return out;
}

}  // namespace lipkr
