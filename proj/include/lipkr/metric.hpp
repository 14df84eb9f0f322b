#pragma once

#include <cstdint>
#include <vector>

#include "lipkr/rational.hpp"

namespace lipkr {

// Points are labelled 1..points(). A space on n+1 points carries the
// n-dimensional Lipschitz polytope and its dual.
using Point = int;

class MetricSpace {
 public:
  // Checks symmetry, zero diagonal, positive off-diagonal entries and all
  // triangle inequalities; records whether every triangle is strict.
  static MetricSpace validate(const std::vector<std::vector<Rational>>& matrix);

  int points() const { return n_points_; }
  int dim() const { return n_points_ - 1; }
  bool strict() const { return strict_; }

  const Rational& dist(Point x, Point y) const {
    return d_[static_cast<size_t>(x - 1) * static_cast<size_t>(n_points_) +
              static_cast<size_t>(y - 1)];
  }

  std::vector<std::vector<Rational>> matrix() const;

  void check_point(Point x) const;

 private:
  MetricSpace(int n_points, std::vector<Rational> flat, bool strict)
      : n_points_(n_points), d_(std::move(flat)), strict_(strict) {}

  int n_points_ = 0;
  std::vector<Rational> d_;
  bool strict_ = false;
};

// Index of the unordered pair {x,y} (x != y) in lexicographic order over
// 1 <= x < y <= n_points; used to address per-pair data such as sign bits.
int pair_index(int n_points, Point x, Point y);

// rho(i,j) = 1 + i/j for i < j on points 1..n+1.
MetricSpace rearrangement_metric(int n);

// rho(x,y) = 3 + f(x,y) where the sign bit for the pair is set, 3 - f(x,y)
// otherwise. Requires 0 < f(x,y) < 1; the result is always a strict metric.
MetricSpace sign_family_metric(const std::vector<std::vector<Rational>>& f,
                               const std::vector<bool>& plus_signs);

// Deterministic seeded search: distinct numerators over the fixed prime
// denominator 9973, random signs, retried until the space passes the
// genericity test (at most 64 attempts). Randomness comes from
// std::mt19937_64 with unbiased modulo rejection; no library distribution
// types are used, so identical seeds reproduce identical spaces everywhere.
MetricSpace random_generic_metric(int n, std::uint64_t seed);

}  // namespace lipkr
