#include "lipkr/metric.hpp"

#include <limits>
#include <random>
#include <set>
#include <string>

#include "lipkr/admissible.hpp"
#include "lipkr/error.hpp"

namespace lipkr {

namespace {

std::string triple_text(int x, int y, int z) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + "," +
         std::to_string(z) + ")";
}

// Uniform draw from {0,...,m-1} by rejection below the largest multiple of m,
// so every residue is equally likely regardless of the platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t m) {
  std::uint64_t threshold = (0 - m) % m;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % m;
  }
}

}  // namespace

MetricSpace MetricSpace::validate(
    const std::vector<std::vector<Rational>>& matrix) {
  const int n = static_cast<int>(matrix.size());
  if (n < 2) {
    throw Error(ErrorCode::InvalidArgument, "need at least 2 points");
  }
  for (const auto& row : matrix) {
    if (static_cast<int>(row.size()) != n) {
      throw Error(ErrorCode::InvalidArgument, "distance matrix must be square");
    }
  }
  std::vector<Rational> flat(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (matrix[i][i] != 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "diagonal entry at point " + std::to_string(i + 1) +
                      " must be zero");
    }
    for (int j = 0; j < n; ++j) {
      if (matrix[i][j] != matrix[j][i]) {
        throw Error(ErrorCode::NotSymmetric,
                    "entries (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ") and transpose differ");
      }
      if (i != j && matrix[i][j] <= 0) {
        throw Error(ErrorCode::NonPositiveDistance,
                    "distance (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ") is not positive");
      }
      flat[static_cast<size_t>(i) * n + j] = matrix[i][j];
    }
  }
  bool strict = true;
  for (int x = 0; x < n; ++x) {
    for (int z = x + 1; z < n; ++z) {
      for (int y = 0; y < n; ++y) {
        if (y == x || y == z) continue;
        const Rational detour = matrix[x][y] + matrix[y][z];
        if (matrix[x][z] > detour) {
          throw Error(ErrorCode::TriangleViolation,
                      "triangle inequality fails at " +
                          triple_text(x + 1, y + 1, z + 1));
        }
        if (matrix[x][z] == detour) strict = false;
      }
    }
  }
  return MetricSpace(n, std::move(flat), strict);
}

std::vector<std::vector<Rational>> MetricSpace::matrix() const {
  std::vector<std::vector<Rational>> out(
      static_cast<size_t>(n_points_),
      std::vector<Rational>(static_cast<size_t>(n_points_)));
  for (int i = 0; i < n_points_; ++i) {
    for (int j = 0; j < n_points_; ++j) {
      out[i][j] = d_[static_cast<size_t>(i) * n_points_ + j];
    }
  }
  return out;
}

void MetricSpace::check_point(Point x) const {
  if (x < 1 || x > n_points_) {
    throw Error(ErrorCode::UnknownPoint,
                "point " + std::to_string(x) + " is outside 1.." +
                    std::to_string(n_points_));
  }
}

int pair_index(int n_points, Point x, Point y) {
  if (x == y) {
    throw Error(ErrorCode::SamePoint,
                "pair index needs two distinct points, got " +
                    std::to_string(x) + " twice");
  }
  if (x < 1 || y < 1 || x > n_points || y > n_points) {
    throw Error(ErrorCode::UnknownPoint, "pair leaves the point range");
  }
  if (x > y) std::swap(x, y);
  return (x - 1) * n_points - x * (x - 1) / 2 + (y - x - 1);
}

MetricSpace rearrangement_metric(int n) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidArgument, "need n >= 1");
  }
  const int k = n + 1;
  std::vector<std::vector<Rational>> m(static_cast<size_t>(k),
                                       std::vector<Rational>(k, Rational(0)));
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      m[i - 1][j - 1] = 1 + Rational(i, j);
      m[j - 1][i - 1] = m[i - 1][j - 1];
    }
  }
  return MetricSpace::validate(m);
}

MetricSpace sign_family_metric(const std::vector<std::vector<Rational>>& f,
                               const std::vector<bool>& plus_signs) {
  const int n = static_cast<int>(f.size());
  if (n < 2) {
    throw Error(ErrorCode::InvalidArgument, "need at least 2 points");
  }
  const int pairs = n * (n - 1) / 2;
  if (static_cast<int>(plus_signs.size()) != pairs) {
    throw Error(ErrorCode::ArityMismatch,
                "expected one sign bit per unordered pair (" +
                    std::to_string(pairs) + "), got " +
                    std::to_string(plus_signs.size()));
  }
  for (const auto& row : f) {
    if (static_cast<int>(row.size()) != n) {
      throw Error(ErrorCode::InvalidArgument, "shift matrix must be square");
    }
  }
  std::vector<std::vector<Rational>> m(static_cast<size_t>(n),
                                       std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    if (f[i][i] != 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "shift matrix diagonal must be zero");
    }
    for (int j = i + 1; j < n; ++j) {
      if (f[i][j] != f[j][i]) {
        throw Error(ErrorCode::NotSymmetric, "shift matrix is not symmetric");
      }
      if (f[i][j] <= 0 || f[i][j] >= 1) {
        throw Error(ErrorCode::EntryOutOfRange,
                    "shift (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ") must lie strictly between " +
                        "0 and 1");
      }
      const bool plus = plus_signs[static_cast<size_t>(pair_index(n, i + 1, j + 1))];
      m[i][j] = plus ? Rational(3 + f[i][j]) : Rational(3 - f[i][j]);
      m[j][i] = m[i][j];
    }
  }
  return MetricSpace::validate(m);
}

MetricSpace random_generic_metric(int n, std::uint64_t seed) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidArgument, "need n >= 1");
  }
  const int k = n + 1;
  const int pairs = k * (k - 1) / 2;
  constexpr std::uint64_t kDenominator = 9973;
  constexpr int kMaxAttempts = 64;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::set<std::uint64_t> used;
    std::vector<std::vector<Rational>> f(static_cast<size_t>(k),
                                         std::vector<Rational>(k, Rational(0)));
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        std::uint64_t num;
        do {
          num = 1 + uniform_below(rng, kDenominator - 1);
        } while (!used.insert(num).second);
        f[i][j] = Rational(num, kDenominator);
        f[j][i] = f[i][j];
      }
    }
    std::vector<bool> signs(static_cast<size_t>(pairs));
    for (int p = 0; p < pairs; ++p) {
      signs[static_cast<size_t>(p)] = uniform_below(rng, 2) == 1;
    }
    MetricSpace ms = sign_family_metric(f, signs);
    if (is_generic(ms).generic) return ms;
  }
  throw Error(ErrorCode::RetryLimitExceeded,
              "no generic metric found in " + std::to_string(kMaxAttempts) +
                  " attempts for seed " + std::to_string(seed));
}

}  // namespace lipkr
