#pragma once

#include <map>
#include <vector>

#include "lipkr/faces.hpp"
#include "lipkr/metric.hpp"
#include "lipkr/rational.hpp"

namespace lipkr {

// Finitely supported signed measure sum c_x delta_x; the norms require the
// coefficients to sum to zero but the container itself does not.
struct SignedMeasure {
  std::map<Point, Rational> coeffs;

  Rational total() const;
  Rational coeff(Point x) const;
};

struct PointFunction {
  std::vector<Rational> values;  // indexed by point-1
};

// max over ordered pairs of (f(y) - f(x)) / rho(x,y); 0 for constants.
Rational lip_norm(const MetricSpace& ms, const PointFunction& f);

// (delta_x - delta_y) / rho(x,y), a vertex of the dual ball.
SignedMeasure vertex_measure(const MetricSpace& ms, Point x, Point y);

// Optimal transport cost between the positive and negative parts, solved by
// exact min-cost flow after clearing denominators to integer units.
Rational kr_norm(const MetricSpace& ms, const SignedMeasure& mu);

// max over facet witnesses f of sum c_x f(x); equals kr_norm by duality.
// Needs a generic metric since it enumerates facets.
Rational kr_norm_dual(const MetricSpace& ms, const SignedMeasure& mu,
                      int jobs = 1);
Rational kr_norm_dual(const MetricSpace& ms, const SignedMeasure& mu,
                      const std::vector<Facet>& facets);

}  // namespace lipkr
