#include "lipkr/classify.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "lipkr/error.hpp"
#include "lipkr/parallel.hpp"

namespace lipkr {

CombinatorialStructure combinatorial_structure(const MetricSpace& ms,
                                               int jobs) {
  CombinatorialStructure s;
  s.n_points = ms.points();
  for (Facet& facet : enumerate_facets(ms, jobs)) {
    s.facet_trees.push_back(std::move(facet.tree));
  }
  std::sort(s.facet_trees.begin(), s.facet_trees.end());
  return s;
}

bool equivalent(const MetricSpace& a, const MetricSpace& b, int jobs) {
  if (a.points() != b.points()) {
    throw Error(ErrorCode::SizeMismatch,
                "cannot compare metrics on " + std::to_string(a.points()) +
                    " and " + std::to_string(b.points()) + " points");
  }
  return combinatorial_structure(a, jobs) == combinatorial_structure(b, jobs);
}

Rational cycle_functional(const MetricSpace& ms, const CycleConfig& c) {
  const size_t k = c.x.size();
  if (k == 0 || c.y.size() != k) {
    throw Error(ErrorCode::InvalidArgument,
                "need two tuples of the same positive length");
  }
  if (2 * k > static_cast<size_t>(ms.points())) {
    throw Error(ErrorCode::InvalidArgument,
                "tuples of length " + std::to_string(k) +
                    " do not fit disjointly in " +
                    std::to_string(ms.points()) + " points");
  }
  std::set<Point> seen;
  for (Point v : c.x) {
    ms.check_point(v);
    if (!seen.insert(v).second) {
      throw Error(ErrorCode::InvalidArgument,
                  "point " + std::to_string(v) + " repeats in the tuples");
    }
  }
  for (Point v : c.y) {
    ms.check_point(v);
    if (!seen.insert(v).second) {
      throw Error(ErrorCode::InvalidArgument,
                  "point " + std::to_string(v) + " repeats in the tuples");
    }
  }
  Rational value(0);
  for (size_t i = 0; i < k; ++i) {
    value += ms.dist(c.x[i], c.y[i]);
    value -= ms.dist(c.x[i], c.y[(i + 1) % k]);
  }
  return value;
}

std::uint64_t structure_hash(const CombinatorialStructure& s) {
  std::string text = std::to_string(s.n_points);
  for (const DirectedEdgeSet& t : s.facet_trees) {
    text += ";";
    text += canonical_key(t);
  }
  return fnv1a64(text);
}

CombinatorialStructure canonical_relabel(const CombinatorialStructure& s) {
  const int n = s.n_points;
  if (n > 8) {
    throw Error(ErrorCode::BudgetExceeded,
                "relabeling canonicalization is exhaustive over permutations "
                "and refuses beyond 8 points, got " +
                    std::to_string(n));
  }
  std::vector<Point> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::optional<std::vector<DirectedEdgeSet>> best;
  do {
    std::vector<DirectedEdgeSet> trees;
    trees.reserve(s.facet_trees.size());
    for (const DirectedEdgeSet& t : s.facet_trees) {
      trees.push_back(relabel(t, perm));
    }
    std::sort(trees.begin(), trees.end());
    if (!best || trees < *best) best = std::move(trees);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return CombinatorialStructure{n, std::move(*best)};
}

ClassReport count_classes(const std::vector<MetricSpace>& family, int jobs,
                          bool unlabelled) {
  ClassReport report;
  if (family.empty()) return report;
  const int n = family[0].points();
  for (const MetricSpace& ms : family) {
    if (ms.points() != n) {
      throw Error(ErrorCode::SizeMismatch,
                  "family mixes metrics on " + std::to_string(n) + " and " +
                      std::to_string(ms.points()) + " points");
    }
  }
  std::vector<std::optional<CombinatorialStructure>> structures(family.size());
  parallel_for(static_cast<int>(family.size()), jobs, [&](int i) {
    CombinatorialStructure s = combinatorial_structure(family[static_cast<size_t>(i)], 1);
    if (unlabelled) s = canonical_relabel(s);
    structures[static_cast<size_t>(i)] = std::move(s);
  });
  report.class_of.assign(family.size(), -1);
  for (size_t i = 0; i < family.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (*structures[i] == *structures[j]) {
        report.class_of[i] = report.class_of[j];
        ++report.class_size[static_cast<size_t>(report.class_of[i])];
        break;
      }
    }
    if (report.class_of[i] < 0) {
      report.class_of[i] = report.count++;
      report.representative.push_back(static_cast<int>(i));
      report.class_size.push_back(1);
      report.hashes.push_back(structure_hash(*structures[i]));
    }
  }
  return report;
}

}  // namespace lipkr
