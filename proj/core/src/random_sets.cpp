#include "tmcap/random_sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace tmcap {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    fail(ErrorCode::usage, "interval endpoints must be finite with lo <= hi");
  }
}

RealCompactSet RealCompactSet::from_points(std::vector<double> points) {
  if (points.empty()) {
    fail(ErrorCode::usage, "a compact set needs at least one point");
  }
  for (const double x : points) {
    if (!std::isfinite(x)) fail(ErrorCode::usage, "compact set points must be finite");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return RealCompactSet(std::move(points));
}

bool RealCompactSet::contains(double x, double tolerance) const noexcept {
  auto it = std::lower_bound(points_.begin(), points_.end(), x);
  if (it != points_.end() && *it - x <= tolerance) return true;
  if (it != points_.begin() && x - *(it - 1) <= tolerance) return true;
  return false;
}

RealCompactSet minkowski_sum(const RealCompactSet& a, const RealCompactSet& b,
                             std::uint64_t cardinality_budget) {
  const std::uint64_t candidates =
      static_cast<std::uint64_t>(a.size()) * static_cast<std::uint64_t>(b.size());
  if (candidates > cardinality_budget) {
    fail(ErrorCode::set_too_large,
         "Minkowski sum would produce " + std::to_string(candidates) +
             " candidate points, over the budget of " + std::to_string(cardinality_budget));
  }
  std::vector<double> sums;
  sums.reserve(candidates);
  for (const double x : a.points()) {
    for (const double y : b.points()) {
      sums.push_back(x + y);
    }
  }
  std::sort(sums.begin(), sums.end());
  std::vector<double> merged;
  merged.reserve(sums.size());
  for (const double s : sums) {
    if (merged.empty() || s - merged.back() > kMergeTolerance) {
      merged.push_back(s);
    }
  }
  return RealCompactSet::from_points(std::move(merged));
}

RealCompactSet scale_set(const RealCompactSet& a, double c) {
  std::vector<double> scaled;
  scaled.reserve(a.size());
  for (const double x : a.points()) scaled.push_back(c * x);
  return RealCompactSet::from_points(std::move(scaled));
}

Interval hull_interval(const RealCompactSet& a) { return Interval(a.min(), a.max()); }

namespace {

double distance_to_set(double x, const RealCompactSet& set) {
  const auto& pts = set.points();
  auto it = std::lower_bound(pts.begin(), pts.end(), x);
  double best = std::numeric_limits<double>::infinity();
  if (it != pts.end()) best = std::min(best, *it - x);
  if (it != pts.begin()) best = std::min(best, x - *(it - 1));
  return best;
}

double directed_set_to_set(const RealCompactSet& from, const RealCompactSet& to) {
  double worst = 0.0;
  for (const double x : from.points()) worst = std::max(worst, distance_to_set(x, to));
  return worst;
}

double distance_to_interval(double x, const Interval& interval) {
  if (x < interval.lo()) return interval.lo() - x;
  if (x > interval.hi()) return x - interval.hi();
  return 0.0;
}

}  // namespace

double hausdorff_distance(const RealCompactSet& a, const RealCompactSet& b) {
  return std::max(directed_set_to_set(a, b), directed_set_to_set(b, a));
}

double hausdorff_distance(const RealCompactSet& a, const Interval& b) {
  // Points of A against the interval.
  double from_a = 0.0;
  for (const double x : a.points()) from_a = std::max(from_a, distance_to_interval(x, b));

  // Interval against A: the distance function x -> d(x, A) restricted to
  // [lo, hi] peaks either at an endpoint of the interval or at the midpoint
  // of a gap of A that lies inside it.
  double from_b = std::max(distance_to_set(b.lo(), a), distance_to_set(b.hi(), a));
  const auto& pts = a.points();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double mid = 0.5 * (pts[i] + pts[i + 1]);
    if (mid >= b.lo() && mid <= b.hi()) {
      from_b = std::max(from_b, 0.5 * (pts[i + 1] - pts[i]));
    }
  }
  return std::max(from_a, from_b);
}

double hausdorff_distance(const Interval& a, const RealCompactSet& b) {
  return hausdorff_distance(b, a);
}

double hausdorff_distance(const Interval& a, const Interval& b) {
  return std::max(std::abs(a.lo() - b.lo()), std::abs(a.hi() - b.hi()));
}

ClusterBoundsReport cluster_bounds_check(std::span<const RealCompactSet> sets,
                                         const Interval& limit,
                                         std::span<const double> selection,
                                         const ClusterBoundsOptions& options) {
  if (sets.size() != selection.size() || sets.empty()) {
    fail(ErrorCode::usage, "cluster_bounds_check needs one selected point per set");
  }
  if (options.tail_fraction <= 0.0 || options.tail_fraction > 1.0) {
    fail(ErrorCode::usage, "tail_fraction must lie in (0, 1]");
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!sets[i].contains(selection[i], kDataTolerance)) {
      fail(ErrorCode::not_a_selection,
           "selection[" + std::to_string(i) + "] = " + std::to_string(selection[i]) +
               " is not a member of sets[" + std::to_string(i) + "]");
    }
  }

  const std::size_t window =
      std::max<std::size_t>(1, static_cast<std::size_t>(options.tail_fraction *
                                                        static_cast<double>(sets.size())));
  ClusterBoundsReport report;
  report.window_begin = sets.size() - window;
  report.tail_min = selection[report.window_begin];
  report.tail_max = selection[report.window_begin];
  for (std::size_t i = report.window_begin; i < sets.size(); ++i) {
    report.tail_min = std::min(report.tail_min, selection[i]);
    report.tail_max = std::max(report.tail_max, selection[i]);
    report.max_tail_hausdorff =
        std::max(report.max_tail_hausdorff, hausdorff_distance(sets[i], limit));
  }
  report.passed = report.tail_min >= limit.lo() - options.tolerance &&
                  report.tail_max <= limit.hi() + options.tolerance;
  return report;
}

}  // namespace tmcap
