#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tmcap/errors.hpp"
#include "tmcap/tolerances.hpp"

namespace tmcap {

/// Closed bounded interval [lo, hi]. Intervals appear as limit objects and as
/// the value of the Aumann integral; they are never sampled pointwise.
class Interval {
 public:
  Interval() : lo_(0.0), hi_(0.0) {}
  Interval(double lo, double hi);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double length() const noexcept { return hi_ - lo_; }
  bool contains(double x, double tolerance = 0.0) const noexcept {
    return x >= lo_ - tolerance && x <= hi_ + tolerance;
  }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_;
  double hi_;
};

/// Nonempty finite subset of the reals, kept strictly increasing. These are
/// the only compact sets the library manipulates: every image of a finite
/// frame under a random variable is one.
class RealCompactSet {
 public:
  // Sorts and drops exact duplicates.
  static RealCompactSet from_points(std::vector<double> points);

  const std::vector<double>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  double min() const noexcept { return points_.front(); }
  double max() const noexcept { return points_.back(); }
  bool contains(double x, double tolerance) const noexcept;

  friend bool operator==(const RealCompactSet&, const RealCompactSet&) = default;

 private:
  explicit RealCompactSet(std::vector<double> points) : points_(std::move(points)) {}

  std::vector<double> points_;
};

// {a + b : a in A, b in B}; candidate points within kMergeTolerance of each
// other are merged. Throws E_SET_TOO_LARGE when |A|*|B| exceeds the budget.
RealCompactSet minkowski_sum(const RealCompactSet& a, const RealCompactSet& b,
                             std::uint64_t cardinality_budget = kDefaultSetBudget);

// {c * a : a in A}.
RealCompactSet scale_set(const RealCompactSet& a, double c);

Interval hull_interval(const RealCompactSet& a);

double hausdorff_distance(const RealCompactSet& a, const RealCompactSet& b);
double hausdorff_distance(const RealCompactSet& a, const Interval& b);
double hausdorff_distance(const Interval& a, const RealCompactSet& b);
double hausdorff_distance(const Interval& a, const Interval& b);

struct ClusterBoundsOptions {
  double tail_fraction = 0.1;  // portion of the sequence treated as "the tail"
  double tolerance = 0.0;      // slack added to both interval endpoints
};

struct ClusterBoundsReport {
  bool passed = false;
  std::size_t window_begin = 0;  // first index of the tail window
  double tail_min = 0.0;         // extremes of the selection over the window
  double tail_max = 0.0;
  double max_tail_hausdorff = 0.0;  // max d_H(sets[j], limit) over the window
};

// Finite-horizon surrogate of the cluster-point bound: given sets K_n
// converging to `limit` and a selection k_n in K_n, the tail extremes of the
// selection must fall inside the inflated limit interval. Throws
// E_NOT_A_SELECTION if some k_n is farther than 1e-9 from every point of K_n.
ClusterBoundsReport cluster_bounds_check(std::span<const RealCompactSet> sets,
                                         const Interval& limit,
                                         std::span<const double> selection,
                                         const ClusterBoundsOptions& options);

}  // namespace tmcap
