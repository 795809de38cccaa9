#pragma once

#include <map>
#include <string>
#include <vector>

#include "tmcap/capacity.hpp"
#include "tmcap/frame.hpp"
#include "tmcap/random_sets.hpp"

namespace tmcap {

/// Real-valued function on the outcomes of a finite frame. Values are stored
/// in frame order; every random variable on a finite frame is simple and
/// bounded by construction.
class RandomVariable {
 public:
  RandomVariable(Frame frame, std::vector<double> values);
  RandomVariable(const Frame& frame, const std::map<std::string, double>& by_label);

  const Frame& frame() const noexcept { return frame_; }
  const std::vector<double>& values() const noexcept { return values_; }
  double value(std::size_t outcome) const noexcept { return values_[outcome]; }

  double min_on(SubsetMask set) const noexcept;
  double max_on(SubsetMask set) const noexcept;
  RealCompactSet image(SubsetMask set) const;
  // Distinct values, ascending.
  std::vector<double> range_values() const;

  friend bool operator==(const RandomVariable&, const RandomVariable&) = default;

 private:
  Frame frame_;
  std::vector<double> values_;
};

// Choquet integral of X against nu: the Riemann integral of t -> nu(X > t)
// (shifted by -1 on the negative axis), evaluated exactly for simple X as a
// telescoping sum over the level sets of X sorted by decreasing value. Ties
// are merged into level sets first, so tie-breaking in the sort cannot
// affect the result.
double choquet_integral(const RandomVariable& x, const Capacity& capacity);

// -integral(-X); the sign flip is formed exactly rather than going through
// the dual table, so agreement with dual_capacity is a checkable identity.
double upper_choquet_integral(const RandomVariable& x, const Capacity& capacity);

// [lower, upper] Choquet integrals; degenerate exactly when nu is additive.
Interval integral_interval(const RandomVariable& x, const Capacity& capacity);

}  // namespace tmcap
