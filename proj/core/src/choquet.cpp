#include "tmcap/choquet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tmcap {

RandomVariable::RandomVariable(Frame frame, std::vector<double> values)
    : frame_(std::move(frame)), values_(std::move(values)) {
  if (values_.size() != frame_.size()) {
    fail(ErrorCode::parse, "random variable needs one value per outcome");
  }
  for (const double v : values_) {
    if (!std::isfinite(v)) fail(ErrorCode::parse, "random variable values must be finite");
  }
}

namespace {

std::vector<double> values_from_map(const Frame& frame,
                                    const std::map<std::string, double>& by_label) {
  for (const auto& [label, value] : by_label) {
    (void)value;
    frame.index_of(label);  // E_UNKNOWN_LABEL on stray labels
  }
  std::vector<double> values(frame.size());
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const auto it = by_label.find(frame.label(i));
    if (it == by_label.end()) {
      fail(ErrorCode::parse, "random variable is missing a value for \"" + frame.label(i) + "\"");
    }
    values[i] = it->second;
  }
  return values;
}

}  // namespace

RandomVariable::RandomVariable(const Frame& frame,
                               const std::map<std::string, double>& by_label)
    : RandomVariable(frame, values_from_map(frame, by_label)) {}

double RandomVariable::min_on(SubsetMask set) const noexcept {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (set & (SubsetMask{1} << i)) best = std::min(best, values_[i]);
  }
  return best;
}

double RandomVariable::max_on(SubsetMask set) const noexcept {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (set & (SubsetMask{1} << i)) best = std::max(best, values_[i]);
  }
  return best;
}

RealCompactSet RandomVariable::image(SubsetMask set) const {
  std::vector<double> points;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (set & (SubsetMask{1} << i)) points.push_back(values_[i]);
  }
  return RealCompactSet::from_points(std::move(points));
}

std::vector<double> RandomVariable::range_values() const {
  std::vector<double> range = values_;
  std::sort(range.begin(), range.end());
  range.erase(std::unique(range.begin(), range.end()), range.end());
  return range;
}

double choquet_integral(const RandomVariable& x, const Capacity& capacity) {
  require_same_frame(x.frame(), capacity.frame(), "choquet_integral");

  // Outcomes sorted by decreasing value, equal values merged into one level
  // set. With distinct values v_1 > ... > v_m and upper sets A_i = {X >= v_i},
  // the integral is sum of v_i * (nu(A_i) - nu(A_{i-1})).
  std::vector<std::size_t> order(x.frame().size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return x.value(a) > x.value(b); });

  double integral = 0.0;
  double previous_nu = 0.0;
  SubsetMask upper = 0;
  std::size_t i = 0;
  while (i < order.size()) {
    const double level = x.value(order[i]);
    while (i < order.size() && x.value(order[i]) == level) {
      upper |= SubsetMask{1} << order[i];
      ++i;
    }
    const double nu = capacity.value(upper);
    integral += level * (nu - previous_nu);
    previous_nu = nu;
  }
  return integral;
}

double upper_choquet_integral(const RandomVariable& x, const Capacity& capacity) {
  std::vector<double> negated(x.values().size());
  for (std::size_t i = 0; i < negated.size(); ++i) negated[i] = -x.value(i);
  return -choquet_integral(RandomVariable(x.frame(), std::move(negated)), capacity);
}

Interval integral_interval(const RandomVariable& x, const Capacity& capacity) {
  const double lower = choquet_integral(x, capacity);
  const double upper = upper_choquet_integral(x, capacity);
  if (lower > upper) {
    if (lower - upper > kInternalTolerance) {
      fail(ErrorCode::usage,
           "lower integral exceeds upper integral; the capacity is not totally monotone");
    }
    // Rounding noise from a degenerate (additive) interval.
    return Interval(std::min(lower, upper), std::min(lower, upper));
  }
  return Interval(lower, upper);
}

}  // namespace tmcap
