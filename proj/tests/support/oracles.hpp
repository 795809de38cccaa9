#pragma once

// Independent oracles used to cross-check the library. These deliberately
// avoid the implementation's code paths: capacities are evaluated by literal
// containment sums, Moebius weights by the inclusion-exclusion formula, and
// Choquet integrals by midpoint quadrature of the survival function.

#include <algorithm>
#include <cmath>

#include "tmcap/capacity.hpp"
#include "tmcap/choquet.hpp"
#include "tmcap/mass.hpp"

namespace tmcap::oracle {

inline double capacity_value_brute(const MassFunction& mass, SubsetMask set) {
  double total = 0.0;
  for (const auto& [focal, weight] : mass.weights()) {
    if (is_subset_of(focal, set)) total += weight;
  }
  return total;
}

inline double mobius_weight_brute(const Capacity& capacity, SubsetMask set) {
  double total = 0.0;
  SubsetMask sub = set;
  while (true) {
    const int removed = set_size(set) - set_size(sub);
    total += (removed % 2 == 0 ? 1.0 : -1.0) * capacity.value(sub);
    if (sub == 0) break;
    sub = (sub - 1) & set;
  }
  return total;
}

// E[min X(B)] or E[max X(B)] over the focal distribution; these equal the
// lower and upper Choquet integrals.
inline double expected_extreme(const MassFunction& mass, const RandomVariable& x,
                               bool maximum) {
  double total = 0.0;
  for (const auto& [focal, weight] : mass.weights()) {
    total += weight * (maximum ? x.max_on(focal) : x.min_on(focal));
  }
  return total;
}

// Midpoint quadrature of nu({X > t}) dt (+ the shifted negative part).
// Error is bounded by ~2 * step because the survival function is a monotone
// step function with total variation 1.
inline double choquet_riemann(const RandomVariable& x, const Capacity& capacity, double step) {
  const auto& values = x.values();
  const double top = std::max(0.0, *std::max_element(values.begin(), values.end())) + step;
  const double bottom = std::min(0.0, *std::min_element(values.begin(), values.end())) - step;
  const auto survival = [&](double t) {
    SubsetMask above = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] > t) above |= SubsetMask{1} << i;
    }
    return capacity.value(above);
  };
  double total = 0.0;
  for (double t = step / 2; t < top; t += step) total += step * survival(t);
  for (double t = -step / 2; t > bottom; t -= step) total += step * (survival(t) - 1.0);
  return total;
}

}  // namespace tmcap::oracle
