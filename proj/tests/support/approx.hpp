#pragma once

#include <cmath>

namespace tmcap::testgen {

// Absolute-tolerance comparison; tolerances in this suite are absolute.
inline bool within(double actual, double expected, double tolerance) {
  return std::abs(actual - expected) <= tolerance;
}

}  // namespace tmcap::testgen
