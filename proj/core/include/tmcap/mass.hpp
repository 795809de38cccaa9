#pragma once

#include <map>

#include "tmcap/frame.hpp"
#include "tmcap/tolerances.hpp"

namespace tmcap {

/// Nonnegative Moebius weights on subsets of a finite frame; the canonical
/// encoding of a totally monotone capacity. The empty set carries no weight,
/// weights sum to one, and zero-weight entries are dropped so that equality
/// of mass functions is structural.
class MassFunction {
 public:
  MassFunction(Frame frame, const std::map<SubsetMask, double>& weights);

  static MassFunction vacuous(Frame frame);
  // Additive mass: one singleton focal element per outcome.
  static MassFunction from_singletons(Frame frame, std::span<const double> probabilities);

  const Frame& frame() const noexcept { return frame_; }
  const std::map<SubsetMask, double>& weights() const noexcept { return weights_; }
  double weight(SubsetMask set) const noexcept;
  std::size_t focal_count() const noexcept { return weights_.size(); }

  friend bool operator==(const MassFunction&, const MassFunction&) = default;

 private:
  Frame frame_;
  std::map<SubsetMask, double> weights_;
};

/// Moebius transform of an arbitrary capacity. Weights may be negative; a
/// totally monotone capacity is exactly one whose signed mass is nonnegative.
class SignedMass {
 public:
  SignedMass(Frame frame, const std::map<SubsetMask, double>& weights);

  const Frame& frame() const noexcept { return frame_; }
  const std::map<SubsetMask, double>& weights() const noexcept { return weights_; }
  double weight(SubsetMask set) const noexcept;
  double min_weight() const noexcept;

  // Converts to a MassFunction, clamping weights within `tolerance` of zero.
  // Throws E_MASS_INVALID if any weight is more negative than -tolerance.
  MassFunction to_mass_function(double tolerance = kInternalTolerance) const;

  friend bool operator==(const SignedMass&, const SignedMass&) = default;

 private:
  Frame frame_;
  std::map<SubsetMask, double> weights_;
};

}  // namespace tmcap
