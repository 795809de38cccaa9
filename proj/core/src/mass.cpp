#include "tmcap/mass.hpp"

#include <cmath>
#include <limits>

namespace tmcap {

namespace {

void check_mask_range(const Frame& frame, SubsetMask set, ErrorCode code) {
  if (set > frame.full_mask()) {
    fail(code, "subset mask " + std::to_string(set) + " does not fit a frame of size " +
                   std::to_string(frame.size()));
  }
}

}  // namespace

MassFunction::MassFunction(Frame frame, const std::map<SubsetMask, double>& weights)
    : frame_(std::move(frame)) {
  double total = 0.0;
  for (const auto& [set, weight] : weights) {
    check_mask_range(frame_, set, ErrorCode::mass_invalid);
    if (!std::isfinite(weight) || weight < 0.0) {
      fail(ErrorCode::mass_invalid,
           "weight of " + frame_.mask_to_string(set) + " must be finite and nonnegative");
    }
    if (weight == 0.0) continue;
    if (set == 0) {
      fail(ErrorCode::mass_invalid, "the empty set cannot carry mass");
    }
    weights_.emplace(set, weight);
    total += weight;
  }
  if (std::abs(total - 1.0) > kDataTolerance) {
    fail(ErrorCode::mass_invalid,
         "mass weights sum to " + std::to_string(total) + ", expected 1");
  }
}

MassFunction MassFunction::vacuous(Frame frame) {
  const SubsetMask full = frame.full_mask();
  return MassFunction(std::move(frame), {{full, 1.0}});
}

MassFunction MassFunction::from_singletons(Frame frame, std::span<const double> probabilities) {
  if (probabilities.size() != frame.size()) {
    fail(ErrorCode::mass_invalid, "need one probability per outcome");
  }
  std::map<SubsetMask, double> weights;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (probabilities[i] != 0.0) {
      weights.emplace(SubsetMask{1} << i, probabilities[i]);
    }
  }
  return MassFunction(std::move(frame), weights);
}

double MassFunction::weight(SubsetMask set) const noexcept {
  const auto it = weights_.find(set);
  return it == weights_.end() ? 0.0 : it->second;
}

SignedMass::SignedMass(Frame frame, const std::map<SubsetMask, double>& weights)
    : frame_(std::move(frame)) {
  double total = 0.0;
  for (const auto& [set, weight] : weights) {
    check_mask_range(frame_, set, ErrorCode::mass_invalid);
    if (!std::isfinite(weight)) {
      fail(ErrorCode::mass_invalid, "signed mass weights must be finite");
    }
    if (set == 0) {
      if (std::abs(weight) > kInternalTolerance) {
        fail(ErrorCode::mass_invalid, "the empty set cannot carry mass");
      }
      continue;
    }
    if (weight == 0.0) continue;
    weights_.emplace(set, weight);
    total += weight;
  }
  if (std::abs(total - 1.0) > kDataTolerance) {
    fail(ErrorCode::mass_invalid,
         "signed mass weights sum to " + std::to_string(total) + ", expected 1");
  }
}

double SignedMass::weight(SubsetMask set) const noexcept {
  const auto it = weights_.find(set);
  return it == weights_.end() ? 0.0 : it->second;
}

double SignedMass::min_weight() const noexcept {
  double least = std::numeric_limits<double>::infinity();
  for (const auto& [set, weight] : weights_) {
    (void)set;
    least = std::min(least, weight);
  }
  return weights_.empty() ? 0.0 : least;
}

MassFunction SignedMass::to_mass_function(double tolerance) const {
  std::map<SubsetMask, double> clamped;
  for (const auto& [set, weight] : weights_) {
    if (weight < -tolerance) {
      fail(ErrorCode::mass_invalid,
           "weight of " + frame_.mask_to_string(set) + " is negative (" +
               std::to_string(weight) + "); capacity is not totally monotone");
    }
    if (weight > 0.0) clamped.emplace(set, weight);
  }
  return MassFunction(frame_, clamped);
}

}  // namespace tmcap
