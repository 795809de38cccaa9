#pragma once

#include <vector>

#include "tmcap/capacity.hpp"
#include "tmcap/choquet.hpp"
#include "tmcap/frame.hpp"
#include "tmcap/mass.hpp"
#include "tmcap/random_sets.hpp"

namespace tmcap {

/// Step-function correspondence on a nonatomic base space, represented by
/// the measure of each step (cell) and its focal element. Only these cell
/// weights ever enter a computation on a finite frame, so the base space is
/// never materialized.
struct FocalCell {
  double weight = 0.0;
  SubsetMask focal = 0;

  friend bool operator==(const FocalCell&, const FocalCell&) = default;
};

class FrameCorrespondence {
 public:
  // Validates: positive weights summing to one, nonempty distinct focal
  // elements. Cells are kept in ascending mask order so equality is
  // structural.
  FrameCorrespondence(Frame frame, std::vector<FocalCell> cells);

  const Frame& frame() const noexcept { return frame_; }
  const std::vector<FocalCell>& cells() const noexcept { return cells_; }

  friend bool operator==(const FrameCorrespondence&, const FrameCorrespondence&) = default;

 private:
  Frame frame_;
  std::vector<FocalCell> cells_;
};

/// Real-set-valued correspondence: the composition of a random variable with
/// a frame correspondence, one compact value per cell.
struct RealCell {
  double weight = 0.0;
  RealCompactSet value = RealCompactSet::from_points({0.0});

  friend bool operator==(const RealCell&, const RealCell&) = default;
};

class RealCorrespondence {
 public:
  explicit RealCorrespondence(std::vector<RealCell> cells);

  const std::vector<RealCell>& cells() const noexcept { return cells_; }

  friend bool operator==(const RealCorrespondence&, const RealCorrespondence&) = default;

 private:
  std::vector<RealCell> cells_;
};

// One cell per focal element; realizes the capacity of `mass` as a lower
// distribution.
FrameCorrespondence correspondence_from_mass(const MassFunction& mass);

// nu_F(B) = total weight of cells whose focal element is contained in B.
Capacity lower_distribution(const FrameCorrespondence& correspondence);

// Pointwise image: cell i becomes (weight_i, X(focal_i)).
RealCorrespondence compose_rv(const RandomVariable& x, const FrameCorrespondence& correspondence);

// Aumann integral of a finite-cell correspondence: the interval
// [sum w_i * min value_i, sum w_i * max value_i]. For compositions through a
// mass function this coincides with the lower/upper Choquet interval.
Interval aumann_integral(const RealCorrespondence& correspondence);

// Brute-force integral: enumerates every step selection (one point per
// cell), integrates each, and returns the hull of the resulting values. The
// hull closes the convexification that nonatomicity provides over step
// selections; the result must equal aumann_integral exactly. Throws
// E_SET_TOO_LARGE when the number of selections exceeds the budget.
Interval selection_integral_oracle(const RealCorrespondence& correspondence,
                                   std::uint64_t selection_budget = kDefaultSetBudget);

}  // namespace tmcap
