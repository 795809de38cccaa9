#include "tmcap/representation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tmcap {

FrameCorrespondence::FrameCorrespondence(Frame frame, std::vector<FocalCell> cells)
    : frame_(std::move(frame)), cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end(),
            [](const FocalCell& a, const FocalCell& b) { return a.focal < b.focal; });
  double total = 0.0;
  SubsetMask previous = 0;
  for (const auto& cell : cells_) {
    if (cell.focal == 0 || cell.focal > frame_.full_mask()) {
      fail(ErrorCode::mass_invalid, "focal elements must be nonempty subsets of the frame");
    }
    if (cell.focal == previous) {
      fail(ErrorCode::mass_invalid,
           "duplicate focal element " + frame_.mask_to_string(cell.focal));
    }
    if (!std::isfinite(cell.weight) || cell.weight <= 0.0) {
      fail(ErrorCode::mass_invalid, "cell weights must be positive");
    }
    previous = cell.focal;
    total += cell.weight;
  }
  if (std::abs(total - 1.0) > kDataTolerance) {
    fail(ErrorCode::mass_invalid,
         "cell weights sum to " + std::to_string(total) + ", expected 1");
  }
}

RealCorrespondence::RealCorrespondence(std::vector<RealCell> cells) : cells_(std::move(cells)) {
  double total = 0.0;
  for (const auto& cell : cells_) {
    if (!std::isfinite(cell.weight) || cell.weight <= 0.0) {
      fail(ErrorCode::mass_invalid, "cell weights must be positive");
    }
    total += cell.weight;
  }
  if (std::abs(total - 1.0) > kDataTolerance) {
    fail(ErrorCode::mass_invalid,
         "cell weights sum to " + std::to_string(total) + ", expected 1");
  }
}

FrameCorrespondence correspondence_from_mass(const MassFunction& mass) {
  std::vector<FocalCell> cells;
  cells.reserve(mass.focal_count());
  for (const auto& [set, weight] : mass.weights()) {
    cells.push_back({weight, set});
  }
  return FrameCorrespondence(mass.frame(), std::move(cells));
}

Capacity lower_distribution(const FrameCorrespondence& correspondence) {
  // lambda(F^{-1}(B)) reduces to the subset-sum of cell weights, i.e. the
  // capacity of the mass function the cells encode.
  std::map<SubsetMask, double> weights;
  for (const auto& cell : correspondence.cells()) {
    weights.emplace(cell.focal, cell.weight);
  }
  return capacity_from_mass(MassFunction(correspondence.frame(), weights));
}

RealCorrespondence compose_rv(const RandomVariable& x,
                              const FrameCorrespondence& correspondence) {
  require_same_frame(x.frame(), correspondence.frame(), "compose_rv");
  std::vector<RealCell> cells;
  cells.reserve(correspondence.cells().size());
  for (const auto& cell : correspondence.cells()) {
    cells.push_back({cell.weight, x.image(cell.focal)});
  }
  return RealCorrespondence(std::move(cells));
}

Interval aumann_integral(const RealCorrespondence& correspondence) {
  double lo = 0.0;
  double hi = 0.0;
  for (const auto& cell : correspondence.cells()) {
    lo += cell.weight * cell.value.min();
    hi += cell.weight * cell.value.max();
  }
  return Interval(lo, hi);
}

Interval selection_integral_oracle(const RealCorrespondence& correspondence,
                                   std::uint64_t selection_budget) {
  const auto& cells = correspondence.cells();
  std::uint64_t selections = 1;
  for (const auto& cell : cells) {
    if (selections > selection_budget / cell.value.size()) {
      fail(ErrorCode::set_too_large, "selection enumeration exceeds the budget of " +
                                         std::to_string(selection_budget));
    }
    selections *= cell.value.size();
  }

  // Mixed-radix walk through all step selections. Summation follows cell order,
  // matching aumann_integral term for term, so the extreme selections
  // reproduce its endpoints bit for bit.
  std::vector<std::size_t> digits(cells.size(), 0);
  double best_lo = std::numeric_limits<double>::infinity();
  double best_hi = -std::numeric_limits<double>::infinity();
  for (std::uint64_t s = 0; s < selections; ++s) {
    double integral = 0.0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      integral += cells[i].weight * cells[i].value.points()[digits[i]];
    }
    best_lo = std::min(best_lo, integral);
    best_hi = std::max(best_hi, integral);
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < cells[i].value.size()) break;
      digits[i] = 0;
    }
  }
  return Interval(best_lo, best_hi);
}

}  // namespace tmcap
