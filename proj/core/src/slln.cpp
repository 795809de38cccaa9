#include "tmcap/slln.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tmcap/rng.hpp"

namespace tmcap {

SelectionMoments selection_moments(const MassFunction& mass, const RandomVariable& x) {
  require_same_frame(mass.frame(), x.frame(), "selection_moments");
  SelectionMoments moments;
  double min_sq = 0.0;
  double max_sq = 0.0;
  for (const auto& [set, weight] : mass.weights()) {
    const double lo = x.min_on(set);
    const double hi = x.max_on(set);
    moments.min_mean += weight * lo;
    moments.max_mean += weight * hi;
    min_sq += weight * lo * lo;
    max_sq += weight * hi * hi;
  }
  moments.min_sd = std::sqrt(std::max(0.0, min_sq - moments.min_mean * moments.min_mean));
  moments.max_sd = std::sqrt(std::max(0.0, max_sq - moments.max_mean * moments.max_mean));
  return moments;
}

namespace {

// Categorical sampler over focal elements, probabilities equal to masses.
// Bucket boundaries are the running sums of the weights in canonical order.
class FocalSampler {
 public:
  explicit FocalSampler(const MassFunction& mass) {
    double cumulative = 0.0;
    for (const auto& [set, weight] : mass.weights()) {
      cumulative += weight;
      focals_.push_back(set);
      boundaries_.push_back(cumulative);
    }
  }

  std::size_t cell_count() const noexcept { return focals_.size(); }
  SubsetMask focal(std::size_t index) const noexcept { return focals_[index]; }

  std::size_t draw(std::mt19937_64& engine) const noexcept {
    const double u = uniform01(engine);
    const auto it = std::upper_bound(boundaries_.begin(), boundaries_.end(), u);
    if (it == boundaries_.end()) return focals_.size() - 1;  // u past a short final sum
    return static_cast<std::size_t>(it - boundaries_.begin());
  }

 private:
  std::vector<SubsetMask> focals_;
  std::vector<double> boundaries_;
};

void check_focals(const RandomVariable& x, std::span<const SubsetMask> focals) {
  if (focals.empty()) {
    fail(ErrorCode::usage, "need at least one focal element");
  }
  for (const SubsetMask set : focals) {
    if (set > x.frame().full_mask()) {
      fail(ErrorCode::frame_mismatch, "focal element does not fit the variable's frame");
    }
    if (set == 0) {
      fail(ErrorCode::mass_invalid, "focal elements must be nonempty");
    }
  }
}

}  // namespace

std::vector<SubsetMask> sample_focal_sequence(const MassFunction& mass, std::uint64_t n,
                                              std::uint64_t seed, std::uint64_t replication) {
  const FocalSampler sampler(mass);
  std::mt19937_64 engine = replication_stream(seed, replication);
  std::vector<SubsetMask> focals;
  focals.reserve(n);
  for (std::uint64_t j = 0; j < n; ++j) {
    focals.push_back(sampler.focal(sampler.draw(engine)));
  }
  return focals;
}

std::vector<Interval> empirical_average_interval(const RandomVariable& x,
                                                 std::span<const SubsetMask> focals) {
  check_focals(x, focals);
  std::vector<Interval> trace;
  trace.reserve(focals.size());
  double sum_min = 0.0;
  double sum_max = 0.0;
  for (std::size_t j = 0; j < focals.size(); ++j) {
    sum_min += x.min_on(focals[j]);
    sum_max += x.max_on(focals[j]);
    const double steps = static_cast<double>(j + 1);
    trace.emplace_back(sum_min / steps, sum_max / steps);
  }
  return trace;
}

RealCompactSet empirical_average_set_exact(const RandomVariable& x,
                                           std::span<const SubsetMask> focals,
                                           std::uint64_t cardinality_budget) {
  check_focals(x, focals);
  RealCompactSet sum = x.image(focals[0]);
  for (std::size_t j = 1; j < focals.size(); ++j) {
    sum = minkowski_sum(sum, x.image(focals[j]), cardinality_budget);
  }
  // Scale by 1/n, realized as division so the endpoints match the running
  // averages bit for bit.
  const double steps = static_cast<double>(focals.size());
  std::vector<double> scaled;
  scaled.reserve(sum.size());
  for (const double p : sum.points()) scaled.push_back(p / steps);
  return RealCompactSet::from_points(std::move(scaled));
}

namespace {

// Events {X in G} for every subset G of the variable's range, built
// incrementally over the range bits.
std::vector<SubsetMask> event_masks(const RandomVariable& x, std::span<const double> range) {
  if (range.size() > 20) {
    fail(ErrorCode::too_large, "range of size " + std::to_string(range.size()) +
                                   " makes subset-event enumeration infeasible");
  }
  std::vector<SubsetMask> value_mask(range.size(), 0);
  for (std::size_t v = 0; v < range.size(); ++v) {
    for (std::size_t i = 0; i < x.frame().size(); ++i) {
      if (x.value(i) == range[v]) value_mask[v] |= SubsetMask{1} << i;
    }
  }
  std::vector<SubsetMask> events(std::size_t{1} << range.size(), 0);
  for (std::uint32_t g = 1; g < events.size(); ++g) {
    const int low = std::countr_zero(g);
    events[g] = events[g & (g - 1)] | value_mask[static_cast<std::size_t>(low)];
  }
  return events;
}

std::vector<double> values_of(std::span<const double> range, std::uint32_t subset) {
  std::vector<double> out;
  for (std::size_t v = 0; v < range.size(); ++v) {
    if (subset & (std::uint32_t{1} << v)) out.push_back(range[v]);
  }
  return out;
}

}  // namespace

IndependenceReport verify_pairwise_independence(const MassFunction& joint,
                                                const RandomVariable& first,
                                                const RandomVariable& second) {
  require_same_frame(joint.frame(), first.frame(), "verify_pairwise_independence");
  require_same_frame(joint.frame(), second.frame(), "verify_pairwise_independence");

  const Capacity capacity = capacity_from_mass(joint);
  const std::vector<double> range1 = first.range_values();
  const std::vector<double> range2 = second.range_values();
  const std::vector<SubsetMask> events1 = event_masks(first, range1);
  const std::vector<SubsetMask> events2 = event_masks(second, range2);

  IndependenceReport report;
  for (std::uint32_t g1 = 0; g1 < events1.size(); ++g1) {
    for (std::uint32_t g2 = 0; g2 < events2.size(); ++g2) {
      const double joint_value = capacity.value(events1[g1] & events2[g2]);
      const double product = capacity.value(events1[g1]) * capacity.value(events2[g2]);
      if (std::abs(joint_value - product) > kInternalTolerance) {
        report.violations.push_back(
            {values_of(range1, g1), values_of(range2, g2), joint_value, product});
      }
    }
  }
  report.passed = report.violations.empty();
  return report;
}

DistributionReport verify_identical_distribution(const MassFunction& joint,
                                                 const RandomVariable& first,
                                                 const RandomVariable& second) {
  require_same_frame(joint.frame(), first.frame(), "verify_identical_distribution");
  require_same_frame(joint.frame(), second.frame(), "verify_identical_distribution");

  const Capacity capacity = capacity_from_mass(joint);
  std::vector<double> range = first.range_values();
  for (const double v : second.range_values()) range.push_back(v);
  std::sort(range.begin(), range.end());
  range.erase(std::unique(range.begin(), range.end()), range.end());

  const std::vector<SubsetMask> events1 = event_masks(first, range);
  const std::vector<SubsetMask> events2 = event_masks(second, range);

  DistributionReport report;
  for (std::uint32_t g = 0; g < events1.size(); ++g) {
    const double lhs = capacity.value(events1[g]);
    const double rhs = capacity.value(events2[g]);
    if (std::abs(lhs - rhs) > kInternalTolerance) {
      report.violations.push_back({values_of(range, g), lhs, rhs});
    }
  }
  report.passed = report.violations.empty();
  return report;
}

RandomVariable lift_first(const ProductLayout& layout, const RandomVariable& x) {
  require_same_frame(x.frame(), layout.left, "lift_first");
  std::vector<double> values(layout.product.size());
  for (std::size_t i = 0; i < layout.left.size(); ++i) {
    for (std::size_t j = 0; j < layout.right.size(); ++j) {
      values[i * layout.right.size() + j] = x.value(i);
    }
  }
  return RandomVariable(layout.product, std::move(values));
}

RandomVariable lift_second(const ProductLayout& layout, const RandomVariable& x) {
  require_same_frame(x.frame(), layout.right, "lift_second");
  std::vector<double> values(layout.product.size());
  for (std::size_t i = 0; i < layout.left.size(); ++i) {
    for (std::size_t j = 0; j < layout.right.size(); ++j) {
      values[i * layout.right.size() + j] = x.value(j);
    }
  }
  return RandomVariable(layout.product, std::move(values));
}

GateResult limit_law_gate(const SllnReport& report, double tolerance_lo, double tolerance_hi) {
  GateResult result;
  for (const auto& rep : report.replications) {
    const double low_bound = report.target.lo() - tolerance_lo;
    const double high_bound = report.target.hi() + tolerance_hi;
    if (rep.tail_low < low_bound) {
      result.failures.push_back(
          {rep.replication, "tail min-avg fell below target.lo - tolerance", rep.tail_low,
           low_bound});
    }
    if (rep.tail_high > high_bound) {
      result.failures.push_back(
          {rep.replication, "tail max-avg rose above target.hi + tolerance", rep.tail_high,
           high_bound});
    }
    if (std::abs(rep.final_min_avg - report.target.lo()) > tolerance_lo) {
      result.failures.push_back(
          {rep.replication, "final min-avg deviates from target.lo beyond tolerance",
           rep.final_min_avg, tolerance_lo});
    }
    if (std::abs(rep.final_max_avg - report.target.hi()) > tolerance_hi) {
      result.failures.push_back(
          {rep.replication, "final max-avg deviates from target.hi beyond tolerance",
           rep.final_max_avg, tolerance_hi});
    }
  }
  result.passed = result.failures.empty();
  return result;
}

GateResult limit_law_gate(const SllnReport& report, double tolerance) {
  return limit_law_gate(report, tolerance, tolerance);
}

SllnReport run_slln_experiment(const ExperimentConfig& config) {
  require_same_frame(config.mass.frame(), config.rv.frame(), "run_slln_experiment");
  if (config.horizon == 0 || config.replications == 0) {
    fail(ErrorCode::usage, "horizon and replications must be positive");
  }
  if (config.tail_fraction <= 0.0 || config.tail_fraction > 1.0) {
    fail(ErrorCode::usage, "tail_fraction must lie in (0, 1]");
  }
  if (config.tolerance && *config.tolerance <= 0.0) {
    fail(ErrorCode::usage, "tolerance must be positive");
  }
  if (config.horizon > config.step_budget / config.replications) {
    fail(ErrorCode::budget,
         "horizon * replications exceeds the step budget of " +
             std::to_string(config.step_budget));
  }

  SllnReport report;
  report.target = integral_interval(config.rv, capacity_from_mass(config.mass));
  report.tail_fraction = config.tail_fraction;
  report.horizon = config.horizon;
  report.seed = config.seed;
  report.trace_stride =
      config.trace_stride != 0 ? config.trace_stride : std::max<std::uint64_t>(1, config.horizon / 1000);

  if (config.tolerance) {
    report.tolerance_lo = *config.tolerance;
    report.tolerance_hi = *config.tolerance;
  } else {
    // CLT scaling for the endpoint sequences, floored to absorb float
    // accumulation when a selection is almost surely constant (sd = 0).
    const SelectionMoments moments = selection_moments(config.mass, config.rv);
    const double root_n = std::sqrt(static_cast<double>(config.horizon));
    const double floor =
        1e-9 * std::max({1.0, std::abs(report.target.lo()), std::abs(report.target.hi())});
    report.tolerance_lo = std::max(4.0 * moments.min_sd / root_n, floor);
    report.tolerance_hi = std::max(4.0 * moments.max_sd / root_n, floor);
  }

  const FocalSampler sampler(config.mass);
  std::vector<double> cell_min(sampler.cell_count());
  std::vector<double> cell_max(sampler.cell_count());
  for (std::size_t c = 0; c < sampler.cell_count(); ++c) {
    cell_min[c] = config.rv.min_on(sampler.focal(c));
    cell_max[c] = config.rv.max_on(sampler.focal(c));
  }

  const std::uint64_t window =
      std::max<std::uint64_t>(1, static_cast<std::uint64_t>(config.tail_fraction *
                                                            static_cast<double>(config.horizon)));
  const std::uint64_t window_begin = config.horizon - window + 1;

  report.replications.reserve(config.replications);
  for (std::uint32_t r = 0; r < config.replications; ++r) {
    std::mt19937_64 engine = replication_stream(config.seed, r);
    ReplicationSummary summary;
    summary.replication = r;
    summary.tail_low = std::numeric_limits<double>::infinity();
    summary.tail_high = -std::numeric_limits<double>::infinity();

    double sum_min = 0.0;
    double sum_max = 0.0;
    double avg_min = 0.0;
    double avg_max = 0.0;
    for (std::uint64_t j = 1; j <= config.horizon; ++j) {
      const std::size_t cell = sampler.draw(engine);
      sum_min += cell_min[cell];
      sum_max += cell_max[cell];
      const double steps = static_cast<double>(j);
      avg_min = sum_min / steps;
      avg_max = sum_max / steps;
      if (j >= window_begin) {
        summary.tail_low = std::min(summary.tail_low, avg_min);
        summary.tail_high = std::max(summary.tail_high, avg_max);
      }
      if (j % report.trace_stride == 0 || j == config.horizon) {
        summary.trace.push_back({j, avg_min, avg_max});
      }
    }
    summary.final_min_avg = avg_min;
    summary.final_max_avg = avg_max;
    report.replications.push_back(std::move(summary));
  }

  GateResult gate = limit_law_gate(report, report.tolerance_lo, report.tolerance_hi);
  report.passed = gate.passed;
  report.failures = std::move(gate.failures);
  return report;
}

}  // namespace tmcap
