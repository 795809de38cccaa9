#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tmcap/capacity.hpp"
#include "tmcap/choquet.hpp"
#include "tmcap/frame.hpp"
#include "tmcap/mass.hpp"
#include "tmcap/random_sets.hpp"

namespace tmcap {

// Exact moments of the one-step extreme selections min X(B) and max X(B)
// under B ~ mass. The means coincide with the lower and upper Choquet
// integrals; the standard deviations set the default gate tolerance.
struct SelectionMoments {
  double min_mean = 0.0;
  double min_sd = 0.0;
  double max_mean = 0.0;
  double max_sd = 0.0;
};

SelectionMoments selection_moments(const MassFunction& mass, const RandomVariable& x);

// I.i.d. categorical draws of focal elements with probabilities equal to the
// masses. Deterministic given (seed, replication).
std::vector<SubsetMask> sample_focal_sequence(const MassFunction& mass, std::uint64_t n,
                                              std::uint64_t seed, std::uint64_t replication);

// Entry j (1-based step) is [avg of min X(B_1..j), avg of max X(B_1..j)]:
// the hull of the Minkowski average, tracked in constant memory per step.
std::vector<Interval> empirical_average_interval(const RandomVariable& x,
                                                 std::span<const SubsetMask> focals);

// The literal Minkowski average (1/n)(X(B_1) + ... + X(B_n)) as a point set.
// Intended for small n; its hull equals the last empirical_average_interval
// entry exactly.
RealCompactSet empirical_average_set_exact(const RandomVariable& x,
                                           std::span<const SubsetMask> focals,
                                           std::uint64_t cardinality_budget = kDefaultSetBudget);

// --- exact verification of the p.i.i.d. definitions ------------------------

struct IndependenceViolation {
  std::vector<double> first_event;   // value set G1 for the first variable
  std::vector<double> second_event;  // value set G2 for the second variable
  double joint_value = 0.0;          // nu(X1 in G1, X2 in G2)
  double product_value = 0.0;        // nu(X1 in G1) * nu(X2 in G2)

  friend bool operator==(const IndependenceViolation&, const IndependenceViolation&) = default;
};

struct IndependenceReport {
  bool passed = true;
  std::vector<IndependenceViolation> violations;
};

struct DistributionViolation {
  std::vector<double> event;   // value set G
  double first_value = 0.0;    // nu(X1 in G)
  double second_value = 0.0;   // nu(X2 in G)

  friend bool operator==(const DistributionViolation&, const DistributionViolation&) = default;
};

struct DistributionReport {
  bool passed = true;
  std::vector<DistributionViolation> violations;
};

// Checks nu(X1 in G1, X2 in G2) = nu(X1 in G1) * nu(X2 in G2) within 1e-12
// for every pair of subsets of the finite ranges (on a finite range every
// subset is open). The joint mass may be arbitrary; X1 and X2 are expected
// to depend on their own coordinate only, which lift_first/lift_second
// guarantee by construction.
IndependenceReport verify_pairwise_independence(const MassFunction& joint,
                                                const RandomVariable& first,
                                                const RandomVariable& second);

// Checks nu(X1 in G) = nu(X2 in G) exactly for every subset G of the union
// of the two ranges.
DistributionReport verify_identical_distribution(const MassFunction& joint,
                                                 const RandomVariable& first,
                                                 const RandomVariable& second);

// Coordinate random variables on a product frame.
RandomVariable lift_first(const ProductLayout& layout, const RandomVariable& x);
RandomVariable lift_second(const ProductLayout& layout, const RandomVariable& x);

// --- Monte Carlo verification of the limit law -----------------------------

struct ExperimentConfig {
  MassFunction mass;
  RandomVariable rv;
  std::uint64_t horizon = 0;       // n, steps per replication
  std::uint32_t replications = 1;  // R
  std::uint64_t seed = 0;
  double tail_fraction = 0.1;      // last part of each trace examined by the gate
  // Per-endpoint gate tolerance. Unset means 4 * sd / sqrt(n) computed from
  // the exact one-step selection moments.
  std::optional<double> tolerance;
  std::uint64_t trace_stride = 0;  // 0: max(1, horizon / 1000)
  std::uint64_t step_budget = 100'000'000;  // bound on horizon * replications
};

struct TracePoint {
  std::uint64_t step = 0;
  double min_avg = 0.0;
  double max_avg = 0.0;

  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

struct ReplicationSummary {
  std::uint32_t replication = 0;
  double final_min_avg = 0.0;
  double final_max_avg = 0.0;
  // Extremes of the running averages over the tail window, computed over
  // every step regardless of the trace stride.
  double tail_low = 0.0;
  double tail_high = 0.0;
  std::vector<TracePoint> trace;

  friend bool operator==(const ReplicationSummary&, const ReplicationSummary&) = default;
};

struct GateFailure {
  std::uint32_t replication = 0;
  std::string reason;
  double value = 0.0;
  double bound = 0.0;

  friend bool operator==(const GateFailure&, const GateFailure&) = default;
};

struct SllnReport {
  Interval target;
  double tolerance_lo = 0.0;
  double tolerance_hi = 0.0;
  double tail_fraction = 0.1;
  std::uint64_t horizon = 0;
  std::uint64_t trace_stride = 1;
  std::uint64_t seed = 0;
  std::vector<ReplicationSummary> replications;
  bool passed = false;
  std::vector<GateFailure> failures;

  friend bool operator==(const SllnReport&, const SllnReport&) = default;
};

struct GateResult {
  bool passed = true;
  std::vector<GateFailure> failures;
};

// Finite-horizon surrogate of the almost-sure event of the limit law: every
// replication must keep its tail-window running averages inside the inflated
// target interval and land its final averages within tolerance of the
// endpoints.
GateResult limit_law_gate(const SllnReport& report, double tolerance_lo, double tolerance_hi);
GateResult limit_law_gate(const SllnReport& report, double tolerance);

// Samples every replication, tracks the running extreme-selection averages,
// and gates the result against [lower integral, upper integral] of (rv,
// mass). Deterministic: identical configs produce identical reports.
SllnReport run_slln_experiment(const ExperimentConfig& config);

}  // namespace tmcap
