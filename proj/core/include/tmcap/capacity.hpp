#pragma once

#include <cstdint>
#include <vector>

#include "tmcap/frame.hpp"
#include "tmcap/mass.hpp"

namespace tmcap {

/// Explicit set-function table nu : 2^Omega -> R indexed by SubsetMask.
/// Only structural validity (table size, finite entries) is enforced here;
/// normalization and monotonicity are the business of check_axioms, so that
/// defective tables can be represented and reported on.
class Capacity {
 public:
  Capacity(Frame frame, std::vector<double> table);

  const Frame& frame() const noexcept { return frame_; }
  const std::vector<double>& table() const noexcept { return table_; }
  double value(SubsetMask set) const noexcept { return table_[set]; }

  friend bool operator==(const Capacity&, const Capacity&) = default;

 private:
  Frame frame_;
  std::vector<double> table_;
};

/// One violated inequality. `sets` is the collection the inequality was
/// evaluated on and the report asserts lhs >= rhs (up to tolerance); for
/// equality constraints lhs is the observed value and rhs the required one.
struct Counterexample {
  std::vector<SubsetMask> sets;
  double lhs = 0.0;
  double rhs = 0.0;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct MonotonicityReport {
  bool passed = true;
  std::vector<Counterexample> counterexamples;

  friend bool operator==(const MonotonicityReport&, const MonotonicityReport&) = default;
};

struct TotalMonotonicityOptions {
  // Number of collection evaluations allowed before E_TOO_LARGE.
  std::uint64_t collection_budget = kDefaultCollectionBudget;
  // Skip the Moebius fast path and enumerate collections unconditionally.
  bool force_exhaustive = false;
};

// nu(A) = sum of m(B) over focal elements B contained in A.
Capacity capacity_from_mass(const MassFunction& mass);

// Moebius inversion m(A) = sum over B subset of A of (-1)^|A\B| nu(B).
// Requires nu({}) = 0 and nu(Omega) = 1; the sign of the output carries the
// total-monotonicity information.
SignedMass mobius_from_capacity(const Capacity& capacity);

// Checks (c.1) |nu({})| and |nu(Omega)-1| within 1e-12 and (c.2)
// monotonicity along every one-element extension (which covers all
// comparable pairs) within 1e-9.
MonotonicityReport check_axioms(const Capacity& capacity);

// Checks inequality (c.5) for every collection of at most n_max distinct
// nonempty subsets, within 1e-9. Fast path: a nonnegative Moebius transform
// proves (c.5) for all orders without enumeration.
MonotonicityReport check_total_monotonicity(const Capacity& capacity, int n_max,
                                            const TotalMonotonicityOptions& options = {});

// True when nu(A u B) = nu(A) + nu(B) within tolerance for all disjoint A, B.
bool is_additive(const Capacity& capacity, double tolerance = kDataTolerance);

// Conjugate capacity dual(A) = 1 - nu(complement of A). Integrating against
// it yields the upper Choquet integral.
Capacity dual_capacity(const Capacity& capacity);

/// Bookkeeping for a product frame: outcome (i, j) of left x right sits at
/// index i * right.size() + j and is labelled "<left>|<right>".
struct ProductLayout {
  Frame left;
  Frame right;
  Frame product;

  SubsetMask rectangle(SubsetMask left_set, SubsetMask right_set) const noexcept;
};

ProductLayout product_layout(const Frame& left, const Frame& right);

// Fully independent product: weight m1(A) * m2(B) on each rectangle A x B.
// Throws E_FRAME_TOO_LARGE when the product frame would exceed the mask
// width bound.
MassFunction product_mass(const MassFunction& left, const MassFunction& right);

}  // namespace tmcap
