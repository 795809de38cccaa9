#include "tmcap/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tmcap {

Capacity::Capacity(Frame frame, std::vector<double> table)
    : frame_(std::move(frame)), table_(std::move(table)) {
  if (table_.size() != frame_.subset_count()) {
    fail(ErrorCode::usage, "capacity table must have exactly 2^K entries, got " +
                               std::to_string(table_.size()));
  }
  for (const double value : table_) {
    if (!std::isfinite(value)) {
      fail(ErrorCode::usage, "capacity table entries must be finite");
    }
  }
}

Capacity capacity_from_mass(const MassFunction& mass) {
  const std::size_t table_size = mass.frame().subset_count();
  std::vector<double> table(table_size, 0.0);
  for (const auto& [set, weight] : mass.weights()) {
    table[set] = weight;
  }
  // Zeta transform: after pass b, table[A] sums the weights of all subsets of
  // A agreeing with A outside bit b's prefix. Runs in K * 2^K.
  for (std::size_t bit = 0; bit < mass.frame().size(); ++bit) {
    const SubsetMask step = SubsetMask{1} << bit;
    for (SubsetMask set = 0; set < table_size; ++set) {
      if (set & step) table[set] += table[set ^ step];
    }
  }
  return Capacity(mass.frame(), std::move(table));
}

SignedMass mobius_from_capacity(const Capacity& capacity) {
  std::vector<double> table = capacity.table();
  const std::size_t table_size = table.size();
  // Inverse zeta transform, same pass structure as capacity_from_mass.
  for (std::size_t bit = 0; bit < capacity.frame().size(); ++bit) {
    const SubsetMask step = SubsetMask{1} << bit;
    for (SubsetMask set = 0; set < table_size; ++set) {
      if (set & step) table[set] -= table[set ^ step];
    }
  }
  std::map<SubsetMask, double> weights;
  for (SubsetMask set = 0; set < table_size; ++set) {
    if (table[set] != 0.0) weights.emplace(set, table[set]);
  }
  return SignedMass(capacity.frame(), weights);
}

MonotonicityReport check_axioms(const Capacity& capacity) {
  MonotonicityReport report;
  const SubsetMask full = capacity.frame().full_mask();

  // (c.1): exact normalization within the internal tolerance.
  if (std::abs(capacity.value(0)) > kInternalTolerance) {
    report.counterexamples.push_back({{0}, capacity.value(0), 0.0});
  }
  if (std::abs(capacity.value(full) - 1.0) > kInternalTolerance) {
    report.counterexamples.push_back({{full}, capacity.value(full), 1.0});
  }

  // (c.2): checking every one-element extension covers all comparable pairs.
  for (SubsetMask outer = 1; outer <= full; ++outer) {
    SubsetMask bits = outer;
    while (bits != 0) {
      const SubsetMask low = bits & (~bits + 1);
      bits ^= low;
      const SubsetMask inner = outer ^ low;
      if (capacity.value(outer) < capacity.value(inner) - kDataTolerance) {
        report.counterexamples.push_back({{inner, outer}, capacity.value(outer),
                                          capacity.value(inner)});
      }
    }
  }

  report.passed = report.counterexamples.empty();
  return report;
}

namespace {

// Evaluates one (c.5) instance: returns (lhs, rhs) where the inequality
// demands lhs >= rhs.
std::pair<double, double> evaluate_c5(const Capacity& capacity,
                                      std::span<const SubsetMask> collection) {
  SubsetMask all = 0;
  for (const SubsetMask set : collection) all |= set;
  const double lhs = capacity.value(all);

  const std::size_t n = collection.size();
  // Intersections over nonempty index sets J, built from the recurrence
  // inter(J) = inter(J minus lowest bit) & member(lowest bit).
  std::vector<SubsetMask> intersection(std::size_t{1} << n, 0);
  intersection[0] = capacity.frame().full_mask();
  double rhs = 0.0;
  for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << n); ++subset) {
    const int low_index = std::countr_zero(subset);
    intersection[subset] =
        intersection[subset & (subset - 1)] & collection[static_cast<std::size_t>(low_index)];
    const double term = capacity.value(intersection[subset]);
    rhs += (std::popcount(subset) % 2 == 1) ? term : -term;
  }
  return {lhs, rhs};
}

}  // namespace

MonotonicityReport check_total_monotonicity(const Capacity& capacity, int n_max,
                                            const TotalMonotonicityOptions& options) {
  if (n_max < 2) {
    fail(ErrorCode::usage, "check_total_monotonicity requires n_max >= 2");
  }

  if (!options.force_exhaustive) {
    // On a finite frame, nonnegative Moebius weights are equivalent to (c.5)
    // for collections of every size.
    if (mobius_from_capacity(capacity).min_weight() >= -kInternalTolerance) {
      return MonotonicityReport{};
    }
  }

  MonotonicityReport report;
  const SubsetMask full = capacity.frame().full_mask();
  const int subsets = static_cast<int>(full);  // nonempty masks are 1..full

  std::uint64_t evaluated = 0;
  std::vector<SubsetMask> collection;
  // Combinations of `size` distinct nonempty masks in lexicographic order.
  for (int size = 2; size <= n_max; ++size) {
    if (size > subsets) break;
    std::vector<int> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
      if (++evaluated > options.collection_budget) {
        if (!report.counterexamples.empty()) {
          // A witness is already in hand; the fail verdict is sound without
          // finishing the enumeration.
          report.passed = false;
          return report;
        }
        fail(ErrorCode::too_large,
             "exhaustive (c.5) check exceeded the collection budget of " +
                 std::to_string(options.collection_budget));
      }
      collection.assign(pick.begin(), pick.end());
      const auto [lhs, rhs] = evaluate_c5(capacity, collection);
      if (lhs < rhs - kDataTolerance) {
        report.counterexamples.push_back({collection, lhs, rhs});
      }
      // Advance the combination.
      int i = size - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == subsets - (size - 1 - i)) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) {
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }

  report.passed = report.counterexamples.empty();
  return report;
}

bool is_additive(const Capacity& capacity, double tolerance) {
  const SubsetMask full = capacity.frame().full_mask();
  if (capacity.frame().size() <= 12) {
    // Direct definition: every disjoint pair. The submask loop enumerates
    // exactly the 3^K (A, B) pairs with B in the complement of A.
    for (SubsetMask a = 1; a <= full; ++a) {
      const SubsetMask complement = full ^ a;
      for (SubsetMask b = complement; b != 0; b = (b - 1) & complement) {
        if (std::abs(capacity.value(a | b) - capacity.value(a) - capacity.value(b)) >
            tolerance) {
          return false;
        }
      }
    }
    return true;
  }
  // Large frames: equivalent singleton decomposition, nu(A) = sum of
  // singleton values over A.
  for (SubsetMask a = 1; a <= full; ++a) {
    double sum = 0.0;
    SubsetMask bits = a;
    while (bits != 0) {
      const SubsetMask low = bits & (~bits + 1);
      bits ^= low;
      sum += capacity.value(low);
    }
    if (std::abs(capacity.value(a) - sum) > tolerance) return false;
  }
  return true;
}

Capacity dual_capacity(const Capacity& capacity) {
  const SubsetMask full = capacity.frame().full_mask();
  std::vector<double> table(capacity.table().size());
  for (SubsetMask set = 0; set <= full; ++set) {
    table[set] = 1.0 - capacity.value(full ^ set);
  }
  return Capacity(capacity.frame(), std::move(table));
}

SubsetMask ProductLayout::rectangle(SubsetMask left_set, SubsetMask right_set) const noexcept {
  SubsetMask out = 0;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (!(left_set & (SubsetMask{1} << i))) continue;
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (right_set & (SubsetMask{1} << j)) {
        out |= SubsetMask{1} << (i * right.size() + j);
      }
    }
  }
  return out;
}

ProductLayout product_layout(const Frame& left, const Frame& right) {
  if (left.size() * right.size() > kMaxFrameSize) {
    fail(ErrorCode::frame_too_large,
         "product frame would have " + std::to_string(left.size() * right.size()) +
             " outcomes; at most " + std::to_string(kMaxFrameSize) + " are supported");
  }
  std::vector<std::string> labels;
  labels.reserve(left.size() * right.size());
  for (const auto& a : left.labels()) {
    for (const auto& b : right.labels()) {
      labels.push_back(a + "|" + b);
    }
  }
  return ProductLayout{left, right, Frame(std::move(labels))};
}

MassFunction product_mass(const MassFunction& left, const MassFunction& right) {
  const ProductLayout layout = product_layout(left.frame(), right.frame());
  std::map<SubsetMask, double> weights;
  for (const auto& [a, wa] : left.weights()) {
    for (const auto& [b, wb] : right.weights()) {
      weights[layout.rectangle(a, b)] += wa * wb;
    }
  }
  return MassFunction(layout.product, weights);
}

}  // namespace tmcap
