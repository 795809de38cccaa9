#pragma once

// Deterministic random instance generators shared by the unit and acceptance
// suites. Everything is parameterized by an explicit engine so tests pin
// their own seeds.

#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "tmcap/capacity.hpp"
#include "tmcap/choquet.hpp"
#include "tmcap/frame.hpp"
#include "tmcap/mass.hpp"
#include "tmcap/random_sets.hpp"

namespace tmcap::testgen {

inline Frame make_frame(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return Frame(std::move(labels));
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

inline std::vector<double> random_simplex(std::mt19937_64& rng, std::size_t count) {
  std::vector<double> weights(count);
  double total = 0.0;
  for (double& w : weights) {
    w = 0.05 - std::log(1.0 - uniform(rng, 0.0, 1.0));  // shifted exponential, bounded away from 0
    total += w;
  }
  for (double& w : weights) w /= total;
  return weights;
}

inline std::vector<SubsetMask> sample_distinct_masks(std::mt19937_64& rng, const Frame& frame,
                                                     std::size_t count) {
  std::vector<SubsetMask> chosen;
  while (chosen.size() < count) {
    const SubsetMask candidate =
        1 + static_cast<SubsetMask>(rng() % frame.full_mask());  // in [1, full]
    bool fresh = true;
    for (const SubsetMask m : chosen) fresh = fresh && m != candidate;
    if (fresh) chosen.push_back(candidate);
  }
  return chosen;
}

// Random mass function with at most `max_focals` focal elements.
// When `force_nonsingleton` is set, at least one focal has >= 2 outcomes, so
// the capacity is not additive.
inline MassFunction random_mass(std::mt19937_64& rng, const Frame& frame,
                                std::size_t max_focals, bool force_nonsingleton = false) {
  const std::size_t available = frame.full_mask();
  std::size_t count = 1 + rng() % std::min<std::size_t>(max_focals, available);
  if (force_nonsingleton && frame.size() < 2) throw std::logic_error("need K >= 2");
  std::vector<SubsetMask> masks = sample_distinct_masks(rng, frame, count);
  if (force_nonsingleton) {
    bool has_wide = false;
    for (const SubsetMask m : masks) has_wide = has_wide || set_size(m) >= 2;
    if (!has_wide) masks[0] = frame.full_mask();
  }
  const std::vector<double> weights = random_simplex(rng, masks.size());
  std::map<SubsetMask, double> entries;
  for (std::size_t i = 0; i < masks.size(); ++i) entries[masks[i]] += weights[i];
  return MassFunction(frame, entries);
}

// Mass with weights on a dyadic grid (multiples of 2^-12): capacity values
// are then exactly representable, which lets tests assert bit-exact
// identities like the dual involution.
inline MassFunction random_dyadic_mass(std::mt19937_64& rng, const Frame& frame,
                                       std::size_t max_focals) {
  const std::size_t available = frame.full_mask();
  const std::size_t count = 1 + rng() % std::min<std::size_t>(max_focals, available);
  std::vector<SubsetMask> masks = sample_distinct_masks(rng, frame, count);
  constexpr int kGrid = 1 << 12;
  std::vector<int> ticks(masks.size(), 1);
  int used = static_cast<int>(masks.size());
  while (used < kGrid) {
    const int bump = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(kGrid - used));
    ticks[rng() % masks.size()] += bump;
    used += bump;
  }
  std::map<SubsetMask, double> entries;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    entries[masks[i]] += static_cast<double>(ticks[i]) / kGrid;
  }
  return MassFunction(frame, entries);
}

inline MassFunction random_additive_mass(std::mt19937_64& rng, const Frame& frame) {
  const std::vector<double> probs = random_simplex(rng, frame.size());
  return MassFunction::from_singletons(frame, probs);
}

inline RandomVariable random_rv(std::mt19937_64& rng, const Frame& frame, double lo,
                                double hi) {
  std::vector<double> values(frame.size());
  for (double& v : values) v = uniform(rng, lo, hi);
  return RandomVariable(frame, std::move(values));
}

// Monotone but generally not totally monotone capacity: a distorted
// probability nu(A) = g(P(A)) with g increasing, g(0)=0, g(1)=1.
inline Capacity random_monotone_capacity(std::mt19937_64& rng, const Frame& frame) {
  const std::vector<double> probs = random_simplex(rng, frame.size());
  const double gamma = uniform(rng, 0.35, 2.5);
  std::vector<double> table(frame.subset_count());
  for (SubsetMask set = 0; set <= frame.full_mask(); ++set) {
    double p = 0.0;
    for (std::size_t i = 0; i < frame.size(); ++i) {
      if (set & (SubsetMask{1} << i)) p += probs[i];
    }
    table[set] = std::pow(p, gamma);
  }
  table[0] = 0.0;
  table[frame.full_mask()] = 1.0;
  return Capacity(frame, std::move(table));
}

inline RealCompactSet random_set(std::mt19937_64& rng, std::size_t max_points, double lo,
                                 double hi) {
  const std::size_t count = 1 + rng() % max_points;
  std::vector<double> points(count);
  for (double& p : points) p = uniform(rng, lo, hi);
  return RealCompactSet::from_points(std::move(points));
}

}  // namespace tmcap::testgen
