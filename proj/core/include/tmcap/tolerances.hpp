#pragma once

#include <cstdint>

namespace tmcap {

// Two-tier tolerance discipline: user-supplied data is validated at 1e-9,
// internal algebraic identities are held to 1e-12.
inline constexpr double kDataTolerance = 1e-9;
inline constexpr double kInternalTolerance = 1e-12;

// Absolute tolerance for merging duplicate points produced by Minkowski sums.
inline constexpr double kMergeTolerance = 1e-12;

// Default cardinality budget for set operations (points per result).
inline constexpr std::uint64_t kDefaultSetBudget = 1'000'000;

// Default number of collection evaluations allowed when checking (c.5)
// exhaustively.
inline constexpr std::uint64_t kDefaultCollectionBudget = 1'000'000;

}  // namespace tmcap
