#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tmcap/errors.hpp"

namespace tmcap {

// A subset of a frame encoded as a bitmask: bit i set means outcome i belongs
// to the subset. Frames are capped at 24 outcomes so every subset fits a
// 32-bit mask and full capacity tables stay addressable.
using SubsetMask = std::uint32_t;

inline constexpr std::size_t kMaxFrameSize = 24;

inline int set_size(SubsetMask set) noexcept { return std::popcount(set); }

inline bool is_subset_of(SubsetMask inner, SubsetMask outer) noexcept {
  return (inner & outer) == inner;
}

// Ordered list of distinct outcome names. Equality is label-for-label, which
// is what frame-mismatch checks compare.
class Frame {
 public:
  explicit Frame(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t index) const { return labels_[index]; }

  SubsetMask full_mask() const noexcept {
    return static_cast<SubsetMask>((std::uint64_t{1} << labels_.size()) - 1);
  }
  std::size_t subset_count() const noexcept {
    return std::size_t{1} << labels_.size();
  }

  std::optional<std::size_t> find(const std::string& label) const noexcept;
  // Throws E_UNKNOWN_LABEL.
  std::size_t index_of(const std::string& label) const;

  SubsetMask mask_of(std::span<const std::string> labels) const;
  std::vector<std::string> mask_labels(SubsetMask set) const;
  // Renders "{a,b}" for diagnostics.
  std::string mask_to_string(SubsetMask set) const;

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  std::vector<std::string> labels_;
};

// Throws E_FRAME_MISMATCH unless the two frames are equal.
void require_same_frame(const Frame& lhs, const Frame& rhs, const char* context);

}  // namespace tmcap
