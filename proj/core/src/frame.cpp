#include "tmcap/frame.hpp"

#include <algorithm>
#include <set>

namespace tmcap {

Frame::Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    fail(ErrorCode::parse, "frame must have at least one outcome");
  }
  if (labels_.size() > kMaxFrameSize) {
    fail(ErrorCode::frame_too_large,
         "frame has " + std::to_string(labels_.size()) + " outcomes; at most " +
             std::to_string(kMaxFrameSize) + " are supported");
  }
  std::set<std::string> seen;
  for (const auto& label : labels_) {
    if (label.empty()) {
      fail(ErrorCode::parse, "frame labels must be nonempty");
    }
    if (!seen.insert(label).second) {
      fail(ErrorCode::parse, "duplicate frame label \"" + label + "\"");
    }
  }
}

std::optional<std::size_t> Frame::find(const std::string& label) const noexcept {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t Frame::index_of(const std::string& label) const {
  if (const auto index = find(label)) return *index;
  fail(ErrorCode::unknown_label, "label \"" + label + "\" is not in the frame");
}

SubsetMask Frame::mask_of(std::span<const std::string> labels) const {
  SubsetMask mask = 0;
  for (const auto& label : labels) {
    mask |= SubsetMask{1} << index_of(label);
  }
  return mask;
}

std::vector<std::string> Frame::mask_labels(SubsetMask set) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (set & (SubsetMask{1} << i)) out.push_back(labels_[i]);
  }
  return out;
}

std::string Frame::mask_to_string(SubsetMask set) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (set & (SubsetMask{1} << i)) {
      if (!first) out += ",";
      out += labels_[i];
      first = false;
    }
  }
  out += "}";
  return out;
}

void require_same_frame(const Frame& lhs, const Frame& rhs, const char* context) {
  if (lhs != rhs) {
    fail(ErrorCode::frame_mismatch, std::string(context) + ": operands live on different frames");
  }
}

}  // namespace tmcap
