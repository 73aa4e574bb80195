#include "evidentia/ds/frame.hpp"

#include <algorithm>
#include <unordered_set>

#include <fmt/format.h>

#include "evidentia/error.hpp"

namespace evidentia::ds {

Frame Frame::make(std::vector<std::string> labels) {
  if (labels.empty()) {
    throw Error(Errc::EmptyFrame, "a frame needs at least one hypothesis");
  }
  if (labels.size() > kMaxFrameSize) {
    throw Error(Errc::FrameTooLarge,
                fmt::format("{} hypotheses exceed the limit of {}", labels.size(), kMaxFrameSize));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw Error(Errc::DuplicateLabel, fmt::format("label '{}' appears more than once", label));
    }
  }
  return Frame(std::make_shared<const std::vector<std::string>>(std::move(labels)));
}

std::optional<std::size_t> Frame::index_of(std::string_view label) const noexcept {
  const auto it = std::find(labels_->begin(), labels_->end(), label);
  if (it == labels_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_->begin());
}

std::uint64_t Frame::full_mask() const noexcept {
  return size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1;
}

bool operator==(const Frame& a, const Frame& b) noexcept {
  return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
}

void require_same_frame(const Frame& a, const Frame& b) {
  if (!(a == b)) {
    throw Error(Errc::FrameMismatch, "operands are defined on different frames");
  }
}

}  // namespace evidentia::ds
