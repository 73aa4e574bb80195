#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evidentia::ds {

inline constexpr std::size_t kMaxFrameSize = 64;

// The frame of discernment: an ordered, immutable set of hypothesis labels.
// Copies share the same label storage, so copying a Frame is cheap.
class Frame {
 public:
  // Throws DuplicateLabel, EmptyFrame or FrameTooLarge.
  static Frame make(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_->size(); }
  const std::string& label(std::size_t index) const { return (*labels_)[index]; }
  std::span<const std::string> labels() const noexcept { return *labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const noexcept;

  // Bitmask with one bit per element.
  std::uint64_t full_mask() const noexcept;

  friend bool operator==(const Frame& a, const Frame& b) noexcept;

 private:
  explicit Frame(std::shared_ptr<const std::vector<std::string>> labels)
      : labels_(std::move(labels)) {}

  std::shared_ptr<const std::vector<std::string>> labels_;
};

// Throws FrameMismatch unless both frames hold the same labels in the same order.
void require_same_frame(const Frame& a, const Frame& b);

}  // namespace evidentia::ds
