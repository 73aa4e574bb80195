#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "evidentia/ds/frame.hpp"

namespace evidentia::ds {

// A subset of a frame, stored as a bitmask over frame indices.
class FocalSet {
 public:
  // Throws UnknownLabel if a member is not in the frame.
  static FocalSet of(const Frame& frame, std::initializer_list<std::string_view> members);
  static FocalSet of(const Frame& frame, const std::vector<std::string>& members);
  // Throws UnknownLabel if bits reference indices outside the frame.
  static FocalSet from_bits(const Frame& frame, std::uint64_t bits);
  static FocalSet empty_set(const Frame& frame) { return FocalSet(frame, 0); }
  static FocalSet full(const Frame& frame) { return FocalSet(frame, frame.full_mask()); }

  const Frame& frame() const noexcept { return frame_; }
  std::uint64_t bits() const noexcept { return bits_; }
  int size() const noexcept { return std::popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == frame_.full_mask(); }
  bool contains(std::size_t index) const noexcept { return (bits_ >> index) & 1U; }
  bool is_subset_of(const FocalSet& other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }

  FocalSet complement() const noexcept { return FocalSet(frame_, frame_.full_mask() & ~bits_); }
  FocalSet intersect(const FocalSet& other) const noexcept {
    return FocalSet(frame_, bits_ & other.bits_);
  }

  // Member labels in frame order.
  std::vector<std::string> labels() const;
  // "AI" for singletons, "{ND,SHS}" otherwise; the full frame renders as "Θ".
  std::string display() const;

  friend bool operator==(const FocalSet& a, const FocalSet& b) noexcept {
    return a.bits_ == b.bits_ && a.frame_ == b.frame_;
  }

 private:
  FocalSet(Frame frame, std::uint64_t bits) : frame_(std::move(frame)), bits_(bits) {}

  Frame frame_;
  std::uint64_t bits_;
};

}  // namespace evidentia::ds
