#include "evidentia/ds/focal_set.hpp"

#include <fmt/format.h>

#include "evidentia/error.hpp"

namespace evidentia::ds {

namespace {

template <typename Range>
std::uint64_t mask_of(const Frame& frame, const Range& members) {
  std::uint64_t bits = 0;
  for (const auto& member : members) {
    const auto index = frame.index_of(member);
    if (!index) {
      throw Error(Errc::UnknownLabel, fmt::format("'{}' is not a hypothesis of the frame", member));
    }
    bits |= std::uint64_t{1} << *index;
  }
  return bits;
}

}  // namespace

FocalSet FocalSet::of(const Frame& frame, std::initializer_list<std::string_view> members) {
  return FocalSet(frame, mask_of(frame, members));
}

FocalSet FocalSet::of(const Frame& frame, const std::vector<std::string>& members) {
  return FocalSet(frame, mask_of(frame, members));
}

FocalSet FocalSet::from_bits(const Frame& frame, std::uint64_t bits) {
  if ((bits & ~frame.full_mask()) != 0) {
    throw Error(Errc::UnknownLabel,
                fmt::format("bitmask {:#x} references indices outside a frame of {}", bits,
                            frame.size()));
  }
  return FocalSet(frame, bits);
}

std::vector<std::string> FocalSet::labels() const {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::size_t i = 0; i < frame_.size(); ++i) {
    if (contains(i)) out.push_back(frame_.label(i));
  }
  return out;
}

std::string FocalSet::display() const {
  if (is_full()) return "Θ";
  if (empty()) return "∅";
  const auto members = labels();
  if (members.size() == 1) return members.front();
  return fmt::format("{{{}}}", fmt::join(members, ","));
}

}  // namespace evidentia::ds
