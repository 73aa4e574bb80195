#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "evidentia/ds/focal_set.hpp"
#include "evidentia/ds/frame.hpp"

namespace evidentia::ds {

// Total mass must be 1 within this tolerance.
inline constexpr double kNormalizationTolerance = 1e-9;
// Entries lighter than this are dropped and the rest renormalized.
inline constexpr double kPruneThreshold = 1e-12;

struct MassEntry {
  FocalSet set;
  double mass;
};

// A basic probability assignment over a frame. Entries are keyed by distinct
// non-empty focal sets, kept sorted by bitmask, and are strictly positive.
class MassFunction {
 public:
  // Merges duplicate sets by summation, then prunes. Throws EmptyFocalSet for an
  // empty key, FrameMismatch for a foreign set, InvalidMass if a mass is negative,
  // non-finite or the total is not 1.
  static MassFunction from_entries(const Frame& frame, std::vector<MassEntry> entries);

  const Frame& frame() const noexcept { return frame_; }
  std::span<const MassEntry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  // Zero for sets that are not focal.
  double mass(const FocalSet& set) const;
  double total() const noexcept;

 private:
  MassFunction(Frame frame, std::vector<MassEntry> entries)
      : frame_(std::move(frame)), entries_(std::move(entries)) {}

  friend MassFunction normalize_products(const Frame& frame, std::vector<MassEntry> raw,
                                         double scale);

  Frame frame_;
  std::vector<MassEntry> entries_;
};

// Total ignorance: all mass on the full frame.
MassFunction vacuous_mass(const Frame& frame);

// {a: support, Θ: 1 - support}. The Θ entry is omitted when support is 1 and the two
// entries merge when a is the full frame. Throws EmptyFocalSet or BpaOutOfRange.
MassFunction simple_support_mass(const Frame& frame, const FocalSet& a, double support);

// Divides each raw product sum by `scale`, merging and pruning like from_entries.
// Skips the sum-to-one check; callers guarantee it by construction.
MassFunction normalize_products(const Frame& frame, std::vector<MassEntry> raw, double scale);

}  // namespace evidentia::ds
