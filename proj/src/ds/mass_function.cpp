#include "evidentia/ds/mass_function.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "evidentia/error.hpp"

namespace evidentia::ds {

namespace {

bool by_key_then_mass(const MassEntry& a, const MassEntry& b) {
  return a.set.bits() != b.set.bits() ? a.set.bits() < b.set.bits() : a.mass < b.mass;
}

// Sorts and merges entries with identical keys. Summing each key's terms in
// ascending order makes the result independent of the input order.
std::vector<MassEntry> merge_duplicates(std::vector<MassEntry> entries) {
  std::sort(entries.begin(), entries.end(), by_key_then_mass);
  std::vector<MassEntry> merged;
  merged.reserve(entries.size());
  for (auto& e : entries) {
    if (!merged.empty() && merged.back().set.bits() == e.set.bits()) {
      merged.back().mass += e.mass;
    } else {
      merged.push_back(std::move(e));
    }
  }
  return merged;
}

double sum_of(const std::vector<MassEntry>& entries) {
  double total = 0.0;
  for (const auto& e : entries) total += e.mass;
  return total;
}

void prune(std::vector<MassEntry>& entries) {
  const auto light = [](const MassEntry& e) { return e.mass < kPruneThreshold; };
  if (std::none_of(entries.begin(), entries.end(), light)) return;
  std::erase_if(entries, light);
  const double total = sum_of(entries);
  for (auto& e : entries) e.mass /= total;
}

}  // namespace

MassFunction MassFunction::from_entries(const Frame& frame, std::vector<MassEntry> entries) {
  for (const auto& e : entries) {
    require_same_frame(frame, e.set.frame());
    if (e.set.empty()) {
      throw Error(Errc::EmptyFocalSet, "the empty set cannot carry mass");
    }
    if (!std::isfinite(e.mass) || e.mass < 0.0 || e.mass > 1.0 + kNormalizationTolerance) {
      throw Error(Errc::InvalidMass,
                  fmt::format("mass {} on {} is outside [0, 1]", e.mass, e.set.display()));
    }
  }
  auto merged = merge_duplicates(std::move(entries));
  const double total = sum_of(merged);
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw Error(Errc::InvalidMass, fmt::format("masses sum to {:.12f}, expected 1", total));
  }
  prune(merged);
  if (merged.empty()) {
    throw Error(Errc::InvalidMass, "no focal set carries mass");
  }
  return MassFunction(frame, std::move(merged));
}

MassFunction normalize_products(const Frame& frame, std::vector<MassEntry> raw, double scale) {
  auto merged = merge_duplicates(std::move(raw));
  for (auto& e : merged) e.mass /= scale;
  prune(merged);
  return MassFunction(frame, std::move(merged));
}

double MassFunction::mass(const FocalSet& set) const {
  require_same_frame(frame_, set.frame());
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), set.bits(),
      [](const MassEntry& e, std::uint64_t bits) { return e.set.bits() < bits; });
  if (it == entries_.end() || it->set.bits() != set.bits()) return 0.0;
  return it->mass;
}

double MassFunction::total() const noexcept { return sum_of(entries_); }

MassFunction vacuous_mass(const Frame& frame) {
  return MassFunction::from_entries(frame, {{FocalSet::full(frame), 1.0}});
}

MassFunction simple_support_mass(const Frame& frame, const FocalSet& a, double support) {
  require_same_frame(frame, a.frame());
  if (a.empty()) {
    throw Error(Errc::EmptyFocalSet, "simple support needs a non-empty focal set");
  }
  if (!(support > 0.0 && support <= 1.0)) {
    throw Error(Errc::BpaOutOfRange, fmt::format("bpa {} is outside (0, 1]", support));
  }
  std::vector<MassEntry> entries{{a, support}};
  if (support < 1.0) entries.push_back({FocalSet::full(frame), 1.0 - support});
  return MassFunction::from_entries(frame, std::move(entries));
}

}  // namespace evidentia::ds
