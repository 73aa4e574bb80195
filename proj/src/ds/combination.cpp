#include "evidentia/ds/combination.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "evidentia/error.hpp"

namespace evidentia::ds {

namespace {

// Sums in ascending order so that the result depends only on the multiset of
// terms, which makes combine(m1, m2) and combine(m2, m1) bitwise identical.
double ordered_sum(std::vector<double>& terms) {
  std::sort(terms.begin(), terms.end());
  double total = 0.0;
  for (double t : terms) total += t;
  return total;
}

struct CrossProduct {
  std::vector<ProductCell> cells;
  std::vector<MassEntry> landed;
  double conflict = 0.0;
};

CrossProduct cross(const MassFunction& m1, const MassFunction& m2, bool keep_cells) {
  require_same_frame(m1.frame(), m2.frame());
  CrossProduct out;
  std::vector<double> conflicting;
  out.landed.reserve(m1.size() * m2.size());
  if (keep_cells) out.cells.reserve(m1.size() * m2.size());
  for (const auto& b : m1.entries()) {
    for (const auto& c : m2.entries()) {
      const double product = b.mass * c.mass;
      auto meet = b.set.intersect(c.set);
      if (meet.empty()) {
        conflicting.push_back(product);
      } else {
        out.landed.push_back({meet, product});
      }
      if (keep_cells) out.cells.push_back({b.set, c.set, std::move(meet), product});
    }
  }
  out.conflict = ordered_sum(conflicting);
  // Ordering by value within each key keeps the per-key sums order independent.
  std::sort(out.landed.begin(), out.landed.end(), [](const MassEntry& a, const MassEntry& b) {
    return a.set.bits() != b.set.bits() ? a.set.bits() < b.set.bits() : a.mass < b.mass;
  });
  return out;
}

void require_combinable(double k) {
  if (k >= 1.0 - kTotalConflictMargin) {
    throw Error(Errc::TotalConflict,
                fmt::format("conflict K = {} leaves nothing to normalize", k));
  }
}

}  // namespace

double conflict(const MassFunction& m1, const MassFunction& m2) {
  return cross(m1, m2, false).conflict;
}

DetailedCombination combine_detailed(const MassFunction& m1, const MassFunction& m2) {
  auto table = cross(m1, m2, true);
  require_combinable(table.conflict);
  auto mass = normalize_products(m1.frame(), std::move(table.landed), 1.0 - table.conflict);
  return {std::move(table.cells), table.conflict, std::move(mass)};
}

Combination combine(const MassFunction& m1, const MassFunction& m2) {
  auto table = cross(m1, m2, false);
  require_combinable(table.conflict);
  return {normalize_products(m1.frame(), std::move(table.landed), 1.0 - table.conflict),
          table.conflict};
}

double belief(const MassFunction& m, const FocalSet& a) {
  require_same_frame(m.frame(), a.frame());
  double total = 0.0;
  for (const auto& e : m.entries()) {
    if (e.set.is_subset_of(a)) total += e.mass;
  }
  return total;
}

double plausibility(const MassFunction& m, const FocalSet& a) {
  require_same_frame(m.frame(), a.frame());
  double total = 0.0;
  for (const auto& e : m.entries()) {
    if ((e.set.bits() & a.bits()) != 0) total += e.mass;
  }
  return total;
}

}  // namespace evidentia::ds
