#pragma once

#include <vector>

#include "evidentia/ds/focal_set.hpp"
#include "evidentia/ds/mass_function.hpp"

namespace evidentia::ds {

// Combination is refused once the conflict gets this close to 1.
inline constexpr double kTotalConflictMargin = 1e-12;

// One cell of the cross-product table of two mass functions.
struct ProductCell {
  FocalSet left;
  FocalSet right;
  FocalSet intersection;
  double product;
};

struct Combination {
  MassFunction mass;
  double conflict;
};

struct DetailedCombination {
  // Row-major: left entries in key order, each crossed with right entries in key order.
  std::vector<ProductCell> products;
  double conflict;
  MassFunction mass;
};

// Mass the two sources jointly assign to disjoint sets. Throws FrameMismatch.
double conflict(const MassFunction& m1, const MassFunction& m2);

// Dempster's rule. Throws FrameMismatch, or TotalConflict when the sources
// contradict each other completely.
Combination combine(const MassFunction& m1, const MassFunction& m2);
DetailedCombination combine_detailed(const MassFunction& m1, const MassFunction& m2);

// Bel(A): mass committed to subsets of A.
double belief(const MassFunction& m, const FocalSet& a);
// Pl(A): mass on sets that intersect A.
double plausibility(const MassFunction& m, const FocalSet& a);

}  // namespace evidentia::ds
