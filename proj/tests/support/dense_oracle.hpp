#pragma once

// Reference Dempster-Shafer arithmetic over a dense table indexed by subset
// bitmask. Test-only: it shares no code with the library's sparse kernel.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace evidentia::testing {

struct DenseMass {
  std::size_t frame_size = 0;
  std::vector<double> table;  // table[subset] for subset in [0, 2^n)

  explicit DenseMass(std::size_t n) : frame_size(n), table(std::size_t{1} << n, 0.0) {}
  std::uint64_t full() const { return (std::uint64_t{1} << frame_size) - 1; }
};

inline double dense_conflict(const DenseMass& a, const DenseMass& b) {
  double k = 0.0;
  for (std::size_t x = 0; x < a.table.size(); ++x) {
    for (std::size_t y = 0; y < b.table.size(); ++y) {
      if ((x & y) == 0) k += a.table[x] * b.table[y];
    }
  }
  return k;
}

struct DenseCombination {
  DenseMass mass;
  double conflict;
};

// Exhaustive double loop over every pair of subsets. Returns nullopt on total conflict.
inline std::optional<DenseCombination> dense_combine(const DenseMass& a, const DenseMass& b) {
  DenseMass out(a.frame_size);
  double k = 0.0;
  for (std::size_t x = 0; x < a.table.size(); ++x) {
    for (std::size_t y = 0; y < b.table.size(); ++y) {
      const double p = a.table[x] * b.table[y];
      if ((x & y) == 0) {
        k += p;
      } else {
        out.table[x & y] += p;
      }
    }
  }
  if (k >= 1.0 - 1e-12) return std::nullopt;
  for (auto& v : out.table) v /= (1.0 - k);
  return DenseCombination{out, k};
}

inline double dense_belief(const DenseMass& m, std::uint64_t a) {
  double total = 0.0;
  for (std::uint64_t s = 1; s < m.table.size(); ++s) {
    if ((s | a) == a) total += m.table[s];
  }
  return total;
}

inline double dense_plausibility(const DenseMass& m, std::uint64_t a) {
  double total = 0.0;
  for (std::uint64_t s = 1; s < m.table.size(); ++s) {
    if ((s & a) != 0) total += m.table[s];
  }
  return total;
}

}  // namespace evidentia::testing
