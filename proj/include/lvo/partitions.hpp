#pragma once

#include <gmpxx.h>

#include <vector>

namespace lvo {

// One d-colored partition: descending parts per color.
struct ColoredPartition {
  std::vector<std::vector<int>> parts;

  int energy() const {
    int e = 0;
    for (const auto& ps : parts)
      for (int p : ps) e += p;
    return e;
  }
  int total_parts() const {
    int k = 0;
    for (const auto& ps : parts) k += (int)ps.size();
    return k;
  }
  bool operator==(const ColoredPartition& o) const { return parts == o.parts; }
  bool operator<(const ColoredPartition& o) const { return parts < o.parts; }
  std::string str() const;
};

// Plain partitions of n, parts descending, deterministic order.
const std::vector<std::vector<int>>& partitions_of(int n);

// All d-colored partitions of n, sorted color-major lexicographically.
std::vector<ColoredPartition> colored_partitions(int colors, int n);

// Counting DP for the generating function prod_k (1-q^k)^{-d}.
std::vector<mpz_class> colored_partition_counts(int colors, int max_level);

}  // namespace lvo
