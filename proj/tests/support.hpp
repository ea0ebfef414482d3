#pragma once

#include <random>

#include "lvo/lattice.hpp"
#include "lvo/partitions.hpp"

namespace lvo::testsupport {

// Deterministic random even lattice: integer split coordinates, rank <= 3,
// bounded Gram entries, even diagonal.
inline Lattice random_even_lattice(unsigned seed, int max_rank = 3, long max_entry = 6) {
  std::mt19937_64 rng(seed);
  Backend bk = Backend::rational_backend();
  std::uniform_int_distribution<int> rank_d(1, max_rank);
  std::uniform_int_distribution<int> coord_d(-2, 2);
  int rank = rank_d(rng);
  std::uniform_int_distribution<int> dim_d(rank, rank + 1);
  int dp = dim_d(rng), dm = dim_d(rng);
  for (int attempt = 0; attempt < 20000; ++attempt) {
    std::vector<Generator> gens;
    for (int i = 0; i < rank; ++i) {
      Generator g;
      for (int k = 0; k < dp; ++k) g.plus.push_back(Scalar::integer(coord_d(rng), bk));
      for (int k = 0; k < dm; ++k) g.minus.push_back(Scalar::integer(coord_d(rng), bk));
      gens.push_back(g);
    }
    try {
      Lattice L = build_lattice(SplitSpace{dp, dm}, gens, bk);
      bool bounded = true;
      for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
          if (std::abs(L.indef(i, j)) > max_entry) bounded = false;
      if (bounded) return L;
    } catch (const Error&) {
      // resample
    }
  }
  throw std::runtime_error("random even lattice sampling failed");
}

// Independent inner-product oracle: pushes annihilation modes through by the
// commutation relations, never consulting the module's stored Gram.
inline mpz_class gram_oracle(const ColoredPartition& a, const ColoredPartition& b) {
  // find the first color with parts in a
  int color = -1;
  for (size_t j = 0; j < a.parts.size(); ++j)
    if (!a.parts[j].empty()) {
      color = (int)j;
      break;
    }
  if (color < 0) {
    // a is the vacuum: nonzero only against the vacuum
    for (const auto& ps : b.parts)
      if (!ps.empty()) return 0;
    return 1;
  }
  int m = a.parts[color].front();
  ColoredPartition a2 = a;
  a2.parts[color].erase(a2.parts[color].begin());
  // <J_{-m} a2, b> = <a2, J_{m} b> = m * (#parts m in color) * <a2, b - part>
  const auto& ps = b.parts[color];
  long mult = std::count(ps.begin(), ps.end(), m);
  if (mult == 0) return 0;
  ColoredPartition b2 = b;
  auto pos = std::find(b2.parts[color].begin(), b2.parts[color].end(), m);
  b2.parts[color].erase(pos);
  return mpz_class(m) * mult * gram_oracle(a2, b2);
}

// Partition counts via Euler's pentagonal recurrence (independent of the
// library's product DP), convolved for d colors.
inline std::vector<mpz_class> pentagonal_counts(int colors, int max_level) {
  std::vector<mpz_class> p(max_level + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= max_level; ++n) {
    mpz_class s = 0;
    for (int k = 1;; ++k) {
      long g1 = k * (3 * k - 1) / 2;
      long g2 = k * (3 * k + 1) / 2;
      if (g1 > n && g2 > n) break;
      mpz_class term = 0;
      if (g1 <= n) term += p[n - g1];
      if (g2 <= n) term += p[n - g2];
      if (k % 2)
        s += term;
      else
        s -= term;
    }
    p[n] = s;
  }
  // convolve d copies
  std::vector<mpz_class> out(max_level + 1, 0);
  out[0] = 1;
  for (int rep = 0; rep < colors; ++rep) {
    std::vector<mpz_class> next(max_level + 1, 0);
    for (int i = 0; i <= max_level; ++i)
      for (int j = 0; i + j <= max_level; ++j) next[i + j] += out[i] * p[j];
    out = next;
  }
  return out;
}

}  // namespace lvo::testsupport
