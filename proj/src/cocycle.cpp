#include "lvo/cocycle.hpp"

#include <array>
#include <atomic>
#include <algorithm>

#include <sstream>

namespace lvo {

Cocycle build_cocycle(const Lattice& L) {
  Cocycle c;
  c.lattice = &L;
  int n = L.rank();
  c.table.assign(n, std::vector<int>(n, 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i < j) {
        c.table[i][j] = (L.indef(i, j) % 2) ? -1 : 1;
      } else if (i == j) {
        c.table[i][j] = ((L.indef(i, i) / 2) % 2) ? -1 : 1;
      } else {
        c.table[i][j] = 1;
      }
    }
  }
  return c;
}

namespace {

struct BoxIndex {
  int rank, radius;
  std::vector<Charge> charges;

  explicit BoxIndex(int r, int rad) : rank(r), radius(rad), charges(enumerate_box(r, rad)) {}

  size_t size() const { return charges.size(); }
  // position of a charge with |c_i| <= radius
  size_t index_of(const Charge& ch) const {
    size_t idx = 0;
    for (int i = 0; i < rank; ++i) idx = idx * (2 * radius + 1) + (size_t)(ch.c[i] + radius);
    return idx;
  }
};

std::string pair_witness(const Charge& a, const Charge& b) { return a.str() + ", " + b.str(); }

}  // namespace

Report verify_cocycle_laws(const Cocycle& c, int box_radius, par::Exec ex) {
  Report rep("cocycle");
  const Lattice& L = *c.lattice;
  int rank = L.rank();

  BoxIndex small(rank, box_radius);
  BoxIndex big(rank, 2 * box_radius);
  size_t n1 = small.size(), n2 = big.size();

  // sign caches: eval on (big, small), (small, big) and (small, small) pairs;
  // the (small, big) table is stored transposed so inner sweeps read rows
  std::vector<signed char> big_first(n2 * n1), small_big_t(n2 * n1), small_small(n1 * n1);
  par::for_range(n2, [&](size_t i) {
    for (size_t j = 0; j < n1; ++j) {
      big_first[i * n1 + j] = (signed char)c.eval(big.charges[i], small.charges[j]);
      small_big_t[i * n1 + j] = (signed char)c.eval(small.charges[j], big.charges[i]);
    }
  }, ex);
  par::for_range(n1, [&](size_t i) {
    for (size_t j = 0; j < n1; ++j)
      small_small[i * n1 + j] = (signed char)c.eval(small.charges[i], small.charges[j]);
  }, ex);

  // parity of (a|b) and the big-box position of a+b, for small pairs
  std::vector<signed char> pair_parity(n1 * n1);
  std::vector<unsigned> sum_big(n1 * n1);
  par::for_range(n1, [&](size_t i) {
    for (size_t j = 0; j < n1; ++j) {
      pair_parity[i * n1 + j] =
          (signed char)(indef_pairing(L, small.charges[i], small.charges[j]) & 1);
      sum_big[i * n1 + j] = (unsigned)big.index_of(small.charges[i] + small.charges[j]);
    }
  }, ex);

  // sweeps a triple predicate (outer index parallel), rescanning serially for
  // a deterministic witness on failure
  auto triple_sweep = [&](auto&& pred) -> std::optional<std::array<size_t, 3>> {
    std::atomic<bool> bad{false};
    par::for_range(
        n1,
        [&](size_t i) {
          if (bad.load(std::memory_order_relaxed)) return;
          for (size_t j = 0; j < n1; ++j)
            for (size_t k = 0; k < n1; ++k)
              if (!pred(i, j, k)) {
                bad.store(true, std::memory_order_relaxed);
                return;
              }
        },
        ex);
    if (!bad.load()) return std::nullopt;
    for (size_t i = 0; i < n1; ++i)
      for (size_t j = 0; j < n1; ++j)
        for (size_t k = 0; k < n1; ++k)
          if (!pred(i, j, k)) return std::array<size_t, 3>{i, j, k};
    return std::nullopt;
  };

  // 2-cocycle identity: eps(b+c,a) eps(b,c) = eps(b,c+a) eps(c,a)
  {
    // outer parallel index is b; a runs innermost over contiguous rows
    auto fail = triple_sweep([&](size_t ib, size_t ic, size_t ia) {
      size_t ibg = sum_big[ib * n1 + ic];
      size_t iga = sum_big[ic * n1 + ia];
      int lhs = big_first[ibg * n1 + ia] * small_small[ib * n1 + ic];
      int rhs = small_big_t[iga * n1 + ib] * small_small[ic * n1 + ia];
      return lhs == rhs;
    });
    std::string w;
    if (fail)
      w = small.charges[(*fail)[2]].str() + ", " + small.charges[(*fail)[0]].str() + ", " +
          small.charges[(*fail)[1]].str();
    rep.add("cocycle.identity.box" + std::to_string(box_radius), laws::cocycle_identity,
            !fail.has_value(), w);
  }

  // commutator law: eps(a,b) = (-1)^{(a|b)} eps(b,a)
  {
    auto fail = par::first_failure(n1 * n1, [&](size_t t) {
      size_t ia = t / n1, ib = t % n1;
      int sign = pair_parity[ia * n1 + ib] ? -1 : 1;
      return small_small[ia * n1 + ib] == sign * small_small[ib * n1 + ia];
    }, ex);
    std::string w;
    if (fail)
      w = pair_witness(small.charges[*fail / n1], small.charges[*fail % n1]);
    rep.add("cocycle.commutator.box" + std::to_string(box_radius), laws::cocycle_commutator,
            !fail.has_value(), w);
  }

  // diagonal law: eps(a,a) = (-1)^{(a|a)/2}
  {
    auto fail = par::first_failure(n1, [&](size_t ia) {
      const Charge& a = small.charges[ia];
      long long half = indef_pairing(L, a, a) / 2;
      int sign = (half % 2) ? -1 : 1;
      return small_small[ia * n1 + ia] == sign;
    }, ex);
    rep.add("cocycle.diagonal.box" + std::to_string(box_radius), laws::cocycle_diagonal,
            !fail.has_value(), fail ? small.charges[*fail].str() : "");
  }

  // unit law: eps(a,0) = eps(0,a) = 1
  {
    Charge zero = Charge::zero(rank);
    size_t iz = small.index_of(zero);
    auto fail = par::first_failure(n1, [&](size_t ia) {
      return small_small[ia * n1 + iz] == 1 && small_small[iz * n1 + ia] == 1;
    }, ex);
    rep.add("cocycle.unit.box" + std::to_string(box_radius), laws::cocycle_unit,
            !fail.has_value(), fail ? small.charges[*fail].str() : "");
  }

  // bimultiplicativity: eps(a+b,c) = eps(a,c)eps(b,c), and in the second slot
  {
    auto fail = triple_sweep([&](size_t ia, size_t ib, size_t ic) {
      size_t iab = sum_big[ia * n1 + ib];
      bool left = big_first[iab * n1 + ic] ==
                  small_small[ia * n1 + ic] * small_small[ib * n1 + ic];
      bool right = small_big_t[iab * n1 + ic] ==
                   small_small[ic * n1 + ia] * small_small[ic * n1 + ib];
      return left && right;
    });
    std::string w;
    if (fail)
      w = small.charges[(*fail)[0]].str() + ", " + small.charges[(*fail)[1]].str() + ", " +
          small.charges[(*fail)[2]].str();
    rep.add("cocycle.bimultiplicative.box" + std::to_string(box_radius),
            laws::cocycle_bimultiplicative, !fail.has_value(), w);
  }

  return rep;
}

TwistedElement algebra_product(const Cocycle& c, const TwistedElement& x,
                               const TwistedElement& y) {
  TwistedElement out;
  for (const auto& [a, xa] : x.coeff) {
    if (xa.is_zero()) continue;
    for (const auto& [b, yb] : y.coeff) {
      if (yb.is_zero()) continue;
      int s = c.eval(a, b);
      CScalar term = xa * yb;
      if (s < 0) term = CScalar(-term.re, -term.im);
      Charge ab = a + b;
      auto it = out.coeff.find(ab);
      if (it == out.coeff.end())
        out.coeff[ab] = term;
      else
        it->second = it->second + term;
    }
  }
  return out;
}

CScalar algebra_inner(const TwistedElement& x, const TwistedElement& y, const Backend& bk) {
  CScalar s = CScalar::real(Scalar::zero(bk));
  for (const auto& [a, xa] : x.coeff) {
    auto it = y.coeff.find(a);
    if (it == y.coeff.end()) continue;
    s = s + xa.conj() * it->second;
  }
  return s;
}

std::optional<std::map<Charge, UnitPhase>> coboundary_solve(const PairPhase& c1,
                                                            const PairPhase& c2, int rank,
                                                            int box_radius) {
  std::vector<Charge> box = enumerate_box(rank, box_radius);
  auto in_box = [&](const Charge& ch) {
    for (long v : ch.c)
      if (v < -box_radius || v > box_radius) return false;
    return true;
  };
  auto q = [&](const Charge& a, const Charge& b) { return c1(a, b) / c2(a, b); };

  // precondition: symmetric quotient
  for (const Charge& a : box) {
    for (const Charge& b : box) {
      if (!q(a, b).equals(q(b, a))) return std::nullopt;
    }
  }

  std::map<Charge, UnitPhase> chi;
  chi[Charge::zero(rank)] = UnitPhase::one();
  // unit directions are free; their negatives follow from the pair relation
  for (int i = 0; i < rank; ++i) {
    Charge e = Charge::zero(rank);
    e.c[i] = 1;
    chi[e] = UnitPhase::one();
    chi[-e] = q(e, -e);
  }
  // remaining charges by increasing L1 norm, peeling one unit step at a time
  std::vector<Charge> order = box;
  std::stable_sort(order.begin(), order.end(), [](const Charge& a, const Charge& b) {
    long la = 0, lb = 0;
    for (long v : a.c) la += std::abs(v);
    for (long v : b.c) lb += std::abs(v);
    return la < lb;
  });
  for (const Charge& g : order) {
    if (chi.count(g)) continue;
    int i = 0;
    while (g.c[i] == 0) ++i;
    Charge step = Charge::zero(rank);
    step.c[i] = (g.c[i] > 0) ? 1 : -1;
    Charge rest = g - step;
    // chi(g) = chi(rest) chi(step) / q(rest, step)
    chi[g] = chi.at(rest) * chi.at(step) / q(rest, step);
  }

  // global verification over the box
  for (const Charge& a : box) {
    for (const Charge& b : box) {
      Charge ab = a + b;
      if (!in_box(ab)) continue;
      UnitPhase lhs = chi.at(a) * chi.at(b) / chi.at(ab);
      if (!lhs.equals(q(a, b))) {
        throw Error(Err::InconsistentSystem,
                    "no multiplicative solution at (" + a.str() + ", " + b.str() + ")");
      }
    }
  }
  return chi;
}

}  // namespace lvo
