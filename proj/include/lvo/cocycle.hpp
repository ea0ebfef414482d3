#pragma once

#include <functional>
#include <map>
#include <optional>

#include "lvo/lattice.hpp"
#include "lvo/parallel.hpp"
#include "lvo/phase.hpp"
#include "lvo/report.hpp"

namespace lvo {

// Sign 2-cocycle on the lattice, defined on an ordered generator basis and
// extended bimultiplicatively.
class Cocycle {
 public:
  const Lattice* lattice = nullptr;
  // table[i][j] in {+1,-1}: the value on (g_i, g_j).
  std::vector<std::vector<int>> table;

  int eval(const Charge& a, const Charge& b) const {
    long long e = 0;
    int n = (int)table.size();
    for (int i = 0; i < n; ++i) {
      if (a.c[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (table[i][j] < 0) e += a.c[i] * b.c[j];
      }
    }
    return (e % 2) ? -1 : 1;
  }
  UnitPhase eval_phase(const Charge& a, const Charge& b) const {
    return UnitPhase::from_sign(eval(a, b));
  }
};

Cocycle build_cocycle(const Lattice& L);

Report verify_cocycle_laws(const Cocycle& c, int box_radius,
                           par::Exec ex = par::default_exec());

// Element of the twisted group algebra: finitely supported Charge -> complex.
struct TwistedElement {
  std::map<Charge, CScalar> coeff;

  static TwistedElement basis(const Charge& a, const Backend& bk) {
    TwistedElement e;
    e.coeff[a] = CScalar::real(Scalar::one(bk));
    return e;
  }
};

TwistedElement algebra_product(const Cocycle& c, const TwistedElement& x,
                               const TwistedElement& y);
CScalar algebra_inner(const TwistedElement& x, const TwistedElement& y, const Backend& bk);

// Multiplicative coboundary solver on a coordinate box: finds chi with
// chi(0) = 1 and q(a,b) = chi(a)chi(b)/chi(a+b) for the quotient q = c1/c2
// wherever a, b, a+b stay inside the box. Returns nullopt when the quotient is
// not symmetric; throws InconsistentSystem when no chi exists (non-cocycle
// input).
using PairPhase = std::function<UnitPhase(const Charge&, const Charge&)>;
std::optional<std::map<Charge, UnitPhase>> coboundary_solve(const PairPhase& c1,
                                                            const PairPhase& c2, int rank,
                                                            int box_radius);

}  // namespace lvo
