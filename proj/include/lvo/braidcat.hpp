#pragma once

#include <functional>

#include "lvo/cocycle.hpp"
#include "lvo/lattice.hpp"
#include "lvo/parallel.hpp"
#include "lvo/phase.hpp"
#include "lvo/report.hpp"

namespace lvo::braidcat {

// Sector objects are labelled by charges; fusion adds them.
struct SectorObject {
  Charge charge;
};
inline SectorObject fuse(const SectorObject& a, const SectorObject& b) {
  return {a.charge + b.charge};
}
inline SectorObject conjugate(const SectorObject& a) { return {-a.charge}; }

// Chiral braiding scalar e^{+- i pi (pa, pb)}; exact root of unity when the
// chiral pairing is rational, complex double otherwise.
UnitPhase braiding_scalar(const Lattice& L, const Charge& a, const Charge& b, int sign);
// The two-variable combination eps+ eps- = (-1)^{(a|b)}.
UnitPhase braiding_2d(const Lattice& L, const Charge& a, const Charge& b);

struct FunctorData {
  std::vector<std::vector<long>> object_matrix;  // additive object map on coords
  std::function<UnitPhase(const Charge&, const Charge&)> tensorator;

  Charge apply(const Charge& c) const {
    Charge out = Charge::zero((int)object_matrix.size());
    for (size_t i = 0; i < object_matrix.size(); ++i)
      for (size_t j = 0; j < object_matrix[i].size(); ++j)
        out.c[i] += object_matrix[i][j] * c.c[j];
    return out;
  }
};

// The rank-2 family functor (n,m) -> (-n,m) with tensorator given by the
// lattice's sign cocycle.
FunctorData canonical_functor(const Cocycle& eps);

// Coherence of the functor data against the lattice braidings: tensorator
// 2-cocycle law, unit constraints, braided condition, involutivity.
Report verify_functor_coherence(const Lattice& L, const FunctorData& f, int box_radius,
                                par::Exec ex = par::default_exec());

// Group laws of fusion and the inverse/square braiding identities.
Report verify_braiding_basics(const Lattice& L, int box_radius,
                              par::Exec ex = par::default_exec());

// Real trigonometric polynomial a0 + sum_k (ac_k cos kt + as_k sin kt).
struct TrigPoly {
  double a0 = 0.0;
  std::vector<double> ac, as;

  double eval(double t) const;
  int degree() const { return (int)std::max(ac.size(), as.size()); }
};

// Quadrature check of the phase identity behind the naturality argument:
// with M the normalized primitive of g - h, the two tensoriality phase
// integrals agree and the self-pairing integral of M vanishes.
Report nu_phase_check(const TrigPoly& h, const TrigPoly& g, double R2, int quad_points,
                      double tol = 1e-12);

}  // namespace lvo::braidcat
