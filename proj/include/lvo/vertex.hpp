#pragma once

#include <map>

#include "lvo/fock.hpp"

namespace lvo::vertex {

// Coefficients of E^-(alpha,z) (index k: coefficient of z^k, k >= 0) or of
// E^+(alpha,z) (index k: coefficient of z^{-k}).
struct HalfSeries {
  std::vector<fock::Op> coeff;
  const fock::Op& at(int k) const { return coeff.at(k); }
  int order() const { return (int)coeff.size() - 1; }
};

HalfSeries exp_minus(const fock::Module& m, const linalg::SVec& alpha, int order);
HalfSeries exp_plus(const fock::Module& m, const linalg::SVec& alpha, int order);

// Pre-vertex operator E^-(a,z)E^+(a,z) z^{a(0)}: integer-graded coefficients
// around the monomial z^{(alpha, w)}. Coefficient k is exact on the band
// window (it sums every contribution that acts within the truncation).
struct PreVertex {
  const fock::Module* mod = nullptr;
  linalg::SVec alpha;
  Scalar offset;                   // (alpha, weight)
  std::map<int, fock::Op> coeff;   // k in [-order, order]
  int order = 0;

  const fock::Op& at(int k) const { return coeff.at(k); }
};

PreVertex pre_vertex(const fock::Module& m, const linalg::SVec& alpha, int order,
                     par::Exec ex = par::default_exec());

// Exchange identity for the exponential halves:
// (1 - z/w)^{-(a,b)} E^+(a,w) E^-(b,z) = E^-(b,z) E^+(a,w), coefficient-wise
// for bidegrees (w^{-r}, z^s) with 0 <= r,s <= order.
Report verify_comm_E(const fock::Module& m, const linalg::SVec& alpha,
                     const linalg::SVec& beta, int order,
                     par::Exec ex = par::default_exec());

// Primary-field relation for the pre-vertex series on this module's sector:
// [L_mode, Y(z)] = z^{mode+1} dz Y(z) + h (mode+1) z^mode Y(z) with
// h = (alpha,alpha)/2, where the left side uses the sector-shift form of L.
Report verify_primary(const fock::Module& m, const linalg::SVec& alpha, int mode, int order,
                      par::Exec ex = par::default_exec());
// Same relation for several modes sharing one series expansion.
Report verify_primary_modes(const fock::Module& m, const linalg::SVec& alpha,
                            const std::vector<int>& modes, int order,
                            par::Exec ex = par::default_exec());

// One chirality of the two-variable exchange law between pre-vertex series:
// (1-z/w)^{-e} w^{-e} Y_a(w) Y_b(z) = (1-w/z)^{-e} z^{-e} Y_b(z) Y_a(w)
// with e = (alpha, beta), compared coefficient-wise for |bidegree| <= order.
Report verify_locality_chiral(const fock::Module& m, const linalg::SVec& alpha,
                              const linalg::SVec& beta, int order,
                              par::Exec ex = par::default_exec());

}  // namespace lvo::vertex
