#pragma once

#include <memory>
#include <tuple>

#include "lvo/cocycle.hpp"
#include "lvo/fock.hpp"
#include "lvo/vertex.hpp"

namespace lvo::net2d {

// Truncated direct sum over a charge box: one chiral and one antichiral module
// per sector, all sharing the cutoff.
class Extension {
 public:
  const Lattice* lat = nullptr;
  Cocycle eps;
  int box_radius = 0;
  int cutoff = 0;
  std::vector<Charge> box;
  std::map<Charge, int> index;
  std::vector<std::unique_ptr<fock::Module>> chi;
  std::vector<std::unique_ptr<fock::Module>> anti;

  bool in_box(const Charge& l) const { return index.count(l) > 0; }
  int sector(const Charge& l) const {
    auto it = index.find(l);
    return it == index.end() ? -1 : it->second;
  }
  size_t total_states() const;
};

Extension build_extension(const Lattice& L, int box_radius, int cutoff,
                          size_t state_budget = 500000, par::Exec ex = par::default_exec());

// Charge shift on the extension: a sector permutation with a sign. The
// twisted variant carries eps(alpha, lambda); the simple variant does not.
// Images that leave the box are masked out (target -1).
struct ShiftOperator {
  Charge alpha;
  bool twisted = true;

  // (target sector, scalar) on one sector; target -1 when out of the box
  std::pair<int, int> act(const Extension& x, int sector) const {
    const Charge& l = x.box.at(sector);
    int dst = x.sector(l + alpha);
    int s = (twisted && dst >= 0) ? x.eps.eval(alpha, l) : 1;
    return {dst, s};
  }
};
inline ShiftOperator twisted_shift(const Charge& a) { return {a, true}; }
inline ShiftOperator simple_shift(const Charge& a) { return {a, false}; }

// Shift-operator laws: the commutation sign law, the adjoint law, the unit,
// the braid product, twisted-vs-simple comparison, and the exponent-offset
// exchange rule. All checks quantify over sectors whose images stay in the box.
Report verify_shift_laws(const Extension& x, int inner_radius,
                         par::Exec ex = par::default_exec());

// Sector-shift covariance of the Sugawara operators:
// L_m on sector (a+l) equals L_m on sector l plus pa(m) plus delta_{m,0}(pa,pa)/2,
// chiral and antichiral.
Report verify_L_shift(const Extension& x, const Charge& alpha, int mode,
                      par::Exec ex = par::default_exec());

// Integrality of the truncated spin spectrum (difference of the two gradings).
Report spin_spectrum(const Extension& x);

struct SectorSeries {
  int src = -1, dst = -1;
  int sign = 1;           // eps(alpha, lambda)
  Scalar off_chi, off_anti;  // (p a, p l), (p- a, p- l)
};

// The assembled field for one charge: shared weight-independent coefficient
// matrices plus per-sector sign and monomial offsets.
struct BigradedField {
  const Extension* ext = nullptr;
  Charge alpha;
  int order = 0;
  vertex::PreVertex chi_coeff;   // matrices on the reference (vacuum) modules
  vertex::PreVertex anti_coeff;
  std::vector<SectorSeries> sectors;  // indexed by source sector, dst=-1 if out of box
};

BigradedField full_field(const Extension& x, const Charge& alpha, int order,
                         par::Exec ex = par::default_exec());

struct FourierComponent {
  int src = -1, dst = -1;
  int sign = 1;
  int k_chi = 0, k_anti = 0;  // integer coefficient indices
  const fock::Op* chi = nullptr;
  const fock::Op* anti = nullptr;
};

// Component of Y(z,zbar) = sum Y_{r,s} z^{-r-1} zbar^{-s-1} on one source
// sector; throws OutOfWindow when (r,s) is off the sector's derived grid.
FourierComponent fourier_component(const BigradedField& y, int src_sector, const Scalar& r,
                                   const Scalar& s);

// Derived mode grid of the field on a sector: r in Z - 1 - (pa,pl). Returns
// the fractional offsets (chiral, antichiral).
std::pair<Scalar, Scalar> fourier_offsets(const BigradedField& y, int src_sector);

// Basis state of the extension: sector plus one (grade, index) pair per
// chirality.
struct ProductState {
  int sector = -1;
  int g_chi = 0, i_chi = 0;
  int g_anti = 0, i_anti = 0;
  bool operator<(const ProductState& o) const {
    return std::tie(sector, g_chi, i_chi, g_anti, i_anti) <
           std::tie(o.sector, o.g_chi, o.i_chi, o.g_anti, o.i_anti);
  }
};

// One operator on the truncated space: the field smeared against a finitely
// supported two-variable mode function f_{r,s}. Components off every sector
// grid are rejected.
struct SmearedField {
  const BigradedField* field = nullptr;
  // per source sector, the weighted components hitting it
  std::vector<std::vector<std::pair<Scalar, FourierComponent>>> terms;
};
SmearedField smear_field_2d(const BigradedField& y,
                            const std::vector<std::pair<std::pair<Scalar, Scalar>, Scalar>>&
                                mode_coefficients);

// Apply the smeared operator to a product basis state.
std::map<ProductState, Scalar> apply_smeared(const SmearedField& f, const ProductState& v);

// Coefficient-wise exchange law for the assembled fields (cocycle scalar law
// plus both chiral coefficient identities), plus the sign bookkeeping
// (-1)^{(a|b)} * (-1)^{-(a|b)} = 1.
Report verify_locality_phase(const Extension& x, const Charge& alpha, const Charge& beta,
                             int order, par::Exec ex = par::default_exec());

// Fourier components move grades as the Virasoro commutator predicts.
Report verify_fourier_grading(const Extension& x, const Charge& alpha, int order,
                              par::Exec ex = par::default_exec());

struct ScalarKey {
  Scalar v;
  bool operator<(const ScalarKey& o) const { return v.exactly_less(o.v); }
  bool operator==(const ScalarKey& o) const { return v == o.v; }
};
using CharacterTable = std::map<std::pair<ScalarKey, ScalarKey>, mpz_class>;

// Bigraded dimension table: multiplicity at (n+, n-) summed over sectors,
// keys shifted by the sector's minimal bigrade.
CharacterTable character(const Extension& x, int level);
// The same table from the counting generating function (no enumeration).
CharacterTable character_counting_oracle(const Extension& x, int level);

enum class ClassifyStage { multiplicity, closure, recognize, evenness, emitted };
const char* stage_name(ClassifyStage s);

struct ClassifyVerdict {
  bool pass = false;
  ClassifyStage stage = ClassifyStage::multiplicity;  // failing stage, or emitted
  std::string detail;
  std::optional<RecognizedLattice> recognized;
  std::optional<Lattice> lattice;  // canonical lattice (stage e)
  // canonical cocycle basis table on the recovered generators (stage e)
  std::optional<std::vector<std::vector<int>>> cocycle_table;
};

// Classification pipeline on a finite charge sample (repeats = multiplicity):
// multiplicity-1, additive closure in the recognized window, lattice
// recognition, evenness, canonical data emission.
ClassifyVerdict classify_charges(const SplitSpace& space,
                                 const std::vector<linalg::SVec>& charges);

}  // namespace lvo::net2d
