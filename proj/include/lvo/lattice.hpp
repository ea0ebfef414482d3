#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lvo/linalg.hpp"
#include "lvo/scalar.hpp"

namespace lvo {

struct SplitSpace {
  int d_plus = 0;
  int d_minus = 0;
  int dim() const { return d_plus + d_minus; }
};

// Integer coordinates of a lattice element in the generator basis.
struct Charge {
  std::vector<long> c;

  Charge() = default;
  explicit Charge(std::vector<long> v) : c(std::move(v)) {}
  static Charge zero(int rank) { return Charge(std::vector<long>(rank, 0)); }

  int rank() const { return (int)c.size(); }
  bool is_zero() const {
    for (long v : c)
      if (v) return false;
    return true;
  }
  Charge operator+(const Charge& o) const {
    Charge r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
  }
  Charge operator-() const {
    Charge r = *this;
    for (long& v : r.c) v = -v;
    return r;
  }
  Charge operator-(const Charge& o) const { return *this + (-o); }
  bool operator==(const Charge& o) const { return c == o.c; }
  bool operator<(const Charge& o) const { return c < o.c; }
  std::string str() const;
};

// Split generator: chiral and antichiral coordinate blocks in orthonormal
// frames of p*h and (1-p)*h.
struct Generator {
  linalg::SVec plus;
  linalg::SVec minus;
};

// Even lattice w.r.t. (a|b) = (pa,pb) - ((1-p)a,(1-p)b). Generators are stored
// by split coordinates; all integrality checks go through the derived Grams.
class Lattice {
 public:
  SplitSpace space;
  Backend backend;
  std::vector<Generator> gens;
  linalg::SMat gram_plus;   // (g_i^+, g_j^+)
  linalg::SMat gram_minus;  // (g_i^-, g_j^-)
  std::vector<std::vector<long long>> gram_indef;

  int rank() const { return (int)gens.size(); }

  long long indef(int i, int j) const { return gram_indef[i][j]; }

  linalg::SVec chiral_weight(const Charge& l) const;
  linalg::SVec antichiral_weight(const Charge& l) const;
  linalg::SVec ambient(const Charge& l) const;  // chiral ++ antichiral

  Scalar pairing_plus(const Charge& a, const Charge& b) const;
  Scalar pairing_minus(const Charge& a, const Charge& b) const;
};

Lattice build_lattice(const SplitSpace& space, const std::vector<Generator>& gens,
                      const Backend& bk);

long long indef_pairing(const Lattice& L, const Charge& a, const Charge& b);
std::pair<Scalar, Scalar> chiral_norms(const Lattice& L, const Charge& l);
long long spin_of(const Lattice& L, const Charge& l);

// Coordinate cube |c_i| <= radius in deterministic (lexicographic) order.
std::vector<Charge> enumerate_box(int rank, int radius);

struct DiscriminantData {
  std::vector<mpz_class> invariant_factors;
  // Dual-coset representatives as rational coordinates in the generator basis,
  // with (x|x) reduced mod 2Z into [0,2).
  std::vector<linalg::QVec> reps;
  std::vector<mpq_class> norms_mod2;
};
DiscriminantData discriminant_data(const Lattice& L);

struct MaximalityVerdict {
  bool maximal = false;
  std::optional<linalg::QVec> witness;  // coset with even norm, when not maximal
};
MaximalityVerdict is_maximal_even(const Lattice& L);

struct RationalFamilyVector {
  Charge coords;            // (q, p) in the generator basis
  Scalar chiral_value;      // sqrt(2pq)
  Scalar antichiral_value;  // 0
  bool membership_ok = false;
};
// For the rank-2 family lattice built from R^2 = p/q: the chiral-axis element.
RationalFamilyVector rational_sublattice_vector(const Lattice& L, long p, long q);

// Outcome of desk-scale lattice recognition. Grams are not validated for
// integrality/evenness here; to_lattice() applies the full validation.
struct RecognizedLattice {
  SplitSpace space;
  Backend backend;
  std::vector<Generator> gens;
  std::vector<Charge> sample_coords;  // per input sample, in recovered basis
  linalg::SMat gram_plus, gram_minus;

  Lattice to_lattice() const;
};

// Returns nullopt when the sample looks non-discrete at desk scale (minimal
// pairwise gap < diameter/64) or is not contained in any rational lattice.
std::optional<RecognizedLattice> recognize_lattice(const SplitSpace& space,
                                                   const std::vector<linalg::SVec>& samples);

// The rank-2 split family: generators (R/sqrt2, R/sqrt2) and
// (1/(R*sqrt2), -1/(R*sqrt2)) with R^2 = p/q. Exact backend is chosen from the
// square-free part of 2pq.
Lattice example_lattice(const mpq_class& R2);
Lattice example_lattice_float(double R2, double tol);

// Totally isotropic lattice: d diagonal generators e_i + e_i in d+d dims.
Lattice isotropic_lattice(int d);

}  // namespace lvo
