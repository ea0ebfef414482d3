#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lvo/linalg.hpp"
#include "lvo/parallel.hpp"
#include "lvo/partitions.hpp"
#include "lvo/report.hpp"
#include "lvo/scalar.hpp"

namespace lvo::fock {

struct SparseMat {
  int rows = 0, cols = 0;
  // column-major, entries sorted by row index
  std::vector<std::vector<std::pair<int, Scalar>>> col;

  static SparseMat zero(int r, int c) {
    SparseMat m;
    m.rows = r;
    m.cols = c;
    m.col.resize(c);
    return m;
  }
  bool empty() const {
    for (const auto& c : col)
      if (!c.empty()) return false;
    return true;
  }
};

// Truncated Heisenberg module over an orthonormal frame: d colors, weight
// vector w (zero modes act by (e_j, w) = w_j), all grades up to the cutoff.
class Module {
 public:
  Backend bk;
  int dim = 0;
  linalg::SVec weight;
  int cutoff = 0;
  std::vector<std::vector<ColoredPartition>> basis;  // [grade]
  std::vector<std::map<ColoredPartition, int>> index;
  // Diagonal Gram: <s,s> = prod over parts m with multiplicity k of m^k k!.
  std::vector<std::vector<mpz_class>> gram_diag;

  int grade_dim(int n) const { return (n < 0 || n > cutoff) ? 0 : (int)basis[n].size(); }
  size_t total_dim() const;
  Scalar weight_dot(const linalg::SVec& alpha) const;  // (alpha, w)
  Scalar weight_norm2() const;                         // (w, w)
  Scalar gram(int grade, int i) const {
    return Scalar::rational(mpq_class(gram_diag[grade][i]), bk);
  }
  bool same_shape(const Module& o) const { return dim == o.dim && cutoff == o.cutoff; }
};

Module build_module(const Backend& bk, int dim, const linalg::SVec& weight, int cutoff,
                    size_t state_budget = 500000);

// Energy-graded operator between modules of the same shape. Matrix elements
// <u, A v> are exact whenever energy(v) <= cutoff - band (and energy(u) is
// within the cutoff); rows above the cutoff are not represented.
struct Op {
  const Module* src = nullptr;
  const Module* dst = nullptr;
  int band = 0;
  std::map<std::pair<int, int>, SparseMat> blocks;  // (src grade, dst grade)

  bool storage_empty() const;
  int max_shift() const;  // 0 when empty
  int min_shift() const;
  std::optional<int> uniform_shift() const;
};

Op zero_op(const Module& m);
Op identity_op(const Module& m);
Op add(const Op& a, const Op& b);
Op sub(const Op& a, const Op& b);
Op scale(const Op& a, const Scalar& s);
// acc += term (optionally scaled); avoids the copying of add/scale chains
void accumulate(Op& acc, const Op& term, const Scalar* factor = nullptr);
// a after b; src_limit truncates source grades that no caller will read
Op compose(const Op& a, const Op& b, par::Exec ex = par::default_exec(),
           int src_limit = 1 << 30);
Op adjoint(const Op& a);
Op commutator(const Op& a, const Op& b, par::Exec ex = par::default_exec());

// Exact equality of all matrix elements with source grade <= cutoff - band
// (band = max of the two operands' bands plus extra_band). Returns a witness
// description on failure; empty-window comparisons fail with a note.
std::optional<std::string> equal_on_window(const Op& a, const Op& b, int extra_band = 0);

// alpha(m): creation for m < 0, annihilation for m > 0, (alpha, w) at m = 0.
Op mode_op(const Module& m, const linalg::SVec& alpha, int mode);

// Sugawara L_m, normal ordered (annihilation right); L_0 carries (w,w)/2.
Op sugawara_op(const Module& m, int mode);

// +-1 by total occupation-number parity.
Op parity_op(const Module& m);

// Band-limited smeared field sum_m f_m alpha(m) with complex coefficients.
struct SmearedOp {
  Op re, im;
};
SmearedOp smear_field(const Module& m, const linalg::SVec& alpha,
                      const std::map<int, CScalar>& fourier);

// Column of A applied to basis state (grade, idx), as (grade, sparse column).
std::map<int, std::vector<std::pair<int, Scalar>>> apply_to_basis(const Op& a, int grade,
                                                                  int idx);
// Squared norm of such an image vector.
Scalar image_norm2(const Module& m, const std::map<int, std::vector<std::pair<int, Scalar>>>& v);

Report verify_algebra_relations(const Module& m, int max_mode,
                                par::Exec ex = par::default_exec());
Report verify_energy_bounds(const Module& m, int max_mode);
Report verify_parity(const Module& m, int max_mode);
Report verify_smear_comm(const Module& m);

}  // namespace lvo::fock
