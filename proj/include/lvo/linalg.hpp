#pragma once

#include <optional>
#include <vector>

#include "lvo/scalar.hpp"

namespace lvo::linalg {

using SVec = std::vector<Scalar>;
using SMat = std::vector<std::vector<Scalar>>;
using ZMat = std::vector<std::vector<mpz_class>>;
using QVec = std::vector<mpq_class>;

int rank(SMat a);
Scalar det(SMat a);

// Leading principal minors all positive (symmetric input assumed).
bool positive_definite(const SMat& a);

// Solve A x = b exactly for full-column-rank A (n x r, n >= r). Returns nullopt
// when the system is inconsistent.
std::optional<SVec> solve(const SMat& a, const SVec& b);

mpz_class det_z(const ZMat& a);
ZMat identity_z(int n);
ZMat mul_z(const ZMat& a, const ZMat& b);

// Inverse of an integer matrix with det = +-1.
ZMat inverse_unimodular(const ZMat& u);

// U * A * V = diag(d_1..d_r, 0..) with d_i >= 0 and d_i | d_{i+1}.
struct SmithResult {
  std::vector<mpz_class> diag;
  ZMat u, v;
};
SmithResult smith_normal_form(ZMat a);

// Row-style Hermite basis of the integer row span; returns the nonzero rows.
ZMat hnf_row_basis(ZMat rows);

}  // namespace lvo::linalg
