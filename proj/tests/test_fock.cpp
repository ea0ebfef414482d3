#include "doctest.h"
#include "lvo/fock.hpp"
#include "support.hpp"

using namespace lvo;
using fock::Module;
using fock::Op;

namespace {
Backend rbk = Backend::rational_backend();
Scalar S(long n) { return Scalar::integer(n, rbk); }
linalg::SVec unit(int d, int j) {
  linalg::SVec e(d, Scalar::zero(rbk));
  e[j] = Scalar::one(rbk);
  return e;
}
}  // namespace

TEST_CASE("grade dimensions are colored partition counts") {
  Module m = fock::build_module(rbk, 1, unit(1, 0), 4);
  CHECK(m.grade_dim(0) == 1);
  CHECK(m.grade_dim(1) == 1);
  CHECK(m.grade_dim(2) == 2);
  CHECK(m.grade_dim(3) == 3);
  CHECK(m.grade_dim(4) == 5);

  Module m2 = fock::build_module(rbk, 2, unit(2, 0), 6);
  auto counts = testsupport::pentagonal_counts(2, 6);
  for (int n = 0; n <= 6; ++n) CHECK(mpz_class(m2.grade_dim(n)) == counts[n]);
}

TEST_CASE("state budget is enforced") {
  CHECK_THROWS_AS(fock::build_module(rbk, 3, unit(3, 0), 30, 1000), Error);
  try {
    fock::build_module(rbk, 3, unit(3, 0), 30, 1000);
  } catch (const Error& e) {
    CHECK(e.code == Err::CutoffTooLarge);
  }
}

TEST_CASE("gram matches the commutator-pushing oracle") {
  for (int d : {1, 2}) {
    Module m = fock::build_module(rbk, d, unit(d, 0), 5);
    for (int n = 0; n <= 5; ++n) {
      for (int i = 0; i < m.grade_dim(n); ++i) {
        for (int j = 0; j < m.grade_dim(n); ++j) {
          mpz_class expect = testsupport::gram_oracle(m.basis[n][i], m.basis[n][j]);
          mpz_class got = (i == j) ? m.gram_diag[n][i] : 0;
          CHECK(expect == got);
        }
      }
    }
  }
}

TEST_CASE("mode operators") {
  Module m = fock::build_module(rbk, 1, linalg::SVec{S(3)}, 6);  // weight 3
  linalg::SVec a = unit(1, 0);

  // a(m) annihilates the vacuum for m > 0
  for (int mm = 1; mm <= 3; ++mm)
    CHECK(fock::apply_to_basis(fock::mode_op(m, a, mm), 0, 0).empty());

  // zero mode is the pairing with the weight
  auto img = fock::apply_to_basis(fock::mode_op(m, a, 0), 0, 0);
  REQUIRE(img.count(0));
  CHECK(img[0][0].second == S(3));

  // <a(-1)O, a(-1)O> = (a,a), <a(-2)O, a(-2)O> = 2(a,a)
  auto v1 = fock::apply_to_basis(fock::mode_op(m, a, -1), 0, 0);
  CHECK(fock::image_norm2(m, v1) == S(1));
  auto v2 = fock::apply_to_basis(fock::mode_op(m, a, -2), 0, 0);
  CHECK(fock::image_norm2(m, v2) == S(2));

  // [a(1), a(-1)] = (a,a) Id on the window
  Op comm = fock::commutator(fock::mode_op(m, a, 1), fock::mode_op(m, a, -1));
  CHECK(!fock::equal_on_window(comm, fock::identity_op(m)).has_value());
}

TEST_CASE("sugawara operators") {
  Module vac = fock::build_module(rbk, 1, linalg::SVec{S(0)}, 6);
  Op l0 = fock::sugawara_op(vac, 0);

  // L0 J_{-1}J_{-3} O = 4 J_{-1}J_{-3} O
  ColoredPartition st;
  st.parts = {{3, 1}};
  int idx = vac.index[4].at(st);
  auto img = fock::apply_to_basis(l0, 4, idx);
  REQUIRE(img.count(4));
  REQUIRE(img[4].size() == 1);
  CHECK(img[4][0].first == idx);
  CHECK(img[4][0].second == S(4));

  // lowest weight (w,w)/2 on a charged module
  Module ch = fock::build_module(rbk, 1, linalg::SVec{S(2)}, 4);
  auto i0 = fock::apply_to_basis(fock::sugawara_op(ch, 0), 0, 0);
  CHECK(i0[0][0].second == S(2));  // 4/2

  // vacuum expectation of [L2, L-2] is c/2 = d/2
  for (int d : {1, 2}) {
    Module m = fock::build_module(rbk, d, unit(d, 0) /*weight e0*/, 6);
    Op c = fock::commutator(fock::sugawara_op(m, 2), fock::sugawara_op(m, -2));
    auto img2 = fock::apply_to_basis(c, 0, 0);
    // on weight e0: 4 L0 + d/2 at the bottom gives 4*(1/2) + d/2
    Scalar expect = Scalar::rational(mpq_class(4, 2) + mpq_class(d, 2), rbk);
    REQUIRE(img2.count(0));
    CHECK(img2[0][0].second == expect);
  }
}

TEST_CASE("algebra relations verify exactly") {
  for (int d : {1, 2}) {
    Module m = fock::build_module(rbk, d, linalg::SVec(d, Scalar::zero(rbk)), 8);
    Report r = fock::verify_algebra_relations(m, 3, par::Exec::serial);
    CAPTURE(d);
    CHECK(r.all_pass());
  }
}

TEST_CASE("a wrong central charge is caught") {
  // the checker must reject relations asserted with c = d + 1
  Module m = fock::build_module(rbk, 1, linalg::SVec{S(0)}, 6);
  Op lhs = fock::commutator(fock::sugawara_op(m, 2), fock::sugawara_op(m, -2));
  Op rhs = fock::scale(fock::sugawara_op(m, 0), S(4));
  Scalar wrong_central = Scalar::rational(mpq_class(2 * 6, 12), rbk);  // c = 2
  rhs = fock::add(rhs, fock::scale(fock::identity_op(m), wrong_central));
  CHECK(fock::equal_on_window(lhs, rhs).has_value());
}

TEST_CASE("parity operator") {
  Module m = fock::build_module(rbk, 2, unit(2, 0), 6);
  Report r = fock::verify_parity(m, 3);
  CHECK(r.all_pass());
  Op v = fock::parity_op(m);
  auto img = fock::apply_to_basis(v, 0, 0);
  CHECK(img[0][0].second == S(1));  // V O = O
  Op a1 = fock::mode_op(m, unit(2, 0), -1);
  auto odd = fock::apply_to_basis(fock::compose(v, a1), 0, 0);
  CHECK(odd[1][0].second == S(-1));  // V a(-1) O = -a(-1) O
}

TEST_CASE("smeared fields") {
  Module m = fock::build_module(rbk, 1, linalg::SVec{S(0)}, 8);
  Report r = fock::verify_smear_comm(m);
  CHECK(r.all_pass());

  // linearity in the fourier coefficients
  linalg::SVec a = unit(1, 0);
  std::map<int, CScalar> f{{1, CScalar::real(S(2))}, {-2, CScalar::real(S(3))}};
  fock::SmearedOp F = fock::smear_field(m, a, f);
  Op direct = fock::add(fock::scale(fock::mode_op(m, a, 1), S(2)),
                        fock::scale(fock::mode_op(m, a, -2), S(3)));
  CHECK(!fock::equal_on_window(F.re, direct).has_value());
  CHECK(F.im.storage_empty());

  // band-limit enforcement
  std::map<int, CScalar> wide{{9, CScalar::real(S(1))}};
  CHECK_THROWS_AS(fock::smear_field(m, a, wide), Error);
}

TEST_CASE("energy bounds hold on the safe window") {
  for (int d : {1, 2}) {
    Module m = fock::build_module(rbk, d, linalg::SVec(d, Scalar::zero(rbk)), 6);
    Report r = fock::verify_energy_bounds(m, 3);
    CAPTURE(d);
    CHECK(r.all_pass());
  }
}

TEST_CASE("band bookkeeping") {
  Module m = fock::build_module(rbk, 1, linalg::SVec{S(0)}, 6);
  linalg::SVec a = unit(1, 0);
  Op cr = fock::mode_op(m, a, -2);
  Op an = fock::mode_op(m, a, 2);
  CHECK(cr.band == 2);
  CHECK(an.band == 0);
  CHECK(fock::compose(cr, cr).band == 4);
  CHECK(fock::compose(an, cr).band == 2);
  CHECK(fock::compose(cr, an).band == 0);  // annihilate first: exact everywhere
  CHECK(fock::adjoint(cr).band == 0);
  CHECK(fock::adjoint(an).band == 2);
  // adjoint of a creation operator is the matching annihilation operator
  CHECK(!fock::equal_on_window(fock::adjoint(cr), an).has_value());

  // energy shifts: definite for mode operators, absent for mixed sums
  CHECK(cr.uniform_shift() == 2);
  CHECK(an.uniform_shift() == -2);
  CHECK(!fock::add(cr, an).uniform_shift().has_value());
  CHECK(cr.max_shift() == 2);
  CHECK(an.min_shift() == -2);
}

TEST_CASE("equal_on_window reports a witness") {
  Module m = fock::build_module(rbk, 1, linalg::SVec{S(0)}, 4);
  linalg::SVec a = unit(1, 0);
  Op x = fock::mode_op(m, a, -1);
  Op y = fock::scale(x, S(2));
  auto w = fock::equal_on_window(x, y);
  REQUIRE(w.has_value());
  CHECK(w->find("grade") != std::string::npos);
}
