#include "doctest.h"
#include "lvo/phase.hpp"
#include "lvo/scalar.hpp"

using namespace lvo;

TEST_CASE("rational arithmetic") {
  Backend bk = Backend::rational_backend();
  Scalar a = Scalar::rational(mpq_class(1, 3), bk);
  Scalar b = Scalar::rational(mpq_class(1, 6), bk);
  CHECK(a + b == Scalar::rational(mpq_class(1, 2), bk));
  CHECK(a - b == b);
  CHECK((a * b) == Scalar::rational(mpq_class(1, 18), bk));
  CHECK(a / b == Scalar::integer(2, bk));
  CHECK((-a).sign() == -1);
  CHECK(Scalar::zero(bk).is_zero());
  CHECK(Scalar::integer(4, bk).is_integer());
  CHECK(!a.is_integer());
  CHECK(Scalar::integer(-7, bk).to_integer() == -7);
}

TEST_CASE("quadratic field arithmetic") {
  Scalar one_plus = Scalar::quad(1, 1, 2);    // 1 + sqrt2
  Scalar one_minus = Scalar::quad(1, -1, 2);  // 1 - sqrt2
  CHECK(one_plus * one_minus == Scalar::quad(-1, 0, 2));
  CHECK((one_plus + one_minus) == Scalar::quad(2, 0, 2));
  CHECK(one_plus.inverse() == Scalar::quad(-1, 1, 2));  // 1/(1+sqrt2) = sqrt2 - 1
  CHECK(one_plus * one_plus.inverse() == Scalar::quad(1, 0, 2));

  // sign with competing parts: 3 - 2 sqrt2 > 0, 2 - 3 sqrt2 < 0
  CHECK(Scalar::quad(3, -2, 2).sign() == 1);
  CHECK(Scalar::quad(2, -3, 2).sign() == -1);
  CHECK(Scalar::quad(0, -1, 2).sign() == -1);
  CHECK(Scalar::quad(2, 0, 2).is_integer());
  CHECK(!Scalar::quad(0, 1, 2).is_rational_value());
}

TEST_CASE("backend mixing is an error") {
  Scalar r = Scalar::integer(1, Backend::rational_backend());
  Scalar q = Scalar::quad(1, 0, 2);
  Scalar f = Scalar::flt(1.0, 1e-12);
  CHECK_THROWS_AS((void)(r + q), Error);
  CHECK_THROWS_AS((void)(q * f), Error);
  CHECK_THROWS_AS((void)(r == f), Error);
}

TEST_CASE("float backend compares within tolerance") {
  Scalar x = Scalar::flt(1.0, 1e-9);
  Scalar y = Scalar::flt(1.0 + 1e-12, 1e-9);
  Scalar z = Scalar::flt(1.1, 1e-9);
  CHECK(x == y);
  CHECK(x != z);
  CHECK(Scalar::flt(3.0000000001, 1e-6).is_integer());
  CHECK(Scalar::flt(-2.0000000001, 1e-6).to_integer() == -2);
}

TEST_CASE("binomial with scalar top argument") {
  Backend bk = Backend::rational_backend();
  // (-1/2 choose 3) = (-1/2)(-3/2)(-5/2)/6 = -5/16
  Scalar a = Scalar::rational(mpq_class(-1, 2), bk);
  CHECK(binomial(a, 3) == Scalar::rational(mpq_class(-5, 16), bk));
  CHECK(binomial(Scalar::integer(2, bk), 3).is_zero());
  CHECK(binomial(a, 0) == Scalar::one(bk));
  // (-2 choose n) = (-1)^n (n+1)
  CHECK(binomial(Scalar::integer(-2, bk), 4) == Scalar::integer(5, bk));
}

TEST_CASE("integer powers") {
  Backend bk = Backend::rational_backend();
  Scalar half = Scalar::rational(mpq_class(1, 2), bk);
  CHECK(half.pow_int(3) == Scalar::rational(mpq_class(1, 8), bk));
  CHECK(half.pow_int(-2) == Scalar::integer(4, bk));
  CHECK(half.pow_int(0) == Scalar::one(bk));
  CHECK(Scalar::quad(0, 1, 2).pow_int(2) == Scalar::quad(2, 0, 2));
}

TEST_CASE("squarefree split") {
  mpz_class f, d;
  squarefree_split(12, f, d);
  CHECK(f == 2);
  CHECK(d == 3);
  squarefree_split(4, f, d);
  CHECK(f == 2);
  CHECK(d == 1);
  squarefree_split(2, f, d);
  CHECK(f == 1);
  CHECK(d == 2);
  squarefree_split(360, f, d);  // 36 * 10
  CHECK(f == 6);
  CHECK(d == 10);
}

TEST_CASE("unit phases as rational rotations") {
  UnitPhase i = UnitPhase::half_turns(mpq_class(1, 2));
  CHECK((i * i).equals(UnitPhase::from_sign(-1)));
  CHECK(i.pow(4).is_one());
  CHECK(UnitPhase::half_turns(mpq_class(7, 2)).equals(UnitPhase::half_turns(mpq_class(-1, 2))));
  CHECK((i / i).is_one());
  CHECK(UnitPhase::from_sign(-1).as_sign() == -1);
  UnitPhase f = UnitPhase::approx({0.0, 1.0}, 1e-9);
  CHECK(f.equals(i));
  CHECK(!f.equals(UnitPhase::one()));
}

TEST_CASE("complex scalars") {
  Backend bk = Backend::rational_backend();
  CScalar i(Scalar::zero(bk), Scalar::one(bk));
  CHECK((i * i) == CScalar(Scalar::integer(-1, bk), Scalar::zero(bk)));
  CHECK((i.conj() * i) == CScalar::real(Scalar::one(bk)));
}
