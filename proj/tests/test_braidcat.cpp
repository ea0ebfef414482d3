#include "doctest.h"
#include "lvo/braidcat.hpp"

using namespace lvo;

TEST_CASE("braiding scalars") {
  // rank-1 chiral charge of norm 1: e^{i pi} = -1
  Lattice iso = isotropic_lattice(1);
  Charge g({1});
  CHECK(braidcat::braiding_scalar(iso, g, g, +1).equals(UnitPhase::from_sign(-1)));
  CHECK(braidcat::braiding_2d(iso, g, g).is_one());  // (g|g) = 0

  Lattice L = example_lattice(mpq_class(1));
  Charge v1({1, 0}), v2({0, 1}), zero({0, 0});
  // chiral pairing (p v1, p v2) = 1/2: the braiding is i
  CHECK(braidcat::braiding_scalar(L, v1, v2, +1)
            .equals(UnitPhase::half_turns(mpq_class(1, 2))));
  // the 2d combination is (-1)^{(v1|v2)} = -1
  CHECK(braidcat::braiding_2d(L, v1, v2).equals(UnitPhase::from_sign(-1)));
  CHECK(braidcat::braiding_scalar(L, zero, v2, +1).is_one());

  // eps+ eps- = 1
  for (const Charge& a : enumerate_box(2, 2))
    for (const Charge& b : enumerate_box(2, 2))
      CHECK((braidcat::braiding_scalar(L, a, b, +1) * braidcat::braiding_scalar(L, a, b, -1))
                .is_one());
}

TEST_CASE("fusion is the group law") {
  braidcat::SectorObject a{Charge({1, 0})}, b{Charge({0, 1})};
  CHECK(braidcat::fuse(a, b).charge == Charge({1, 1}));
  CHECK(braidcat::fuse(a, braidcat::SectorObject{Charge({0, 0})}).charge == a.charge);
  CHECK(braidcat::fuse(a, braidcat::conjugate(a)).charge.is_zero());
}

TEST_CASE("braiding basics sweep") {
  for (const char* r2 : {"1", "2", "1/3"}) {
    Lattice L = example_lattice(mpq_class(r2));
    CAPTURE(r2);
    CHECK(braidcat::verify_braiding_basics(L, 3, par::Exec::serial).all_pass());
  }
}

TEST_CASE("functor coherence on the family") {
  for (const char* r2 : {"1", "2", "1/3"}) {
    Lattice L = example_lattice(mpq_class(r2));
    Cocycle eps = build_cocycle(L);
    braidcat::FunctorData f = braidcat::canonical_functor(eps);
    CAPTURE(r2);
    Report r = braidcat::verify_functor_coherence(L, f, 4, par::Exec::serial);
    CHECK(r.all_pass());
  }

  // float R^2 = sqrt(2) within 1e-9
  Lattice Lf = example_lattice_float(std::sqrt(2.0), 1e-9);
  Cocycle epsf = build_cocycle(Lf);
  braidcat::FunctorData ff = braidcat::canonical_functor(epsf);
  CHECK(braidcat::verify_functor_coherence(Lf, ff, 4, par::Exec::serial).all_pass());
}

TEST_CASE("braided condition scalars at (1,0),(0,1)") {
  // both legs evaluate to e^{-i pi/2} for any R^2
  for (const char* r2 : {"1", "2", "7/5"}) {
    Lattice L = example_lattice(mpq_class(r2));
    Cocycle eps = build_cocycle(L);
    braidcat::FunctorData f = braidcat::canonical_functor(eps);
    Charge x({1, 0}), y({0, 1});
    UnitPhase left = f.tensorator(x, y) * braidcat::braiding_scalar(L, x, y, +1);
    UnitPhase right =
        f.tensorator(y, x) * braidcat::braiding_scalar(L, f.apply(x), f.apply(y), +1);
    CAPTURE(r2);
    CHECK(left.equals(UnitPhase::half_turns(mpq_class(-1, 2))));
    CHECK(right.equals(UnitPhase::half_turns(mpq_class(-1, 2))));
  }
}

TEST_CASE("corrupted tensorator fails the braided condition") {
  Lattice L = example_lattice(mpq_class(1));
  Cocycle eps = build_cocycle(L);
  braidcat::FunctorData f = braidcat::canonical_functor(eps);
  f.tensorator = [](const Charge&, const Charge&) { return UnitPhase::one(); };
  Report r = braidcat::verify_functor_coherence(L, f, 2, par::Exec::serial);
  CHECK(!r.all_pass());
  const CheckRecord* fail = r.first_failure();
  REQUIRE(fail != nullptr);
  CHECK(fail->law == laws::braid_condition);
  CHECK(!fail->witness.empty());
  // the failure is visible directly at ((1,0),(0,1))
  Charge x({1, 0}), y({0, 1});
  UnitPhase left = f.tensorator(x, y) * braidcat::braiding_scalar(L, x, y, +1);
  UnitPhase right =
      f.tensorator(y, x) * braidcat::braiding_scalar(L, f.apply(x), f.apply(y), +1);
  CHECK(!left.equals(right));
}

TEST_CASE("nu phase quadrature") {
  braidcat::TrigPoly h{1.0, {0.3, -0.2, 0.05}, {0.1, 0.0, -0.4}};
  braidcat::TrigPoly g{1.0, {-0.25, 0.15, 0.0}, {0.2, -0.1, 0.3}};

  SUBCASE("generic pair") {
    Report r = braidcat::nu_phase_check(h, g, 2.0, 512);
    CHECK(r.all_pass());
  }
  SUBCASE("h = g gives M = 0") {
    Report r = braidcat::nu_phase_check(h, h, 1.0, 128);
    CHECK(r.all_pass());
  }
  SUBCASE("mean must be one") {
    braidcat::TrigPoly bad{0.5, {0.1}, {}};
    CHECK_THROWS_AS(braidcat::nu_phase_check(bad, g, 1.0, 128), Error);
  }
  SUBCASE("unreachable tolerance is flagged") {
    CHECK_THROWS_AS(braidcat::nu_phase_check(h, g, 1.0, 16, 1e-300), Error);
  }
}
