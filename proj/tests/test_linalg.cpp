#include "doctest.h"
#include "lvo/linalg.hpp"

using namespace lvo;
using namespace lvo::linalg;

namespace {
Backend bk = Backend::rational_backend();
Scalar S(long n) { return Scalar::integer(n, bk); }
Scalar Q(long n, long d) { return Scalar::rational(mpq_class(n, d), bk); }
}  // namespace

TEST_CASE("rank and determinant") {
  SMat a{{S(1), S(2)}, {S(2), S(4)}};
  CHECK(rank(a) == 1);
  CHECK(det(a).is_zero());
  SMat b{{S(2), S(1)}, {S(1), S(3)}};
  CHECK(det(b) == S(5));
  CHECK(rank(b) == 2);
  SMat c{{S(0), S(1)}, {S(1), S(0)}};
  CHECK(det(c) == S(-1));
}

TEST_CASE("positive definiteness by leading minors") {
  SMat pd{{S(2), S(1)}, {S(1), S(3)}};
  CHECK(positive_definite(pd));
  SMat not_pd{{S(1), S(2)}, {S(2), S(1)}};  // minors 1, -3
  CHECK(!positive_definite(not_pd));
  SMat semi{{S(1), S(1)}, {S(1), S(1)}};
  CHECK(!positive_definite(semi));
}

TEST_CASE("exact solve") {
  SMat a{{S(1), S(2)}, {S(3), S(4)}};
  SVec b{S(5), S(6)};
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == S(-4));
  CHECK((*x)[1] == Q(9, 2));

  // overdetermined consistent and inconsistent systems
  SMat tall{{S(1)}, {S(2)}};
  CHECK(solve(tall, SVec{S(3), S(6)}).has_value());
  CHECK(!solve(tall, SVec{S(3), S(7)}).has_value());
}

TEST_CASE("integer determinant and unimodular inverse") {
  ZMat u{{1, 1}, {0, 1}};
  CHECK(det_z(u) == 1);
  ZMat inv = inverse_unimodular(u);
  CHECK(inv[0][0] == 1);
  CHECK(inv[0][1] == -1);
  CHECK(inv[1][1] == 1);
  ZMat id = mul_z(u, inv);
  CHECK(id[0][0] == 1);
  CHECK(id[0][1] == 0);
  CHECK(id[1][0] == 0);
  CHECK(id[1][1] == 1);
  ZMat m{{2, 3}, {1, 4}};
  CHECK(det_z(m) == 5);
}

TEST_CASE("smith normal form") {
  auto check_snf = [](ZMat a, std::vector<long> expected) {
    auto r = smith_normal_form(a);
    REQUIRE(r.diag.size() == expected.size());
    for (size_t i = 0; i < expected.size(); ++i) CHECK(r.diag[i] == expected[i]);
    // U A V = diag
    ZMat ua = mul_z(r.u, a);
    ZMat uav = mul_z(ua, r.v);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < a[0].size(); ++j)
        CHECK(uav[i][j] == ((i == j && i < expected.size()) ? expected[i] : 0));
    CHECK(abs(det_z(r.u)) == 1);
    CHECK(abs(det_z(r.v)) == 1);
    // divisibility chain
    for (size_t i = 0; i + 1 < r.diag.size(); ++i)
      if (r.diag[i] != 0) CHECK(r.diag[i + 1] % r.diag[i] == 0);
  };
  check_snf({{0, 1}, {1, 0}}, {1, 1});
  check_snf({{2, 0}, {0, 4}}, {2, 4});
  check_snf({{2, 4}, {4, 2}}, {2, 6});
  check_snf({{8}}, {8});
  check_snf({{6, 4}, {4, 6}}, {2, 10});
}

TEST_CASE("hermite row basis") {
  ZMat rows{{2, 0}, {3, 0}};
  auto h = hnf_row_basis(rows);
  REQUIRE(h.size() == 1);
  CHECK(h[0][0] == 1);
  CHECK(h[0][1] == 0);

  ZMat rows2{{1, 2}, {3, 4}, {4, 6}};
  auto h2 = hnf_row_basis(rows2);
  REQUIRE(h2.size() == 2);
  // span check: both original rows are integer combinations of the basis
  CHECK(h2[0][0] == 1);
  CHECK(h2[1][0] == 0);
  CHECK(h2[1][1] == 2);  // lattice (1,2),(3,4) has index-2 second factor

  ZMat rows3{{4}, {6}};
  auto h3 = hnf_row_basis(rows3);
  REQUIRE(h3.size() == 1);
  CHECK(h3[0][0] == 2);
}
