// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// wherever the backend permits, stated tolerances and runtime limits pinned.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lvo/braidcat.hpp"
#include "lvo/net2d.hpp"
#include "lvo/vertex.hpp"
#include "support.hpp"

using namespace lvo;

namespace {

struct Criterion {
  std::string name;
  double limit_s;  // 0 = no stated limit
  std::function<bool(std::string&)> run;
};

bool all_pass(const Report& r, std::string& why) {
  if (r.all_pass()) return true;
  const CheckRecord* f = r.first_failure();
  why = f->id + ": " + f->witness;
  return false;
}

Charge unit_charge(int rank, int i) {
  Charge c = Charge::zero(rank);
  c.c[i] = 1;
  return c;
}

// ---------------------------------------------------------------------------

bool c01_family_gram(std::string& why) {
  for (const char* r2 : {"1", "2", "2/3"}) {
    Lattice L = example_lattice(mpq_class(r2));
    if (!(L.indef(0, 0) == 0 && L.indef(1, 1) == 0 && L.indef(0, 1) == 1 &&
          L.indef(1, 0) == 1)) {
      why = std::string("exact gram wrong at R^2 = ") + r2;
      return false;
    }
    mpq_class q(r2);
    if (!(L.gram_plus[0][0] == Scalar::rational(q / 2, L.backend))) {
      why = std::string("chiral gram wrong at R^2 = ") + r2;
      return false;
    }
  }
  Lattice Lf = example_lattice_float(2.5, 1e-12);
  if (!(Lf.indef(0, 0) == 0 && Lf.indef(1, 1) == 0 && Lf.indef(0, 1) == 1)) {
    why = "float gram wrong at R^2 = 2.5";
    return false;
  }
  if (std::abs(Lf.gram_plus[0][0].to_double() - 1.25) > 1e-12 ||
      std::abs(Lf.gram_plus[0][1].to_double() - 0.5) > 1e-12) {
    why = "float chiral gram beyond 1e-12";
    return false;
  }
  return true;
}

bool c02_cocycle_laws(std::string& why) {
  Lattice L = example_lattice(mpq_class(1));
  Cocycle eps = build_cocycle(L);
  if (!all_pass(verify_cocycle_laws(eps, 4), why)) return false;
  // seeds drawing ranks 1, 2 and 3
  for (unsigned seed : {101u, 102u, 201u}) {
    Lattice R = testsupport::random_even_lattice(seed, 3, 6);
    if (!all_pass(verify_cocycle_laws(build_cocycle(R), 4), why)) {
      why = "random lattice seed " + std::to_string(seed) + ": " + why;
      return false;
    }
  }
  // the family sign table on box radius 5
  for (long n = -5; n <= 5; ++n)
    for (long m = -5; m <= 5; ++m)
      for (long n2 = -5; n2 <= 5; ++n2)
        for (long m2 = -5; m2 <= 5; ++m2) {
          int expect = ((n * m2) % 2) ? -1 : 1;
          if (eps.eval(Charge({n, m}), Charge({n2, m2})) != expect) {
            why = "sign table at (" + std::to_string(n) + "," + std::to_string(m) + "),(" +
                  std::to_string(n2) + "," + std::to_string(m2) + ")";
            return false;
          }
        }
  return true;
}

bool c03_heisenberg_virasoro(std::string& why) {
  Backend bk = Backend::rational_backend();
  for (int d : {1, 2, 3}) {
    fock::Module m = fock::build_module(bk, d, linalg::SVec(d, Scalar::zero(bk)), 8);
    if (!all_pass(fock::verify_algebra_relations(m, 3), why)) {
      why = "d = " + std::to_string(d) + ": " + why;
      return false;
    }
    // vacuum expectation of [L2, L-2] is exactly d/2
    fock::Op c = fock::commutator(fock::sugawara_op(m, 2), fock::sugawara_op(m, -2));
    auto img = fock::apply_to_basis(c, 0, 0);
    Scalar v = Scalar::zero(bk);
    if (img.count(0) && !img[0].empty()) v = img[0][0].second;
    if (!(v == Scalar::rational(mpq_class(d, 2), bk))) {
      why = "central expectation at d = " + std::to_string(d) + " is " + v.str();
      return false;
    }
  }
  return true;
}

bool c04_exp_reordering(std::string& why) {
  Backend bk = Backend::rational_backend();
  fock::Module m = fock::build_module(bk, 1, linalg::SVec{Scalar::zero(bk)}, 12);
  linalg::SVec alpha{Scalar::one(bk)};
  for (long c = -2; c <= 2; ++c) {
    linalg::SVec beta{Scalar::integer(c, bk)};
    if (!all_pass(vertex::verify_comm_E(m, alpha, beta, 6), why)) {
      why = "(a,b) = " + std::to_string(c) + ": " + why;
      return false;
    }
  }
  return true;
}

bool c05_primary(std::string& why) {
  Lattice L = example_lattice(mpq_class(1));
  for (int gi = 0; gi < 2; ++gi) {
    Charge g = unit_charge(2, gi);
    for (const Charge& sector : {Charge::zero(2), g}) {
      // chirality p
      fock::Module mp = fock::build_module(L.backend, 1, L.chiral_weight(sector), 10);
      // chirality p-bar
      fock::Module mm = fock::build_module(L.backend, 1, L.antichiral_weight(sector), 10);
      std::vector<int> modes{-2, -1, 0, 1, 2};
      if (!all_pass(vertex::verify_primary_modes(mp, L.chiral_weight(g), modes, 5), why)) {
        why = "chiral g" + std::to_string(gi) + ": " + why;
        return false;
      }
      if (!all_pass(vertex::verify_primary_modes(mm, L.antichiral_weight(g), modes, 5),
                    why)) {
        why = "antichiral g" + std::to_string(gi) + ": " + why;
        return false;
      }
    }
  }
  return true;
}

bool c06_locality(std::string& why) {
  Lattice L = example_lattice(mpq_class(1));
  net2d::Extension x = net2d::build_extension(L, 2, 10);
  for (int gi = 0; gi < 2; ++gi)
    for (int gj = 0; gj < 2; ++gj) {
      if (!all_pass(
              net2d::verify_locality_phase(x, unit_charge(2, gi), unit_charge(2, gj), 4),
              why)) {
        why = "pair (" + std::to_string(gi) + "," + std::to_string(gj) + "): " + why;
        return false;
      }
    }

  // totally isotropic lattice: the assembled fields commute coefficient-wise
  Lattice iso = isotropic_lattice(2);
  net2d::Extension xi = net2d::build_extension(iso, 2, 6);
  if (!all_pass(net2d::verify_locality_phase(xi, Charge({1, 0}), Charge({0, 1}), 3), why))
    return false;
  if (!all_pass(net2d::verify_locality_phase(xi, Charge({1, 0}), Charge({1, 0}), 3), why))
    return false;
  fock::Module& m = *xi.chi[xi.sector(Charge({0, 0}))];
  vertex::PreVertex a = vertex::pre_vertex(m, iso.chiral_weight(Charge({1, 0})), 3);
  vertex::PreVertex b = vertex::pre_vertex(m, iso.chiral_weight(Charge({0, 1})), 3);
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j) {
      fock::Op lhs = fock::compose(a.at(i), b.at(j));
      fock::Op rhs = fock::compose(b.at(j), a.at(i));
      if (fock::equal_on_window(lhs, rhs)) {
        why = "isotropic fields fail to commute at (" + std::to_string(i) + "," +
              std::to_string(j) + ")";
        return false;
      }
    }
  return true;
}

bool c07_shift_laws(std::string& why) {
  Lattice L = example_lattice(mpq_class(1));
  net2d::Extension x = net2d::build_extension(L, 3, 6);
  if (!all_pass(net2d::verify_shift_laws(x, 1), why)) return false;
  for (int gi = 0; gi < 2; ++gi)
    for (int mode : {0, 1, 2})
      if (!all_pass(net2d::verify_L_shift(x, unit_charge(2, gi), mode), why)) return false;
  // (psi^{v1})* = psi^{-v1}: the diagonal cocycle value is +1 on this family
  if (x.eps.eval(Charge({1, 0}), Charge({1, 0})) != 1) {
    why = "eps(v1,v1) != 1";
    return false;
  }
  // the sign table of eq-level commutation: eps side computed sector-wise
  for (const Charge& a : enumerate_box(2, 1))
    for (const Charge& b : enumerate_box(2, 1))
      for (const Charge& l : enumerate_box(2, 1)) {
        int lhs = x.eps.eval(a, b + l) * x.eps.eval(b, l);
        int sign = (indef_pairing(L, a, b) % 2) ? -1 : 1;
        int rhs = sign * x.eps.eval(b, a + l) * x.eps.eval(a, l);
        if (lhs != rhs) {
          why = "sign table at " + a.str() + "," + b.str();
          return false;
        }
      }
  return true;
}

bool c08_spin_integrality(std::string& why) {
  Lattice L = example_lattice(mpq_class(1));
  net2d::Extension x = net2d::build_extension(L, 4, 2);
  if (!all_pass(net2d::spin_spectrum(x), why)) return false;
  for (const Charge& c : x.box)
    if (spin_of(L, c) != c.c[0] * c.c[1]) {
      why = "family spin at " + c.str();
      return false;
    }
  for (unsigned seed : {201u, 202u, 203u, 204u, 205u}) {
    Lattice R = testsupport::random_even_lattice(seed);
    net2d::Extension xr = net2d::build_extension(R, 4, 1, 2000000);
    if (!all_pass(net2d::spin_spectrum(xr), why)) {
      why = "random lattice seed " + std::to_string(seed) + ": " + why;
      return false;
    }
  }
  return true;
}

bool c09_character(std::string& why) {
  Lattice L = example_lattice(mpq_class(1));
  net2d::Extension x = net2d::build_extension(L, 3, 6);
  Backend bk = L.backend;
  auto counts = testsupport::pentagonal_counts(1, 6);
  for (int level = 0; level <= 6; ++level) {
    auto table = net2d::character(x, level);
    // independent oracle: pentagonal partition counts per sector
    net2d::CharacterTable oracle;
    Scalar lv = Scalar::integer(level, bk);
    for (const Charge& l : x.box) {
      auto [np, nm] = chiral_norms(L, l);
      Scalar hp = np.div_int(2), hm = nm.div_int(2);
      for (int a = 0; a <= x.cutoff; ++a) {
        Scalar ka = hp + Scalar::integer(a, bk);
        if (lv.exactly_less(ka)) break;
        for (int b = 0; b <= x.cutoff; ++b) {
          Scalar kb = hm + Scalar::integer(b, bk);
          if (lv.exactly_less(kb)) break;
          oracle[{net2d::ScalarKey{ka}, net2d::ScalarKey{kb}}] += counts[a] * counts[b];
        }
      }
    }
    if (!(table == oracle)) {
      why = "character differs from the oracle at level " + std::to_string(level);
      return false;
    }
  }
  return true;
}

bool c10_maximality_family(std::string& why) {
  Lattice L = example_lattice(mpq_class(1));
  if (!is_maximal_even(L).maximal) {
    why = "hyperbolic gram reported non-maximal";
    return false;
  }
  struct Case {
    long p, q;
  };
  for (auto [p, q] : {Case{1, 1}, Case{2, 3}, Case{5, 2}}) {
    Lattice F = example_lattice(mpq_class(p, q));
    auto v = rational_sublattice_vector(F, p, q);
    bool ok = v.membership_ok && v.coords == Charge({q, p}) && v.antichiral_value.is_zero() &&
              v.chiral_value * v.chiral_value == Scalar::integer(2 * p * q, F.backend) &&
              v.chiral_value.sign() > 0;
    if (!ok) {
      why = "family vector failed at p/q = " + std::to_string(p) + "/" + std::to_string(q);
      return false;
    }
  }
  return true;
}

bool c11_coboundary(std::string& why) {
  Lattice L = example_lattice(mpq_class(1));
  Cocycle eps = build_cocycle(L);
  auto ep = [&eps](const Charge& a, const Charge& b) {
    return UnitPhase::from_sign(eps.eval(a, b));
  };
  const int radius = 3;
  for (unsigned seed = 1; seed <= 20; ++seed) {
    // random chi0 on the doubled box, roots of unity of order dividing 24
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-12, 12);
    std::map<Charge, mpq_class> chi0;
    for (const Charge& c : enumerate_box(2, 2 * radius)) chi0[c] = mpq_class(num(rng), 12);
    chi0[Charge::zero(2)] = 0;
    auto chi0_phase = [&chi0](const Charge& c) { return UnitPhase::half_turns(chi0.at(c)); };
    auto c1 = [&](const Charge& a, const Charge& b) {
      return ep(a, b) * chi0_phase(a) * chi0_phase(b) / chi0_phase(a + b);
    };
    std::optional<std::map<Charge, UnitPhase>> sol;
    try {
      sol = coboundary_solve(c1, ep, 2, radius);
    } catch (const Error& e) {
      why = "seed " + std::to_string(seed) + " raised " + std::string(err_name(e.code));
      return false;
    }
    if (!sol) {
      why = "seed " + std::to_string(seed) + " rejected a genuine coboundary";
      return false;
    }
    // substituting chi back reproduces the quotient exactly
    for (const Charge& a : enumerate_box(2, radius))
      for (const Charge& b : enumerate_box(2, radius)) {
        Charge ab = a + b;
        bool inside = true;
        for (long v : ab.c) inside = inside && std::abs(v) <= radius;
        if (!inside) continue;
        UnitPhase lhs = sol->at(a) * sol->at(b) / sol->at(ab);
        if (!lhs.equals(c1(a, b) / ep(a, b))) {
          why = "seed " + std::to_string(seed) + " chi does not reproduce the quotient";
          return false;
        }
      }
  }
  // antisymmetric quotients are refused
  auto anti = [&](const Charge& a, const Charge& b) {
    long e = a.c[0] * b.c[1] - a.c[1] * b.c[0];
    return ep(a, b) * UnitPhase::half_turns(mpq_class(e, 2));
  };
  if (coboundary_solve(anti, ep, 2, radius).has_value()) {
    why = "antisymmetric quotient accepted";
    return false;
  }
  return true;
}

bool c12_braided_coherence(std::string& why) {
  for (const char* r2 : {"1", "2", "1/3"}) {
    Lattice L = example_lattice(mpq_class(r2));
    braidcat::FunctorData f = braidcat::canonical_functor(build_cocycle(L));
    if (!all_pass(braidcat::verify_functor_coherence(L, f, 4), why)) {
      why = std::string("R^2 = ") + r2 + ": " + why;
      return false;
    }
  }
  Lattice Lf = example_lattice_float(std::sqrt(2.0), 1e-9);
  braidcat::FunctorData ff = braidcat::canonical_functor(build_cocycle(Lf));
  if (!all_pass(braidcat::verify_functor_coherence(Lf, ff, 4), why)) {
    why = "float R^2 = sqrt(2): " + why;
    return false;
  }
  // corrupted tensorator must fail at a recorded witness
  Lattice L1 = example_lattice(mpq_class(1));
  braidcat::FunctorData flat = braidcat::canonical_functor(build_cocycle(L1));
  flat.tensorator = [](const Charge&, const Charge&) { return UnitPhase::one(); };
  Report neg = braidcat::verify_functor_coherence(L1, flat, 2);
  bool tripped = false;
  for (const auto& c : neg.checks)
    if (c.law == laws::braid_condition && c.status == "fail" && !c.witness.empty())
      tripped = true;
  if (!tripped) {
    why = "flat tensorator passed the braided condition";
    return false;
  }
  return true;
}

bool c13_nu_phases(std::string& why) {
  for (unsigned seed = 1; seed <= 5; ++seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coeff(-0.5, 0.5);
    braidcat::TrigPoly h{1.0, {coeff(rng), coeff(rng), coeff(rng)},
                         {coeff(rng), coeff(rng), coeff(rng)}};
    braidcat::TrigPoly g{1.0, {coeff(rng), coeff(rng), coeff(rng)},
                         {coeff(rng), coeff(rng), coeff(rng)}};
    double r2 = 1.0 + seed * 0.3;
    if (!all_pass(braidcat::nu_phase_check(h, g, r2, 512, 1e-12), why)) {
      why = "seed " + std::to_string(seed) + ": " + why;
      return false;
    }
  }
  return true;
}

bool c14_classification(std::string& why) {
  Lattice L = example_lattice(mpq_class(1));
  std::vector<linalg::SVec> samples;
  std::vector<Charge> box = enumerate_box(2, 2);
  for (const Charge& c : box) samples.push_back(L.ambient(c));

  auto v = net2d::classify_charges(L.space, samples);
  if (!v.pass || !v.lattice) {
    why = std::string("round trip failed at stage ") + net2d::stage_name(v.stage) + ": " +
          v.detail;
    return false;
  }
  // recovered gram is unimodularly equivalent to [[0,1],[1,0]]
  linalg::ZMat w(2, std::vector<mpz_class>(2));
  for (int i = 0; i < 2; ++i) {
    Charge e = unit_charge(2, i);
    size_t at = std::find(box.begin(), box.end(), e) - box.begin();
    for (int j = 0; j < 2; ++j) w[i][j] = v.recognized->sample_coords[at].c[j];
  }
  if (abs(linalg::det_z(w)) != 1) {
    why = "recovered basis change not unimodular";
    return false;
  }
  long long expect[2][2] = {{0, 1}, {1, 0}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mpz_class s = 0;
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          s += w[i][k] * mpz_class((long)v.lattice->indef(k, l)) * w[j][l];
      if (s != (long)expect[i][j]) {
        why = "recovered gram not equivalent to the hyperbolic plane";
        return false;
      }
    }

  auto dup = samples;
  dup.push_back(samples[4]);
  auto vd = net2d::classify_charges(L.space, dup);
  if (vd.pass || vd.stage != net2d::ClassifyStage::multiplicity) {
    why = std::string("duplicate sample ended at stage ") + net2d::stage_name(vd.stage);
    return false;
  }

  Backend bk = Backend::rational_backend();
  std::vector<linalg::SVec> odd{{Scalar::zero(bk), Scalar::zero(bk)},
                                {Scalar::one(bk), Scalar::zero(bk)},
                                {Scalar::integer(-1, bk), Scalar::zero(bk)}};
  auto vo = net2d::classify_charges(SplitSpace{1, 1}, odd);
  if (vo.pass || vo.stage != net2d::ClassifyStage::evenness) {
    why = std::string("odd-norm sample ended at stage ") + net2d::stage_name(vo.stage);
    return false;
  }
  return true;
}

bool c15_energy_bounds(std::string& why) {
  Backend bk = Backend::rational_backend();
  for (int d : {1, 2}) {
    fock::Module m = fock::build_module(bk, d, linalg::SVec(d, Scalar::zero(bk)), 8);
    if (!all_pass(fock::verify_energy_bounds(m, 4), why)) {
      why = "d = " + std::to_string(d) + ": " + why;
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"C01 family gram, exact R^2 in {1, 2, 2/3} and float 2.5", 1.0, c01_family_gram},
      {"C02 cocycle laws on box 4 + sign table on box 5", 5.0, c02_cocycle_laws},
      {"C03 Heisenberg/Virasoro relations, d in {1,2,3}, E = 8", 30.0, c03_heisenberg_virasoro},
      {"C04 exponential reordering, pairings -2..2, K = 6, E = 12", 60.0, c04_exp_reordering},
      {"C05 primary relations, both chiralities, m in -2..2, K = 5, E = 10", 0.0, c05_primary},
      {"C06 locality phases: family pairs at K = 4 and the isotropic lattice", 0.0,
       c06_locality},
      {"C07 shift laws on the box-3 extension at E = 6", 0.0, c07_shift_laws},
      {"C08 spin integrality: family box 4 + 5 random even lattices", 0.0,
       c08_spin_integrality},
      {"C09 character table vs partition oracle, levels 0..6, box 3", 0.0, c09_character},
      {"C10 even maximality + rational family vectors", 0.0, c10_maximality_family},
      {"C11 coboundary solver on 20 random quotients, box 3", 0.0, c11_coboundary},
      {"C12 braided coherence, box 4, exact and float backends", 0.0, c12_braided_coherence},
      {"C13 nu-phase quadrature on 5 random pairs", 0.0, c13_nu_phases},
      {"C14 classification round trip + staged negatives", 0.0, c14_classification},
      {"C15 linear energy bounds, d <= 2, E = 8, |m| <= 4", 0.0, c15_energy_bounds},
  };

  int failures = 0;
  for (auto& c : criteria) {
    std::string why;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ok = c.run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && c.limit_s > 0 && secs > c.limit_s) {
      ok = false;
      why = "runtime " + std::to_string(secs) + " s exceeds the " +
            std::to_string(c.limit_s) + " s limit";
    }
    std::printf("[%s] %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.name.c_str(), secs,
                why.empty() ? "" : " -- ", why.c_str());
    if (!ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", (int)criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
