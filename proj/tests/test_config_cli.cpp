#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lvo/config.hpp"
#include "lvo/suites.hpp"

using namespace lvo;

namespace {

const char* kFamilyConfig = R"(# family model at R^2 = 1
[space]
dplus = 1
dminus = 1

[backend]
kind = quadratic
d = 2

[lattice]
R2 = 1
generator = R/sqrt2, R/sqrt2
generator = 1/(R*sqrt2), -1/(R*sqrt2)

[cutoffs]
energy = 4
series_order = 2
box_radius = 1

[suites]
run = lattice, cocycle
)";

std::string write_temp(const std::string& text, const std::string& name) {
  std::string path = std::string("cfg_") + name + ".tmp";
  std::ofstream out(path);
  out << text;
  return path;
}

#ifdef LVO_BIN
int run_cli(const std::string& args, std::string* output = nullptr) {
  std::string cmd = std::string(LVO_BIN) + " " + args + " > cli_out.tmp 2>&1";
  int rc = std::system(cmd.c_str());
  if (output) {
    std::ifstream in("cli_out.tmp");
    std::ostringstream ss;
    ss << in.rdbuf();
    *output = ss.str();
  }
  return WEXITSTATUS(rc);
}
#endif

}  // namespace

TEST_CASE("token evaluation") {
  ModelConfig cfg = parse_config_text(kFamilyConfig);
  CHECK(cfg.backend.kind == BackendKind::quadratic);
  CHECK(cfg.backend.quad_d == 2);
  REQUIRE(cfg.r2.has_value());

  CHECK(eval_token("R/sqrt2", cfg) == Scalar::quad(0, mpq_class(1, 2), 2));
  CHECK(eval_token("1/(R*sqrt2)", cfg) == Scalar::quad(0, mpq_class(1, 2), 2));
  CHECK(eval_token("-1/(R*sqrt2)", cfg) == Scalar::quad(0, mpq_class(-1, 2), 2));
  CHECK(eval_token("3/2", cfg) == Scalar::rational(mpq_class(3, 2), cfg.backend));
  CHECK(eval_token("sqrt(8)", cfg) == Scalar::quad(0, 2, 2));
  CHECK(eval_token("sqrt2*sqrt2", cfg) == Scalar::integer(2, cfg.backend));
  CHECK(eval_token("1/2 + 1/2", cfg) == Scalar::one(cfg.backend));
  CHECK(eval_token("sqrt2 - sqrt(2)", cfg).is_zero());
  CHECK_THROWS_AS(eval_token("1 + sqrt2", cfg), Error);   // mixed square classes
  CHECK_THROWS_AS(eval_token("sqrt(3)", cfg), Error);     // outside Q(sqrt 2)
  CHECK_THROWS_AS(eval_token("bogus", cfg), Error);

  // float backend evaluates numerically
  ModelConfig fcfg = cfg;
  fcfg.backend = Backend::float_backend(1e-12);
  fcfg.r2_float = 2.5;
  CHECK(eval_token("R/sqrt2", fcfg).to_double() ==
        doctest::Approx(std::sqrt(2.5) / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("config lattice matches the family builder") {
  ModelConfig cfg = parse_config_text(kFamilyConfig);
  Lattice from_cfg = build_config_lattice(cfg);
  Lattice direct = example_lattice(mpq_class(1));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(from_cfg.indef(i, j) == direct.indef(i, j));
      CHECK(from_cfg.gram_plus[i][j] == direct.gram_plus[i][j]);
    }
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_config_text("[space]\nnope = 1\n"), Error);
  CHECK_THROWS_AS(parse_config_text("[backend]\nkind = hex\n"), Error);
  CHECK_THROWS_AS(parse_config_text("garbage line\n"), Error);
  ModelConfig cfg = parse_config_text(kFamilyConfig);
  cfg.generator_rows = {"R/sqrt2, R/sqrt2", "R/sqrt2"};
  CHECK_THROWS_AS(build_config_lattice(cfg), Error);
}

TEST_CASE("suite selection and report determinism") {
  ModelConfig cfg = parse_config_text(kFamilyConfig);
  Lattice lat = build_config_lattice(cfg);
  auto r1 = run_selected_suites(cfg, lat, par::Exec::openmp);
  auto r2 = run_selected_suites(cfg, lat, par::Exec::serial);
  REQUIRE(r1.size() == 2);  // lattice, cocycle
  CHECK(r1[0].suite == "lattice");
  CHECK(r1[1].suite == "cocycle");
  // identical reports (and bytes) without timings, across lanes and runs
  CHECK(to_json(r1, cfg.echo, false) == to_json(r2, cfg.echo, false));
}

TEST_CASE("float backend model runs the suites") {
  const char* text = R"([space]
dplus = 1
dminus = 1
[backend]
kind = float
tol = 1e-9
[lattice]
R2 = 2.5
generator = R/sqrt2, R/sqrt2
generator = 1/(R*sqrt2), -1/(R*sqrt2)
[cutoffs]
energy = 4
series_order = 2
box_radius = 1
[suites]
run = lattice, cocycle, braidcat
)";
  ModelConfig cfg = parse_config_text(text);
  Lattice lat = build_config_lattice(cfg);
  CHECK(lat.indef(0, 1) == 1);
  for (const Report& r : run_selected_suites(cfg, lat, par::Exec::serial)) {
    CAPTURE(r.suite);
    CHECK(r.all_pass());
  }
}

TEST_CASE("every emitted law tag is in the registry") {
  ModelConfig cfg = parse_config_text(kFamilyConfig);
  cfg.suites = {"all"};
  cfg.energy = 4;
  cfg.series_order = 2;
  cfg.box_radius = 1;
  Lattice lat = build_config_lattice(cfg);
  const std::vector<std::string> registry{
      laws::lattice_gram,        laws::lattice_pairing_integral,
      laws::lattice_norm_split,  laws::lattice_maximal,
      laws::lattice_rational_family, laws::lattice_recognize,
      laws::cocycle_identity,    laws::cocycle_commutator,
      laws::cocycle_diagonal,    laws::cocycle_unit,
      laws::cocycle_bimultiplicative, laws::cocycle_associative,
      laws::cocycle_unitary,     laws::cocycle_sign_table,
      laws::cocycle_basis_order, laws::cocycle_coboundary,
      laws::fock_grade_dims,     laws::fock_gram_positive,
      laws::fock_heisenberg,     laws::fock_virasoro,
      laws::fock_virasoro_current, laws::fock_adjoint,
      laws::fock_central,        laws::fock_parity,
      laws::fock_smear_comm,     laws::fock_energy_bound,
      laws::vertex_exp_reorder,  laws::vertex_pre_leading,
      laws::vertex_primary,      laws::vertex_fourier_grid,
      laws::vertex_locality,     laws::net_shift_comm,
      laws::net_shift_adjoint,   laws::net_shift_unit,
      laws::net_shift_offsets,   laws::net_L_shift,
      laws::net_spin_integral,   laws::net_character,
      laws::net_classify,        laws::braid_inverse,
      laws::braid_square,        laws::braid_fusion,
      laws::braid_tensorator_cocycle, laws::braid_unit,
      laws::braid_condition,     laws::braid_involution,
      laws::braid_nu_integral,   laws::braid_nu_phase};
  for (const Report& r : run_selected_suites(cfg, lat, par::Exec::serial)) {
    for (const CheckRecord& c : r.checks) {
      CAPTURE(c.id);
      CHECK(std::find(registry.begin(), registry.end(), c.law) != registry.end());
      if (c.status == "fail") CHECK(!c.witness.empty());
    }
  }
}

#ifdef LVO_BIN
TEST_CASE("command line interface") {
  std::string good = write_temp(kFamilyConfig, "good");

  SUBCASE("exit 0 and suite filtering") {
    std::string out;
    int rc = run_cli("check " + good + " --suite cocycle", &out);
    CHECK(rc == 0);
    CHECK(out.find("cocycle ::") != std::string::npos);
    CHECK(out.find("lattice ::") == std::string::npos);
    CHECK(out.find("OK") != std::string::npos);
  }

  SUBCASE("json output is byte-identical across runs") {
    std::string a, b;
    CHECK(run_cli("check " + good + " --json --serial", &a) == 0);
    CHECK(run_cli("check " + good + " --json", &b) == 0);
    CHECK(a == b);
    CHECK(a.find("\"summary\"") != std::string::npos);
    CHECK(a.find("\"law\"") != std::string::npos);
  }

  SUBCASE("odd norm generator exits 2 with a diagnostic") {
    const char* bad = R"([space]
dplus = 1
dminus = 1
[backend]
kind = rational
[lattice]
generator = 1, 0
)";
    std::string path = write_temp(bad, "odd");
    std::string out;
    int rc = run_cli("check " + path, &out);
    CHECK(rc == 2);
    CHECK(out.find("OddNorm") != std::string::npos);
  }

  SUBCASE("non-integral pairing exits 2 with a diagnostic") {
    std::string bad = kFamilyConfig;
    bad.replace(bad.find("generator = R/sqrt2, R/sqrt2"),
                std::string("generator = R/sqrt2, R/sqrt2").size(), "generator = 1, 0");
    std::string path = write_temp(bad, "nonintegral");
    std::string out;
    int rc = run_cli("check " + path, &out);
    CHECK(rc == 2);
    CHECK(out.find("NonIntegralPairing") != std::string::npos);
  }

  SUBCASE("missing config exits 2") {
    CHECK(run_cli("check does_not_exist.cfg") == 2);
  }

  SUBCASE("unknown suite name exits 2") {
    std::string out;
    CHECK(run_cli("check " + good + " --suite bogus", &out) == 2);
    CHECK(out.find("unknown suite") != std::string::npos);
  }

  SUBCASE("state budget override via the environment") {
    std::string out;
    setenv("LVO_STATE_BUDGET", "3", 1);
    int rc = run_cli("check " + good + " --suite fock", &out);
    unsetenv("LVO_STATE_BUDGET");
    CHECK(rc == 2);
    CHECK(out.find("CutoffTooLarge") != std::string::npos);
  }

  SUBCASE("--out writes the report file") {
    std::string out;
    int rc = run_cli("check " + good + " --json --out report_out.tmp", &out);
    CHECK(rc == 0);
    std::ifstream in("report_out.tmp");
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("\"suites\"") != std::string::npos);
  }
}
#endif
