#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace lvo {

// Registry of law tags carried by check records. Every record's `law` field
// must name one of these.
namespace laws {
inline constexpr const char* lattice_gram = "lattice.gram";
inline constexpr const char* lattice_pairing_integral = "lattice.pairing-integral";
inline constexpr const char* lattice_norm_split = "lattice.norm-split";
inline constexpr const char* lattice_maximal = "lattice.maximal-even";
inline constexpr const char* lattice_rational_family = "lattice.rational-family";
inline constexpr const char* lattice_recognize = "lattice.recognize";
inline constexpr const char* cocycle_identity = "cocycle.identity";
inline constexpr const char* cocycle_commutator = "cocycle.commutator";
inline constexpr const char* cocycle_diagonal = "cocycle.diagonal";
inline constexpr const char* cocycle_unit = "cocycle.unit";
inline constexpr const char* cocycle_bimultiplicative = "cocycle.bimultiplicative";
inline constexpr const char* cocycle_associative = "cocycle.associative";
inline constexpr const char* cocycle_unitary = "cocycle.unitary";
inline constexpr const char* cocycle_sign_table = "cocycle.sign-table";
inline constexpr const char* cocycle_basis_order = "cocycle.basis-order";
inline constexpr const char* cocycle_coboundary = "cocycle.coboundary";
inline constexpr const char* fock_grade_dims = "fock.grade-dims";
inline constexpr const char* fock_gram_positive = "fock.gram-positive";
inline constexpr const char* fock_heisenberg = "fock.heisenberg";
inline constexpr const char* fock_virasoro = "fock.virasoro";
inline constexpr const char* fock_virasoro_current = "fock.virasoro-current";
inline constexpr const char* fock_adjoint = "fock.mode-adjoint";
inline constexpr const char* fock_central = "fock.central-term";
inline constexpr const char* fock_parity = "fock.parity";
inline constexpr const char* fock_smear_comm = "fock.smear-commutator";
inline constexpr const char* fock_energy_bound = "fock.energy-bound";
inline constexpr const char* vertex_exp_reorder = "vertex.exp-reorder";
inline constexpr const char* vertex_pre_leading = "vertex.pre-leading";
inline constexpr const char* vertex_primary = "vertex.primary";
inline constexpr const char* vertex_fourier_grid = "vertex.fourier-grid";
inline constexpr const char* vertex_locality = "vertex.locality";
inline constexpr const char* net_shift_comm = "net2d.shift-commutator";
inline constexpr const char* net_shift_adjoint = "net2d.shift-adjoint";
inline constexpr const char* net_shift_unit = "net2d.shift-unit";
inline constexpr const char* net_shift_offsets = "net2d.shift-offsets";
inline constexpr const char* net_L_shift = "net2d.virasoro-shift";
inline constexpr const char* net_spin_integral = "net2d.spin-integral";
inline constexpr const char* net_character = "net2d.character";
inline constexpr const char* net_classify = "net2d.classify";
inline constexpr const char* braid_inverse = "braid.inverse-pair";
inline constexpr const char* braid_square = "braid.sign-square";
inline constexpr const char* braid_fusion = "braid.fusion";
inline constexpr const char* braid_tensorator_cocycle = "braid.tensorator-cocycle";
inline constexpr const char* braid_unit = "braid.unit";
inline constexpr const char* braid_condition = "braid.braided-condition";
inline constexpr const char* braid_involution = "braid.involution";
inline constexpr const char* braid_nu_integral = "braid.nu-integral";
inline constexpr const char* braid_nu_phase = "braid.nu-phase";
}  // namespace laws

struct CheckRecord {
  std::string id;
  std::string law;
  std::string status;  // pass | fail | skipped
  std::string witness;
  double ms = 0.0;
};

struct Report {
  std::string suite;
  std::vector<CheckRecord> checks;

  explicit Report(std::string name = "")
      : suite(std::move(name)), mark_(std::chrono::steady_clock::now()) {}

  bool all_pass() const {
    for (const auto& c : checks)
      if (c.status == "fail") return false;
    return true;
  }
  int fail_count() const {
    int n = 0;
    for (const auto& c : checks)
      if (c.status == "fail") ++n;
    return n;
  }
  void add(const std::string& id, const std::string& law, bool ok,
           const std::string& witness = "") {
    checks.push_back(CheckRecord{id, law, ok ? "pass" : "fail", ok ? "" : witness, take_ms()});
  }
  void add_skipped(const std::string& id, const std::string& law, const std::string& why) {
    checks.push_back(CheckRecord{id, law, "skipped", why, take_ms()});
  }
  void merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    mark_ = std::chrono::steady_clock::now();
  }
  const CheckRecord* first_failure() const {
    for (const auto& c : checks)
      if (c.status == "fail") return &c;
    return nullptr;
  }

 private:
  // elapsed since the previous record: the work done for this check
  double take_ms() {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - mark_).count();
    mark_ = now;
    return ms;
  }
  std::chrono::steady_clock::time_point mark_;
};

std::string to_json(const std::vector<Report>& suites, const std::string& config_echo,
                    bool with_timings);
std::string to_text(const std::vector<Report>& suites);

}  // namespace lvo
