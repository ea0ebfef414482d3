// Times the serial reference lane against the OpenMP lane on the hot kernels
// and cross-checks that both lanes agree.

#include <chrono>
#include <cstdio>
#include <functional>

#include "lvo/braidcat.hpp"
#include "lvo/cocycle.hpp"
#include "lvo/net2d.hpp"
#include "lvo/vertex.hpp"

using namespace lvo;

namespace {

double time_ms(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double omp_ms, bool agree) {
  std::printf("%-34s %10.1f ms %10.1f ms   x%.2f   %s\n", name, serial_ms, omp_ms,
              omp_ms > 0 ? serial_ms / omp_ms : 0.0, agree ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("%-34s %13s %13s %8s\n", "kernel", "serial", "openmp", "speedup");

  // cocycle law sweep on a rank-3 box
  {
    Backend bk = Backend::rational_backend();
    std::vector<Generator> gens;
    for (int i = 0; i < 3; ++i) {
      Generator g;
      g.plus.assign(3, Scalar::zero(bk));
      g.minus.assign(3, Scalar::zero(bk));
      g.plus[i] = Scalar::one(bk);
      g.minus[i] = Scalar::one(bk);
      if (i > 0) {
        g.plus[i - 1] = Scalar::one(bk);
        g.minus[i - 1] = Scalar::integer(-1, bk);
      }
      gens.push_back(g);
    }
    Lattice L = build_lattice(SplitSpace{3, 3}, gens, bk);
    Cocycle c = build_cocycle(L);
    Report rs, rp;
    double ts = time_ms([&] { rs = verify_cocycle_laws(c, 3, par::Exec::serial); });
    double tp = time_ms([&] { rp = verify_cocycle_laws(c, 3, par::Exec::openmp); });
    bool agree = rs.all_pass() == rp.all_pass() && rs.checks.size() == rp.checks.size();
    row("cocycle laws (rank 3, box 3)", ts, tp, agree);
  }

  // exponential reordering at d = 1, E = 12, K = 6
  {
    Backend bk = Backend::rational_backend();
    fock::Module m = fock::build_module(bk, 1, {Scalar::zero(bk)}, 12);
    linalg::SVec a{Scalar::one(bk)}, b{Scalar::integer(2, bk)};
    Report rs, rp;
    double ts = time_ms([&] { rs = vertex::verify_comm_E(m, a, b, 6, par::Exec::serial); });
    double tp = time_ms([&] { rp = vertex::verify_comm_E(m, a, b, 6, par::Exec::openmp); });
    bool agree = rs.all_pass() && rp.all_pass();
    row("exp reordering (E=12, K=6)", ts, tp, agree);
  }

  // extension construction + shift sweep on the R^2 = 1 model
  {
    Lattice L = example_lattice(mpq_class(1));
    net2d::Extension xs, xp;
    double ts = time_ms([&] { xs = net2d::build_extension(L, 3, 6, 500000, par::Exec::serial); });
    double tp = time_ms([&] { xp = net2d::build_extension(L, 3, 6, 500000, par::Exec::openmp); });
    bool agree = xs.total_states() == xp.total_states();
    row("extension build (box 3, E=6)", ts, tp, agree);

    Report rs, rp;
    double ss = time_ms([&] { rs = net2d::verify_L_shift(xs, Charge({1, 0}), 1, par::Exec::serial); });
    double sp = time_ms([&] { rp = net2d::verify_L_shift(xp, Charge({1, 0}), 1, par::Exec::openmp); });
    row("virasoro shift sweep", ss, sp, rs.all_pass() && rp.all_pass());
  }

  // braided coherence sweep
  {
    Lattice L = example_lattice(mpq_class(1));
    Cocycle eps = build_cocycle(L);
    braidcat::FunctorData f = braidcat::canonical_functor(eps);
    Report rs, rp;
    double ts = time_ms([&] { rs = braidcat::verify_functor_coherence(L, f, 4, par::Exec::serial); });
    double tp = time_ms([&] { rp = braidcat::verify_functor_coherence(L, f, 4, par::Exec::openmp); });
    row("braided coherence (box 4)", ts, tp, rs.all_pass() && rp.all_pass());
  }

  return 0;
}
