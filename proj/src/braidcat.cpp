#include "lvo/braidcat.hpp"

#include <cmath>
#include <sstream>

namespace lvo::braidcat {

namespace {

UnitPhase pairing_phase(const Scalar& pairing, long sign) {
  if (pairing.is_rational_value()) {
    mpq_class q = pairing.to_rational();
    return UnitPhase::half_turns(sign > 0 ? q : mpq_class(-q));
  }
  double t = M_PI * pairing.to_double() * (sign > 0 ? 1.0 : -1.0);
  double tol = pairing.backend().kind == BackendKind::bigfloat ? pairing.backend().tol : 1e-9;
  return UnitPhase::approx({std::cos(t), std::sin(t)}, std::max(tol, 1e-12));
}

}  // namespace

UnitPhase braiding_scalar(const Lattice& L, const Charge& a, const Charge& b, int sign) {
  return pairing_phase(L.pairing_plus(a, b), sign);
}

UnitPhase braiding_2d(const Lattice& L, const Charge& a, const Charge& b) {
  return braiding_scalar(L, a, b, +1) * pairing_phase(L.pairing_minus(a, b), -1);
}

FunctorData canonical_functor(const Cocycle& eps) {
  FunctorData f;
  int r = (int)eps.table.size();
  f.object_matrix.assign(r, std::vector<long>(r, 0));
  for (int i = 0; i < r; ++i) f.object_matrix[i][i] = (i == 0) ? -1 : 1;
  f.tensorator = [eps](const Charge& a, const Charge& b) {
    return UnitPhase::from_sign(eps.eval(a, b));
  };
  return f;
}

Report verify_functor_coherence(const Lattice& L, const FunctorData& f, int box_radius,
                                par::Exec ex) {
  Report rep("braidcat");
  int rank = L.rank();
  std::vector<Charge> box = enumerate_box(rank, box_radius);
  size_t n = box.size();

  // (i) categorical 2-cocycle condition for the tensorator
  {
    auto fail = par::first_failure(n * n * n, [&](size_t t) {
      const Charge& a = box[t / (n * n)];
      const Charge& b = box[(t / n) % n];
      const Charge& c = box[t % n];
      UnitPhase lhs = f.tensorator(a, b) * f.tensorator(a + b, c);
      UnitPhase rhs = f.tensorator(b, c) * f.tensorator(a, b + c);
      return lhs.equals(rhs);
    }, ex);
    std::string w;
    if (fail) {
      size_t t = *fail;
      w = box[t / (n * n)].str() + ", " + box[(t / n) % n].str() + ", " + box[t % n].str();
    }
    rep.add("braid.tensorator-cocycle.box" + std::to_string(box_radius),
            laws::braid_tensorator_cocycle, !fail.has_value(), w);
  }

  // (ii) unit constraints
  {
    Charge zero = Charge::zero(rank);
    bool ok = f.apply(zero).is_zero();
    std::string w = ok ? "" : "object map moves the unit";
    for (size_t i = 0; i < n && ok; ++i) {
      if (!f.tensorator(box[i], zero).is_one() || !f.tensorator(zero, box[i]).is_one()) {
        ok = false;
        w = "tensorator not unital at " + box[i].str();
      }
    }
    rep.add("braid.unit.box" + std::to_string(box_radius), laws::braid_unit, ok, w);
  }

  // (iii) braided condition: mu_{x,y} phi(eps+_{x,y}) = mu_{y,x} eps+_{phi x, phi y}
  {
    auto fail = par::first_failure(n * n, [&](size_t t) {
      const Charge& a = box[t / n];
      const Charge& b = box[t % n];
      UnitPhase lhs = f.tensorator(a, b) * braiding_scalar(L, a, b, +1);
      UnitPhase rhs = f.tensorator(b, a) * braiding_scalar(L, f.apply(a), f.apply(b), +1);
      return lhs.equals(rhs);
    }, ex);
    std::string w;
    if (fail) w = box[*fail / n].str() + ", " + box[*fail % n].str();
    rep.add("braid.braided-condition.box" + std::to_string(box_radius), laws::braid_condition,
            !fail.has_value(), w);
  }

  // (iv) involutivity of the object map
  {
    auto fail = par::first_failure(n, [&](size_t t) {
      return f.apply(f.apply(box[t])) == box[t];
    }, ex);
    rep.add("braid.involution.box" + std::to_string(box_radius), laws::braid_involution,
            !fail.has_value(), fail ? box[*fail].str() : "");
  }

  return rep;
}

Report verify_braiding_basics(const Lattice& L, int box_radius, par::Exec ex) {
  Report rep("braidcat");
  int rank = L.rank();
  std::vector<Charge> box = enumerate_box(rank, box_radius);
  size_t n = box.size();

  // eps+ eps- = 1 for every pair
  {
    auto fail = par::first_failure(n * n, [&](size_t t) {
      const Charge& a = box[t / n];
      const Charge& b = box[t % n];
      return (braiding_scalar(L, a, b, +1) * braiding_scalar(L, a, b, -1)).is_one();
    }, ex);
    std::string w;
    if (fail) w = box[*fail / n].str() + ", " + box[*fail % n].str();
    rep.add("braid.inverse-pair.box" + std::to_string(box_radius), laws::braid_inverse,
            !fail.has_value(), w);
  }

  // the two-variable phase is the sign (-1)^{(a|b)} and squares to 1
  {
    auto fail = par::first_failure(n * n, [&](size_t t) {
      const Charge& a = box[t / n];
      const Charge& b = box[t % n];
      UnitPhase p = braiding_2d(L, a, b);
      int sign = (indef_pairing(L, a, b) % 2) ? -1 : 1;
      return p.equals(UnitPhase::from_sign(sign)) && (p * p).is_one();
    }, ex);
    std::string w;
    if (fail) w = box[*fail / n].str() + ", " + box[*fail % n].str();
    rep.add("braid.sign-square.box" + std::to_string(box_radius), laws::braid_square,
            !fail.has_value(), w);
  }

  // fusion is the abelian group law; the object map is a homomorphism
  {
    auto fail = par::first_failure(n * n, [&](size_t t) {
      SectorObject a{box[t / n]}, b{box[t % n]};
      bool comm = fuse(a, b).charge == fuse(b, a).charge;
      bool inv = fuse(a, conjugate(a)).charge.is_zero();
      return comm && inv;
    }, ex);
    std::string w;
    if (fail) w = box[*fail / n].str() + ", " + box[*fail % n].str();
    rep.add("braid.fusion.box" + std::to_string(box_radius), laws::braid_fusion,
            !fail.has_value(), w);
  }

  return rep;
}

double TrigPoly::eval(double t) const {
  double v = a0;
  for (size_t k = 0; k < ac.size(); ++k) v += ac[k] * std::cos((double)(k + 1) * t);
  for (size_t k = 0; k < as.size(); ++k) v += as[k] * std::sin((double)(k + 1) * t);
  return v;
}

namespace {

// Antiderivative values F(t) - F(-pi) for a zero-mean trig polynomial.
double primitive(const TrigPoly& p, double t) {
  double v = 0.0;
  for (size_t k = 0; k < p.ac.size(); ++k) {
    double kk = (double)(k + 1);
    v += p.ac[k] / kk * (std::sin(kk * t) - std::sin(-kk * M_PI));
  }
  for (size_t k = 0; k < p.as.size(); ++k) {
    double kk = (double)(k + 1);
    v += -p.as[k] / kk * (std::cos(kk * t) - std::cos(-kk * M_PI));
  }
  return v;
}

// Periodic trapezoid quadrature with doubling until stable.
template <class F>
double quad(F&& f, int n0, double tol, bool& stable) {
  int n = std::max(16, n0);
  double prev = 0.0;
  for (int it = 0; it < 12; ++it) {
    double s = 0.0;
    double h = 2.0 * M_PI / n;
    for (int i = 0; i < n; ++i) s += f(-M_PI + i * h);
    s *= h;
    if (it > 0 && std::abs(s - prev) <= tol) {
      stable = true;
      return s;
    }
    prev = s;
    n *= 2;
  }
  stable = false;
  return prev;
}

}  // namespace

Report nu_phase_check(const TrigPoly& h, const TrigPoly& g, double R2, int quad_points,
                      double tol) {
  Report rep("braidcat");
  if (R2 <= 0) throw Error(Err::ConfigError, "R^2 must be positive");
  double r = std::sqrt(R2);
  TrigPoly diff;
  size_t deg = std::max((size_t)std::max(h.ac.size(), h.as.size()),
                        (size_t)std::max(g.ac.size(), g.as.size()));
  diff.a0 = g.a0 - h.a0;  // zero when both are normalized to mean 1
  diff.ac.assign(deg, 0.0);
  diff.as.assign(deg, 0.0);
  for (size_t k = 0; k < deg; ++k) {
    if (k < g.ac.size()) diff.ac[k] += g.ac[k];
    if (k < h.ac.size()) diff.ac[k] -= h.ac[k];
    if (k < g.as.size()) diff.as[k] += g.as[k];
    if (k < h.as.size()) diff.as[k] -= h.as[k];
  }
  if (std::abs(diff.a0) > tol)
    throw Error(Err::ConfigError, "h and g must both have mean 1");

  auto M = [&](double t) { return primitive(diff, t) / (2.0 * M_PI); };
  auto Mp = [&](double t) { return diff.eval(t) / (2.0 * M_PI); };

  bool stable = true;
  double imm = quad([&](double t) { return M(t) * Mp(t); }, quad_points, tol / 10, stable);
  if (!stable) throw Error(Err::QuadratureUnstable, "self-pairing integral did not converge");
  rep.add("braid.nu-integral", laws::braid_nu_integral, std::abs(imm) <= tol,
          "int M M' = " + std::to_string(imm));

  double c1 = (1.0 / r) / std::sqrt(2.0), c2 = -r / std::sqrt(2.0);
  bool s1 = true, s2 = true;
  double p1 = quad([&](double t) { return c1 * h.eval(t) * c2 * M(t); }, quad_points, tol / 10,
                   s1) /
              (2.0 * M_PI);
  double p2 = quad([&](double t) { return c2 * h.eval(t) * c1 * M(t); }, quad_points, tol / 10,
                   s2) /
              (2.0 * M_PI);
  if (!s1 || !s2) throw Error(Err::QuadratureUnstable, "phase integral did not converge");
  rep.add("braid.nu-phase", laws::braid_nu_phase, std::abs(p1 - p2) <= tol,
          "phases " + std::to_string(p1) + " vs " + std::to_string(p2));
  return rep;
}

}  // namespace lvo::braidcat
