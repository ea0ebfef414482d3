#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <sstream>
#include <string>

#include "lvo/scalar.hpp"

namespace lvo {

// Unit complex number. Exact variant stores q with value = e^{i*pi*q}, q rational
// mod 2 (so +1 is q=0, -1 is q=1, i is q=1/2). Float variant stores the complex
// value and compares within tol.
class UnitPhase {
 public:
  UnitPhase() : exact_(true), q_(0) {}

  static UnitPhase one() { return UnitPhase(); }
  static UnitPhase from_sign(int s) {
    UnitPhase p;
    p.q_ = (s >= 0) ? 0 : 1;
    return p;
  }
  // e^{i*pi*q}
  static UnitPhase half_turns(const mpq_class& q) {
    UnitPhase p;
    p.q_ = normalize(q);
    return p;
  }
  static UnitPhase approx(std::complex<double> c, double tol) {
    UnitPhase p;
    p.exact_ = false;
    p.c_ = c;
    p.tol_ = tol;
    return p;
  }

  bool exact() const { return exact_; }
  const mpq_class& half_turn_exponent() const { return q_; }

  UnitPhase operator*(const UnitPhase& o) const {
    if (exact_ && o.exact_) return half_turns(q_ + o.q_);
    return approx(to_complex() * o.to_complex(), std::max(tol(), o.tol()));
  }
  UnitPhase inverse() const {
    if (exact_) return half_turns(-q_);
    return approx(std::conj(c_), tol_);
  }
  UnitPhase operator/(const UnitPhase& o) const { return *this * o.inverse(); }
  UnitPhase pow(long e) const {
    if (exact_) return half_turns(q_ * e);
    return approx(std::pow(c_, double(e)), tol_);
  }

  std::complex<double> to_complex() const {
    if (!exact_) return c_;
    double t = M_PI * q_.get_d();
    return {std::cos(t), std::sin(t)};
  }
  double tol() const { return exact_ ? 0.0 : tol_; }

  bool equals(const UnitPhase& o, double float_tol = 1e-9) const {
    if (exact_ && o.exact_) return q_ == o.q_;
    return std::abs(to_complex() - o.to_complex()) <= std::max({tol(), o.tol(), float_tol});
  }
  bool is_one(double float_tol = 1e-9) const { return equals(one(), float_tol); }
  int as_sign() const {
    if (exact_) {
      if (q_ == 0) return 1;
      if (q_ == 1) return -1;
      throw Error(Err::NotRational, "phase is not a sign: " + str());
    }
    return (c_.real() >= 0) ? 1 : -1;
  }

  std::string str() const {
    std::ostringstream os;
    if (exact_) {
      if (q_ == 0) return "1";
      if (q_ == 1) return "-1";
      os << "e^{i*pi*" << q_ << "}";
    } else {
      os << to_complex().real() << (to_complex().imag() >= 0 ? "+" : "") << to_complex().imag()
         << "i";
    }
    return os.str();
  }

 private:
  static mpq_class normalize(mpq_class q) {
    // reduce mod 2 into [0, 2)
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class twice_den = 2 * den;
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), twice_den.get_mpz_t());
    mpq_class out(r, den);
    out.canonicalize();
    return out;
  }

  bool exact_;
  mpq_class q_;
  std::complex<double> c_{1.0, 0.0};
  double tol_ = 1e-9;
};

}  // namespace lvo
