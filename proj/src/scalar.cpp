#include "lvo/scalar.hpp"

#include <cmath>
#include <sstream>

namespace lvo {

const char* err_name(Err c) {
  switch (c) {
    case Err::NonIntegralPairing: return "NonIntegralPairing";
    case Err::OddNorm: return "OddNorm";
    case Err::DependentGenerators: return "DependentGenerators";
    case Err::DegenerateForm: return "DegenerateForm";
    case Err::NotRational: return "NotRational";
    case Err::CutoffTooLarge: return "CutoffTooLarge";
    case Err::InconsistentSystem: return "InconsistentSystem";
    case Err::OutOfWindow: return "OutOfWindow";
    case Err::BackendMismatch: return "BackendMismatch";
    case Err::ConfigError: return "ConfigError";
    case Err::QuadratureUnstable: return "QuadratureUnstable";
  }
  return "UnknownError";
}

std::string Backend::str() const {
  switch (kind) {
    case BackendKind::rational: return "rational";
    case BackendKind::quadratic: return "quadratic(" + std::to_string(quad_d) + ")";
    case BackendKind::bigfloat: {
      std::ostringstream os;
      os << "float(" << tol << ")";
      return os.str();
    }
  }
  return "?";
}

Scalar Scalar::rational(const mpq_class& q, const Backend& bk) {
  Scalar s;
  switch (bk.kind) {
    case BackendKind::rational:
      s.kind_ = BackendKind::rational;
      s.a_ = q;
      break;
    case BackendKind::quadratic:
      s.kind_ = BackendKind::quadratic;
      s.a_ = q;
      s.d_ = bk.quad_d;
      break;
    case BackendKind::bigfloat:
      s.kind_ = BackendKind::bigfloat;
      s.f_ = std::make_unique<mpf_class>(mpf_class(q, kFloatPrecBits));
      s.tol_ = bk.tol;
      break;
  }
  return s;
}

Scalar Scalar::quad(const mpq_class& a, const mpq_class& b, long d) {
  Scalar s;
  s.kind_ = BackendKind::quadratic;
  s.a_ = a;
  s.b_ = b;
  s.d_ = d;
  return s;
}

Scalar Scalar::flt(double v, double tol) {
  Scalar s;
  s.kind_ = BackendKind::bigfloat;
  s.f_ = std::make_unique<mpf_class>(mpf_class(v, kFloatPrecBits));
  s.tol_ = tol;
  return s;
}

Scalar Scalar::flt(const mpf_class& v, double tol) {
  Scalar s;
  s.kind_ = BackendKind::bigfloat;
  s.f_ = std::make_unique<mpf_class>(mpf_class(v, kFloatPrecBits));
  s.tol_ = tol;
  return s;
}

Backend Scalar::backend() const {
  switch (kind_) {
    case BackendKind::rational: return Backend::rational_backend();
    case BackendKind::quadratic: return Backend::quadratic_backend(d_);
    case BackendKind::bigfloat: return Backend::float_backend(tol_);
  }
  return Backend::rational_backend();
}

void Scalar::check_same(const Scalar& o) const {
  if (kind_ != o.kind_ || (kind_ == BackendKind::quadratic && d_ != o.d_)) {
    throw Error(Err::BackendMismatch,
                "scalar backend mismatch: " + backend().str() + " vs " + o.backend().str());
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar r = *this;
  if (kind_ == BackendKind::bigfloat) {
    r.fref() += o.fref();
    r.tol_ = std::max(tol_, o.tol_);
  } else {
    r.a_ += o.a_;
    r.b_ += o.b_;
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (kind_ == BackendKind::bigfloat) {
    r.fref() = -r.fref();
  } else {
    r.a_ = -r.a_;
    r.b_ = -r.b_;
  }
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar r = *this;
  switch (kind_) {
    case BackendKind::rational:
      r.a_ = a_ * o.a_;
      break;
    case BackendKind::quadratic:
      r.a_ = a_ * o.a_ + b_ * o.b_ * d_;
      r.b_ = a_ * o.b_ + b_ * o.a_;
      break;
    case BackendKind::bigfloat:
      r.fref() *= o.fref();
      r.tol_ = std::max(tol_, o.tol_);
      break;
  }
  return r;
}

Scalar Scalar::inverse() const {
  Scalar r = *this;
  switch (kind_) {
    case BackendKind::rational:
      if (a_ == 0) throw std::domain_error("division by zero");
      r.a_ = 1 / a_;
      break;
    case BackendKind::quadratic: {
      mpq_class n = a_ * a_ - b_ * b_ * d_;
      if (n == 0) throw std::domain_error("division by zero");
      r.a_ = a_ / n;
      r.b_ = -b_ / n;
      break;
    }
    case BackendKind::bigfloat:
      if (fref() == 0) throw std::domain_error("division by zero");
      r.fref() = 1 / fref();
      break;
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::times_int(long v) const {
  Scalar r = *this;
  if (kind_ == BackendKind::bigfloat) {
    r.fref() *= v;
  } else {
    r.a_ *= v;
    r.b_ *= v;
  }
  return r;
}

Scalar Scalar::div_int(long v) const {
  if (v == 0) throw std::domain_error("division by zero");
  Scalar r = *this;
  if (kind_ == BackendKind::bigfloat) {
    r.fref() /= v;
  } else {
    r.a_ /= v;
    r.b_ /= v;
  }
  return r;
}

Scalar Scalar::pow_int(long e) const {
  Scalar base = *this;
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  Scalar acc = Scalar::one(backend());
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool Scalar::is_zero() const {
  switch (kind_) {
    case BackendKind::rational: return a_ == 0;
    case BackendKind::quadratic: return a_ == 0 && b_ == 0;
    case BackendKind::bigfloat: return abs(fref()) <= tol_;
  }
  return false;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  return (*this - o).is_zero();
}

int Scalar::sign() const {
  switch (kind_) {
    case BackendKind::rational: return sgn(a_);
    case BackendKind::quadratic: {
      int sa = sgn(a_), sb = sgn(b_);
      if (sb == 0) return sa;
      if (sa == 0) return sb;
      if (sa == sb) return sa;
      // a and b*sqrt(d) compete: compare a^2 with b^2 d.
      mpq_class lhs = a_ * a_, rhs = b_ * b_ * d_;
      if (lhs == rhs) return 0;
      return (lhs > rhs) ? sa : sb;
    }
    case BackendKind::bigfloat:
      return sgn(fref());
  }
  return 0;
}

bool Scalar::is_integer() const {
  switch (kind_) {
    case BackendKind::rational: return a_.get_den() == 1;
    case BackendKind::quadratic: return b_ == 0 && a_.get_den() == 1;
    case BackendKind::bigfloat: {
      mpf_class r = fref();
      mpf_class nearest;
      mpf_floor(nearest.get_mpf_t(), mpf_class(r + 0.5).get_mpf_t());
      return abs(r - nearest) <= tol_;
    }
  }
  return false;
}

mpz_class Scalar::to_integer() const {
  switch (kind_) {
    case BackendKind::rational:
    case BackendKind::quadratic: {
      if (!is_integer()) throw Error(Err::NotRational, "scalar is not an integer: " + str());
      return a_.get_num();
    }
    case BackendKind::bigfloat: {
      mpf_class nearest;
      mpf_floor(nearest.get_mpf_t(), mpf_class(fref() + 0.5).get_mpf_t());
      return mpz_class(nearest);
    }
  }
  return 0;
}

bool Scalar::is_rational_value() const {
  switch (kind_) {
    case BackendKind::rational: return true;
    case BackendKind::quadratic: return b_ == 0;
    case BackendKind::bigfloat: return false;
  }
  return false;
}

mpq_class Scalar::to_rational() const {
  if (!is_rational_value()) throw Error(Err::NotRational, "scalar is not rational: " + str());
  return a_;
}

double Scalar::to_double() const {
  switch (kind_) {
    case BackendKind::rational: return a_.get_d();
    case BackendKind::quadratic: return a_.get_d() + b_.get_d() * std::sqrt(double(d_));
    case BackendKind::bigfloat: return fref().get_d();
  }
  return 0.0;
}

std::string Scalar::str() const {
  std::ostringstream os;
  switch (kind_) {
    case BackendKind::rational:
      os << a_;
      break;
    case BackendKind::quadratic:
      if (b_ == 0) {
        os << a_;
      } else if (a_ == 0) {
        os << b_ << "*sqrt(" << d_ << ")";
      } else {
        os << a_ << (sgn(b_) >= 0 ? "+" : "") << b_ << "*sqrt(" << d_ << ")";
      }
      break;
    case BackendKind::bigfloat:
      os << fref().get_d();
      break;
  }
  return os.str();
}

Scalar binomial(const Scalar& a, long n) {
  Backend bk = a.backend();
  Scalar num = Scalar::one(bk);
  for (long i = 0; i < n; ++i) num *= a - Scalar::integer(i, bk);
  mpz_class fact = 1;
  for (long i = 2; i <= n; ++i) fact *= i;
  return num / Scalar::rational(mpq_class(fact), bk);
}

void squarefree_split(const mpz_class& n, mpz_class& f, mpz_class& d) {
  if (n <= 0) throw std::domain_error("squarefree_split needs a positive argument");
  mpz_class rest = n;
  f = 1;
  d = 1;
  for (mpz_class p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) f *= p;
    if (e % 2) d *= p;
  }
  d *= rest;
}

}  // namespace lvo
