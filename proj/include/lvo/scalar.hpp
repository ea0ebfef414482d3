#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>

namespace lvo {

enum class Err {
  NonIntegralPairing,
  OddNorm,
  DependentGenerators,
  DegenerateForm,
  NotRational,
  CutoffTooLarge,
  InconsistentSystem,
  OutOfWindow,
  BackendMismatch,
  ConfigError,
  QuadratureUnstable,
};

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& what) : std::runtime_error(what), code(c) {}
};

const char* err_name(Err c);

enum class BackendKind { rational, quadratic, bigfloat };

// Arithmetic backend shared by all scalars of one model. Quadratic scalars
// live in Q(sqrt(d)) for a single square-free d > 1; bigfloat scalars compare
// within the declared absolute tolerance.
struct Backend {
  BackendKind kind = BackendKind::rational;
  long quad_d = 0;
  double tol = 1e-12;

  static Backend rational_backend() { return Backend{BackendKind::rational, 0, 0.0}; }
  static Backend quadratic_backend(long d) { return Backend{BackendKind::quadratic, d, 0.0}; }
  static Backend float_backend(double tol) { return Backend{BackendKind::bigfloat, 0, tol}; }

  bool exact() const { return kind != BackendKind::bigfloat; }
  bool compatible(const Backend& o) const {
    return kind == o.kind && (kind != BackendKind::quadratic || quad_d == o.quad_d);
  }
  std::string str() const;
};

inline constexpr int kFloatPrecBits = 256;

// Tagged exact/float scalar. Rational: value = a. Quadratic: value = a + b*sqrt(d).
// Bigfloat: value = f at 256-bit precision.
class Scalar {
 public:
  Scalar() : kind_(BackendKind::rational) {}

  static Scalar zero(const Backend& bk) { return integer(0, bk); }
  static Scalar one(const Backend& bk) { return integer(1, bk); }
  static Scalar integer(long v, const Backend& bk) { return rational(mpq_class(v), bk); }
  static Scalar rational(const mpq_class& q, const Backend& bk);
  static Scalar quad(const mpq_class& a, const mpq_class& b, long d);
  static Scalar flt(double v, double tol);
  static Scalar flt(const mpf_class& v, double tol);

  Backend backend() const;
  BackendKind kind() const { return kind_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
  Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

  Scalar inverse() const;
  Scalar times_int(long v) const;
  Scalar div_int(long v) const;
  Scalar pow_int(long e) const;

  // Zero/equality respect the backend: exact comparison, or |x-y| <= tol.
  bool is_zero() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Exact sign for exact backends; plain sign of the float otherwise.
  int sign() const;
  bool exactly_less(const Scalar& o) const { return (*this - o).sign() < 0; }

  bool is_integer() const;
  mpz_class to_integer() const;
  bool is_rational_value() const;
  mpq_class to_rational() const;
  double to_double() const;

  // Quadratic-part accessors (rational part / coefficient of sqrt(d)).
  const mpq_class& rat_part() const { return a_; }
  const mpq_class& quad_part() const { return b_; }

  std::string str() const;

 private:
  void check_same(const Scalar& o) const;
  const mpf_class& fref() const { return *f_; }
  mpf_class& fref() { return *f_; }

  BackendKind kind_;
  mpq_class a_;
  mpq_class b_;  // quadratic part; unused for rationals
  long d_ = 0;
  // allocated for the bigfloat backend only
  std::unique_ptr<mpf_class> f_;
  double tol_ = 0.0;

 public:
  Scalar(const Scalar& o)
      : kind_(o.kind_),
        a_(o.a_),
        b_(o.b_),
        d_(o.d_),
        f_(o.f_ ? std::make_unique<mpf_class>(*o.f_) : nullptr),
        tol_(o.tol_) {}
  Scalar(Scalar&&) = default;
  Scalar& operator=(const Scalar& o) {
    if (this == &o) return *this;
    kind_ = o.kind_;
    a_ = o.a_;
    b_ = o.b_;
    d_ = o.d_;
    f_ = o.f_ ? std::make_unique<mpf_class>(*o.f_) : nullptr;
    tol_ = o.tol_;
    return *this;
  }
  Scalar& operator=(Scalar&&) = default;
};

// Falling factorial binomial: a(a-1)...(a-n+1)/n!, defined for any scalar a.
Scalar binomial(const Scalar& a, long n);

// n = f^2 * d with d square-free; returns (f, d). n must be positive.
void squarefree_split(const mpz_class& n, mpz_class& f, mpz_class& d);

// Complex scalar over one backend.
struct CScalar {
  Scalar re, im;
  CScalar() = default;
  CScalar(Scalar r, Scalar i) : re(std::move(r)), im(std::move(i)) {}
  static CScalar real(const Scalar& r) { return CScalar(r, Scalar::zero(r.backend())); }
  CScalar operator+(const CScalar& o) const { return {re + o.re, im + o.im}; }
  CScalar operator-(const CScalar& o) const { return {re - o.re, im - o.im}; }
  CScalar operator*(const CScalar& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CScalar conj() const { return {re, -im}; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool operator==(const CScalar& o) const { return re == o.re && im == o.im; }
};

}  // namespace lvo
