#pragma once

#include <mpfr.h>

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "netrel/rational.hpp"
#include "netrel/unipoly.hpp"

namespace netrel {

/**
 * \brief RAII wrapper around mpfr_t.
 *
 * Every value carries its own precision; binary operations produce the
 * larger of the two operand precisions and round to nearest.
 */
class BigFloat {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 128;

  BigFloat() : BigFloat(kDefaultPrecision) {}
  explicit BigFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(long v, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, v, MPFR_RNDN);
  }
  BigFloat(const Rational& q, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.mpq().get_mpq_t(), MPFR_RNDN);
  }
  static BigFloat from_double(double d, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    return r;
  }
  static BigFloat parse(const std::string& s, mpfr_prec_t prec) {
    BigFloat r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0 && !mpfr_number_p(r.v_))
      throw InputError("bad decimal literal '" + s + "'");
    return r;
  }
  static BigFloat pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  /// Same value rounded to a new precision.
  BigFloat with_precision(mpfr_prec_t prec) const {
    BigFloat r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Upper bound as a double (never below the true magnitude).
  double to_double_up() const { return mpfr_get_d(v_, MPFR_RNDU); }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 20) const { return format("%.*RNe", digits); }
  /// Fixed notation with `decimals` digits after the point.
  std::string to_fixed(int decimals) const { return format("%.*RNf", decimals); }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  long exponent2() const { return is_zero() ? LONG_MIN / 2 : static_cast<long>(mpfr_get_exp(v_)); }
  /// log2 |x| as a double (handles magnitudes outside the double range).
  double log2_abs() const {
    if (is_zero()) return -HUGE_VAL;
    long e = 0;
    double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log2(std::fabs(m)) + static_cast<double>(e);
  }

#define NETREL_BF_BINOP(op, fn)                                                         \
  friend BigFloat operator op(const BigFloat& a, const BigFloat& b) {                   \
    BigFloat r(std::max(a.precision(), b.precision()));                                 \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                                    \
    return r;                                                                           \
  }                                                                                     \
  BigFloat& operator op##=(const BigFloat& o) {                                          \
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);     \
    fn(v_, v_, o.v_, MPFR_RNDN);                                                        \
    return *this;                                                                       \
  }
  NETREL_BF_BINOP(+, mpfr_add)
  NETREL_BF_BINOP(-, mpfr_sub)
  NETREL_BF_BINOP(*, mpfr_mul)
  NETREL_BF_BINOP(/, mpfr_div)
#undef NETREL_BF_BINOP

  friend BigFloat operator*(const BigFloat& a, long s) {
    BigFloat r(a.precision());
    mpfr_mul_si(r.v_, a.v_, s, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(long s, const BigFloat& a) { return a * s; }
  friend BigFloat operator/(const BigFloat& a, long s) {
    BigFloat r(a.precision());
    mpfr_div_si(r.v_, a.v_, s, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator+(const BigFloat& a, long s) {
    BigFloat r(a.precision());
    mpfr_add_si(r.v_, a.v_, s, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a, long s) {
    BigFloat r(a.precision());
    mpfr_sub_si(r.v_, a.v_, s, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(long s, const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_si_sub(r.v_, s, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  /// 2^k at the given precision.
  static BigFloat pow2(long k, mpfr_prec_t prec) {
    BigFloat r(1, prec);
    mpfr_mul_2si(r.v_, r.v_, k, MPFR_RNDN);
    return r;
  }
  /// Unit roundoff 2^(1-prec).
  static BigFloat unit_roundoff(mpfr_prec_t prec) { return pow2(1 - static_cast<long>(prec), 64); }

 private:
  std::string format(const char* fmt, int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, fmt, digits, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }
  mpfr_t v_;
};

#define NETREL_BF_UNARY(name, fn)           \
  inline BigFloat name(const BigFloat& a) { \
    BigFloat r(a.precision());              \
    fn(r.get(), a.get(), MPFR_RNDN);        \
    return r;                               \
  }
NETREL_BF_UNARY(sqrt, mpfr_sqrt)
NETREL_BF_UNARY(cbrt, mpfr_cbrt)
NETREL_BF_UNARY(abs, mpfr_abs)
NETREL_BF_UNARY(exp, mpfr_exp)
NETREL_BF_UNARY(log, mpfr_log)
NETREL_BF_UNARY(sin, mpfr_sin)
NETREL_BF_UNARY(cos, mpfr_cos)
NETREL_BF_UNARY(acos, mpfr_acos)
#undef NETREL_BF_UNARY

inline BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(std::max(y.precision(), x.precision()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}
inline BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r(std::max(y.precision(), x.precision()));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}
inline BigFloat pow(const BigFloat& a, long e) {
  BigFloat r(a.precision());
  mpfr_pow_si(r.get(), a.get(), e, MPFR_RNDN);
  return r;
}
inline BigFloat pow(const BigFloat& a, const BigFloat& e) {
  BigFloat r(std::max(a.precision(), e.precision()));
  mpfr_pow(r.get(), a.get(), e.get(), MPFR_RNDN);
  return r;
}
/// a * 2^k exactly.
inline BigFloat ldexp(const BigFloat& a, long k) {
  BigFloat r(a.precision());
  mpfr_mul_2si(r.get(), a.get(), k, MPFR_RNDN);
  return r;
}

/// Complex number with two BigFloat parts of equal precision.
class BigComplex {
 public:
  BigComplex() = default;
  explicit BigComplex(mpfr_prec_t prec) : re_(prec), im_(prec) {}
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
    auto p = std::max(re_.precision(), im_.precision());
    if (re_.precision() != p) re_ = re_.with_precision(p);
    if (im_.precision() != p) im_ = im_.with_precision(p);
  }
  explicit BigComplex(const BigFloat& re) : BigComplex(re, BigFloat(re.precision())) {}
  BigComplex(const Rational& re, mpfr_prec_t prec) : re_(re, prec), im_(prec) {}
  static BigComplex from_double(double re, double im, mpfr_prec_t prec) {
    return {BigFloat::from_double(re, prec), BigFloat::from_double(im, prec)};
  }
  static BigComplex polar(const BigFloat& r, const BigFloat& theta) {
    return {r * cos(theta), r * sin(theta)};
  }

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  BigFloat& re() { return re_; }
  BigFloat& im() { return im_; }
  mpfr_prec_t precision() const { return re_.precision(); }
  BigComplex with_precision(mpfr_prec_t prec) const {
    return {re_.with_precision(prec), im_.with_precision(prec)};
  }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
  friend BigComplex operator-(const BigComplex& a) { return {-a.re_, -a.im_}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend BigComplex operator*(const BigComplex& a, const BigFloat& s) { return {a.re_ * s, a.im_ * s}; }
  friend BigComplex operator*(const BigFloat& s, const BigComplex& a) { return a * s; }
  friend BigComplex operator*(const BigComplex& a, long s) { return {a.re_ * s, a.im_ * s}; }
  friend BigComplex operator/(const BigComplex& a, const BigFloat& s) { return {a.re_ / s, a.im_ / s}; }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat d = b.re_ * b.re_ + b.im_ * b.im_;
    return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
  }
  BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
  BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
  BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }

  BigComplex conj() const { return {re_, -im_}; }
  BigFloat abs() const { return hypot(re_, im_); }
  BigFloat norm() const { return re_ * re_ + im_ * im_; }
  BigFloat arg() const { return atan2(im_, re_); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  BigComplex pow(long e) const {
    if (e < 0) return BigComplex(BigFloat(1, precision())) / pow(-e);
    BigComplex r(BigFloat(1, precision())), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }
  /// Principal square root.
  BigComplex sqrt() const {
    BigFloat m = abs();
    BigFloat a = ::netrel::sqrt((m + re_) / 2);
    BigFloat b = ::netrel::sqrt((m - re_) / 2);
    if (im_.sign() < 0) b = -b;
    return {a, b};
  }
  /// Principal cube root (argument in (-pi/3, pi/3]).
  BigComplex cbrt() const {
    if (is_zero()) return *this;
    return polar(::netrel::cbrt(abs()), arg() / 3);
  }

  std::string to_string(int digits = 20) const {
    return re_.to_string(digits) + (im_.sign() < 0 ? " - " : " + ") + ::netrel::abs(im_).to_string(digits) + "i";
  }

 private:
  BigFloat re_, im_;
};

/// Value of a polynomial plus an a priori bound on the accumulated rounding error.
struct EvalResult {
  BigComplex value;
  BigFloat error_bound;
};

namespace detail {

// Scratch-based complex arithmetic used by hot loops (no allocation).
struct ComplexScratch {
  explicit ComplexScratch(mpfr_prec_t prec) : t1(prec), t2(prec), t3(prec) {}
  BigFloat t1, t2, t3;
};

// acc = acc * z + c
inline void cmul_add(BigComplex& acc, const BigComplex& z, const BigComplex& c, ComplexScratch& s) {
  mpfr_mul(s.t1.get(), acc.re().get(), z.re().get(), MPFR_RNDN);
  mpfr_mul(s.t2.get(), acc.im().get(), z.im().get(), MPFR_RNDN);
  mpfr_sub(s.t1.get(), s.t1.get(), s.t2.get(), MPFR_RNDN);
  mpfr_mul(s.t2.get(), acc.re().get(), z.im().get(), MPFR_RNDN);
  mpfr_mul(s.t3.get(), acc.im().get(), z.re().get(), MPFR_RNDN);
  mpfr_add(acc.im().get(), s.t2.get(), s.t3.get(), MPFR_RNDN);
  mpfr_add(acc.im().get(), acc.im().get(), c.im().get(), MPFR_RNDN);
  mpfr_add(acc.re().get(), s.t1.get(), c.re().get(), MPFR_RNDN);
}

}  // namespace detail

/**
 * Horner evaluation of sum c_i z^i with an error bound
 * 8 (d+1) u sum |c_i| |z|^i, u the unit roundoff at the evaluation precision.
 * The bound also absorbs the rounding of the coefficients themselves.
 */
inline EvalResult bigfloat_eval(const std::vector<BigComplex>& c, const BigComplex& z) {
  const mpfr_prec_t prec = z.precision();
  EvalResult out{BigComplex(prec), BigFloat(64)};
  if (c.empty()) return out;
  detail::ComplexScratch s(prec);
  BigComplex acc = c.back().with_precision(prec);
  BigFloat az = z.abs().with_precision(64);
  BigFloat mag = c.back().abs().with_precision(64);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    detail::cmul_add(acc, z, c[i], s);
    mpfr_mul(mag.get(), mag.get(), az.get(), MPFR_RNDU);
    BigFloat ci = c[i].abs().with_precision(64);
    mpfr_add(mag.get(), mag.get(), ci.get(), MPFR_RNDU);
  }
  out.value = std::move(acc);
  BigFloat u = BigFloat::unit_roundoff(prec);
  mpfr_mul(mag.get(), mag.get(), u.get(), MPFR_RNDU);
  mpfr_mul_ui(mag.get(), mag.get(), 8ul * c.size(), MPFR_RNDU);
  out.error_bound = std::move(mag);
  return out;
}

inline std::vector<BigComplex> to_bigcomplex(const UniPoly<Rational>& p, mpfr_prec_t prec) {
  std::vector<BigComplex> c;
  c.reserve(p.size());
  for (const auto& q : p.coeffs()) c.emplace_back(q, prec);
  return c;
}

inline EvalResult bigfloat_eval(const UniPoly<Rational>& p, const BigComplex& z) {
  return bigfloat_eval(to_bigcomplex(p, z.precision()), z);
}

}  // namespace netrel
