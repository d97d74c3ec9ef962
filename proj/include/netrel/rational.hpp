#pragma once

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "netrel/errors.hpp"

namespace netrel {

/**
 * \brief Exact rational number in lowest terms (GMP backed).
 *
 * Wraps mpq_class so that expression templates never leak into generic code.
 */
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(implicit)
  Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT(implicit)
  Rational(const mpz_class& num, const mpz_class& den = 1) {
    if (den == 0) throw InputError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Accepts "a", "a/b", decimals "0.75" and exponents "1e-6" (all exact).
  static Rational parse(std::string_view text);

  const mpq_class& mpq() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }

  double to_double() const { return q_.get_d(); }

  /// "num/den", always with an explicit denominator.
  std::string to_string() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }
  /// Shortest human form: "3" or "3/4".
  std::string str() const {
    return is_integer() ? q_.get_num().get_str() : to_string();
  }
  /// Fixed-point decimal rounded half away from zero.
  std::string to_decimal(int digits) const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational pow(long e) const {
    if (e < 0) return Rational(1) / pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
  }
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

inline Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw InputError("empty rational literal");
  auto bad = [&] { return InputError("malformed rational literal '" + std::string(text) + "'"); };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Rational a = parse(s.substr(0, slash));
    Rational b = parse(s.substr(slash + 1));
    if (b.is_zero()) throw bad();
    return a / b;
  }
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_point = false, any = false;
  for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
    if (s[i] == '.') {
      if (seen_point) throw bad();
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits.push_back(s[i]);
      any = true;
      if (seen_point) --scale;
    } else {
      throw bad();
    }
  }
  if (!any) throw bad();
  if (i < s.size()) {
    std::string ex = s.substr(i + 1);
    if (ex.empty()) throw bad();
    std::size_t pos = 0;
    long e = 0;
    try {
      e = std::stol(ex, &pos);
    } catch (const std::exception&) {
      throw bad();
    }
    if (pos != ex.size()) throw bad();
    scale += e;
  }
  Rational r(mpz_class(digits, 10));
  r *= Rational(10).pow(scale);
  return neg ? -r : r;
}

inline std::string Rational::to_decimal(int digits) const {
  if (digits < 0) digits = 0;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpq_class a = abs().q_ * scale;
  mpz_class twice = 2 * a.get_num() + a.get_den();
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * a.get_den()).get_mpz_t());
  std::string body = r.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits))
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return (sign() < 0 && r != 0 ? "-" : "") + body;
}

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

}  // namespace netrel

template <>
struct std::hash<netrel::Rational> {
  std::size_t operator()(const netrel::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.to_string());
  }
};
