#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "netrel/rational.hpp"

namespace netrel {

/**
 * \brief Dense univariate polynomial over a commutative ring R.
 *
 * R needs +, -, *, == and construction from int. Coefficients are stored
 * lowest degree first and trimmed so the leading one is nonzero.
 */
template <class R>
class UniPoly {
 public:
  using coeff_type = R;

  UniPoly() = default;
  UniPoly(const R& c) {  // NOLINT(implicit)
    if (!(c == R(0))) c_.push_back(c);
  }
  UniPoly(int c) : UniPoly(R(c)) {}  // NOLINT(implicit)
  explicit UniPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly monomial(const R& c, std::size_t k) {
    std::vector<R> v(k + 1, R(0));
    v[k] = c;
    return UniPoly(std::move(v));
  }
  static UniPoly x() { return monomial(R(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<R>& coeffs() const { return c_; }
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
  const R& operator[](std::size_t i) const { return c_.at(i); }
  R leading() const { return c_.empty() ? R(0) : c_.back(); }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(const UniPoly& a) {
    std::vector<R> v;
    v.reserve(a.c_.size());
    for (const auto& c : a.c_) v.push_back(R(0) - c);
    return UniPoly(std::move(v));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<R> v(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == R(0)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(v));
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  friend UniPoly operator*(const R& s, const UniPoly& a) {
    std::vector<R> v;
    v.reserve(a.c_.size());
    for (const auto& c : a.c_) v.push_back(s * c);
    return UniPoly(std::move(v));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  UniPoly pow(unsigned e) const {
    UniPoly r(1), b = *this;
    while (e) {
      if (e & 1u) r *= b;
      e >>= 1u;
      if (e) b *= b;
    }
    return r;
  }

  /// Horner evaluation in any ring V that accepts R coefficients through conv.
  template <class V, class Conv>
  V eval(const V& at, Conv conv) const {
    if (c_.empty()) return conv(R(0));
    V acc = conv(c_.back());
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * at + conv(c_[i]);
    return acc;
  }
  R eval(const R& at) const {
    return eval(at, [](const R& c) { return c; });
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<R> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(R(static_cast<int>(i)) * c_[i]);
    return UniPoly(std::move(v));
  }

  /// x^d P(1/x); d defaults to the degree.
  UniPoly reversed(int d = -1) const {
    if (d < 0) d = degree();
    if (d < degree()) throw std::invalid_argument("reversal degree below polynomial degree");
    std::vector<R> v(static_cast<std::size_t>(d) + 1, R(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[static_cast<std::size_t>(d) - i] = c_[i];
    return UniPoly(std::move(v));
  }

  /// Number of trailing zero coefficients (multiplicity of the root 0).
  std::size_t low_order() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == R(0)) ++k;
    return k;
  }
  UniPoly shift_down(std::size_t k) const {
    if (k > c_.size()) return UniPoly();
    return UniPoly(std::vector<R>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
  }
  UniPoly truncated(std::size_t terms) const {
    if (terms >= c_.size()) return *this;
    return UniPoly(std::vector<R>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(terms)));
  }

  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == R(0)) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c_[i] << ")";
      if (i > 0) os << "*" << var;
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == R(0)) c_.pop_back();
  }
  std::vector<R> c_;
};

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b, computed without division.
template <class R>
UniPoly<R> pseudo_remainder(const UniPoly<R>& a, const UniPoly<R>& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
  int db = b.degree();
  if (a.degree() < db) return a;
  std::vector<R> r = a.coeffs();
  const R lb = b.leading();
  int e = a.degree() - db + 1;
  for (int k = a.degree(); k >= db; --k) {
    R lead = r[static_cast<std::size_t>(k)];
    for (auto& c : r) c = c * lb;
    if (!(lead == R(0)))
      for (int i = 0; i <= db; ++i)
        r[static_cast<std::size_t>(k - db + i)] =
            r[static_cast<std::size_t>(k - db + i)] - lead * b.coeffs()[static_cast<std::size_t>(i)];
    r.pop_back();
    --e;
  }
  UniPoly<R> out(std::move(r));
  R f(1);
  for (int i = 0; i < e; ++i) f = f * lb;
  return f * out;
}

template <class R>
R ring_pow(const R& b, int e) {
  R r(1);
  for (int i = 0; i < e; ++i) r = r * b;
  return r;
}

template <class R>
UniPoly<R> exact_div_coeffs(const UniPoly<R>& a, const R& d) {
  std::vector<R> v;
  v.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) v.push_back(exact_div(c, d));
  return UniPoly<R>(std::move(v));
}

/**
 * Resultant by the subresultant pseudo-remainder sequence over an integral
 * domain R (exact_div(R, R) must be available).
 */
template <class R>
R resultant(UniPoly<R> a, UniPoly<R> b) {
  if (a.is_zero() || b.is_zero()) return R(0);
  R s(1);
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = R(0) - s;
  }
  if (b.degree() == 0) return s * ring_pow(b.leading(), a.degree());
  R g(1), h(1);
  while (true) {
    int delta = a.degree() - b.degree();
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = R(0) - s;
    UniPoly<R> r = pseudo_remainder(a, b);
    a = b;
    b = exact_div_coeffs(r, R(g * ring_pow(h, delta)));
    g = a.leading();
    if (delta == 0) {
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact_div(ring_pow(g, delta), ring_pow(h, delta - 1));
    }
    if (b.is_zero()) return R(0);
    if (b.degree() == 0) {
      int da = a.degree();
      if (da == 1) return s * b.leading();
      return s * exact_div(ring_pow(b.leading(), da), ring_pow(h, da - 1));
    }
  }
}

/// Division with remainder over a field K.
template <class K>
std::pair<UniPoly<K>, UniPoly<K>> divmod(const UniPoly<K>& a, const UniPoly<K>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly<K>(), a};
  std::vector<K> r = a.coeffs();
  std::vector<K> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), K(0));
  const K lb = b.leading();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    K f = r[static_cast<std::size_t>(k)] / lb;
    q[static_cast<std::size_t>(k - db)] = f;
    if (f == K(0)) continue;
    for (int i = 0; i <= db; ++i)
      r[static_cast<std::size_t>(k - db + i)] =
          r[static_cast<std::size_t>(k - db + i)] - f * b.coeffs()[static_cast<std::size_t>(i)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {UniPoly<K>(std::move(q)), UniPoly<K>(std::move(r))};
}

template <class K>
UniPoly<K> make_monic(const UniPoly<K>& a) {
  if (a.is_zero()) return a;
  return (K(1) / a.leading()) * a;
}

/**
 * Monic gcd over a field via the subresultant PRS (keeps intermediate
 * coefficient growth in check for Rational).
 */
template <class K>
UniPoly<K> gcd(UniPoly<K> a, UniPoly<K> b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.degree() < b.degree()) std::swap(a, b);
  K g(1), h(1);
  while (!b.is_zero()) {
    int delta = a.degree() - b.degree();
    UniPoly<K> r = pseudo_remainder(a, b);
    a = b;
    if (r.is_zero()) break;
    b = exact_div_coeffs(r, K(g * ring_pow(h, delta)));
    g = a.leading();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = ring_pow(g, delta) / ring_pow(h, delta - 1);
    }
    if (b.degree() == 0) return UniPoly<K>(K(1));
  }
  return make_monic(a);
}

/// Squarefree part over a field of characteristic zero.
template <class K>
UniPoly<K> squarefree_part(const UniPoly<K>& a) {
  if (a.degree() <= 0) return a;
  return make_monic(divmod(a, gcd(a, a.derivative())).first);
}

template <class R>
UniPoly<R> exact_div(const UniPoly<R>& a, const UniPoly<R>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return a;
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<R> r = a.coeffs();
  std::vector<R> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), R(0));
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const R& rk = r[static_cast<std::size_t>(k)];
    if (rk == R(0)) continue;
    R f = exact_div(rk, b.leading());
    q[static_cast<std::size_t>(k - db)] = f;
    for (int i = 0; i <= db; ++i)
      r[static_cast<std::size_t>(k - db + i)] =
          r[static_cast<std::size_t>(k - db + i)] - f * b.coeffs()[static_cast<std::size_t>(i)];
  }
  for (const auto& c : r)
    if (!(c == R(0))) throw std::domain_error("inexact polynomial division");
  return UniPoly<R>(std::move(q));
}

using QPoly = UniPoly<Rational>;

}  // namespace netrel
