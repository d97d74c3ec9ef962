#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netrel/bigfloat.hpp"
#include "netrel/errors.hpp"
#include "netrel/unipoly.hpp"

namespace netrel {

/// Approximate root with an inclusion disk.
struct CertifiedRoot {
  BigComplex center;
  BigFloat radius{64};
  int multiplicity = 1;
  /// Disk isolated from all others: it holds exactly one root of its square-free factor.
  bool certified = false;
  /// Overlapping disks share a cluster id (-1 when isolated); a cluster of k disks holds k roots.
  int cluster = -1;
};

struct RootSolveOptions {
  mpfr_prec_t start_bits = 128;
  mpfr_prec_t max_bits = 8192;
  int max_iterations = 0;  // 0 picks a degree-dependent budget
};

struct RootSolveResult {
  std::vector<CertifiedRoot> roots;
  mpfr_prec_t precision_bits = 0;
  bool certified = false;
};

/// Precision cap: the smaller of the request and REL_MAX_PRECISION (if set).
inline mpfr_prec_t precision_cap(mpfr_prec_t requested) {
  if (const char* env = std::getenv("REL_MAX_PRECISION")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 64) return std::min<mpfr_prec_t>(requested, v);
  }
  return requested;
}

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, m))
    if (e & 1) r = mulmod(r, a, m);
  return r;
}

/// Degree of gcd(f, f') over F_m (m prime), or -1 if m divides a denominator or deg(f) * lc(f).
inline int gcd_degree_mod(const QPoly& f, std::uint64_t m) {
  const int n = f.degree();
  std::vector<std::uint64_t> a(static_cast<std::size_t>(n) + 1);
  const mpz_class mz(std::to_string(m));
  for (int i = 0; i <= n; ++i) {
    const Rational& c = f.coeff(static_cast<std::size_t>(i));
    mpz_class num = c.num() % mz, den = c.den() % mz;
    if (num < 0) num += mz;
    if (den == 0) return -1;
    const std::uint64_t nu = num.get_ui(), de = den.get_ui();
    a[static_cast<std::size_t>(i)] = mulmod(nu, powmod(de, m - 2, m), m);
  }
  if (a.back() == 0 || static_cast<std::uint64_t>(n) % m == 0) return -1;
  std::vector<std::uint64_t> b(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) b[static_cast<std::size_t>(i - 1)] = mulmod(a[static_cast<std::size_t>(i)], static_cast<std::uint64_t>(i) % m, m);
  auto trim = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    const std::uint64_t inv = powmod(b.back(), m - 2, m);
    while (a.size() >= b.size()) {
      const std::uint64_t q = mulmod(a.back(), inv, m);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::uint64_t& t = a[shift + j];
        t = (t + m - mulmod(q, b[j], m)) % m;
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

/// True when a modular gcd proves f square-free; false means undecided.
inline bool squarefree_modular(const QPoly& f) {
  for (std::uint64_t m : {4611686018427387847ull, 4611686018427387817ull, 4611686018427387787ull}) {
    const int g = gcd_degree_mod(f, m);
    if (g == 0) return true;
    if (g > 0) return false;
  }
  return false;
}

}  // namespace detail

/// Yun's algorithm: pairs (monic square-free factor, multiplicity), product = f / lc(f).
inline std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f) {
  std::vector<std::pair<QPoly, int>> out;
  if (f.degree() <= 0) return out;
  if (f.degree() > 8 && detail::squarefree_modular(f)) {
    out.emplace_back(make_monic(f), 1);
    return out;
  }
  QPoly a = gcd(f, f.derivative());
  QPoly b = divmod(f, a).first;
  QPoly c = divmod(f.derivative(), a).first;
  QPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    QPoly g = gcd(b, d);
    QPoly bn = divmod(b, g).first;
    if (g.degree() > 0) out.emplace_back(make_monic(g), i);
    if (bn.degree() <= 0) break;
    c = divmod(d, g).first;
    d = c - bn.derivative();
    b = bn;
  }
  return out;
}

namespace detail {

inline std::vector<BigComplex> convert_coeffs(const QPoly& p, mpfr_prec_t prec) { return to_bigcomplex(p, prec); }

/// Starting points on circles given by the upper convex hull of (i, log2|c_i|).
inline std::vector<BigComplex> newton_polygon_start(const std::vector<BigComplex>& c, mpfr_prec_t prec) {
  const int d = static_cast<int>(c.size()) - 1;
  std::vector<std::pair<int, double>> pts;
  for (int i = 0; i <= d; ++i) {
    BigFloat a = c[static_cast<std::size_t>(i)].abs();
    if (!a.is_zero()) pts.emplace_back(i, a.log2_abs());
  }
  std::vector<std::pair<int, double>> hull;
  for (const auto& q : pts) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull.back();
      double cross = (a.first - o.first) * (q.second - o.second) - (a.second - o.second) * (q.first - o.first);
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(q);
  }
  std::vector<BigComplex> z;
  z.reserve(static_cast<std::size_t>(d));
  const BigFloat two_pi = BigFloat::pi(prec) * 2;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const int k = hull[h + 1].first - hull[h].first;
    const double lr = (hull[h].second - hull[h + 1].second) / k;
    const double fl = std::floor(lr);
    BigFloat r = BigFloat::pow2(static_cast<long>(fl), prec) * BigFloat::from_double(std::exp2(lr - fl), prec);
    for (int m = 0; m < k; ++m) {
      double frac = static_cast<double>(m) / k + static_cast<double>(hull[h].first) / d + 0.1234;
      z.push_back(BigComplex::polar(r, two_pi * BigFloat::from_double(frac, prec)));
    }
  }
  return z;
}

// Value, derivative and rounding bound of the value at z.
struct HornerOut {
  BigComplex v, dv;
  BigFloat bound{64};
};

inline void horner_with_derivative(const std::vector<BigComplex>& c, const BigComplex& z, HornerOut& out,
                                   ComplexScratch& s) {
  const mpfr_prec_t prec = z.precision();
  out.v = c.back().with_precision(prec);
  out.dv = BigComplex(prec);
  BigFloat az = z.abs().with_precision(64);
  BigFloat mag = c.back().abs().with_precision(64);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    cmul_add(out.dv, z, out.v, s);
    cmul_add(out.v, z, c[i], s);
    mpfr_mul(mag.get(), mag.get(), az.get(), MPFR_RNDU);
    BigFloat ci = c[i].abs().with_precision(64);
    mpfr_add(mag.get(), mag.get(), ci.get(), MPFR_RNDU);
  }
  BigFloat u = BigFloat::unit_roundoff(prec);
  mpfr_mul(mag.get(), mag.get(), u.get(), MPFR_RNDU);
  mpfr_mul_ui(mag.get(), mag.get(), 8ul * c.size(), MPFR_RNDU);
  out.bound = std::move(mag);
}

/// Gauss-Seidel Aberth-Ehrlich iteration; a root freezes once |p(z)| is below its rounding bound
/// or its correction is negligible at the working precision.
inline void aberth_iterate(const std::vector<BigComplex>& c, std::vector<BigComplex>& z, int max_iter) {
  const std::size_t d = z.size();
  if (d == 0) return;
  const mpfr_prec_t prec = z[0].precision();
  std::vector<char> frozen(d, 0);
  ComplexScratch s(prec);
  HornerOut h{BigComplex(prec), BigComplex(prec)};
  BigFloat sr(prec), si(prec), dr(prec), di(prec), den(prec), t(prec);
  BigFloat tiny = BigFloat::pow2(8 - static_cast<long>(prec), 64);
  for (int it = 0; it < max_iter; ++it) {
    bool active = false;
    for (std::size_t i = 0; i < d; ++i) {
      if (frozen[i]) continue;
      horner_with_derivative(c, z[i], h, s);
      if (h.v.abs() <= h.bound) {
        frozen[i] = 1;
        continue;
      }
      active = true;
      mpfr_set_zero(sr.get(), 1);
      mpfr_set_zero(si.get(), 1);
      for (std::size_t j = 0; j < d; ++j) {
        if (j == i) continue;
        mpfr_sub(dr.get(), z[i].re().get(), z[j].re().get(), MPFR_RNDN);
        mpfr_sub(di.get(), z[i].im().get(), z[j].im().get(), MPFR_RNDN);
        mpfr_sqr(den.get(), dr.get(), MPFR_RNDN);
        mpfr_sqr(t.get(), di.get(), MPFR_RNDN);
        mpfr_add(den.get(), den.get(), t.get(), MPFR_RNDN);
        if (mpfr_zero_p(den.get())) continue;
        mpfr_div(t.get(), dr.get(), den.get(), MPFR_RNDN);
        mpfr_add(sr.get(), sr.get(), t.get(), MPFR_RNDN);
        mpfr_div(t.get(), di.get(), den.get(), MPFR_RNDN);
        mpfr_sub(si.get(), si.get(), t.get(), MPFR_RNDN);
      }
      if (h.dv.is_zero()) {
        z[i] = z[i] + BigComplex(tiny.with_precision(prec), tiny.with_precision(prec));
        continue;
      }
      BigComplex ratio = h.v / h.dv;
      BigComplex w = ratio / (BigComplex(BigFloat(1, prec)) - ratio * BigComplex(sr, si));
      z[i] = z[i] - w;
      BigFloat zi = z[i].abs();
      if (w.abs() <= tiny * (zi.is_zero() ? BigFloat(1, 64) : zi)) frozen[i] = 1;
    }
    if (!active) break;
  }
}

/// Braess-Hadeler inclusion: disks of radius d (|p(z_i)| + err_i) / |a_d prod_{j!=i}(z_i - z_j)|.
/// Each connected component of k disks contains exactly k roots.
inline std::vector<CertifiedRoot> certify(const std::vector<BigComplex>& c, const std::vector<BigComplex>& z) {
  const std::size_t d = z.size();
  std::vector<CertifiedRoot> out(d);
  if (d == 0) return out;
  const mpfr_prec_t prec = z[0].precision();
  const BigFloat ad = c.back().abs();
  for (std::size_t i = 0; i < d; ++i) {
    EvalResult e = bigfloat_eval(c, z[i]);
    BigFloat num = e.value.abs().with_precision(64);
    mpfr_add(num.get(), num.get(), e.error_bound.get(), MPFR_RNDU);
    BigFloat prod = ad.with_precision(prec);
    for (std::size_t j = 0; j < d; ++j)
      if (j != i) prod = prod * (z[i] - z[j]).abs();
    BigFloat r(64);
    if (prod.is_zero()) {
      mpfr_set_inf(r.get(), 1);
    } else {
      // Lower bound on prod: shrink by the accumulated relative rounding.
      BigFloat shrink = BigFloat(1, 64) - BigFloat::pow2(static_cast<long>(std::ceil(std::log2(4.0 * static_cast<double>(d + 2)))) -
                                                              static_cast<long>(prec), 64);
      BigFloat lo(64);
      mpfr_mul(lo.get(), prod.with_precision(64).get(), shrink.get(), MPFR_RNDD);
      mpfr_div(r.get(), num.get(), lo.get(), MPFR_RNDU);
      mpfr_mul_ui(r.get(), r.get(), static_cast<unsigned long>(d), MPFR_RNDU);
    }
    out[i].center = z[i];
    out[i].radius = std::move(r);
  }
  // Overlap components (union-find).
  std::vector<std::size_t> parent(d);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<double> cx(d), cy(d), rr(d);
  for (std::size_t i = 0; i < d; ++i) {
    cx[i] = z[i].re().to_double();
    cy[i] = z[i].im().to_double();
    rr[i] = out[i].radius.to_double_up();
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      double dist = std::hypot(cx[i] - cx[j], cy[i] - cy[j]);
      double slack = 1e-12 * (std::fabs(cx[i]) + std::fabs(cy[i]) + std::fabs(cx[j]) + std::fabs(cy[j])) + 1e-300;
      bool overlap;
      if (std::isfinite(dist) && std::isfinite(rr[i] + rr[j]) && dist - slack > rr[i] + rr[j]) {
        overlap = false;
      } else if (!std::isfinite(rr[i]) || !std::isfinite(rr[j])) {
        overlap = true;
      } else {
        BigFloat exact = (z[i] - z[j]).abs();
        overlap = !(exact > out[i].radius + out[j].radius);
      }
      if (overlap) parent[find(i)] = find(j);
    }
  std::vector<std::size_t> size(d, 0);
  for (std::size_t i = 0; i < d; ++i) ++size[find(i)];
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t r = find(i);
    out[i].certified = size[r] == 1;
    out[i].cluster = size[r] == 1 ? -1 : static_cast<int>(r);
  }
  return out;
}

inline int default_iterations(std::size_t d) { return 60 + 2 * static_cast<int>(d); }

}  // namespace detail

/**
 * Roots of a polynomial with (already rounded) complex coefficients at their precision.
 * Starting points may be supplied (e.g. from a neighbouring parameter value).
 */
inline RootSolveResult solve_roots_numeric(const std::vector<BigComplex>& coeffs,
                                           const std::vector<BigComplex>* start = nullptr, int max_iter = 0) {
  std::vector<BigComplex> c = coeffs;
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  RootSolveResult res;
  if (c.size() <= 1) {
    res.certified = true;
    return res;
  }
  const mpfr_prec_t prec = c.back().precision();
  res.precision_bits = prec;
  std::size_t zeros = 0;
  while (zeros < c.size() && c[zeros].is_zero()) ++zeros;
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
  const std::size_t d = c.size() - 1;
  std::vector<BigComplex> z;
  if (start && start->size() == d) {
    for (const auto& s : *start) z.push_back(s.with_precision(prec));
  } else {
    z = detail::newton_polygon_start(c, prec);
  }
  detail::aberth_iterate(c, z, max_iter > 0 ? max_iter : detail::default_iterations(d));
  res.roots = detail::certify(c, z);
  res.certified = std::all_of(res.roots.begin(), res.roots.end(), [](const CertifiedRoot& r) { return r.certified; });
  for (std::size_t k = 0; k < zeros; ++k) {
    CertifiedRoot r;
    r.center = BigComplex(prec);
    r.radius = BigFloat(64);
    r.certified = true;
    res.roots.push_back(std::move(r));
  }
  return res;
}

inline void sort_roots(std::vector<CertifiedRoot>& roots) {
  std::sort(roots.begin(), roots.end(), [](const CertifiedRoot& a, const CertifiedRoot& b) {
    if (!(a.center.re() == b.center.re())) return a.center.re() < b.center.re();
    return a.center.im() < b.center.im();
  });
}

/**
 * All complex roots of an exact polynomial, with multiplicity. Zero roots and
 * repeated factors are split off exactly; each square-free factor is solved by
 * Aberth-Ehrlich, doubling the precision from start_bits until every disk is
 * isolated or the cap is reached (then the overlapping disks carry cluster ids).
 */
inline RootSolveResult solve_roots(const QPoly& f, RootSolveOptions opts = {}) {
  if (f.is_zero()) throw InputError("roots of the zero polynomial");
  RootSolveResult res;
  const mpfr_prec_t cap = precision_cap(opts.max_bits);
  mpfr_prec_t used = std::min(opts.start_bits, cap);
  res.certified = true;
  const std::size_t z0 = f.low_order();
  QPoly g = f.shift_down(z0);
  int cluster_base = 0;
  for (const auto& [factor, mult] : squarefree_decomposition(g)) {
    mpfr_prec_t prec = std::min(opts.start_bits, cap);
    std::vector<BigComplex> z;
    std::vector<CertifiedRoot> cert;
    bool ok = false;
    for (;;) {
      auto c = detail::convert_coeffs(factor, prec);
      if (factor.degree() == 1) {
        Rational root = -factor.coeff(0) / factor.coeff(1);
        z = {BigComplex(root, prec)};
      } else if (z.empty()) {
        z = detail::newton_polygon_start(c, prec);
      } else {
        for (auto& v : z) v = v.with_precision(prec);
      }
      int iters = opts.max_iterations > 0 ? opts.max_iterations : detail::default_iterations(z.size());
      if (factor.degree() > 1) detail::aberth_iterate(c, z, iters);
      cert = detail::certify(c, z);
      ok = std::all_of(cert.begin(), cert.end(), [](const CertifiedRoot& r) { return r.certified; });
      if (ok || prec >= cap) break;
      prec = std::min(prec * 2, cap);
    }
    used = std::max(used, prec);
    if (!ok) res.certified = false;
    int local_max = -1;
    for (auto& r : cert) {
      r.multiplicity = mult;
      if (r.cluster >= 0) {
        local_max = std::max(local_max, r.cluster);
        r.cluster += cluster_base;
      }
      res.roots.push_back(std::move(r));
    }
    cluster_base += local_max + 1;
  }
  if (z0 > 0) {
    CertifiedRoot r;
    r.center = BigComplex(used);
    r.radius = BigFloat(64);
    r.multiplicity = static_cast<int>(z0);
    r.certified = true;
    res.roots.push_back(std::move(r));
  }
  for (auto& r : res.roots) r.center = r.center.with_precision(used);
  res.precision_bits = used;
  sort_roots(res.roots);
  return res;
}

/// Total number of roots counted with multiplicity.
inline std::size_t root_count(const RootSolveResult& r) {
  std::size_t n = 0;
  for (const auto& x : r.roots) n += static_cast<std::size_t>(x.multiplicity);
  return n;
}

// ---- exact real-root counting ----

/// Sturm sequence f, f', -rem(...), ...
inline std::vector<QPoly> sturm_sequence(const QPoly& f) {
  std::vector<QPoly> s{f, f.derivative()};
  while (!s.back().is_zero() && s.back().degree() > 0) {
    QPoly r = divmod(s[s.size() - 2], s.back()).second;
    if (r.is_zero()) break;
    s.push_back(-r);
  }
  return s;
}

namespace detail {

inline int sign_changes(const std::vector<int>& signs) {
  int n = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++n;
    last = s;
  }
  return n;
}

inline int changes_at(const std::vector<QPoly>& s, const Rational& x) {
  std::vector<int> v;
  for (const auto& q : s) v.push_back(q.eval(x).sign());
  return sign_changes(v);
}

inline int changes_at_infinity(const std::vector<QPoly>& s, bool positive) {
  std::vector<int> v;
  for (const auto& q : s) {
    int sg = q.leading().sign();
    if (!positive && q.degree() % 2 == 1) sg = -sg;
    v.push_back(sg);
  }
  return sign_changes(v);
}

}  // namespace detail

/// Number of distinct real roots in (lo, hi]; unbounded ends when omitted.
inline int count_real_roots(const QPoly& f, std::optional<Rational> lo = std::nullopt,
                            std::optional<Rational> hi = std::nullopt) {
  if (f.degree() <= 0) return 0;
  auto s = sturm_sequence(f);
  int a = lo ? detail::changes_at(s, *lo) : detail::changes_at_infinity(s, false);
  int b = hi ? detail::changes_at(s, *hi) : detail::changes_at_infinity(s, true);
  return a - b;
}

/// Isolating intervals (lo, hi] of width <= eps for the distinct real roots in (lo, hi].
inline std::vector<std::pair<Rational, Rational>> isolate_real_roots(const QPoly& f, Rational lo, Rational hi,
                                                                      const Rational& eps) {
  std::vector<std::pair<Rational, Rational>> out;
  if (f.degree() <= 0) return out;
  auto s = sturm_sequence(f);
  std::vector<std::pair<Rational, Rational>> stack{{lo, hi}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int n = detail::changes_at(s, a) - detail::changes_at(s, b);
    if (n == 0) continue;
    if (n == 1 && b - a <= eps) {
      out.emplace_back(a, b);
      continue;
    }
    Rational m = (a + b) / Rational(2);
    stack.emplace_back(m, b);
    stack.emplace_back(a, m);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

}  // namespace netrel
