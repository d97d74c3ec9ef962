#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "netrel/tabulated.hpp"
#include "netrel/bigfloat.hpp"
#include "netrel/genfunc.hpp"
#include "netrel/graph_families.hpp"
#include "netrel/roots.hpp"
#include "netrel/transfer.hpp"

namespace netrel {

// ---- characteristic polynomials ----

/// Characteristic polynomial of M(p, rho) in x, coefficients in p and rho.
inline MPoly charpoly_mpoly(Family f) {
  const MPoly p = sym("p"), rho = sym("rho");
  Matrix<MPoly> M = f == Family::bc ? bc_uniform_matrix<MPoly>(p, rho) : fan_uniform_matrix<MPoly>(p, rho);
  return MPoly::from_univariate(characteristic_polynomial(M), "x");
}

/// Coefficients (x^0 .. x^d) of the characteristic polynomial at fixed rho, each a polynomial in p.
inline std::vector<QPoly> charpoly_in_p(Family f, const Rational& rho) {
  MPoly cp = charpoly_mpoly(f).substitute(std::map<std::string, Rational>{{"rho", rho}});
  std::vector<QPoly> out;
  const auto u = cp.as_univariate("x");
  for (const auto& c : u.coeffs()) out.push_back(c.as_qpoly("p"));
  return out;
}

inline QPoly charpoly_at(Family f, const Rational& p, const Rational& rho) {
  std::vector<Rational> c;
  for (const auto& q : charpoly_in_p(f, rho)) c.push_back(q.eval(p));
  return QPoly(std::move(c));
}

/// Eigenvalues sorted by decreasing modulus.
struct Eigenvalues {
  std::vector<BigComplex> values;
  bool certified = false;
};

inline Eigenvalues eigenvalues_at(const std::vector<QPoly>& charpoly_p, const BigComplex& p) {
  std::vector<BigComplex> c;
  for (const auto& q : charpoly_p) c.push_back(bigfloat_eval(q, p).value);
  auto r = solve_roots_numeric(c);
  Eigenvalues e;
  e.certified = r.certified;
  for (auto& x : r.roots) e.values.push_back(x.center);
  std::sort(e.values.begin(), e.values.end(), [](const BigComplex& a, const BigComplex& b) { return a.abs() > b.abs(); });
  return e;
}

/// Exact fan eigenvalues {1, p rho, p(1-p)rho (double)}.
inline std::vector<std::pair<Rational, int>> fan_eigenvalues(const Rational& p, const Rational& rho) {
  std::map<Rational, int> m;
  m[Rational(1)] += 1;
  m[p * rho] += 1;
  m[p * (Rational(1) - p) * rho] += 2;
  return {m.begin(), m.end()};
}

/// Charpoly roots with certified disks at rational (p, rho); fan roots are exact.
inline RootSolveResult charpoly_roots(Family f, const Rational& p, const Rational& rho, RootSolveOptions opts = {}) {
  return solve_roots(charpoly_at(f, p, rho), opts);
}

/// Distinct real eigenvalues at rational (p, rho), counted exactly.
inline int real_eigenvalue_count(Family f, const Rational& p, const Rational& rho) {
  return count_real_roots(charpoly_at(f, p, rho));
}

/// True when the two largest moduli agree to relative tolerance tol.
inline bool dominant_tie(const Eigenvalues& e, double tol) {
  if (e.values.size() < 2) return false;
  BigFloat a = e.values[0].abs(), b = e.values[1].abs();
  if (a.is_zero()) return true;
  return ((a - b) / a).to_double() <= tol;
}

/// cos of the angle between the two dominant eigenvalues.
inline double dominant_cos(const Eigenvalues& e) {
  BigComplex q = e.values[0] / e.values[1];
  return (q.re() / q.abs()).to_double();
}

// ---- degeneracy boundary ----

/// Discriminant of the ladder charpoly in x at fixed rho with the factors p and (1-p) removed.
inline QPoly bc_degeneracy_polynomial(const Rational& rho) {
  auto cs = charpoly_in_p(Family::bc, rho);
  UniPoly<QPoly> P{std::vector<QPoly>(cs.begin(), cs.end())};
  QPoly disc = resultant(P, P.derivative());
  disc = disc.shift_down(disc.low_order());
  const QPoly one_minus_p(std::vector<Rational>{Rational(1), Rational(-1)});
  while (disc.degree() > 0 && disc.eval(Rational(1)).is_zero()) disc = divmod(disc, one_minus_p).first;
  return make_monic(disc);
}

struct PCrit {
  BigFloat value;
  Rational lo, hi;  // isolating interval
  bool boundary = false;  // no interior root: the value is p = 1
  BigFloat residual_P{64}, residual_dP{64};  // degeneracy certificate at the double eigenvalue
  BigFloat double_root;
};

/// Unique p in (0,1] where the ladder charpoly has a double real root.
inline PCrit p_crit(const Rational& rho, mpfr_prec_t prec = 128) {
  if (!(rho > Rational(0)) || rho > Rational(1)) throw InputError("p_crit needs 0 < rho <= 1");
  QPoly g = bc_degeneracy_polynomial(rho);
  PCrit out;
  const Rational eps = Rational(1, 2).pow(static_cast<long>(prec + 8));
  auto iv = isolate_real_roots(g, Rational(0), Rational(1) - eps, eps);
  if (iv.empty()) {
    out.boundary = true;
    out.lo = out.hi = Rational(1);
    out.value = BigFloat(1, prec);
  } else {
    if (iv.size() != 1) throw VerificationError("more than one degeneracy point in (0,1)");
    out.lo = iv[0].first;
    out.hi = iv[0].second;
    out.value = BigFloat((out.lo + out.hi) / Rational(2), prec);
  }
  // certificate: root of dP/dx nearest to a root of P at p*
  auto cs = charpoly_in_p(Family::bc, rho);
  std::vector<BigComplex> c;
  for (const auto& q : cs) c.push_back(bigfloat_eval(q, BigComplex(out.value)).value);
  std::vector<BigComplex> dc;
  for (std::size_t i = 1; i < c.size(); ++i) dc.push_back(c[i] * static_cast<long>(i));
  auto dr = solve_roots_numeric(dc);
  bool first = true;
  for (const auto& r : dr.roots) {
    EvalResult v = bigfloat_eval(c, r.center);
    BigFloat a = v.value.abs();
    if (first || a < out.residual_P) {
      out.residual_P = a.with_precision(64);
      out.residual_dP = bigfloat_eval(dc, r.center).value.abs().with_precision(64);
      out.double_root = r.center.re();
      first = false;
    }
  }
  return out;
}

// ---- reliability polynomials ----

/**
 * Rel2(S0 -> Sn) as an exact polynomial in p at fixed rho: transfer seeds for
 * n <= deg D, then the linear recursion read off D(z).
 */
inline QPoly reliability_polynomial(Family f, int n, const Rational& rho) {
  if (n < 0) throw InputError("n must be >= 0");
  const QPoly p = QPoly::x(), r(rho);
  Matrix<QPoly> M = f == Family::bc ? bc_uniform_matrix<QPoly>(p, r) : fan_uniform_matrix<QPoly>(p, r);
  UniPoly<QPoly> D = denominator_from_charpoly(M);
  auto rec = recurrence_from_denominator(D);
  const int d = D.degree();
  std::vector<QPoly> a = rel2_uniform_sequence<QPoly>(f, std::min(n, d), p, r);
  for (int k = d + 1; k <= n; ++k) {
    QPoly s;
    for (int j = 1; j <= d; ++j) s += rec[static_cast<std::size_t>(j - 1)] * a[static_cast<std::size_t>(k - j)];
    a.push_back(std::move(s));
  }
  return a[static_cast<std::size_t>(n)];
}

// ---- zero clouds ----

struct RootCloud {
  Family family = Family::bc;
  int n = 0;
  Rational rho;
  int degree = 0;
  std::vector<CertifiedRoot> roots;
  mpfr_prec_t precision_bits = 0;
  bool certified = false;
};

inline RootCloud zero_cloud(Family f, int n, const Rational& rho, RootSolveOptions opts = {}) {
  QPoly poly = reliability_polynomial(f, n, rho);
  RootCloud c;
  c.family = f;
  c.n = n;
  c.rho = rho;
  c.degree = poly.degree();
  auto r = solve_roots(poly, opts);
  c.roots = std::move(r.roots);
  c.precision_bits = r.precision_bits;
  c.certified = r.certified;
  return c;
}

/// Every root has a partner within the sum of radii of its conjugate.
inline bool conjugate_symmetric(const RootCloud& c) {
  for (const auto& a : c.roots) {
    bool found = false;
    for (const auto& b : c.roots) {
      if (b.multiplicity != a.multiplicity) continue;
      BigFloat d = (a.center.conj() - b.center).abs();
      if (d <= a.radius + b.radius) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

inline nlohmann::ordered_json to_json(const RootCloud& c, int digits) {
  nlohmann::ordered_json j;
  j["family"] = to_string(c.family);
  j["n"] = c.n;
  j["rho"] = c.rho.str();
  j["degree"] = c.degree;
  j["precision_bits"] = c.precision_bits;
  j["certified"] = c.certified;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : c.roots) {
    nlohmann::ordered_json e;
    e["re"] = r.center.re().to_string(digits);
    e["im"] = r.center.im().to_string(digits);
    e["radius"] = r.radius.to_string(6);
    e["multiplicity"] = r.multiplicity;
    if (r.cluster >= 0) e["cluster"] = r.cluster;
    arr.push_back(std::move(e));
  }
  j["roots"] = std::move(arr);
  return j;
}

// ---- critical points of the ladder curves ----

struct CriticalPoints {
  Rational rho;
  mpfr_prec_t precision_bits = 0;
  BigFloat p_A, p_B, T_A, T_B;
  BigComplex p_C;
  BigFloat p_D;
  std::optional<BigFloat> p_E;
  int degree_P1 = 0, degree_P2 = 0;          // nominal degrees in p after specialization
  int reduced_degree_P1 = 0, reduced_degree_P2 = 0;  // multiplicity-one part
};

namespace detail {

inline QPoly specialize_p(const MPoly& m, const std::map<std::string, Rational>& b) {
  return m.substitute(b).as_qpoly("p");
}

inline int multiplicity_one_degree(const QPoly& q) {
  int d = 0;
  for (const auto& [f, m] : squarefree_decomposition(q.shift_down(q.low_order())))
    if (m == 1) d += f.degree();
  return d;
}

inline bool is_real(const CertifiedRoot& r) { return abs(r.center.im()) <= r.radius; }

// The T in [-1,1] solving P3(p, rho, T) = 0 with the smallest |dP3/dp| (a double root in p).
inline BigFloat double_point_T(const MPoly& p3rho, const BigFloat& p) {
  const mpfr_prec_t prec = p.precision();
  auto inT = p3rho.as_univariate("T");
  std::vector<BigComplex> c;
  for (const auto& q : inT.coeffs()) c.push_back(bigfloat_eval(q.as_qpoly("p"), BigComplex(p)).value);
  auto dT = p3rho.derivative("p").as_univariate("T");
  std::vector<BigComplex> dc;
  for (const auto& q : dT.coeffs()) dc.push_back(bigfloat_eval(q.as_qpoly("p"), BigComplex(p)).value);
  auto r = solve_roots_numeric(c);
  BigFloat best(prec), best_d(prec);
  bool first = true;
  for (const auto& t : r.roots) {
    if (abs(t.center.im()).to_double() > 1e-8) continue;
    BigFloat tr = t.center.re();
    if (tr.to_double() < -1 - 1e-9 || tr.to_double() > 1 + 1e-9) continue;
    BigFloat dv = bigfloat_eval(dc, BigComplex(tr)).value.abs();
    if (first || dv < best_d) {
      best = tr;
      best_d = dv;
      first = false;
    }
  }
  if (first) throw VerificationError("no real T in [-1,1] for the double point");
  return best;
}

}  // namespace detail

/**
 * Critical points of the ladder limiting curves. Candidates are roots of the
 * tabulated degeneracy polynomials; the relevant one is the root at which the two
 * dominant eigenvalues of M(p, rho) have equal modulus.
 */
inline CriticalPoints critical_points(const Rational& rho, mpfr_prec_t prec = 128) {
  if (!(rho > Rational(0)) || rho > Rational(1)) throw InputError("critical points need 0 < rho <= 1");
  CriticalPoints cp;
  cp.rho = rho;
  const std::map<std::string, Rational> b{{"rho", rho}};
  const auto ch = charpoly_in_p(Family::bc, rho);
  const double tol = std::ldexp(1.0, -static_cast<int>(prec) / 4);
  RootSolveOptions opts;
  opts.start_bits = prec;
  auto tie_at = [&](const BigComplex& p) { return dominant_tie(eigenvalues_at(ch, p), tol); };

  QPoly P1 = detail::specialize_p(tabulated::p1(), b);
  QPoly P2 = detail::specialize_p(tabulated::p2(), b);
  cp.degree_P1 = P1.degree();
  cp.degree_P2 = P2.degree();
  cp.reduced_degree_P1 = detail::multiplicity_one_degree(P1);
  cp.reduced_degree_P2 = detail::multiplicity_one_degree(P2);

  auto negative_tie = [&](const QPoly& P, const char* name) {
    auto r = solve_roots(P, opts);
    cp.precision_bits = std::max(cp.precision_bits, r.precision_bits);
    std::vector<BigFloat> hits;
    for (const auto& x : r.roots)
      if (detail::is_real(x) && x.center.re().sign() < 0 && tie_at(BigComplex(x.center.re()))) hits.push_back(x.center.re());
    if (hits.size() != 1)
      throw VerificationError(std::string("expected one relevant negative root of ") + name + ", found " +
                              std::to_string(hits.size()));
    return hits[0];
  };
  cp.p_A = negative_tie(P1, "P1");
  cp.p_B = negative_tie(P2, "P2");
  const MPoly p3rho = tabulated::p3().substitute(b);
  cp.T_A = detail::double_point_T(p3rho, cp.p_A);
  cp.T_B = detail::double_point_T(p3rho, cp.p_B);

  QPoly P3T1 = p3rho.substitute(std::map<std::string, Rational>{{"T", Rational(1)}}).as_qpoly("p");
  auto r3 = solve_roots(P3T1, opts);
  cp.precision_bits = std::max(cp.precision_bits, r3.precision_bits);
  std::vector<BigComplex> complex_hits;
  std::vector<BigFloat> real_hits;
  for (const auto& x : r3.roots) {
    if (x.center.is_zero()) continue;
    if (detail::is_real(x)) {
      if (tie_at(BigComplex(x.center.re()))) real_hits.push_back(x.center.re());
    } else if (x.center.im().sign() > 0 && tie_at(x.center)) {
      complex_hits.push_back(x.center);
    }
  }
  if (complex_hits.size() != 1)
    throw VerificationError("expected one relevant complex root of P3(T=1), found " + std::to_string(complex_hits.size()));
  cp.p_C = complex_hits[0];

  if (rho >= Rational(1, 2)) {
    BigFloat R(rho, prec);
    cp.p_D = (sqrt(BigFloat(4, prec) / R + 1) + 1) / 2;
  } else {
    auto r1 = solve_roots(P1, opts);
    std::vector<BigFloat> reals;
    for (const auto& x : r1.roots)
      if (detail::is_real(x)) reals.push_back(x.center.re());
    std::sort(reals.begin(), reals.end(), [](const BigFloat& a, const BigFloat& c) { return a > c; });
    if (reals.size() < 3) throw VerificationError("P1 has fewer than three real roots");
    cp.p_D = reals[2];
    BigFloat best(prec);
    bool found = false;
    for (const auto& x : real_hits)
      if (x > cp.p_D && (!found || x < best)) {
        best = x;
        found = true;
      }
    if (!found) throw VerificationError("no real tie root of P3(T=1) beyond p_D");
    cp.p_E = best;
  }
  return cp;
}

// ---- rho -> 0 asymptotics ----

struct AsymptoticConstants {
  BigFloat chi, kappa, alpha;
};

inline AsymptoticConstants asymptotic_constants(mpfr_prec_t prec = 256) {
  AsymptoticConstants a;
  BigFloat s = sqrt(BigFloat(31593, prec)) * 15;
  a.chi = (cbrt((s + 2531) / 2) - cbrt((s - 2531) / 2) - 8) / 15;
  a.kappa = cbrt(a.chi);
  // rational in chi; the same expression in kappa does not match the p_B data
  const BigFloat& x = a.chi;
  a.alpha = (70147451 * x * x + 22890531 * x - 3689542) / (1685743 * x * x + 778683 * x - 121256) / 50;
  return a;
}

/// Leading terms of the critical points for small rho.
struct AsymptoticPoints {
  BigFloat p_A, p_B, p_D, p_E;
  BigComplex p_C;
};

inline AsymptoticPoints asymptotic_points(const Rational& rho, mpfr_prec_t prec = 256) {
  AsymptoticPoints out;
  const BigFloat R(rho, prec);
  const BigFloat s5 = sqrt(BigFloat(5, prec));
  const BigFloat lead = cbrt((3 - s5) / (R * 2));
  auto c = asymptotic_constants(prec);
  out.p_A = -lead + (s5 * 12 + 35) / 90;
  out.p_B = -c.kappa / cbrt(R) + c.alpha;
  out.p_D = lead + (s5 * 4 + 19) / 30;
  const BigFloat mid = BigFloat(2, prec) / 15 * pow((s5 + 3) / 2, BigFloat(5, prec) / 6) * sqrt(s5 * 35 - 75);
  const BigFloat sixth = pow(R, BigFloat(1, prec) / 6);
  const BigFloat tail = (s5 * 4 + 11) / 30;
  out.p_E = lead + mid / sixth + tail;
  const BigFloat pi3 = BigFloat::pi(prec) / 3;
  BigComplex w2 = BigComplex::polar(BigFloat(1, prec), pi3 * 2);
  BigComplex w1 = BigComplex::polar(BigFloat(1, prec), pi3);
  out.p_C = w2 * lead + w1 * (mid / sixth) + BigComplex(tail);
  return out;
}

}  // namespace netrel
