#pragma once

#include <array>
#include <string>
#include <vector>

#include "netrel/bigfloat.hpp"
#include "netrel/errors.hpp"
#include "netrel/matrix.hpp"
#include "netrel/mpoly.hpp"
#include "netrel/ratfunc.hpp"
#include "netrel/roots.hpp"
#include "netrel/transfer.hpp"

namespace netrel {

/// D(z) = z^d P(1/z) for the d x d matrix M, so D(0) = 1.
template <class R>
UniPoly<R> denominator_from_charpoly(const Matrix<R>& M) {
  return characteristic_polynomial(M).reversed(static_cast<int>(M.rows()));
}

/**
 * N(z) = (sum seq_n z^n) D(z) truncated at degree deg_n. The product
 * coefficients deg_n+1 .. k-1 are fully determined by the k known terms and
 * must vanish.
 */
template <class R>
UniPoly<R> numerator_fit(const std::vector<R>& seq, const UniPoly<R>& D, int deg_n = -1) {
  if (deg_n < 0) deg_n = D.degree();
  const int k = static_cast<int>(seq.size());
  if (k <= D.degree() + deg_n) throw InputError("numerator_fit needs more than deg D + deg N sequence terms");
  std::vector<R> prod(static_cast<std::size_t>(k), R(0));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i <= D.degree() && i <= j; ++i)
      prod[static_cast<std::size_t>(j)] =
          prod[static_cast<std::size_t>(j)] + D.coeff(static_cast<std::size_t>(i)) * seq[static_cast<std::size_t>(j - i)];
  for (int j = deg_n + 1; j < k; ++j)
    if (!(prod[static_cast<std::size_t>(j)] == R(0))) throw Error("sequence does not satisfy the recursion");
  prod.resize(static_cast<std::size_t>(deg_n) + 1);
  return UniPoly<R>(std::move(prod));
}

/// Coefficients r_1..r_d of a_n = sum_j r_j a_{n-j} (valid once n >= deg N + 1).
template <class R>
std::vector<R> recurrence_from_denominator(const UniPoly<R>& D) {
  std::vector<R> r;
  for (int j = 1; j <= D.degree(); ++j) r.push_back(R(0) - D.coeff(static_cast<std::size_t>(j)));
  return r;
}

enum class GFKind {
  bc,           // seeds rho, p rho^2 included: sum_{n>=0} Rel2(S0->Sn) z^n
  bc_raw,       // the same series minus rho + p rho^2 z
  bc_perfect,   // perfect nodes, 3x3 chain
  fan,          // sum_{n>=0} Rel2(S0->Sn) z^n with Rel2(S0->S0) = rho
  fan_perfect,  // perfect nodes
  allterm       // sum_{n>=1} R_n z^{n+1}
};

inline std::string to_string(GFKind k) {
  switch (k) {
    case GFKind::bc: return "bc";
    case GFKind::bc_raw: return "bc_raw";
    case GFKind::bc_perfect: return "bc_perfect";
    case GFKind::fan: return "fan";
    case GFKind::fan_perfect: return "fan_perfect";
    case GFKind::allterm: return "allterm";
  }
  return "?";
}

template <class R>
struct GeneratingFunction {
  UniPoly<R> N, D;
};

/// Series coefficients the generating function of `kind` encodes, z^0..z^order.
template <class R>
std::vector<R> gf_sequence(GFKind kind, int order, const R& p, const R& rho) {
  switch (kind) {
    case GFKind::bc:
    case GFKind::bc_raw: {
      auto s = rel2_uniform_sequence<R>(Family::bc, order, p, rho);
      if (kind == GFKind::bc_raw) {
        s[0] = R(0);
        if (order >= 1) s[1] = R(0);
      }
      return s;
    }
    case GFKind::bc_perfect: return rel2_perfect_uniform_sequence<R>(Family::bc, order, p);
    case GFKind::fan: return rel2_uniform_sequence<R>(Family::fan, order, p, rho);
    case GFKind::fan_perfect: return rel2_perfect_uniform_sequence<R>(Family::fan, order, p);
    case GFKind::allterm: {
      std::vector<R> s(static_cast<std::size_t>(order) + 1, R(0));
      if (order >= 2) {
        auto r = relA_uniform_sequence<R>(order - 1, p);
        for (int n = 1; n <= order - 1; ++n) s[static_cast<std::size_t>(n) + 1] = r[static_cast<std::size_t>(n) - 1];
      }
      return s;
    }
  }
  return {};
}

template <class R>
Matrix<R> gf_matrix(GFKind kind, const R& p, const R& rho) {
  switch (kind) {
    case GFKind::bc:
    case GFKind::bc_raw: return bc_uniform_matrix<R>(p, rho);
    case GFKind::bc_perfect: return bc_perfect_uniform_matrix<R>(p);
    case GFKind::fan: return fan_uniform_matrix<R>(p, rho);
    case GFKind::fan_perfect: return fan3_matrix<R>(p, p).m;
    case GFKind::allterm: return allterm_uniform_matrix<R>(p);
  }
  return Matrix<R>::identity(1);
}

/**
 * G(z) = N(z)/D(z) for a uniform family: D from the characteristic polynomial,
 * N fitted from transfer-computed terms with a verified tail. Works over MPoly
 * (symbolic p, rho) and Rational.
 */
template <class R>
GeneratingFunction<R> generating_function(GFKind kind, const R& p, const R& rho) {
  GeneratingFunction<R> g;
  const Matrix<R> M = gf_matrix<R>(kind, p, rho);
  g.D = denominator_from_charpoly(M);
  // deg D drops at special parameter values; the matrix size still bounds deg N
  const int size = static_cast<int>(M.rows());
  const int deg_n = kind == GFKind::bc_raw ? size + 1 : size;
  const int order = g.D.degree() + deg_n + 4;
  g.N = numerator_fit(gf_sequence<R>(kind, order, p, rho), g.D, deg_n);
  return g;
}

// ---- closed forms ----

/// (c0 + c1 n) lambda^n.
template <class K>
struct ClosedFormTerm {
  K c0, c1, lambda;
};

/**
 * \brief sum_i (c0_i + c1_i n) lambda_i^n plus a finite correction for small n
 * (the polynomial part of N/D).
 */
template <class K>
struct ClosedForm {
  std::vector<ClosedFormTerm<K>> terms;
  std::vector<K> correction;

  int n_degree() const {
    int d = 0;
    for (const auto& t : terms)
      if (!is_zero(t.c1)) d = 1;
    return d;
  }

  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static bool is_zero(const BigComplex& x) { return x.is_zero(); }
};

inline Rational evaluate(const ClosedForm<Rational>& f, long n) {
  Rational s(0);
  for (const auto& t : f.terms) s += (t.c0 + t.c1 * Rational(n)) * t.lambda.pow(n);
  if (n >= 0 && static_cast<std::size_t>(n) < f.correction.size()) s += f.correction[static_cast<std::size_t>(n)];
  return s;
}

inline BigComplex evaluate(const ClosedForm<BigComplex>& f, long n, mpfr_prec_t prec) {
  BigComplex s(prec);
  for (const auto& t : f.terms) s = s + (t.c0 + t.c1 * BigComplex(Rational(n), prec)) * t.lambda.pow(n);
  if (n >= 0 && static_cast<std::size_t>(n) < f.correction.size()) s = s + f.correction[static_cast<std::size_t>(n)];
  return s;
}

namespace detail {

// Term for eigenvalue lambda of multiplicity m (1 or 2) of D; w = 1/lambda.
// m = 1: alpha = -lambda N(w) / D'(w).
// m = 2: D = (1 - lambda z)^2 E with E(w) = D''(w)/(2 lambda^2), E'(w) = D'''(w)/(6 lambda^2);
//        A = N/E at w, B = -(N/E)'(w)/lambda, term (A + B + A n) lambda^n.
template <class K, class Eval>
ClosedFormTerm<K> pf_term(const QPoly& N, const QPoly& D, const K& lambda, int m, Eval ev, const K& zero,
                          const K& one) {
  K w = one / lambda;
  if (m == 1) return {zero - lambda * ev(N, w) / ev(D.derivative(), w), zero, lambda};
  if (m != 2) throw Error("eigenvalue multiplicity above 2 is not supported");
  K l2 = lambda * lambda;
  K E = ev(D.derivative().derivative(), w) / (l2 + l2);
  K Ep = ev(D.derivative().derivative().derivative(), w) / (l2 + l2 + l2 + l2 + l2 + l2);
  K Nw = ev(N, w), Npw = ev(N.derivative(), w);
  K A = Nw / E;
  K B = zero - (Npw * E - Nw * Ep) / (E * E) / lambda;
  return {A + B, A, lambda};
}

}  // namespace detail

/**
 * Exact partial fractions over Q. `roots` lists candidate eigenvalues; each
 * distinct nonzero candidate is divided out of D as often as it occurs, and D
 * must be fully factored by them.
 */
inline ClosedForm<Rational> partial_fractions(const RationalFunction<Rational>& f, const std::vector<Rational>& roots) {
  ClosedForm<Rational> cf;
  QPoly N = f.numerator();
  const QPoly& D = f.denominator();
  if (N.degree() >= D.degree()) {
    auto [q, r] = divmod(N, D);
    cf.correction = q.coeffs();
    N = r;
  }
  QPoly rest = D;
  std::vector<Rational> seen;
  for (const auto& lam : roots) {
    if (lam.is_zero() || std::find(seen.begin(), seen.end(), lam) != seen.end()) continue;
    seen.push_back(lam);
    const QPoly lin(std::vector<Rational>{Rational(1), -lam});
    int m = 0;
    while (rest.degree() > 0 && rest.eval(Rational(1) / lam).is_zero()) {
      rest = divmod(rest, lin).first;
      ++m;
    }
    if (m == 0) continue;
    auto ev = [](const QPoly& P, const Rational& x) { return P.eval(x); };
    cf.terms.push_back(detail::pf_term<Rational>(N, D, lam, m, ev, Rational(0), Rational(1)));
  }
  if (rest.degree() > 0) throw Error("denominator not fully factored by the given roots");
  return cf;
}

/**
 * Partial fractions with certified numerical eigenvalues (roots of z^d D(1/z)).
 * Multiplicities come from the exact square-free decomposition.
 */
inline ClosedForm<BigComplex> partial_fractions_numeric(const QPoly& N0, const QPoly& D, RootSolveOptions opts = {}) {
  ClosedForm<BigComplex> cf;
  QPoly N = N0;
  auto roots = solve_roots(D.reversed(), opts);
  if (!roots.certified) throw PrecisionExhausted("unseparated eigenvalue cluster: increase precision");
  const mpfr_prec_t prec = roots.precision_bits;
  if (N.degree() >= D.degree()) {
    auto [q, r] = divmod(N, D);
    for (const auto& c : q.coeffs()) cf.correction.emplace_back(c, prec);
    N = r;
  }
  auto ev = [](const QPoly& P, const BigComplex& x) { return bigfloat_eval(P, x).value; };
  BigComplex zero(prec), one(Rational(1), prec);
  for (const auto& r : roots.roots) {
    if (r.center.is_zero() && r.radius.is_zero()) continue;
    cf.terms.push_back(detail::pf_term<BigComplex>(N, D, r.center, r.multiplicity, ev, zero, one));
  }
  return cf;
}

// ---- explicit closed forms ----

/// Two-terminal fan reliability from its three-part closed form, exact.
inline Rational closed_form_fan(long n, const Rational& p, const Rational& rho) {
  const Rational one(1);
  const Rational lam = p * (one - p) * rho;
  const Rational den = one - lam;
  const Rational x = one - p * rho * (Rational(2) - p);
  Rational inner = Rational(n) * p * x / den + (x + lam * lam) / (den * den);
  return lam.pow(n) * rho * rho * inner + p.pow(n) * rho.pow(n + 1) * (one - rho) +
         p * p * rho.pow(3) / (den * den);
}

/// Perfect-node fan closed form.
inline Rational closed_form_fan_perfect(long n, const Rational& p) {
  const Rational one(1);
  const Rational den = one - p * (one - p);
  return p.pow(n) * (one - p).pow(n + 2) * (Rational(n) * p / den + (one + p * p) / (den * den)) +
         p * p / (den * den);
}

/// a + b sqrt(d) with rational a, b, d (formal: d need not be a non-square).
struct QuadraticNumber {
  Rational a, b, d;
  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    return {x.a + y.a, x.b + y.b, x.d};
  }
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
    return {x.a - y.a, x.b - y.b, x.d};
  }
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    return {x.a * y.a + x.b * y.b * x.d, x.a * y.b + x.b * y.a, x.d};
  }
  QuadraticNumber pow(long e) const {
    QuadraticNumber r{Rational(1), Rational(0), d}, base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }
  QuadraticNumber conj() const { return {a, -b, d}; }
};

/**
 * Perfect-edge ladder: (rho / s)(l+^{n+1} - l-^{n+1}) with s = sqrt(4 rho - 3 rho^2),
 * l+- = (rho +- s)/2. Writing l+^{n+1} = a + b s gives exactly 2 rho b.
 */
inline Rational graver_sobel_p1(long n, const Rational& rho) {
  const Rational d = Rational(4) * rho - Rational(3) * rho * rho;
  QuadraticNumber lp{rho / Rational(2), Rational(1, 2), d};
  return Rational(2) * rho * lp.pow(n + 1).b;
}

/// Uniform all-terminal closed form (zeta+^{m-1} - zeta-^{m-1}) / sqrt(5 - 8p + 4p^2), exact.
inline Rational allterm_closed_form(long m, const Rational& p) {
  if (m < 2) throw InputError("all-terminal closed form needs m >= 2");
  const Rational d = Rational(5) - Rational(8) * p + Rational(4) * p * p;
  QuadraticNumber zp{p * (Rational(3) - Rational(2) * p) / Rational(2), p / Rational(2), d};
  return Rational(2) * zp.pow(m - 1).b;
}

/// The same expression evaluated literally in binary floating point.
inline BigFloat allterm_closed_form_numeric(long m, const Rational& p, mpfr_prec_t prec) {
  BigFloat P(p, prec);
  BigFloat s = sqrt(BigFloat(5, prec) - 8 * P + 4 * P * P);
  BigFloat base = P * (3 - 2 * P);
  BigFloat zp = (base + P * s) / 2, zm = (base - P * s) / 2;
  return (pow(zp, m - 1) - pow(zm, m - 1)) / s;
}

/// Eigenvalues of the perfect-node ladder matrix from the cube-root formula, xi = 1, e^{2i pi/3}, e^{-2i pi/3}.
inline std::array<BigFloat, 3> bc_cubic_eigenvalues(const Rational& p, mpfr_prec_t prec) {
  const Rational one(1);
  const Rational A = -p * p *
                     (Rational(9) - Rational(43) * p + Rational(60) * p.pow(2) - Rational(39) * p.pow(3) +
                      Rational(11) * p.pow(4));
  const Rational B = (one - p).pow(2) * p.pow(3) *
                     (Rational(4) + Rational(9) * p + Rational(16) * p.pow(2) - Rational(88) * p.pow(3) +
                      Rational(98) * p.pow(4) - Rational(32) * p.pow(5) - Rational(8) * p.pow(6) +
                      Rational(5) * p.pow(7));
  BigFloat re = BigFloat(A, prec) / 2;
  BigFloat im = sqrt(BigFloat(27, prec)) * sqrt(BigFloat(B, prec)) / 2;
  BigComplex w = BigComplex(re, im).cbrt();
  BigFloat shift = BigFloat(p * (Rational(2) - p), prec) / 3;
  std::array<BigFloat, 3> out;
  const BigFloat third = BigFloat::pi(prec) * 2 / 3;
  for (int k = 0; k < 3; ++k) {
    BigComplex xi = BigComplex::polar(BigFloat(1, prec), third * static_cast<long>(k == 2 ? -1 : k));
    out[static_cast<std::size_t>(k)] = shift + (xi * w).re() * 2 / 3;
  }
  return out;
}

/// Perfect-node ladder: sum_i alpha_i lambda_i^n with the rational-in-lambda coefficient.
inline BigFloat closed_form_bc_perfect(long n, const Rational& p, mpfr_prec_t prec) {
  const BigFloat P(p, prec);
  const BigFloat q = 1 - P;
  BigFloat s(prec);
  for (const auto& lam : bc_cubic_eigenvalues(p, prec)) {
    BigFloat num = P * q * q - q * lam - lam * lam;
    BigFloat den = 3 * P * q * q - 2 * q * q * (P + 1) * lam - (2 - P) * lam * lam;
    s = s + num / den * pow(lam, n);
  }
  return s;
}

/// coeff * p^p_exp * (1-p)^q_exp.
struct SeriesTerm {
  Rational coeff;
  int p_exp = 0, q_exp = 0;
};

/**
 * Three lowest-order terms of the perfect-node ladder reliability in powers of
 * (1-p), for m = n + 1 nodes. The odd-m second coefficient is (m^2 + 12m - 21)/8;
 * `minus_12m` selects the variant with -12m instead.
 */
inline std::vector<SeriesTerm> series_in_onemp(int m, bool minus_12m = false) {
  if (m < 3) throw InputError("series expansion needs m >= 3");
  const Rational M(m);
  std::vector<SeriesTerm> t;
  if (m % 2) {
    Rational c2 = (M * M + Rational(minus_12m ? -12 : 12) * M - Rational(21)) / Rational(8);
    Rational c3 = (M.pow(4) + Rational(72) * M.pow(3) + Rational(350) * M * M - Rational(2376) * M + Rational(2337)) /
                  Rational(384);
    t.push_back({Rational(1), (m - 1) / 2, (3 * m - 5) / 2});
    t.push_back({c2, (m + 1) / 2, (3 * m - 7) / 2});
    t.push_back({c3, (m + 3) / 2, (3 * m - 9) / 2});
  } else {
    Rational c2 = (M - Rational(2)) * (M * M + Rational(38) * M + Rational(24)) / Rational(48);
    Rational c3 = (M - Rational(2)) *
                  (M.pow(4) + Rational(122) * M.pow(3) + Rational(2304) * M * M - Rational(5472) * M - Rational(13440)) /
                  Rational(3840);
    t.push_back({M / Rational(2), m / 2, (3 * m - 6) / 2});
    t.push_back({c2, (m + 2) / 2, (3 * m - 8) / 2});
    t.push_back({c3, (m + 4) / 2, (3 * m - 10) / 2});
  }
  return t;
}

}  // namespace netrel
