#include <gtest/gtest.h>

#include <random>

#include "netrel/genfunc.hpp"
#include "netrel/oracle.hpp"
#include "netrel/tables.hpp"
#include "netrel/transfer.hpp"

using namespace netrel;

namespace {

MPoly P(const std::string& s) { return MPoly::parse(s); }
MPoly Z(const UniPoly<MPoly>& u) { return MPoly::from_univariate(u, "z"); }

const std::vector<std::pair<Rational, Rational>>& grid() {
  static const std::vector<std::pair<Rational, Rational>> g{
      {Rational(1, 2), Rational(1)}, {Rational(1, 3), Rational(3, 4)}, {Rational(9, 10), Rational(1, 5)},
      {Rational(2, 7), Rational(5, 6)}, {Rational(1), Rational(1, 2)}};
  return g;
}

}  // namespace

TEST(Denominator, FromCharacteristicPolynomial) {
  const MPoly p = sym("p"), rho = sym("rho");
  EXPECT_EQ(Z(denominator_from_charpoly(bc_uniform_matrix<MPoly>(p, rho))),
            P("1 - p*(2-p)*rho*z - p*rho*(1 - rho*(p+p^2-p^3))*z^2 + (1-p)*(1-p*rho)*p^2*rho^2*z^3"
              " - (1-p)*(1-rho)*p^4*rho^3*z^4"));
  EXPECT_EQ(Z(denominator_from_charpoly(allterm_uniform_matrix<MPoly>(p))), P("1 - p*(3-2*p)*z + p^2*(1-p)*z^2"));
}

TEST(NumeratorFit, LadderAndPerfect) {
  const MPoly p = sym("p"), rho = sym("rho");
  auto bc = generating_function<MPoly>(GFKind::bc, p, rho);
  EXPECT_EQ(Z(bc.N), P("rho*(1 - p*(1-p)*rho*z + p^3*(1-p)*rho^2*z^2)"));
  auto perf = generating_function<MPoly>(GFKind::bc_perfect, p, rho);
  EXPECT_EQ(Z(perf.N), P("1 - p*(1-p)*z + p^3*(1-p)*z^2"));
  EXPECT_EQ(Z(bc.N).substitute(std::map<std::string, Rational>{{"rho", Rational(1)}}), Z(perf.N));
}

TEST(NumeratorFit, RejectsWrongDenominator) {
  const Rational p(1, 3), rho(1, 2);
  auto seq = gf_sequence<Rational>(GFKind::bc, 20, p, rho);
  const QPoly wrong(std::vector<Rational>{Rational(1), Rational(-1, 2)});
  EXPECT_THROW(numerator_fit(seq, wrong), Error);
}

TEST(GeneratingFunction, SeriesEqualsTransferOnGrid) {
  for (const auto& [p, rho] : grid()) {
    for (GFKind k : {GFKind::bc, GFKind::fan}) {
      auto gf = generating_function<Rational>(k, p, rho);
      auto s = series_expand(gf.N, gf.D, 30);
      const Family f = k == GFKind::bc ? Family::bc : Family::fan;
      auto t = rel2_uniform_sequence<Rational>(f, 30, p, rho);
      for (int n = 0; n <= 30; ++n) EXPECT_EQ(s[static_cast<std::size_t>(n)], t[static_cast<std::size_t>(n)]) << n;
    }
    auto ga = generating_function<Rational>(GFKind::allterm, p, rho);
    auto sa = series_expand(ga.N, ga.D, 12);
    auto ra = relA_uniform_sequence<Rational>(11, p);
    for (int n = 2; n <= 11; ++n) EXPECT_EQ(sa[static_cast<std::size_t>(n + 1)], ra[static_cast<std::size_t>(n - 1)]);
  }
}

TEST(GeneratingFunction, LadderRecursionOrders) {
  const Rational p(2, 5), rho(3, 7);
  auto seq = rel2_uniform_sequence<Rational>(Family::bc, 30, p, rho);
  auto D = generating_function<Rational>(GFKind::bc, p, rho).D;
  ASSERT_EQ(D.degree(), 4);
  for (int n = 4; n <= 30; ++n) {
    Rational s(0);
    for (int k = 0; k <= 4; ++k) s = s + D.coeff(static_cast<std::size_t>(k)) * seq[static_cast<std::size_t>(n - k)];
    EXPECT_TRUE(s.is_zero()) << n;
  }
  auto D1 = generating_function<Rational>(GFKind::bc, p, Rational(1)).D;
  EXPECT_EQ(D1.degree(), 3);
}

TEST(GeneratingFunction, CommonFactorOnlyAtPEqualsTwo) {
  // with perfect nodes N and D share a factor in z only at p = 2
  const MPoly p = sym("p");
  auto gf = generating_function<MPoly>(GFKind::bc_perfect, p, MPoly(Rational(1)));
  std::vector<QPoly> n, d;
  for (const auto& c : gf.N.coeffs()) n.push_back(c.as_qpoly("p"));
  for (const auto& c : gf.D.coeffs()) d.push_back(c.as_qpoly("p"));
  for (int k = -6; k <= 12; ++k) {
    const Rational pk(k, 2);
    std::vector<Rational> nv, dv;
    for (const auto& c : n) nv.push_back(c.eval(pk));
    for (const auto& c : d) dv.push_back(c.eval(pk));
    const QPoly Nq(nv), Dq(dv);
    if (Nq.degree() < 1 || Dq.degree() < 1) continue;
    const bool common = gcd(Nq, Dq).degree() > 0;
    EXPECT_EQ(common, pk == Rational(2)) << pk;
  }
}

TEST(PartialFractions, FanClosedFormHasOneLinearTerm) {
  const Rational p(1, 3), rho(3, 5);
  auto gf = generating_function<Rational>(GFKind::fan, p, rho);
  const Rational q = p * (Rational(1) - p) * rho;
  auto cf = partial_fractions(RationalFunction<Rational>(gf.N, gf.D), {Rational(1), p * rho, q});
  EXPECT_EQ(cf.n_degree(), 1);
  int linear = 0;
  for (const auto& t : cf.terms)
    if (!t.c1.is_zero()) {
      ++linear;
      EXPECT_EQ(t.lambda, q);
    }
  EXPECT_EQ(linear, 1);
  auto seq = rel2_uniform_sequence<Rational>(Family::fan, 12, p, rho);
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(evaluate(cf, n), seq[static_cast<std::size_t>(n)]);
}

TEST(PartialFractions, GeometricSeries) {
  const QPoly one(std::vector<Rational>{Rational(1)});
  const QPoly d(std::vector<Rational>{Rational(1), Rational(-1)});
  auto cf = partial_fractions(RationalFunction<Rational>(one, d), {Rational(1)});
  ASSERT_EQ(cf.terms.size(), 1u);
  EXPECT_EQ(cf.terms[0].c0, Rational(1));
  EXPECT_EQ(cf.terms[0].lambda, Rational(1));
}

TEST(PartialFractions, NumericLadderReproducesSeeds) {
  const Rational p(1, 2), rho(3, 4);
  auto gf = generating_function<Rational>(GFKind::bc, p, rho);
  auto cf = partial_fractions_numeric(gf.N, gf.D);
  auto seq = rel2_uniform_sequence<Rational>(Family::bc, 20, p, rho);
  for (int n = 0; n <= 20; ++n) {
    BigComplex v = evaluate(cf, n, 128);
    EXPECT_LT(abs(v.re() - BigFloat(seq[static_cast<std::size_t>(n)], 128)).to_double(), 1e-25) << n;
    EXPECT_NEAR(v.im().to_double(), 0.0, 1e-25);
  }
}

TEST(ClosedFormFan, SpecialCases) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> d(1, 19);
  for (int t = 0; t < 10; ++t) {
    const Rational p(d(rng), 20), rho(d(rng), 20);
    auto seq = rel2_uniform_sequence<Rational>(Family::fan, 20, p, rho);
    for (int n = 0; n <= 20; ++n) EXPECT_EQ(closed_form_fan(n, p, rho), seq[static_cast<std::size_t>(n)]);
  }
  const Rational rho(2, 3);
  for (int n = 0; n <= 6; ++n) {
    const MPoly brute = k_terminal_oracle(to_generic(build_fan(n, UniformSpec{})), OracleMode::symbolic_prho).value;
    EXPECT_EQ(closed_form_fan(n, Rational(1), rho),
              brute.substitute(std::map<std::string, Rational>{{"p", Rational(1)}, {"rho", rho}}).constant_value())
        << n;
  }
  for (int n = 0; n <= 10; ++n)
    EXPECT_EQ(closed_form_fan(n, Rational(2, 5), Rational(1)), closed_form_fan_perfect(n, Rational(2, 5)));
}

TEST(ClosedFormLadderPerfect, CubicEigenvaluesAndTable2Row) {
  const Rational p(9, 10);
  auto l = bc_cubic_eigenvalues(p, 256);
  int negative = 0;
  for (const auto& x : l) negative += x.to_double() < 0;
  EXPECT_EQ(negative, 1);
  EXPECT_NEAR(closed_form_bc_perfect(24, p, 256).to_double(), 0.958806, 5e-7);
  const QPoly poly = tables::ladder_perfect_polynomial(10);
  EXPECT_NEAR(closed_form_bc_perfect(10, Rational(3, 7), 256).to_double(), poly.eval(Rational(3, 7)).to_double(),
              1e-14);
}

TEST(GraverSobel, Examples) {
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(graver_sobel_p1(n, Rational(1)), Rational(1));
  EXPECT_EQ(graver_sobel_p1(0, Rational(2, 9)), Rational(2, 9));
  EXPECT_EQ(graver_sobel_p1(5, Rational(0)), Rational(0));
  EXPECT_EQ(graver_sobel_p1(3, Rational(3, 4)), rel2_uniform<Rational>(Family::bc, 3, Rational(1), Rational(3, 4)));
}

TEST(SeriesInOneMinusP, Examples) {
  auto odd = series_in_onemp(25);
  EXPECT_EQ(odd[0].coeff, Rational(1));
  EXPECT_EQ(odd[0].p_exp, 12);
  EXPECT_EQ(odd[0].q_exp, 35);
  auto even = series_in_onemp(10);
  EXPECT_EQ(even[0].coeff, Rational(5));
  auto F = coefficient_spectrum(tables::ladder_perfect_polynomial(4), 7);
  for (const auto& t : series_in_onemp(5)) EXPECT_EQ(F[static_cast<std::size_t>(t.q_exp)], t.coeff);
}
