#include <gtest/gtest.h>

#include "netrel/tabulated.hpp"
#include "netrel/spectra.hpp"
#include "netrel/transfer.hpp"

using namespace netrel;

namespace {
MPoly P(const std::string& s) { return MPoly::parse(s); }
}  // namespace

TEST(Charpoly, FanFactorsExactly) {
  EXPECT_EQ(charpoly_mpoly(Family::fan), P("(x-1)*(x-p*rho)*(x-p*(1-p)*rho)^2"));
  auto ev = fan_eigenvalues(Rational(1, 2), Rational(1, 3));
  int total = 0;
  for (const auto& [v, m] : ev) {
    total += m;
    if (v == Rational(1, 12)) {
      EXPECT_EQ(m, 2);
    }
  }
  EXPECT_EQ(total, 4);
}

TEST(Charpoly, LadderAtPEqualsOne) {
  const Rational rho(3, 4);
  auto r = charpoly_roots(Family::bc, Rational(1), rho);
  ASSERT_TRUE(r.certified);
  const BigFloat r34(rho, 256);
  const BigFloat s = sqrt(r34 * 4 - r34 * r34 * 3);
  std::vector<BigFloat> got;
  for (const auto& c : r.roots)
    for (int k = 0; k < c.multiplicity; ++k) got.push_back(c.center.re());
  std::sort(got.begin(), got.end(), [](const BigFloat& a, const BigFloat& b) { return a < b; });
  ASSERT_EQ(got.size(), 4u);
  EXPECT_LT(abs(got[0] - (r34 - s) / 2).to_double(), 1e-30);
  EXPECT_LT(abs(got[1]).to_double(), 1e-30);
  EXPECT_LT(abs(got[2]).to_double(), 1e-30);
  EXPECT_LT(abs(got[3] - (r34 + s) / 2).to_double(), 1e-30);
}

TEST(Charpoly, RealRootTransitionAtRho09) {
  EXPECT_EQ(real_eigenvalue_count(Family::bc, Rational(1, 2), Rational(9, 10)), 4);
  EXPECT_EQ(real_eigenvalue_count(Family::bc, Rational(3, 5), Rational(9, 10)), 2);
}

TEST(Charpoly, DominantEigenvalueRealOnUnitInterval) {
  const auto ch = charpoly_in_p(Family::bc, Rational(2, 3));
  for (int k = 1; k < 10; ++k) {
    auto e = eigenvalues_at(ch, BigComplex(BigFloat(Rational(k, 10), 128)));
    EXPECT_TRUE(e.certified);
    EXPECT_LT(std::abs(e.values[0].im().to_double()), 1e-30);
  }
}

TEST(PCrit, Rho09AndCertificate) {
  PCrit pc = p_crit(Rational(9, 10), 128);
  EXPECT_NEAR(pc.value.to_double(), 0.5533938, 1e-7);
  EXPECT_FALSE(pc.boundary);
  EXPECT_LT(pc.residual_P.to_double(), std::ldexp(1.0, -64));
  EXPECT_LT(pc.residual_dP.to_double(), std::ldexp(1.0, -64));
  EXPECT_LT(pc.lo, pc.hi);
  EXPECT_THROW(p_crit(Rational(0)), InputError);
  EXPECT_THROW(p_crit(Rational(3, 2)), InputError);
}

TEST(PCrit, NoCrossingInsideUnitIntervalAtRhoOne) {
  const QPoly d = bc_degeneracy_polynomial(Rational(1));
  EXPECT_EQ(count_real_roots(d, Rational(1, 1000), Rational(999, 1000)), 0);
  EXPECT_TRUE(p_crit(Rational(1)).boundary);
}

TEST(PCrit, MonotoneInRho) {
  double prev = 0;
  for (int k = 1; k <= 9; ++k) {
    const double v = p_crit(Rational(k, 10)).value.to_double();
    EXPECT_GT(v, 0);
    EXPECT_LT(v, 1);
    if (k > 1) {
      EXPECT_GT(v, prev);
    }
    prev = v;
  }
}

TEST(ReliabilityPolynomial, MatchesTransfer) {
  EXPECT_EQ(MPoly::from_qpoly(reliability_polynomial(Family::bc, 2, Rational(1, 3)), "p"),
            P("1/9*p*(1 + 1/3*p*(1-p))"));
  const Rational rho(1, 3);
  for (Family f : {Family::bc, Family::fan}) {
    auto seq = rel2_uniform_sequence<QPoly>(f, 30, QPoly::x(), QPoly(std::vector<Rational>{rho}));
    for (int n = 0; n <= 30; ++n) EXPECT_EQ(reliability_polynomial(f, n, rho), seq[static_cast<std::size_t>(n)]) << n;
  }
  EXPECT_EQ(reliability_polynomial(Family::bc, 150, Rational(1)).degree(), 299);
}

TEST(ZeroCloud, CertifiedSymmetricAndComplete) {
  for (Family f : {Family::bc, Family::fan})
    for (const Rational& rho : {Rational(1), Rational(1, 3)}) {
      RootCloud c = zero_cloud(f, 30, rho);
      EXPECT_TRUE(c.certified);
      EXPECT_TRUE(conjugate_symmetric(c));
      int total = 0;
      for (const auto& r : c.roots) total += r.multiplicity;
      EXPECT_EQ(total, c.degree);
      for (std::size_t i = 1; i < c.roots.size(); ++i)
        EXPECT_FALSE(c.roots[i].center.re() < c.roots[i - 1].center.re());
    }
}

TEST(ZeroCloud, LadderRealZerosNearGoldenRatio) {
  RootCloud c = zero_cloud(Family::bc, 60, Rational(1));
  double best = 1e9;
  for (const auto& r : c.roots) best = std::min(best, (r.center - BigComplex(BigFloat::from_double(1.6180339887, 128))).abs().to_double());
  EXPECT_LT(best, 0.05);
}

TEST(ZeroCloud, JsonUsesDecimalStrings) {
  auto j = to_json(zero_cloud(Family::fan, 4, Rational(1, 2)), 30);
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["rho"], "1/2");
  ASSERT_FALSE(j["roots"].empty());
  EXPECT_TRUE(j["roots"][0]["re"].is_string());
  EXPECT_TRUE(j["roots"][0]["radius"].is_string());
}

TEST(ZeroCloud, PrecisionCapIsHonoured) {
  RootSolveOptions o;
  o.start_bits = 64;
  o.max_bits = 64;
  RootCloud c = zero_cloud(Family::bc, 150, Rational(1), o);
  EXPECT_LE(c.precision_bits, 64);
}

TEST(CriticalPoints, RhoOne) {
  auto c = critical_points(Rational(1));
  EXPECT_NEAR(c.p_A.to_double(), -0.2879878, 1e-7);
  EXPECT_NEAR(c.p_B.to_double(), -0.1849482, 1e-7);
  EXPECT_NEAR(c.T_A.to_double(), 0.138176, 1e-6);
  EXPECT_NEAR(c.T_B.to_double(), -0.9511957, 1e-7);
  EXPECT_NEAR(c.p_C.re().to_double(), 1.011578, 1e-6);
  EXPECT_NEAR(c.p_C.im().to_double(), 0.607394, 1e-6);
  EXPECT_NEAR(c.p_D.to_double(), (1 + std::sqrt(5.0)) / 2, 1e-15);
  EXPECT_FALSE(c.p_E.has_value());
}

TEST(CriticalPoints, RhoHalfDegrees) {
  auto c = critical_points(Rational(1, 2));
  EXPECT_NEAR(c.p_A.to_double(), -0.4359355, 1e-6);
  EXPECT_NEAR(c.p_B.to_double(), -0.2885759, 1e-6);
  EXPECT_NEAR(c.p_C.re().to_double(), 0.748541, 1e-6);
  EXPECT_NEAR(c.p_C.im().to_double(), 1.03759, 1e-5);
  EXPECT_NEAR(c.p_D.to_double(), 2.0, 1e-15);
  EXPECT_EQ(c.reduced_degree_P1, 22);
  EXPECT_EQ(c.reduced_degree_P2, 30);
  EXPECT_GE(c.degree_P1, c.reduced_degree_P1);
}

TEST(CriticalPoints, PDFormulaAboveHalf) {
  for (const Rational& rho : {Rational(3, 4), Rational(2, 3), Rational(9, 10)}) {
    auto c = critical_points(rho);
    EXPECT_NEAR(c.p_D.to_double(), (1 + std::sqrt(1 + 4 / rho.to_double())) / 2, 1e-12);
  }
}

TEST(CriticalPoints, PEOnlyBelowHalf) {
  auto lo = critical_points(Rational(1, 100));
  ASSERT_TRUE(lo.p_E.has_value());
  EXPECT_NEAR(lo.p_D.to_double(), 4.3513041106, 1e-8);
  EXPECT_NEAR(lo.p_E->to_double(), 5.2324051586, 1e-8);
  EXPECT_FALSE(critical_points(Rational(3, 5)).p_E.has_value());
}

TEST(Asymptotics, Constants) {
  auto a = asymptotic_constants();
  EXPECT_NEAR(a.chi.to_double(), 0.11166155366, 1e-11);
  EXPECT_NEAR(a.kappa.to_double(), 0.48154242495, 1e-11);
  EXPECT_NEAR(a.alpha.to_double(), 0.38969988720, 1e-11);
  const double x = a.chi.to_double();
  EXPECT_NEAR(5 * x * x * x + 8 * x * x + 8 * x - 1, 0, 1e-14);
}

TEST(Asymptotics, PBTwoTermExpansionAtSmallRho) {
  const Rational rho(1, 1000000);
  auto c = critical_points(rho, 256);
  auto a = asymptotic_points(rho, 256);
  EXPECT_LT(std::abs((c.p_B - a.p_B).to_double()), 1e-2);
  EXPECT_LT(std::abs((c.p_A - a.p_A).to_double()), 3 * std::cbrt(1e-6));
}

TEST(TabulatedPolynomials, Checksums) {
  const std::map<std::string, Rational> p0{{"p", Rational(0)}};
  EXPECT_EQ(tabulated::p1().substitute(p0), sym("rho"));
  EXPECT_EQ(tabulated::p2().substitute(p0), MPoly(Rational(9)));
  EXPECT_EQ(tabulated::p3().substitute(p0), P("2 + 2*T"));
  EXPECT_EQ(tabulated::p3().substitute(std::map<std::string, Rational>{{"T", Rational(-1)}}), tabulated::p3_tm1());
  EXPECT_EQ(tabulated::p3().substitute(std::map<std::string, Rational>{{"rho", Rational(1)}}),
            P("(1-p)^5") * tabulated::p3_rho1());
}
