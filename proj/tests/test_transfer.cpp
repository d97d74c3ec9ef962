#include <gtest/gtest.h>

#include <random>

#include "netrel/genfunc.hpp"
#include "netrel/oracle.hpp"
#include "netrel/transfer.hpp"
#include "netrel/verify.hpp"

using namespace netrel;

namespace {

MPoly P(const std::string& s) { return MPoly::parse(s); }

ExplicitSpec all_equal(Family f, int n, const Rational& v) {
  ExplicitSpec s;
  for (const auto& k : detail::element_keys(f, n)) s.values[k] = MPoly(v);
  return s;
}

}  // namespace

TEST(Rel2Ladder, SmallSymbolic) {
  EXPECT_EQ(rel2_bc<MPoly>(build_ladder(0, DistinctSymbols{})), sym("S0"));
  EXPECT_EQ(rel2_bc<MPoly>(build_ladder(1, DistinctSymbols{})), P("S1*b1*S0"));
  EXPECT_EQ(rel2_bc<MPoly>(build_ladder(2, DistinctSymbols{})), P("S2*(a2 + b1*S1*b2 - a2*b1*S1*b2)*S0"));
}

TEST(Rel2Ladder, ProductOrderPinnedByAsymmetricCase) {
  // n = 3 reversed labelling gives a different polynomial; the oracle fixes the order.
  const auto inst = build_ladder(3, DistinctSymbols{});
  const MPoly x = rel2_bc<MPoly>(inst);
  const MPoly y = k_terminal_oracle(to_generic(inst), OracleMode::symbolic_full).value;
  EXPECT_EQ(x, y);
  auto ch = bc_chain<MPoly>(inst);
  std::reverse(ch.matrices.begin(), ch.matrices.end());
  EXPECT_NE(ch.contract(), x);
}

TEST(Rel2Ladder, HalfEverywhereN5MatchesOracle) {
  const auto s = all_equal(Family::bc, 5, Rational(1, 2));
  const auto inst = build_ladder(5, s);
  EXPECT_EQ(rel2_bc<Rational>(inst), k_terminal_oracle(to_generic(inst)).numeric());
}

TEST(Rel2LadderPerfect, EqualsImperfectWithUnitNodes) {
  for (int n = 0; n <= 8; ++n) {
    ExplicitSpec s;
    const auto sym_inst = build_ladder(n, DistinctSymbols{});
    for (const auto& [i, v] : sym_inst.S) s.values["S" + std::to_string(i)] = MPoly(Rational(1));
    for (const auto& [i, v] : sym_inst.a) s.values["a" + std::to_string(i)] = v;
    for (const auto& [i, v] : sym_inst.b) s.values["b" + std::to_string(i)] = v;
    const auto inst = build_ladder(n, s);
    EXPECT_EQ(rel2_bc_perfect<MPoly>(inst), rel2_bc<MPoly>(inst)) << "n=" << n;
  }
}

TEST(Rel2Ladder, TenNodeMaxFCoefficient) {
  UniformSpec u;
  u.rho = MPoly(Rational(1));
  const QPoly poly = rel2_bc_perfect<MPoly>(build_ladder(9, u)).as_qpoly("p");
  auto F = coefficient_spectrum(poly, 17);
  Rational mx(0);
  for (const auto& f : F) {
    EXPECT_GE(f, Rational(0));
    mx = std::max(mx, f);
  }
  EXPECT_EQ(mx, Rational(8078));
}

TEST(Rel2Fan, SmallSymbolic) {
  EXPECT_EQ(rel2_fan<MPoly>(build_fan(0, DistinctSymbols{})), sym("S0"));
  EXPECT_EQ(rel2_fan<MPoly>(build_fan(1, DistinctSymbols{})), P("S1*(a1 + b0*b1*T - a1*b0*b1*T)*S0"));
}

TEST(Rel2Fan, UniformN3MatchesOracle) {
  const auto inst = build_fan(3, UniformSpec{});
  EXPECT_EQ(rel2_fan<MPoly>(inst), k_terminal_oracle(to_generic(inst), OracleMode::symbolic_prho).value);
}

TEST(Rel2Uniform, Examples) {
  const MPoly p = sym("p"), rho = sym("rho");
  EXPECT_EQ(rel2_uniform<MPoly>(Family::bc, 2, p, rho), P("rho^2*p*(1 + p*rho - p^2*rho)"));
  for (int n = 0; n <= 10; ++n)
    EXPECT_EQ(rel2_uniform<Rational>(Family::fan, n, Rational(1), Rational(1)), Rational(1));
  EXPECT_EQ(rel2_uniform<Rational>(Family::bc, 4, Rational(1), Rational(3, 4)), graver_sobel_p1(4, Rational(3, 4)));
}

TEST(Rel2Uniform, MatchesPerElementPath) {
  const MPoly p = sym("p"), rho = sym("rho");
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(rel2_uniform<MPoly>(Family::bc, n, p, rho), rel2_bc<MPoly>(build_ladder(n, UniformSpec{})));
    EXPECT_EQ(rel2_uniform<MPoly>(Family::fan, n, p, rho), rel2_fan<MPoly>(build_fan(n, UniformSpec{})));
  }
}

TEST(RelA, TriangleAndClosedForm) {
  auto seq = relA_uniform_sequence<QPoly>(6, QPoly::x());
  EXPECT_EQ(seq[1], QPoly(std::vector<Rational>{Rational(0), Rational(0), Rational(3), Rational(-2)}));
  EXPECT_EQ(seq[2].degree(), 5);
  const Rational half(1, 2);
  const BigFloat diff = abs(BigFloat(seq[4].eval(half), 512) - allterm_closed_form_numeric(6, half, 512));
  EXPECT_LT(diff, ldexp(BigFloat(1, 64), -200));
  // ladder n and fan n - 1 share the all-terminal value (same graph at n = 2)
  for (int n = 2; n <= 6; ++n)
    EXPECT_EQ(relA<MPoly>(build_ladder(n, UniformSpec{})), relA<MPoly>(build_fan(n - 1, UniformSpec{}))) << n;
}

TEST(RelA, LadderAndFanAgreeWithOracle) {
  for (int n = 1; n <= 4; ++n) {
    const auto l = build_ladder(n, UniformSpec{});
    EXPECT_EQ(relA<MPoly>(l), k_terminal_oracle(with_all_terminals(to_generic(l)), OracleMode::symbolic_prho).value);
  }
}

TEST(TransferProperties, Affinity) {
  VerifyOptions o;
  o.max_n = 5;
  o.trials = 10;
  for (Family f : {Family::bc, Family::fan})
    for (const auto& r : suite_affinity(f, o)) EXPECT_TRUE(r.ok) << r.detail;
}

TEST(TransferProperties, MonotoneAndBounded) {
  std::mt19937_64 rng(3);
  for (Family f : {Family::bc, Family::fan})
    for (int n = 1; n <= 5; ++n)
      for (int t = 0; t < 10; ++t) {
        ExplicitSpec s = detail::random_spec(f, n, rng);
        VerifyOptions o;
        const Rational base = detail::transfer_value(f, n, s, o);
        EXPECT_GE(base, Rational(0));
        EXPECT_LE(base, Rational(1));
        for (auto& [k, v] : s.values) {
          ExplicitSpec up = s;
          up.values[k] = MPoly(Rational(1));
          EXPECT_GE(detail::transfer_value(f, n, up, o), base) << k;
        }
      }
}

TEST(TransferProperties, FanDenominator) {
  const MPoly p = sym("p"), rho = sym("rho");
  auto M = fan_uniform_matrix<MPoly>(p, rho);
  auto D = denominator_from_charpoly(M);
  EXPECT_EQ(MPoly::from_univariate(D, "z"), P("(1-z)*(1-p*rho*z)*(1-p*(1-p)*rho*z)^2"));
}
