#include <gtest/gtest.h>

#include "netrel/delta_wye.hpp"
#include "netrel/oracle.hpp"
#include "netrel/verify.hpp"

using namespace netrel;

TEST(TriangleToStar, PerfectTriangle) {
  TriangleConfig<Rational> t{Rational(1), Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)};
  auto s = triangle_to_star(t);
  EXPECT_EQ(s.p_A, Rational(1));
  EXPECT_EQ(s.p_B, Rational(1));
  EXPECT_EQ(s.p_C, Rational(1));
  EXPECT_EQ(s.O, Rational(1));
  EXPECT_FALSE(s.formal);
}

TEST(TriangleToStar, ProductsReproduceRightHandSides) {
  TriangleConfig<Rational> t{Rational(9, 10), Rational(9, 10), Rational(9, 10),
                             Rational(1, 2),  Rational(3, 5),  Rational(7, 10)};
  auto s = triangle_to_star(t);
  EXPECT_EQ(star_products(s), triangle_products(t));
}

TEST(TriangleToStar, GridSample) {
  int n = 0;
  for (int a = 1; a <= 9; a += 4)
    for (int b = 1; b <= 9; b += 4)
      for (int c = 1; c <= 9; c += 4)
        for (int A = 1; A <= 9; A += 8)
          for (int C = 1; C <= 9; C += 8) {
            TriangleConfig<Rational> t{Rational(A, 10), Rational(5, 10), Rational(C, 10),
                                       Rational(a, 10), Rational(b, 10), Rational(c, 10)};
            EXPECT_EQ(star_products(triangle_to_star(t)), triangle_products(t));
            ++n;
          }
  EXPECT_EQ(n, 108);
}

TEST(TriangleToStar, SymbolicUniformProducts) {
  const MPoly p = sym("p"), rho = sym("rho");
  TriangleConfig<MPoly> t{rho, rho, rho, p, p, p};
  auto r = triangle_products(t);
  EXPECT_EQ(r.AB, MPoly::parse("p + p^2*rho - p^3*rho"));
  EXPECT_EQ(r.ABC, MPoly::parse("3*p^2 - 2*p^3"));
}

TEST(TriangleToStar, Degenerate) {
  TriangleConfig<Rational> t{Rational(1), Rational(1), Rational(1), Rational(0), Rational(0), Rational(0)};
  EXPECT_THROW(triangle_to_star(t), InputError);
}

TEST(VerifyEquivalence, TriangleAloneRel2Formula) {
  TriangleConfig<Rational> t{Rational(4, 5), Rational(2, 3), Rational(3, 4),
                             Rational(1, 2), Rational(1, 3), Rational(5, 6)};
  auto emb = embed_triangle(t);
  const Rational ab = k_terminal_oracle(emb.graph, {emb.A, emb.B}).numeric();
  EXPECT_EQ(ab, t.A * t.B * (t.c + t.a * t.b * t.C - t.a * t.b * t.c * t.C));
  auto rep = verify_equivalence(t, triangle_to_star(t), emb);
  EXPECT_TRUE(rep.ok);
  EXPECT_GE(rep.checks, 4);
}

TEST(VerifyEquivalence, PendantEdge) {
  for (const Rational& q : {Rational(1, 2), Rational(1, 3)}) {
    TriangleConfig<Rational> t{q, q, q, q, q, q};
    auto emb = embed_triangle(t);
    auto d = emb.graph.add_node("D", RelValue(q));
    emb.graph.add_edge(emb.B, d, RelValue(q), "BD");
    auto rep = verify_equivalence(t, triangle_to_star(t), emb);
    EXPECT_TRUE(rep.ok) << (rep.mismatches.empty() ? "" : rep.mismatches.front());
  }
}

TEST(VerifyEquivalence, FailsWhenAnExternalPathClosesACycle) {
  // an extra node adjacent to two triangle corners creates a second route; the star is then not exact
  TriangleConfig<Rational> t{Rational(1, 2), Rational(1, 2), Rational(1, 2),
                             Rational(1, 2), Rational(1, 2), Rational(1, 2)};
  auto emb = embed_triangle(t);
  auto d = emb.graph.add_node("D", RelValue(Rational(1, 2)));
  emb.graph.add_edge(emb.A, d, RelValue(Rational(1, 2)));
  emb.graph.add_edge(emb.C, d, RelValue(Rational(1, 2)));
  auto rep = verify_equivalence(t, triangle_to_star(t), emb);
  EXPECT_FALSE(rep.ok);
  EXPECT_FALSE(rep.mismatches.empty());
}

TEST(VerifyEquivalence, RandomSuites) {
  VerifyOptions o;
  o.trials = 15;
  for (const auto& r : suite_delta_wye(o)) EXPECT_TRUE(r.ok) << r.suite << ": " << r.detail;
}
