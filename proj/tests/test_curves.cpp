#include <gtest/gtest.h>

#include <sstream>

#include "netrel/curves.hpp"

using namespace netrel;

namespace {

// |P3(p, rho, T)| relative to the sum of absolute term values.
double p3_relative_residual(const Rational& rho, const CurvePoint& pt, const Rational& T) {
  const MPoly m = tabulated::p3().substitute(std::map<std::string, Rational>{{"rho", rho}, {"T", T}});
  const QPoly q = m.as_qpoly("p");
  auto r = bigfloat_eval(q, pt.p);
  BigFloat scale(0, 64), pw(1, 64);
  const BigFloat az = pt.p.abs().with_precision(64);
  for (const auto& c : q.coeffs()) {
    scale = scale + abs(BigFloat(c, 64)) * pw;
    pw = pw * az;
  }
  return (r.value.abs().with_precision(64) / scale).to_double();
}

}  // namespace

TEST(LadderCurve, PointsSatisfyDefiningPolynomial) {
  const Rational rho(1);
  const int grid = 41;
  LimitCurve c = limiting_curves_bc(rho, grid, 128);
  ASSERT_FALSE(c.points.empty());
  const int continuation_points = static_cast<int>(c.points.size());
  int checked = 0;
  for (int k = 0; k < continuation_points; ++k) {
    const auto& pt = c.points[static_cast<std::size_t>(k)];
    bool on_segment = false;
    for (const auto& s : c.real_segments)
      on_segment = on_segment || (std::abs(pt.p.im().to_double()) == 0 && pt.p.re().to_double() >= s.lo &&
                                  pt.p.re().to_double() <= s.hi);
    if (on_segment) continue;
    // recover the exact grid value of T
    const long idx = std::lround((pt.param + 1) * (grid - 1) / 2);
    const Rational T = Rational(-1) + Rational(2 * idx, grid - 1);
    EXPECT_LT(p3_relative_residual(rho, pt, T), std::ldexp(1.0, -64));
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

TEST(LadderCurve, ContainsGoldenRatioAtTMinusOne) {
  // double root there, so accuracy is about half the working precision
  LimitCurve c = limiting_curves_bc(Rational(1), 21, 256);
  const BigFloat phi = (sqrt(BigFloat(5, 256)) + 1) / 2;
  double best = 1e9;
  for (const auto& pt : c.points)
    if (pt.param == -1.0) best = std::min(best, (abs(pt.p.re() - phi) + abs(pt.p.im())).to_double());
  EXPECT_LT(best, 1e-20);
}

TEST(LadderCurve, TieAndAngleHoldAtEveryPoint) {
  const Rational rho(3, 4);
  LimitCurve c = limiting_curves_bc(rho, 31);
  const auto ch = charpoly_in_p(Family::bc, rho);
  for (const auto& pt : c.points) {
    auto e = eigenvalues_at(ch, pt.p);
    EXPECT_TRUE(dominant_tie(e, 1e-9));
  }
}

TEST(LadderCurve, RealAxisSegmentsAtRhoOne) {
  LimitCurve c = limiting_curves_bc(Rational(1), 400);
  ASSERT_EQ(c.real_segments.size(), 1u);
  EXPECT_NEAR(c.real_segments[0].lo, -0.288, 0.01);
  EXPECT_NEAR(c.real_segments[0].hi, 0.0, 0.03);
}

TEST(LadderCurve, StructuralTransitionAtHalf) {
  // below one half a real-axis piece appears between p_D and p_E; above it is absent
  auto lo = critical_points(Rational(49, 100));
  ASSERT_TRUE(lo.p_E.has_value());
  const double d = lo.p_D.to_double(), e = lo.p_E->to_double();
  const double s = std::cbrt(100.0 / 49);
  auto below = real_axis_segments(Rational(49, 100), 1.0, 3 * s + 2, 4000);
  int inside = 0;
  for (const auto& seg : below)
    if (seg.lo > 1.0) {
      EXPECT_GE(seg.lo, d - 1e-3);
      EXPECT_LE(seg.hi, e + 1e-3);
      ++inside;
    }
  EXPECT_EQ(inside, 1);
  auto above = real_axis_segments(Rational(51, 100), 1.0, 3 * s + 2, 4000);
  for (const auto& seg : above) EXPECT_LT(seg.hi, 1.0);
  EXPECT_TRUE(above.empty());
}

TEST(LadderCurve, SegmentsBetweenDAndEAtSmallRho) {
  LimitCurve c = limiting_curves_bc(Rational(1, 100), 400);
  auto cp = critical_points(Rational(1, 100));
  bool found = false;
  for (const auto& s : c.real_segments)
    if (s.lo > 0) {
      found = true;
      EXPECT_NEAR(s.lo, cp.p_D.to_double(), 0.05);
      EXPECT_NEAR(s.hi, cp.p_E->to_double(), 0.05);
    }
  EXPECT_TRUE(found);
}

TEST(FanCurve, ThetaPiAtRhoOne) {
  const BigFloat pi = BigFloat::pi(128);
  for (int id : {0, 1}) {
    BigComplex p = fan_branch_point(id, Rational(1), pi);
    EXPECT_NEAR(p.abs().to_double(), 1.0, 1e-30);
    EXPECT_NEAR(p.re().to_double(), 0.5, 1e-30);
    EXPECT_NEAR(std::abs(p.im().to_double()), std::sqrt(3.0) / 2, 1e-15);
  }
}

TEST(FanCurve, BranchSetsByRegime) {
  EXPECT_EQ(fan_branches(Rational(1)).size(), 2u);
  EXPECT_EQ(fan_branches(Rational(2, 5)).size(), 2u);
  EXPECT_EQ(fan_branches(Rational(1, 2)).size(), 2u);
  EXPECT_EQ(fan_branches(Rational(9999, 10000)).size(), 4u);
  LimitCurve c = limiting_curves_fan(Rational(9999, 10000), 400);
  std::set<int> ids;
  for (const auto& pt : c.points) ids.insert(pt.branch);
  EXPECT_EQ(ids, (std::set<int>{0, 1, 2, 3}));
}

TEST(FanCurve, StatedRangesAgreeWithTieTest) {
  for (const Rational& rho : {Rational(1), Rational(9999, 10000), Rational(3, 4), Rational(1, 2), Rational(1, 4)}) {
    LimitCurve c = limiting_curves_fan(rho, 720);
    EXPECT_EQ(c.range_mismatch, 0) << rho;
    EXPECT_FALSE(c.points.empty());
  }
}

TEST(FanCurve, PointsOutsideStatedRangesFailTieTest) {
  const double tol = std::ldexp(1.0, -64);
  for (const Rational& rho : {Rational(3, 4), Rational(9, 10)}) {
    int outside = 0;
    for (const auto& b : fan_branches(rho)) {
      for (int k = 0; k < 360; ++k) {
        const BigFloat theta = BigFloat::pi(128) * 2 * k / 360;
        const double ct = std::cos(theta.to_double());
        if (ct <= b.cos_max + 1e-6 && ct >= b.cos_min - 1e-6) continue;
        ++outside;
        EXPECT_FALSE(fan_dominant_tie(fan_branch_point(b.id, rho, theta), rho, tol))
            << "branch " << b.id << " theta index " << k;
      }
    }
    EXPECT_GT(outside, 100);
  }
}

TEST(CurveCsv, Header) {
  std::ostringstream os;
  write_curve_csv(os, limiting_curves_fan(Rational(1), 8), 10);
  EXPECT_EQ(os.str().substr(0, os.str().find('\n')), "re_p,im_p,branch_id,T_or_theta");
}

TEST(CloudVsCurve, MedianDecreasesWithN) {
  LimitCurve c = limiting_curves_fan(Rational(1), 2000);
  std::vector<double> med;
  for (int n : {10, 30, 60}) med.push_back(cloud_vs_curve(zero_cloud(Family::fan, n, Rational(1)), c).median());
  EXPECT_GT(med[0], med[1]);
  EXPECT_GT(med[1], med[2]);
}

TEST(CloudVsCurve, ExcludesRealRootsInWindow) {
  LimitCurve c = limiting_curves_bc(Rational(1), 100);
  RootCloud cloud = zero_cloud(Family::bc, 40, Rational(1));
  auto all = cloud_vs_curve(cloud, c);
  auto ex = cloud_vs_curve(cloud, c, -0.2879878, 0);
  EXPECT_EQ(all.excluded, 0);
  EXPECT_EQ(ex.distances.size() + static_cast<std::size_t>(ex.excluded), all.distances.size());
}
