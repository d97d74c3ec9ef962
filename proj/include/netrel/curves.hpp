#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <ostream>
#include <string>
#include <vector>

#include "netrel/tabulated.hpp"
#include "netrel/spectra.hpp"

namespace netrel {

struct CurvePoint {
  BigComplex p;
  int branch = 0;
  double param = 0;  // T for the ladder, theta for the fan
};

struct RealSegment {
  double lo = 0, hi = 0;
};

struct LimitCurve {
  Family family = Family::bc;
  Rational rho;
  std::vector<CurvePoint> points;
  std::vector<RealSegment> real_segments;
  int rejected = 0;        // candidates failing the dominance test
  int range_mismatch = 0;  // fan: points inside a stated range failing the test
};

// ---- ladder ----

/**
 * Real p at which the dominant eigenvalues form a non-real conjugate pair.
 * These lie on the limiting curve without being roots of P3 at real T in the
 * interior of a branch.
 */
inline std::vector<RealSegment> real_axis_segments(const Rational& rho, double lo, double hi, int steps,
                                                   mpfr_prec_t prec = 128) {
  const auto ch = charpoly_in_p(Family::bc, rho);
  std::vector<RealSegment> out;
  bool open = false;
  double start = 0, prev = lo;
  for (int i = 0; i <= steps; ++i) {
    const double x = lo + (hi - lo) * i / steps;
    auto e = eigenvalues_at(ch, BigComplex(BigFloat::from_double(x, prec)));
    const BigFloat& top_im = e.values[0].im();
    const bool hit = !e.values[0].abs().is_zero() &&
                     (abs(top_im) / e.values[0].abs()).to_double() > std::ldexp(1.0, -static_cast<int>(prec) / 2);
    if (hit && !open) {
      open = true;
      start = x;
    } else if (!hit && open) {
      open = false;
      out.push_back({start, prev});
    }
    prev = x;
  }
  if (open) out.push_back({start, hi});
  return out;
}

/**
 * Ladder limiting curve: roots of P3(p, rho, T) on an exact T grid followed by
 * continuation in T; a root is kept when the two dominant eigenvalues of the
 * transfer matrix have equal modulus and the cosine of their relative angle is T.
 * Branch ids are continuation indices; real-axis segments get ids after them.
 */
inline LimitCurve limiting_curves_bc(const Rational& rho, int grid, mpfr_prec_t prec = 128) {
  if (grid < 2) throw InputError("grid must be >= 2");
  if (!(rho > Rational(0)) || rho > Rational(1)) throw InputError("curves need 0 < rho <= 1");
  LimitCurve cur;
  cur.family = Family::bc;
  cur.rho = rho;
  const auto ch = charpoly_in_p(Family::bc, rho);
  const MPoly p3 = tabulated::p3().substitute(std::map<std::string, Rational>{{"rho", rho}});
  const auto in_p = p3.as_univariate("p");
  std::vector<QPoly> coeff_T;
  for (const auto& c : in_p.coeffs()) coeff_T.push_back(c.as_qpoly("T"));
  const double tie_tol = std::ldexp(1.0, -static_cast<int>(prec) / 4);
  const double cos_tol = 1e-6;

  std::vector<BigComplex> prev;
  int branch_base = 0, width = 0;
  for (int k = 0; k < grid; ++k) {
    const Rational T = Rational(-1) + Rational(2 * k, grid - 1);
    std::vector<Rational> cq;
    for (const auto& c : coeff_T) cq.push_back(c.eval(T));
    QPoly q(std::move(cq));
    if (q.is_zero()) continue;
    const std::size_t z0 = q.low_order();
    QPoly g = q.shift_down(z0);
    if (g.degree() < 1) continue;
    auto c = to_bigcomplex(g, prec);
    RootSolveResult r;
    if (!prev.empty() && static_cast<int>(prev.size()) == g.degree()) {
      r = solve_roots_numeric(c, &prev);
    } else {
      branch_base += width;
      r = solve_roots_numeric(c);
      width = g.degree();
    }
    prev.clear();
    for (const auto& x : r.roots) prev.push_back(x.center);
    for (std::size_t i = 0; i < r.roots.size(); ++i) {
      const BigComplex& p = r.roots[i].center;
      // scaled residual
      BigFloat scale(1, 64), az = p.abs().with_precision(64), pw(1, 64);
      for (const auto& ci : c) {
        scale = scale + ci.abs().with_precision(64) * pw;
        pw = pw * az;
      }
      EvalResult v = bigfloat_eval(c, p);
      if ((v.value.abs().with_precision(64) / scale).to_double() > std::ldexp(1.0, -static_cast<int>(prec) / 2)) {
        ++cur.rejected;
        continue;
      }
      auto e = eigenvalues_at(ch, p);
      if (!dominant_tie(e, tie_tol) || std::abs(dominant_cos(e) - T.to_double()) > cos_tol) {
        ++cur.rejected;
        continue;
      }
      cur.points.push_back({p, branch_base + static_cast<int>(i), T.to_double()});
    }
  }
  branch_base += width;

  // scan window covering the critical structure
  const double s = std::cbrt(1.0 / rho.to_double());
  cur.real_segments = real_axis_segments(rho, -3 * s - 1, 3 * s + 2, grid, prec);
  int id = branch_base;
  for (const auto& seg : cur.real_segments) {
    const int m = std::max(2, static_cast<int>((seg.hi - seg.lo) * grid / (6 * s + 3)));
    for (int j = 0; j <= m; ++j) {
      const double x = seg.lo + (seg.hi - seg.lo) * j / m;
      BigComplex p(BigFloat::from_double(x, prec));
      auto e = eigenvalues_at(ch, p);
      cur.points.push_back({p, id, dominant_cos(e)});
    }
    ++id;
  }
  return cur;
}

// ---- fan ----

/// Fan eigenvalues carrying a nonzero amplitude: 1, p rho (absent at rho = 1), p(1-p) rho.
inline std::vector<BigComplex> fan_relevant_eigenvalues(const BigComplex& p, const Rational& rho) {
  const mpfr_prec_t prec = p.precision();
  const BigComplex r(BigFloat(rho, prec));
  const BigComplex one(BigFloat(1, prec));
  std::vector<BigComplex> v{one, p * (one - p) * r};
  if (rho != Rational(1)) v.push_back(p * r);
  return v;
}

/// True when the two largest relevant fan eigenvalue moduli agree.
inline bool fan_dominant_tie(const BigComplex& p, const Rational& rho, double tol) {
  auto v = fan_relevant_eigenvalues(p, rho);
  std::vector<BigFloat> m;
  for (const auto& x : v) m.push_back(x.abs());
  std::sort(m.begin(), m.end(), [](const BigFloat& a, const BigFloat& b) { return a > b; });
  return ((m[0] - m[1]) / m[0]).to_double() <= tol;
}

struct FanBranch {
  int id;
  std::string formula;
  double cos_max = 1, cos_min = -1;
};

/// Branches and cos(theta) validity ranges by regime of rho.
inline std::vector<FanBranch> fan_branches(const Rational& rho) {
  const double r = rho.to_double();
  if (rho == Rational(1) || rho <= Rational(1, 2))
    return {{0, "(1-sqrt(1+4e^(i theta)/rho))/2"}, {1, "(1+sqrt(1+4e^(i theta)/rho))/2"}};
  return {{0, "(1-sqrt(1+4e^(i theta)/rho))/2"},
          {1, "(1+sqrt(1+4e^(i theta)/rho))/2", (1 / (2 * r)) * (1 / (r * r) - 3), -1},
          {2, "e^(i theta)/rho", 1, 1 / (2 * r)},
          {3, "1+e^(i theta)", 1, 1 / (2 * r * r) - 1}};
}

inline BigComplex fan_branch_point(int id, const Rational& rho, const BigFloat& theta) {
  const mpfr_prec_t prec = theta.precision();
  const BigComplex w = BigComplex::polar(BigFloat(1, prec), theta);
  const BigComplex one(BigFloat(1, prec));
  const BigComplex inv_r(BigFloat(Rational(1) / rho, prec));
  switch (id) {
    case 0:
    case 1: {
      BigComplex s = (one + w * inv_r * BigComplex(BigFloat(4, prec))).sqrt();
      BigComplex half(BigFloat(Rational(1, 2), prec));
      return id == 0 ? (one - s) * half : (one + s) * half;
    }
    case 2:
      return w * inv_r;
    default:
      return one + w;
  }
}

/**
 * Fan limiting curve sampled on a uniform theta grid. Every emitted point lies
 * inside its branch's validity range; points inside a range that fail the
 * eigenvalue-modulus test are counted in range_mismatch and dropped.
 */
inline LimitCurve limiting_curves_fan(const Rational& rho, int grid, mpfr_prec_t prec = 128) {
  if (grid < 2) throw InputError("grid must be >= 2");
  if (!(rho > Rational(0)) || rho > Rational(1)) throw InputError("curves need 0 < rho <= 1");
  LimitCurve cur;
  cur.family = Family::fan;
  cur.rho = rho;
  const double tol = std::ldexp(1.0, -static_cast<int>(prec) / 2);
  const BigFloat two_pi = BigFloat::pi(prec) * 2;
  for (const auto& b : fan_branches(rho)) {
    for (int k = 0; k < grid; ++k) {
      const BigFloat theta = two_pi * k / grid;
      const double ct = std::cos(theta.to_double());
      if (ct > b.cos_max + 1e-12 || ct < b.cos_min - 1e-12) continue;
      BigComplex p = fan_branch_point(b.id, rho, theta);
      if (!fan_dominant_tie(p, rho, tol)) {
        ++cur.range_mismatch;
        continue;
      }
      cur.points.push_back({p, b.id, theta.to_double()});
    }
  }
  return cur;
}

// ---- output ----

inline void write_curve_csv(std::ostream& os, const LimitCurve& c, int digits = 17) {
  os << "re_p,im_p,branch_id,T_or_theta\n";
  for (const auto& pt : c.points) {
    os << pt.p.re().to_string(digits) << ',' << pt.p.im().to_string(digits) << ',' << pt.branch << ',';
    os.precision(17);
    os << pt.param << '\n';
  }
}

// ---- cloud versus curve ----

struct DistanceReport {
  std::vector<double> distances;  // sorted
  int excluded = 0;
  double median() const { return quantile(0.5); }
  double quantile(double q) const {
    if (distances.empty()) return 0;
    const double pos = q * static_cast<double>(distances.size() - 1);
    const auto i = static_cast<std::size_t>(pos);
    const double f = pos - static_cast<double>(i);
    return i + 1 < distances.size() ? distances[i] * (1 - f) + distances[i + 1] * f : distances[i];
  }
};

/**
 * Distance from each root to the nearest sampled curve point. Real roots with
 * exclude_lo < p < exclude_hi are skipped.
 */
inline DistanceReport cloud_vs_curve(const RootCloud& cloud, const LimitCurve& curve, double exclude_lo = 0,
                                     double exclude_hi = 0) {
  std::vector<std::complex<double>> pts;
  pts.reserve(curve.points.size());
  for (const auto& c : curve.points) pts.emplace_back(c.p.re().to_double(), c.p.im().to_double());
  DistanceReport rep;
  for (const auto& r : cloud.roots) {
    const std::complex<double> z(r.center.re().to_double(), r.center.im().to_double());
    const bool real = std::abs(z.imag()) <= std::max(r.radius.to_double(), 1e-12);
    if (real && z.real() > exclude_lo && z.real() < exclude_hi) {
      ++rep.excluded;
      continue;
    }
    double best = HUGE_VAL;
    for (const auto& c : pts) best = std::min(best, std::abs(z - c));
    for (const auto& s : curve.real_segments) {
      const double x = std::clamp(z.real(), s.lo, s.hi);
      best = std::min(best, std::abs(z - std::complex<double>(x, 0)));
    }
    rep.distances.push_back(best);
  }
  std::sort(rep.distances.begin(), rep.distances.end());
  return rep;
}

}  // namespace netrel
