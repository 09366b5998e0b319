#include <gtest/gtest.h>

#include <gmpxx.h>

#include <random>

#include "laxlab/numeric.hpp"
#include "laxlab/parser.hpp"

using namespace laxlab;
using namespace laxlab::numeric;

namespace {

double max_abs_u(const Trajectory& t) {
  double m = 0;
  for (const auto& s : t.state) m = std::max(m, s[0].cwiseAbs().maxCoeff());
  return m;
}

CMat diag2(cplx a, cplx b) {
  CMat m = CMat::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST(Numeric, ZeroSolutionStaysZero) {
  Trajectory t = integrate(pii_problem(0.0, 1, 5, 0.0, 0.0));
  ASSERT_TRUE(t.ok);
  EXPECT_LT(max_abs_u(t), 1e-12);
}

TEST(Numeric, ReciprocalSolvesPiiExactly) {
  // u = 1/z: u'' - (2u^3 - zu + 1) = 2/z^3 - 2/z^3 + 1 - 1, checked in exact arithmetic.
  for (int n = 1; n <= 9; ++n) {
    mpq_class z(n, 3), u = 1 / z;
    mpq_class ddu = 2 / (z * z * z);
    EXPECT_EQ(ddu - (2 * u * u * u - z * u + 1), 0);
  }
}

TEST(Numeric, ReciprocalTrajectory) {
  Trajectory t = integrate(pii_problem(1.0, 1, 5, 1.0, -1.0));
  ASSERT_TRUE(t.ok) << t.error;
  double err = 0;
  for (std::size_t k = 0; k < t.z.size(); ++k) err = std::max(err, std::abs(t.state[k][0](0, 0) - 1.0 / t.z[k]));
  EXPECT_LT(err, 1e-8);
  EXPECT_LT(t.max_residual(), 1e-6);
  EXPECT_EQ(t.z.size(), 401u);
  EXPECT_DOUBLE_EQ(t.z.back(), 5.0);
}

TEST(Numeric, DiagonalMatrixSplitsIntoScalars) {
  ODEProblem m;
  m.rhs = Rhs::MatrixPII;
  m.n = 2;
  m.alpha = 0.5;
  m.z0 = 1;
  m.z1 = 3;
  m.init = {diag2(0.3, -0.2), diag2(0.1, cplx(0.4, 0.1))};
  Trajectory tm = integrate(m);
  Trajectory ta = integrate(pii_problem(0.5, 1, 3, 0.3, 0.1));
  Trajectory tb = integrate(pii_problem(0.5, 1, 3, -0.2, cplx(0.4, 0.1)));
  ASSERT_TRUE(tm.ok && ta.ok && tb.ok);
  double worst = 0;
  for (std::size_t k = 0; k < tm.z.size(); ++k) {
    const CMat& u = tm.state[k][0];
    worst = std::max({worst, std::abs(u(0, 0) - ta.state[k][0](0, 0)), std::abs(u(1, 1) - tb.state[k][0](0, 0)),
                      std::abs(u(0, 1)), std::abs(u(1, 0))});
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(Numeric, OneByOneMatrixEqualsScalar) {
  ODEProblem s = pii_problem(cplx(0.3, -0.1), 1, 4, 0.2, -0.3);
  ODEProblem m = s;
  m.rhs = Rhs::MatrixPII;
  Trajectory ts = integrate(s), tm = integrate(m);
  ASSERT_TRUE(ts.ok && tm.ok);
  double worst = 0;
  for (std::size_t k = 0; k < ts.z.size(); ++k)
    worst = std::max(worst, std::abs(ts.state[k][0](0, 0) - tm.state[k][0](0, 0)));
  EXPECT_LT(worst, 1e-12);
}

TEST(Numeric, NonCommutingMatrixData) {
  ODEProblem m;
  m.rhs = Rhs::MatrixPII;
  m.n = 2;
  m.alpha = 0.2;
  m.z0 = 0;
  m.z1 = 1;
  CMat u0(2, 2), du0(2, 2);
  u0 << 0.1, 0.2, -0.1, 0.05;
  du0 << 0.0, 0.1, 0.3, -0.2;
  m.init = {u0, du0};
  Trajectory t = integrate(m);
  ASSERT_TRUE(t.ok);
  EXPECT_LT(t.max_residual(), 1e-6);
}

TEST(Numeric, ReverseIntegrationReturns) {
  for (auto [u0, du0] : {std::pair<cplx, cplx>{0.3, -0.2}, {1.0, -1.0}, {cplx(0.1, 0.2), 0.05}}) {
    Trajectory f = integrate(pii_problem(0.7, 1, 3, u0, du0));
    ASSERT_TRUE(f.ok);
    const auto& end = f.state.back();
    Trajectory b = integrate(pii_problem(0.7, 3, 1, end[0](0, 0), end[1](0, 0)));
    ASSERT_TRUE(b.ok);
    EXPECT_LT(std::abs(b.state.back()[0](0, 0) - u0), 1e-6);
    EXPECT_LT(std::abs(b.state.back()[1](0, 0) - du0), 1e-6);
  }
}

TEST(Numeric, HalvingToleranceDoesNotWorsenResidual) {
  std::vector<ODEProblem> spans = {pii_problem(1.0, 1, 5, 1.0, -1.0), pii_problem(0.7, 1, 3, 0.3, -0.2),
                                   pii_problem(0.0, 0, 2, 0.1, 0.2)};
  for (auto p : spans) {
    for (double tol : {1e-6, 1e-8, 1e-10}) {
      p.rtol = tol;
      p.atol = tol / 100;
      double r1 = integrate(p).max_residual();
      p.rtol = tol / 2;
      p.atol = tol / 200;
      double r2 = integrate(p).max_residual();
      EXPECT_LE(r2, 2 * r1) << "tol " << tol;
    }
  }
}

TEST(Numeric, HalfZClosedForm) {
  // p = z/2: p'' - p'^2/(2p) - 2p^2 + zp + k/(2p) = (k - 1/4)/z.
  std::vector<double> z;
  std::vector<cplx> p;
  for (int i = 0; i <= 200; ++i) {
    z.push_back(1 + 0.01 * i);
    p.push_back(z.back() / 2);
  }
  for (cplx k : {cplx(0.25), cplx(2.25), cplx(0.04), cplx(1.0, 0.5)}) {
    double expect = std::abs(k - 0.25) / z[2];
    EXPECT_NEAR(p34_residual(z, p, k), expect, 1e-9);
  }
}

TEST(Numeric, HalfZMapCases) {
  // alpha = 0: both pairings equal 1/4, so both vanish.
  P34MapReport a0 = p34_map_check(0.0, 0.0, 0.0, 1, 3);
  EXPECT_EQ(a0.p_pairing, "both");
  // alpha = 1, u = 1/z gives p = z/2 again; only (alpha - 1/2)^2 = 1/4 fits.
  P34MapReport a1 = p34_map_check(1.0, 1.0, -1.0, 1, 3);
  EXPECT_TRUE(a1.ok) << a1.error;
  EXPECT_EQ(a1.p_pairing, "(alpha-1/2)^2");
  EXPECT_LT(a1.residuals[0].max_residual, 1e-6);
  EXPECT_NEAR(a1.residuals[1].max_residual, 2.0 / 1.0, 0.05);
}

TEST(Numeric, GenericMapCheck) {
  P34MapReport r = p34_map_check(0.7, 0.3, -0.2, 1, 2);
  ASSERT_TRUE(r.ok) << r.error;
  EXPECT_EQ(r.p_pairing, "(alpha-1/2)^2");
  EXPECT_EQ(r.q_pairing, "(alpha+1/2)^2");
  for (const auto& x : r.residuals) {
    bool win = (x.variable == "p") == (x.pairing == "(alpha-1/2)^2");
    if (win) EXPECT_LT(x.max_residual, 1e-6) << x.variable << x.pairing;
    else EXPECT_GT(x.max_residual, 1e-2) << x.variable << x.pairing;
  }
}

TEST(Numeric, DerivativeIdentitySymbolic) {
  NCExpr lhs = scalarize(d_dz(parse("2*u^3 - z*u/3")));
  NCExpr rhs = scalarize(parse("6*u^2*u' - u/3 - z*u'/3"));
  EXPECT_EQ(print(lhs - rhs), "0");
}

TEST(Numeric, FirstIntegralZero) {
  cplx u0 = 0.2, du0 = 0.1;
  double z0 = 1;
  cplx ddu0 = 2.0 * u0 * u0 * u0 - z0 * u0 / 3.0;
  DriftReport r = dpii_first_integral_check(u0, du0, ddu0, z0, 3);
  ASSERT_TRUE(r.ok) << r.error;
  EXPECT_LT(std::abs(r.initial_value), 1e-15);
  EXPECT_LT(r.drift, 1e-7);
}

TEST(Numeric, FirstIntegralEquilibrium) {
  DriftReport r = dpii_first_integral_check(0.0, 0.0, 0.0, 1, 3);
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(r.drift, 0.0);
}

TEST(Numeric, FirstIntegralRandom) {
  std::mt19937 gen(20240611);
  std::uniform_real_distribution<double> d(-0.3, 0.3);
  for (int i = 0; i < 10; ++i) {
    DriftReport r = dpii_first_integral_check(cplx(d(gen), d(gen)), d(gen), d(gen), 1, 2);
    ASSERT_TRUE(r.ok) << r.error;
    EXPECT_LT(r.drift, 1e-7);
  }
}

TEST(Numeric, BlowUpIsReported) {
  Trajectory t = integrate(pii_problem(0.0, 0, 5, 5.0, 0.0));
  EXPECT_FALSE(t.ok);
  EXPECT_FALSE(t.error.empty());
  EXPECT_GT(t.last_good_z, 0.0);
  EXPECT_LT(t.last_good_z, 1.0);
}

TEST(Numeric, P34NearZeroIsReported) {
  ODEProblem p;
  p.rhs = Rhs::P34;
  p.z0 = 1;
  p.z1 = 2;
  p.init = {scalar(1e-10), scalar(1.0)};
  Trajectory t = integrate(p);
  EXPECT_FALSE(t.ok);
  EXPECT_NE(t.error.find("near zero"), std::string::npos);
}

TEST(Numeric, P34MatchesClosedForm) {
  // y = z/2 solves the k = 1/4 equation.
  ODEProblem p;
  p.rhs = Rhs::P34;
  p.p34_k = 0.25;
  p.z0 = 1;
  p.z1 = 4;
  p.init = {scalar(0.5), scalar(0.5)};
  Trajectory t = integrate(p);
  ASSERT_TRUE(t.ok);
  for (std::size_t k = 0; k < t.z.size(); ++k) EXPECT_NEAR(std::abs(t.state[k][0](0, 0) - t.z[k] / 2), 0.0, 1e-9);
}

TEST(Numeric, DeclaredPoleRejected) {
  ODEProblem p = pii_problem(1.0, 1, 5, 1.0, -1.0);
  p.poles = {3.0};
  EXPECT_THROW(integrate(p), std::invalid_argument);
  p.poles = {0.0};
  EXPECT_TRUE(integrate(p).ok);
}

TEST(Numeric, CsvShape) {
  ODEProblem p = pii_problem(1.0, 1, 2, 1.0, -1.0);
  p.samples = 11;
  std::ostringstream os;
  write_csv(os, integrate(p));
  std::string s = os.str();
  EXPECT_EQ(s.substr(0, s.find('\n')), "z,re_u11,im_u11,residual");
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 12);
}
