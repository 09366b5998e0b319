#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <complex>

#include "laxlab/report.hpp"
#include "laxlab/verify.hpp"

using namespace laxlab;

namespace {

using cd = std::complex<double>;
using M2 = Eigen::Matrix2cd;

const cd I1(0, 1);

M2 sig(int k) {
  M2 m;
  if (k == 1) m << 0, 1, 1, 0;
  if (k == 2) m << 0, -I1, I1, 0;
  if (k == 3) m << 1, 0, 0, -1;
  return m;
}

// Zero-curvature residual of the Flaschka-Newell pair for a given function u,
// with every z-derivative written out by hand.
double fn_residual(double z, cd lam, cd alpha, cd u, cd du, cd ddu) {
  M2 U = -I1 * lam * sig(3) + u * sig(1);
  M2 V = -I1 * (4.0 * lam * lam + z + 2.0 * u * u) * sig(3) + (4.0 * lam * u - alpha / lam) * sig(1) - 2.0 * du * sig(2);
  M2 Vz = -I1 * (1.0 + 4.0 * u * du) * sig(3) + 4.0 * lam * du * sig(1) - 2.0 * ddu * sig(2);
  M2 Ul = -I1 * sig(3);
  return (Vz - Ul - (U * V - V * U)).norm();
}

double fn_residual_for(cd alpha, double sign) {
  double worst = 0;
  for (double z : {0.7, 1.3, 2.9})
    for (cd lam : {cd(0.4, 0.1), cd(-1.2, 0.5), cd(2.0, -0.3)}) {
      cd u = sign / z, du = -sign / (z * z), ddu = 2.0 * sign / (z * z * z);
      worst = std::max(worst, fn_residual(z, lam, alpha, u, du, ddu));
    }
  return worst;
}

PipelineOptions mutated() {
  PipelineOptions o;
  o.mutate = true;
  return o;
}

}  // namespace

TEST(Verify, NoCaseIsADiscrepancy) {
  for (const auto& c : pipeline_cases()) {
    VerificationReport r = run_case(c.id);
    EXPECT_NE(r.status, Status::Discrepancy) << c.id << "\n" << to_text(r);
  }
}

TEST(Verify, EveryMutantIsADiscrepancy) {
  for (const auto& c : pipeline_cases())
    EXPECT_EQ(run_case(c.id, mutated()).status, Status::Discrepancy) << c.id;
}

TEST(Verify, UnknownCaseThrows) { EXPECT_THROW(run_case("no-such-case"), Error); }

TEST(Verify, JsonIsDeterministic) {
  for (const auto& c : pipeline_cases())
    EXPECT_EQ(to_json(run_case(c.id)).dump(), to_json(run_case(c.id)).dump()) << c.id;
}

TEST(Verify, WallTimeOnlyOnRequest) {
  VerificationReport r = run_case("symform");
  EXPECT_FALSE(to_json(r).contains("wall_time"));
  EXPECT_TRUE(to_json(r, true).contains("wall_time"));
}

TEST(Verify, FnPairOracleAgreesWithEngine) {
  // u = -1/z solves u'' = 2u^3 + zu + 1 and u = 1/z solves u'' = 2u^3 - zu + 1.
  EXPECT_LT(fn_residual_for(1.0, -1.0), 1e-12);
  EXPECT_GT(fn_residual_for(1.0, 1.0), 1e-2);
  VerificationReport r = run_case("fn-classical");
  EXPECT_TRUE(r.matched("derived classical PII"));
  EXPECT_TRUE(r.matched("reflection z -> -z"));
  EXPECT_FALSE(r.matched("classical PII"));
  EXPECT_EQ(r.find("classical PII")->difference, "-2*z*u");
}

TEST(Verify, FnTrivialSolution) {
  EXPECT_TRUE(run_case("fn-classical").matched("alpha = 0, u = 0 is a solution"));
  EXPECT_LT(fn_residual(1.5, cd(0.3, 0.2), 0.0, 0.0, 0.0, 0.0), 1e-15);
}

TEST(Verify, Prop31Coefficient) {
  VerificationReport r = run_case("prop31");
  EXPECT_EQ(r.value("c"), "4");
  EXPECT_TRUE(r.matched("commutation relation"));
  EXPECT_TRUE(r.matched("quantum matrix PII"));
  EXPECT_FALSE(r.matched("quantum matrix PII as printed"));
}

TEST(Verify, Prop31LambdaPairCancels) {
  VerificationReport r = run_case("prop31");
  EXPECT_EQ(r.value("lam-part upper"), "hbar");
  EXPECT_EQ(r.value("lam-part lower"), "-hbar");
  EXPECT_TRUE(r.matched("lam hbar pair cancels on adding"));
}

TEST(Verify, Prop31ClassicalLimitSquare) { EXPECT_TRUE(run_case("prop31").matched("classical-limit square")); }

TEST(Verify, MonotoneUnderQuantumRelations) {
  PipelineOptions o;
  o.extra_rules = "quantum-zv";
  Status base = run_case("prop31").status;
  Status more = run_case("prop31", o).status;
  ASSERT_NE(base, Status::Discrepancy);
  EXPECT_NE(more, Status::Discrepancy);
}

TEST(Verify, ConventionsAreRespected) {
  PipelineOptions flipped, alt;
  flipped.convention = ResidualConvention::Flipped;
  alt.convention = ResidualConvention::AltCommutator;
  EXPECT_NE(run_case("prop31", flipped).status, Status::Discrepancy);
  EXPECT_EQ(run_case("prop31", alt).status, Status::Discrepancy);
}

TEST(Verify, CaseReductions) {
  VerificationReport v0 = run_case("case-iii-v0");
  EXPECT_TRUE(v0.matched("P reduces to U"));
  EXPECT_TRUE(v0.matched("Q reduces to V"));
  EXPECT_FALSE(v0.matched("printed Q reduces to V"));
  VerificationReport ci = run_case("case-i");
  EXPECT_TRUE(ci.matched("d/dz commutation relation"));
  EXPECT_TRUE(ci.matched("quantum PII"));
  VerificationReport cii = run_case("case-ii");
  EXPECT_TRUE(cii.matched("derived third-order equation"));
  EXPECT_TRUE(cii.matched("scalar limit"));
  EXPECT_FALSE(cii.matched("difference from derivative matrix PII"));
}

TEST(Verify, GaugeAndP34) {
  VerificationReport g = run_case("prop41");
  EXPECT_TRUE(g.matched("gauge invariance"));
  EXPECT_TRUE(g.matched("G P G^-1"));
  VerificationReport p = run_case("p34");
  EXPECT_TRUE(p.matched("quantum P34 for p"));
  EXPECT_TRUE(p.matched("quantum P34 for q"));
  EXPECT_TRUE(p.matched("quantum P34 for p, hbar -> 0"));
  EXPECT_FALSE(p.matched("quantum P34 for p as printed"));
}

TEST(Verify, ComparisonDifference) {
  VerificationReport r = run_case("ng-compare");
  EXPECT_EQ(r.status, Status::Verified);
  // beta = i hbar / 4
  EXPECT_EQ(r.value("comparison minus ours"), "1/4*i*hbar*p - hbar^2*p");
}

TEST(Verify, Elimination) {
  VerificationReport r = run_case("eliminate-pq");
  EXPECT_TRUE(r.matched("p - q"));
  EXPECT_TRUE(r.matched("p + q"));
  EXPECT_TRUE(r.matched("classical PII after (z, alpha) -> (-z, -alpha)"));
  EXPECT_FALSE(r.matched("noncommutative PII"));
}

TEST(Verify, AsPrintedMissesBecomeNotes) {
  VerificationReport r = run_case("case-iii-v0");
  bool noted = false;
  for (const auto& n : r.notes) noted |= n.find("printed Q reduces to V") != std::string::npos;
  EXPECT_TRUE(noted);
  EXPECT_EQ(r.status, Status::VerifiedWithNotes);
}

TEST(Verify, SymmetricFormEliminatesToP34) {
  VerificationReport r = run_case("symform");
  EXPECT_TRUE(r.matched("first integral q + r - 2u^2 - z"));
  EXPECT_TRUE(r.matched("P34 for q"));
  EXPECT_TRUE(r.matched("P34 for r"));
  // Hand elimination: q'' = q'^2/(2q) + 2q^2 - zq - (alpha - 1/2)^2/(2q).
  EXPECT_EQ(scalarize(parse(r.value("P34 for q"))),
            scalarize(parse("q'' - 1/2*q^-1*q'*q' - 2*q*q + z*q + 1/2*(alpha - 1/2)^2*q^-1")));
  EXPECT_FALSE(r.matched("P34 for q as printed"));
}
