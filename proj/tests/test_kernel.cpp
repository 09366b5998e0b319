#include <gtest/gtest.h>

#include "laxlab/parser.hpp"
#include "laxlab/rulesets.hpp"

namespace laxlab {
namespace {

NCExpr P(const char* s) { return parse(s); }

TEST(Rational, ExactArithmetic) {
  Rational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ((a * b).str(), "1/18");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_EQ(Rational::from_string("-4/6"), Rational(-2, 3));
}

TEST(Gaussian, DivisionAndPrinting) {
  Gaussian i = Gaussian::i();
  EXPECT_EQ(i * i, Gaussian(-1));
  EXPECT_EQ(Gaussian(1) / i, -i);
  EXPECT_EQ(Gaussian(Rational(1, 2), Rational(3)).str(), "(1/2 + 3*i)");
  EXPECT_EQ((-i).str(), "-i");
}

TEST(Parse, SingleWord) {
  NCExpr e = P("u*u*u");
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e.terms().begin()->first.size(), 3u);
  EXPECT_EQ(e.terms().begin()->second, Coefficient(1));
}

TEST(Parse, LaurentLambda) {
  NCExpr e = P("4*lam*u' - alpha/lam");
  auto powers = lambda_powers(e);
  EXPECT_EQ(powers, (std::vector<int>{-1, 1}));
  EXPECT_EQ(e.size(), 2u);
}

TEST(Parse, CommutatorSugar) {
  EXPECT_EQ(P("[z,v]"), P("z*v - v*z"));
  EXPECT_EQ(P("[z,u]_+"), P("z*u + u*z"));
  EXPECT_EQ(P("[z,u]_-"), P("z*u - u*z"));
}

TEST(Parse, Macros) {
  EXPECT_EQ(P("beta"), P("i*hbar/4"));
  EXPECT_EQ(P("delta"), P("alpha - 1/2"));
  EXPECT_EQ(P("p^-2"), P("p^-1*p^-1"));
  EXPECT_EQ(P("lam^-2"), P("1/lam^2"));
  EXPECT_EQ(P("z'"), P("1"));
  EXPECT_TRUE(P("z''").is_zero());
}

TEST(Parse, Errors) {
  EXPECT_THROW(P("u +"), ParseError);
  EXPECT_THROW(P("w*u"), ParseError);
  EXPECT_THROW(P("u^-1"), ParseError);
  EXPECT_THROW(P("p'^-1"), ParseError);
  EXPECT_THROW(P("(u+v)/u"), ParseError);
  try {
    P("u * * v");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Print, RoundTripSamples) {
  for (const char* s : {"0", "1", "-u", "3*i*lam^-1*u'*v - (1/2 + 2*i)*hbar*alpha^2*p^-1*q", "x*nu''"}) {
    NCExpr e = P(s);
    EXPECT_EQ(parse(print(e)), e) << s << " -> " << print(e);
  }
  EXPECT_EQ(print(P("2*v - v")), "v");
  EXPECT_EQ(print(NCExpr()), "0");
}

TEST(Normalize, QuantumZv) {
  RuleSet rs = make_rules("quantum-zv");
  EXPECT_EQ(normalize(P("v*z"), rs), P("z*v + i*hbar/2*u"));
  EXPECT_EQ(normalize(P("u*z"), rs), P("u*z"));
  EXPECT_EQ(normalize(commutator(P("z"), P("v")), rs), P("-i/2*hbar*u"));
}

TEST(Normalize, InverseCancellation) {
  RuleSet rs = make_rules("pq-inverse");
  EXPECT_EQ(normalize(P("p*p^-1*p"), rs), P("p"));
  EXPECT_EQ(normalize(P("q^-1*q*q^-1*q"), rs), P("1"));
}

TEST(Normalize, BudgetExhaustionIsReported) {
  RuleSet rs("loop", Context::standard(), 50);
  auto& c = *Context::standard();
  Atom u = make_atom(c, c.index("u")), v = make_atom(c, c.index("v"));
  rs.add(u, v, P("v*u"));
  rs.add(v, u, P("u*v"));
  EXPECT_THROW(normalize(P("u*v"), rs), NonTermination);
}

TEST(Normalize, RejectsSelfReintroducingRule) {
  RuleSet rs("bad", Context::standard());
  auto& c = *Context::standard();
  Atom u = make_atom(c, c.index("u")), v = make_atom(c, c.index("v"));
  EXPECT_THROW(rs.add(u, v, P("u*v + z")), Error);
}

TEST(Normalize, Idempotent) {
  RuleSet rs = make_rules("quantum-zv+field-commute-uv");
  NCExpr e = P("v*z*v*u*z + u*v*z*v");
  NCExpr n = normalize(e, rs);
  EXPECT_EQ(normalize(n, rs), n);
}

TEST(Derivative, Leibniz) {
  EXPECT_EQ(d_dz(P("u*u")), P("u'*u + u*u'"));
  EXPECT_EQ(d_dz(P("z*u - u*z")), P("z*u' - u'*z"));
  EXPECT_EQ(d_dz(P("p^-1")), P("-p^-1*p'*p^-1"));
}

TEST(Derivative, InverseAgreesWithIdentity) {
  // d(p p^-1) must vanish modulo the inverse rules.
  RuleSet rs = make_rules("pq-inverse");
  EXPECT_TRUE(normalize(d_dz(P("p*p^-1")), rs).is_zero());
  EXPECT_TRUE(normalize(d_dz(P("p^-1*p")), rs).is_zero());
}

TEST(Derivative, Lambda) {
  EXPECT_EQ(d_dlambda(P("-i*lam*u")), P("-i*u"));
  EXPECT_EQ(d_dlambda(P("alpha/lam*u")), P("-alpha/lam^2*u"));
  EXPECT_TRUE(d_dlambda(P("u")).is_zero());
}

TEST(Substitute, DerivativesFollow) {
  NCExpr e = P("[v,u']");
  EXPECT_TRUE(substitute(e, "v", P("u'")).is_zero());
  EXPECT_EQ(substitute(P("v'"), "v", P("u'")), P("u''"));
  EXPECT_EQ(substitute(P("v*v"), "v", P("u+z")), P("u*u + u*z + z*u + z*z"));
  EXPECT_THROW(substitute(P("p^-1"), "p", P("u+z")), Error);
  EXPECT_EQ(substitute(P("p^-1"), "p", P("2*q")), P("1/2*q^-1"));
}

TEST(Limits, ClassicalAndScalar) {
  EXPECT_EQ(classical_limit(P("2*u' - i*hbar")), P("2*u'"));
  EXPECT_TRUE(scalarize(P("z*u - u*z")).is_zero());
  EXPECT_EQ(scalarize(P("p*u*p^-1")), P("u"));
  EXPECT_EQ(scalarize(P("u*z*u")), P("z*u*u"));
  EXPECT_EQ(scalarize(P("p^-1*p'*p^-1")), P("p^-1*p^-1*p'"));
}

TEST(Reflect, FlipsOddDerivatives) {
  EXPECT_EQ(reflect(P("u'' - 2*u*u*u + z*u - alpha"), true), P("u'' - 2*u*u*u - z*u + alpha"));
  EXPECT_EQ(reflect(P("u'*z"), false), P("u'*z"));
}

TEST(Rules, UnknownName) { EXPECT_THROW(make_rules("quantum-xyz"), Error); }

TEST(Rules, WeylRelations) {
  RuleSet rs = make_rules("nh-weyl");
  EXPECT_EQ(normalize(commutator(P("r"), P("q")), rs), P("2*hbar*u"));
  EXPECT_EQ(normalize(commutator(P("u"), P("q")), rs), P("hbar"));
  EXPECT_EQ(normalize(commutator(P("u"), P("r")), rs), P("hbar"));
}

}  // namespace
}  // namespace laxlab
