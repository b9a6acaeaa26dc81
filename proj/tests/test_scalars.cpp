#include <gtest/gtest.h>

#include "qalg/scalar.hpp"

using namespace qalg;

namespace {
Scalar sym(const char* n) { return Scalar::symbol(n); }
}  // namespace

TEST(Scalar, RendersGrlexDescending) {
  const Scalar q = sym("q"), l = sym("lambda");
  EXPECT_EQ(to_string(Scalar(3) * q * q * l - q + Scalar(1)), "3*q^2*lambda - q + 1");
}

TEST(Scalar, ReducesFractions) {
  const Scalar q = sym("q");
  const Scalar a = (q * q - Scalar(1)) / (q - Scalar(1));
  EXPECT_EQ(a, q + Scalar(1));
  EXPECT_TRUE(a.denominator().is_one());
  EXPECT_EQ(to_string(q.inverse()), "q^-1");
  EXPECT_EQ(to_string((q * q - Scalar(1)) / q), "q - q^-1");
  EXPECT_EQ(to_string(Scalar(1) / (q + Scalar(1))), "(1)/(q + 1)");
}

TEST(Scalar, MultivariateGcdCancels) {
  const Scalar q = sym("q"), m = sym("mu"), c = sym("c");
  const Scalar a = (q * m + c) * (q - m);
  const Scalar b = (q * m + c) * (c + Scalar(2));
  const Scalar r = a / b;
  EXPECT_EQ(r * (c + Scalar(2)), q - m);
  EXPECT_EQ(r.numerator().terms().size(), 2u);
}

TEST(Scalar, EqualityIsSemantic) {
  const Scalar q = sym("q");
  EXPECT_EQ(q / (q * q), q.inverse());
  EXPECT_NE(q, q + Scalar(1));
}

TEST(Scalar, DivisionByZeroThrows) { EXPECT_THROW(Scalar(0).inverse(), DivisionByZero); }

TEST(Scalar, EvaluatesAtRationalPoint) {
  const Scalar q = sym("q");
  const Scalar e = (q + Scalar(1)) / (q - Scalar(1));
  EXPECT_EQ(evaluate(e, {{"q", Rational(5, 3)}}), Rational(4));
  EXPECT_THROW(evaluate(e, {{"q", Rational(1)}}), PoleAtPoint);
  EXPECT_THROW(evaluate(e, std::map<std::string, Rational>{}), UnboundSymbol);
}

TEST(Scalar, UnknownSymbolRejected) { EXPECT_THROW(Scalar::symbol("zeta"), UnknownSymbol); }

TEST(Scalar, NegativePowers) {
  const Scalar q = sym("q");
  EXPECT_EQ(power(q, -3) * power(q, 3), Scalar(1));
  EXPECT_EQ(to_string(power(q, -2)), "q^-2");
  EXPECT_EQ(to_string(Scalar(1) / (Scalar(2) * q)), "(1)/(2*q)");
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(-4, 6).str(), "-2/3");
  EXPECT_THROW(Rational(0).inverse(), DivisionByZero);
}
