#include <gtest/gtest.h>

#include "common.hpp"

using namespace qalg;
using namespace qalg::test;

namespace {
LocalizedTorus<Scalar> ring() { return LocalizedTorus<Scalar>(q()); }
RF xr(int k = 1) { return RF::x(k); }
}  // namespace

TEST(Localization, DivmodExamples) {
  const auto Bq = ring();
  const Scalar q2 = q() * q();
  const B d = B::y() - B::x();
  auto r = Bq.divmod(B::y(2), d);
  EXPECT_EQ(r.quotient, B::y() + B(xr().scaled(q2)));
  EXPECT_EQ(r.remainder, B(xr(2).scaled(q2)));
  r = Bq.divmod(d, d);
  EXPECT_EQ(r.quotient, B(1));
  EXPECT_TRUE(r.remainder.is_zero());
  r = Bq.divmod(B::x(), d);
  EXPECT_TRUE(r.quotient.is_zero());
  EXPECT_EQ(r.remainder, B::x());
  EXPECT_THROW(Bq.divmod(d, B{}), DivisionByZeroElement);
}

TEST(Localization, UnitsAndIrreducibility) {
  const auto Bq = ring();
  const RF inv = RF(Polynomial<Scalar>(Scalar(1)), Polynomial<Scalar>(std::vector<Scalar>{Scalar(-1), Scalar(1)}));
  const B u = B::monomial(3, inv);
  EXPECT_TRUE(Bq.is_unit(u));
  EXPECT_EQ(Bq.mul(u, Bq.inverse(u)), B(1));
  EXPECT_FALSE(Bq.is_unit(B::y() - B::x()));
  EXPECT_FALSE(Bq.is_unit(B{}));
  EXPECT_TRUE(Bq.is_irreducible_width1(B::monomial(1, xr()) - B(RF(Scalar(2)))));
  EXPECT_FALSE(Bq.is_irreducible_width1(Bq.mul(B::x(), B::y())));
  EXPECT_FALSE(Bq.is_irreducible_width1(B{}));
  EXPECT_THROW(Bq.is_irreducible_width1(B::y(2) - B::x()), WidthTooLarge);
  EXPECT_EQ(B{}.width(), B::kZeroWidth);
}

TEST(Localization, DivisionReconstructsRandomized) {
  const auto Bq = ring();
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> e(-2, 2), c(-3, 3);
  auto rand_elem = [&](int terms) {
    B b;
    for (int i = 0; i < terms; ++i) {
      LP p;
      for (int j = 0; j < 2; ++j) p.add_term(e(rng), Scalar(c(rng)));
      b.add_term(e(rng), RF::from_laurent(p));
    }
    return b;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const B a = rand_elem(4), d = rand_elem(2);
    if (d.is_zero()) continue;
    const auto r = Bq.divmod(a, d);
    EXPECT_EQ(Bq.mul(r.quotient, d) + r.remainder, a);
    EXPECT_LT(r.remainder.width(), d.width());
  }
}

TEST(Localization, QuotientActionExamples) {
  const auto Bq = ring();
  const Scalar q2 = q() * q();
  const QuotientModule<Scalar> M1(Bq, B::monomial(1, xr()) - B(1));
  EXPECT_EQ(M1.act(B::y(), RF(1)), xr(-1));
  const QuotientModule<Scalar> M2(Bq, B::y() - B(1));
  const RF v = xr(2) + RF(1);
  EXPECT_EQ(M2.act(B::y(), v), xr(2).scaled(q2 * q2) + RF(1));
  EXPECT_EQ(M2.act(B::x(), v), xr() * v);
  EXPECT_EQ(M2.act(B::y(-1), M2.act(B::y(), v)), v);
  EXPECT_THROW(QuotientModule<Scalar>(Bq, B::y(2) - B(1)), Error);
}

TEST(Localization, QuotientActionIsHomomorphism) {
  const auto Bq = ring();
  const B alpha = B::monomial(1, xr() + RF(1)) - B(xr(2) - RF(3));
  const QuotientModule<Scalar> M(Bq, alpha);
  const B e1 = B::y() + B::x(), e2 = B::y(-1) - B::monomial(2, xr());
  const RF v = xr() - RF(2);
  EXPECT_EQ(M.act(Bq.mul(e1, e2), v), M.act(e1, M.act(e2, v)));
}
