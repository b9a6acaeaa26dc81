#include <gtest/gtest.h>

#include "common.hpp"

using namespace qalg;
using namespace qalg::test;

TEST(Torus, YXCommutation) {
  const QuantumTorus<Scalar> R(q());
  EXPECT_EQ(R.mul(T::y(), T::x()), T::monomial(1, 1, q() * q()));
}

TEST(Torus, IdentityAndExpansion) {
  const QuantumTorus<Scalar> R(q());
  const T a = T::x() + T::y();
  EXPECT_EQ(R.mul(T(1), a), a);
  T expected = T::x(2) - T::y(2);
  expected.add_term(1, 1, q() * q() - Scalar(1));
  EXPECT_EQ(R.mul(T::x() + T::y(), T::x() - T::y()), expected);
}

TEST(Torus, InverseOfMonomial) {
  const QuantumTorus<Scalar> R(q());
  const T m = T::monomial(2, -3, Scalar(5));
  EXPECT_EQ(R.mul(m, R.inverse(m)), T(1));
  EXPECT_EQ(R.mul(R.inverse(m), m), T(1));
  EXPECT_THROW(R.inverse(T::x() + T::y()), NotInvertible);
}

TEST(Torus, OreExamples) {
  const QuantumTorus<Scalar> R(q());
  const Scalar q2 = q() * q();
  auto w = R.ore_left_multiple(LP::monomial(1), T::y());
  EXPECT_EQ(w.h, LP::monomial(1, q2));
  EXPECT_EQ(w.b, T::y());

  const LP s = LP::monomial(1) - LP(Scalar(1));
  const T a = T::y() + T::y(2);
  w = R.ore_left_multiple(s, a);
  const LP s1 = LP::monomial(1, q2) - LP(Scalar(1));
  const LP s2 = LP::monomial(1, q2 * q2) - LP(Scalar(1));
  EXPECT_EQ(w.h, s1 * s2);
  EXPECT_EQ(R.mul(w.b, T::from_x_laurent(s)), R.mul(T::from_x_laurent(w.h), a));

  w = R.ore_left_multiple(s, T::x(3));
  EXPECT_EQ(w.h, s);
  w = R.ore_left_multiple(s, T{});
  EXPECT_EQ(w.h, s);
  EXPECT_TRUE(w.b.is_zero());
}

TEST(Torus, OreRejectsOutsideS) {
  const QuantumTorus<Scalar> R(q());
  EXPECT_THROW(R.ore_left_multiple(LP{}, T::y()), NotInS);
  const RF frac(Polynomial<Scalar>(Scalar(1)), Polynomial<Scalar>(std::vector<Scalar>{Scalar(-1), Scalar(1)}));
  EXPECT_THROW(R.ore_left_multiple(frac, T::y()), NotInS);
}

TEST(Torus, AssociativityRandomized) {
  const QuantumTorus<Scalar> R(q());
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> e(-2, 2), c(-3, 3);
  auto rand_elem = [&] {
    T t;
    for (int i = 0; i < 4; ++i) t.add_term(e(rng), e(rng), Scalar(c(rng)) * power(q(), e(rng)));
    return t;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const T a = rand_elem(), b = rand_elem(), cc = rand_elem();
    EXPECT_EQ(R.mul(R.mul(a, b), cc), R.mul(a, R.mul(b, cc)));
    EXPECT_EQ(R.mul(a, b + cc), R.mul(a, b) + R.mul(a, cc));
  }
}

TEST(MLambda, ActionExamples) {
  const Scalar l = sym("lambda");
  const MLambdaModule<Scalar> M(q(), l);
  const LP one = M.generator();
  EXPECT_EQ(M.act(T::x(), one), one.scaled(l));
  EXPECT_EQ(M.act(T::y(), LP::monomial(3)), LP::monomial(4));
  EXPECT_EQ(M.act(T::x(), LP::monomial(1)), LP::monomial(1, l * power(q(), -2)));
  EXPECT_THROW(MLambdaModule<Scalar>(q(), Scalar(0)), Error);
}

TEST(MLambda, RecoverGenerator) {
  const Scalar l = sym("lambda");
  const MLambdaModule<Scalar> M(q(), l);
  EXPECT_TRUE(M.recover_generator(M.generator()).empty());
  EXPECT_THROW(M.recover_generator(LP{}), ZeroVector);
  const LP v = LP(Scalar(1)) + LP::monomial(1);
  const auto steps = M.recover_generator(v);
  ASSERT_EQ(steps.size(), 2u);
  LP w = v;
  for (const auto& e : steps) w = M.act(e, w);
  EXPECT_EQ(w, M.generator());
  const LP single = LP::monomial(-3, Scalar(7));
  const auto one_step = M.recover_generator(single);
  ASSERT_EQ(one_step.size(), 1u);
  EXPECT_EQ(M.act(one_step[0], single), M.generator());
}
