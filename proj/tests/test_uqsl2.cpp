#include <gtest/gtest.h>

#include "common.hpp"

using namespace qalg;
using namespace qalg::test;

namespace {
using G = Generator;
const Uqsl2<Scalar>& algebra() {
  static const Uqsl2<Scalar> u(q());
  return u;
}
U bracket_k() {
  const Scalar b = (q() - q().inverse()).inverse();
  return U::K(1).scaled(b) - U::K(-1).scaled(b);
}
}  // namespace

TEST(Uqsl2, NormalizeExamples) {
  const auto& u = algebra();
  EXPECT_EQ(u.normalize({G::E, G::F}), U::basis(1, 0, 1) + bracket_k());
  EXPECT_EQ(u.normalize({G::E, G::K}), U::basis(0, 1, 1, power(q(), -2)));
  EXPECT_EQ(u.normalize({G::K, G::Kinv, G::F}), U::Fgen());
  EXPECT_EQ(u.normalize({G::K, G::E}), U::basis(0, 1, 1));
}

TEST(Uqsl2, MulMatchesNormalize) {
  const auto& u = algebra();
  EXPECT_EQ(u.mul(U::E(), u.mul(U::Fgen(), U::Fgen())), u.normalize({G::E, G::F, G::F}));
  EXPECT_EQ(u.mul(U(1), U::E()), U::E());
  EXPECT_EQ(u.pow(U::K(2), -1), U::K(-2));
  EXPECT_THROW(u.pow(U::E(), -1), NotInvertible);
}

TEST(Uqsl2, Commutators) {
  const auto& u = algebra();
  EXPECT_EQ(u.commutator(U::E(), U::Fgen()), bracket_k());
  EXPECT_TRUE(u.commutator(U::E(), U::E()).is_zero());
  EXPECT_EQ(u.commutator(U::K(), U::Fgen()), U::basis(1, 1, 0, power(q(), -2) - Scalar(1)));
}

TEST(Uqsl2, CasimirIsCentral) {
  const auto& u = algebra();
  const U z = u.casimir();
  const Scalar d = d_of(q());
  EXPECT_EQ(z, U::basis(1, 0, 1) + U::K(1).scaled(q() / d) + U::K(-1).scaled(q().inverse() / d));
  for (const U& g : {U::E(), U::Fgen(), U::K(), U::K(-1)}) EXPECT_TRUE(u.commutator(z, g).is_zero());
}

TEST(Uqsl2, RewriteMeasureDecreases) {
  const auto& u = algebra();
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> gen(0, 3), len(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    Word w(static_cast<std::size_t>(len(rng)));
    for (auto& g : w) g = static_cast<G>(gen(rng));
    bool ok = true;
    u.normalize(w, Scalar(1), [&](const Word& before, const Word& after) {
      ok = ok && rewrite_measure(after) < rewrite_measure(before);
    });
    EXPECT_TRUE(ok);
  }
}

TEST(Uqsl2, PhiImages) {
  const auto& u = algebra();
  const Scalar c = sym("c");
  const QuantumTorus<Scalar> R(q());
  EXPECT_EQ(u.phi(U::Fgen(), c), T::y());
  EXPECT_EQ(u.phi(U::K(-1), c), T::x(-1));
  EXPECT_EQ(u.phi(U::E(), c), u.phi_E(c));
  EXPECT_EQ(u.phi(u.casimir(), c), T(c));
  const T ef = u.phi(u.commutator(U::E(), U::Fgen()), c);
  EXPECT_EQ(ef, u.phi(bracket_k(), c));
  EXPECT_EQ(R.mul(u.phi(U::K(), c), u.phi(U::E(), c)), R.mul(u.phi(U::E(), c), u.phi(U::K(), c)).scaled(q() * q()));
}

TEST(Uqsl2, LocalizationIdentity) {
  const auto& u = algebra();
  const Scalar c = sym("c");
  const Scalar d = d_of(q());
  const LocalizedTorus<Scalar> Bring(q());
  // d / (d c - (q^-1 x + q x^-1)) * phi(E) = y^-1
  const RF denom = RF(c * d) - RF::from_laurent(LP::monomial(1, q().inverse()) + LP::monomial(-1, q()));
  const B lhs = Bring.mul(B(RF(d) / denom), B::from_torus(u.phi_E(c)));
  EXPECT_EQ(lhs, B::y(-1));
}
