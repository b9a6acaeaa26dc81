#include <gtest/gtest.h>

#include "common.hpp"

using namespace qalg;
using namespace qalg::test;

namespace {
using G = Generator;
using M1 = RankOneModule<Scalar>;

/// [E,F] = (K - K^-1)/(q - q^-1), K E = q^2 E K, K F = q^-2 F K on v.
void expect_relations(const M1& m, const LP& v) {
  const Scalar qq = m.q();
  const Scalar b = (qq - qq.inverse()).inverse();
  const LP ef = m.act(G::E, m.act(G::F, v)) - m.act(G::F, m.act(G::E, v));
  EXPECT_EQ(ef, v.shifted(1).scaled(b) - v.shifted(-1).scaled(b));
  EXPECT_EQ(m.act(G::K, m.act(G::E, v)), m.act(G::E, m.act(G::K, v)).scaled(qq * qq));
  EXPECT_EQ(m.act(G::K, m.act(G::F, v)), m.act(G::F, m.act(G::K, v)).scaled(power(qq, -2)));
  EXPECT_EQ(m.act(G::Kinv, m.act(G::K, v)), v);
}
}  // namespace

TEST(RankOne, CheckExamples) {
  const Scalar c = sym("c"), d = d_of(q());
  const LP w = LP::monomial(1, q().inverse() / d) + LP::monomial(-1, q() / d);
  auto r = rank_one_check(q(), LP(c) - w, LP(Scalar(1)));
  ASSERT_TRUE(r.valid);
  EXPECT_EQ(*r.casimir, c);
  EXPECT_FALSE(rank_one_check(q(), LP(Scalar(1)), LP(Scalar(1))).valid);
  const auto m = M1::family_iii(q(), Scalar(1), 0, power(q(), 3));
  r = rank_one_check(q(), m.fE(), m.fF());
  ASSERT_TRUE(r.valid);
  EXPECT_EQ(*r.casimir, (q() * q() + power(q(), -2)) / d);
}

TEST(RankOne, FamiliesSatisfyRelations) {
  const Scalar mu = sym("mu"), c = sym("c"), x1 = sym("x1");
  for (int n : {-2, 0, 3}) {
    for (const M1& m : {M1::family_i(q(), mu, n, c), M1::family_ii(q(), mu, n, c), M1::family_iii(q(), mu, n, x1)}) {
      const auto r = rank_one_check(q(), m.fE(), m.fF());
      ASSERT_TRUE(r.valid) << family_name(m.family()) << " n=" << n;
      EXPECT_EQ(*r.casimir, *m.casimir());
      for (int k = -2; k <= 2; ++k) expect_relations(m, LP::monomial(k) + LP::monomial(k + 1, mu));
    }
  }
}

TEST(RankOne, Classify) {
  const Scalar mu = sym("mu"), c = sym("c");
  EXPECT_EQ(rank_one_classify(q(), M1::family_i(q(), mu, 2, c).fE(), LP::monomial(2, mu)).family(), Family::I);
  const auto ii = M1::family_ii(q(), mu, -1, c);
  EXPECT_EQ(rank_one_classify(q(), ii.fE(), ii.fF()).family(), Family::II);
  const LP fe = LP::monomial(1, q().inverse()) - LP(q() * q());
  const auto iii = M1::family_iii(q(), Scalar(1), 0, power(q(), 3));
  EXPECT_EQ(iii.fE(), fe);
  const auto cls = rank_one_classify(q(), fe, iii.fF());
  EXPECT_EQ(cls.family(), Family::III);
  EXPECT_EQ(*cls.x1(), power(q(), 3));
  EXPECT_EQ(*cls.mu(), Scalar(1));
  EXPECT_THROW(rank_one_classify(q(), LP(Scalar(1)), LP(Scalar(1))), InvalidModule);
}

TEST(RankOne, ActExamples) {
  const auto m = M1::family_iii(q(), Scalar(1), 0, Scalar(1));
  const LP one(Scalar(1));
  EXPECT_EQ(m.act(G::K, one), LP::monomial(1));
  EXPECT_EQ(m.act(G::E, one), LP::monomial(1, q().inverse()) - LP(q().inverse()));
  EXPECT_EQ(m.act(G::E, LP::monomial(1)), (LP::monomial(1, q().inverse()) - LP(q().inverse())).shifted(1).scaled(power(q(), -2)));
}

TEST(RankOne, SubmoduleGenerators) {
  const Scalar d = d_of(q());
  for (int s = 1; s <= 3; ++s)
    for (int sign : {1, -1}) {
      const auto m = M1::family_iii(q(), Scalar(1), 0, Scalar(sign) * power(q(), 1 - s));
      const auto f = find_submodule_generator(q(), s, sign, 0, Scalar(1));
      ASSERT_TRUE(f.has_value()) << s << " " << sign;
      EXPECT_EQ(f->max_degree(), s);
      EXPECT_EQ(f->lowest(), Scalar(1));
      for (int k = -3; k <= 3; ++k) {
        EXPECT_TRUE(exact_quotient(m.act(G::E, f->shifted(k)), *f).has_value());
        EXPECT_TRUE(exact_quotient(m.act(G::F, f->shifted(k)), *f).has_value());
      }
      const auto disp = submodule_display_factors(m, *f, s);
      ASSERT_TRUE(disp.e_factor && disp.f_factor);
      EXPECT_EQ(*disp.e_factor, LP::monomial(1) - LP(Scalar(sign) * power(q(), s + 1)));
      EXPECT_EQ(*disp.f_factor, LP(Scalar(sign) * power(q(), -s - 1)) - LP::monomial(1));
      EXPECT_EQ(*m.casimir(), Scalar(sign) * (power(q(), s) + power(q(), -s)) / d);
    }
  EXPECT_FALSE(find_invariant_generator(M1::family_iii(q(), Scalar(1), 0, power(q(), 3)), 1).has_value());
  EXPECT_EQ(*find_submodule_generator(q(), 1, 1, 0, Scalar(1)), LP(Scalar(1)) - LP::monomial(1));
}

TEST(RankOne, PrintedRecurrenceDisagreesAtOne) {
  const LP rec = printed_recurrence_generator(q(), 1);
  EXPECT_EQ(rec.max_degree(), 0);
  EXPECT_NE(rec, *find_submodule_generator(q(), 1, 1, 0, Scalar(1)));
}

TEST(RankOne, ReduceDegree) {
  const auto m = M1::family_iii(q(), Scalar(1), 0, power(q(), 3));
  const LP c(Scalar(3));
  EXPECT_EQ(reduce_degree(c, m), c);
  const LP r = reduce_degree(LP::monomial(1) + LP(Scalar(1)), m);
  EXPECT_EQ(r.max_degree(), 0);
  EXPECT_THROW(reduce_degree(LP{}, m), ZeroVector);
  const auto excluded = M1::family_iii(q(), Scalar(1), 0, Scalar(1));
  EXPECT_THROW(reduce_degree(*find_invariant_generator(excluded, 1), excluded), ExcludedParameter);
}

TEST(RankOne, Simplicity) {
  const Scalar mu = sym("mu"), c = sym("c");
  EXPECT_TRUE(is_simple_rank_one(M1::family_i(q(), mu, 0, c)).simple);
  EXPECT_TRUE(is_simple_rank_one(M1::family_ii(q(), mu, 0, c)).simple);
  auto v = is_simple_rank_one(M1::family_iii(q(), Scalar(1), 0, Scalar(1)));
  EXPECT_FALSE(v.simple);
  ASSERT_TRUE(v.witness);
  EXPECT_FALSE(v.checked_bound.has_value());
  v = is_simple_rank_one(M1::family_iii(q(), Scalar(1), 0, power(q(), 3)));
  EXPECT_TRUE(v.simple);
  EXPECT_EQ(v.probes_certified, kDefaultProbeDegree);
  v = is_simple_rank_one(M1::family_iii(q(), Scalar(1), 0, sym("x1")), 5);
  EXPECT_TRUE(v.simple);
  EXPECT_EQ(v.checked_bound, kDefaultExclusionBound);
  v = is_simple_rank_one(M1::family_iii(q(), Scalar(1), 0, -power(q(), -2)));
  EXPECT_FALSE(v.simple);
  EXPECT_EQ(v.witness->max_degree(), 3);
}
