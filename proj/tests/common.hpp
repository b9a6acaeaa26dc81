#pragma once

#include <random>

#include "qalg/qalg.hpp"

namespace qalg::test {

inline Scalar sym(const char* n) { return Scalar::symbol(n); }
inline Scalar q() { return sym("q"); }
inline Scalar d_of(const Scalar& q) { return (q - q.inverse()) * (q - q.inverse()); }

using T = TorusElement<Scalar>;
using U = PBWElement<Scalar>;
using B = BElement<Scalar>;
using RF = RationalFunction<Scalar>;
using LP = LaurentPolynomial<Scalar>;

/// Random scalar mixing integers, powers of q, lambda and simple fractions.
inline Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3), e(-2, 2), kind(0, 3);
  Scalar s = Scalar(c(rng)) * power(q(), e(rng));
  switch (kind(rng)) {
    case 1: s = s + sym("lambda"); break;
    case 2: s = s / (q() + Scalar(c(rng) == 0 ? 2 : 1)); break;
    case 3: s = s * (q() - q().inverse()); break;
    default: break;
  }
  return s;
}

inline U random_uq(std::mt19937& rng, int terms = 3) {
  std::uniform_int_distribution<int> n(0, 2), k(-2, 2);
  U u;
  for (int i = 0; i < terms; ++i) u.add_term(n(rng), k(rng), n(rng), random_scalar(rng));
  return u;
}

inline T random_torus(std::mt19937& rng, int terms = 3) {
  std::uniform_int_distribution<int> e(-2, 2);
  T t;
  for (int i = 0; i < terms; ++i) t.add_term(e(rng), e(rng), random_scalar(rng));
  return t;
}

inline RF random_ratfunc(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(-2, 2), shape(0, 2);
  LP p;
  for (int j = 0; j < 2; ++j) p.add_term(e(rng), random_scalar(rng));
  RF r = RF::from_laurent(p);
  if (shape(rng) == 0) r = r / (RF::x() + RF(random_scalar(rng) + Scalar(5)));
  return r;
}

inline B random_b(std::mt19937& rng, int terms = 2) {
  std::uniform_int_distribution<int> e(-2, 2);
  B b;
  for (int i = 0; i < terms; ++i) b.add_term(e(rng), random_ratfunc(rng));
  return b;
}

}  // namespace qalg::test
