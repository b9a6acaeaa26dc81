#pragma once

// The quantum torus R = C_nu[x^{+-1}, y^{+-1}] with y x = nu x y, nu = q^2.
// Elements are kept in the normal form sum c_ab x^a y^b (x left of y).

#include <map>
#include <utility>

#include "qalg/ratfunc.hpp"

namespace qalg {

template <Field F>
class TorusElement {
 public:
  using Key = std::pair<int, int>;  // (x exponent, y exponent)
  using Terms = std::map<Key, F>;

  TorusElement() = default;
  TorusElement(const F& c) { add_term(0, 0, c); }  // NOLINT(google-explicit-constructor)
  TorusElement(long c) : TorusElement(F(c)) {}  // NOLINT

  static TorusElement monomial(int xexp, int yexp, const F& c = F(1)) {
    TorusElement t;
    t.add_term(xexp, yexp, c);
    return t;
  }
  static TorusElement x(int power = 1) { return monomial(power, 0); }
  static TorusElement y(int power = 1) { return monomial(0, power); }
  /// Element of C[x^{+-1}] viewed in R.
  static TorusElement from_x_laurent(const LaurentPolynomial<F>& p) {
    TorusElement t;
    for (const auto& [k, c] : p.terms()) t.add_term(k, 0, c);
    return t;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  F coefficient(int xexp, int yexp) const {
    auto it = terms_.find({xexp, yexp});
    return it == terms_.end() ? F(0) : it->second;
  }

  void add_term(int xexp, int yexp, const F& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Key{xexp, yexp}, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// The x-polynomial coefficients f_i(x) of sum f_i(x) y^i.
  std::map<int, LaurentPolynomial<F>> by_y_degree() const {
    std::map<int, LaurentPolynomial<F>> out;
    for (const auto& [key, c] : terms_) out[key.second].add_term(key.first, c);
    return out;
  }

  TorusElement operator-() const {
    TorusElement r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }
  TorusElement& operator+=(const TorusElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  TorusElement& operator-=(const TorusElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
  }
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  TorusElement scaled(const F& s) const {
    if (s.is_zero()) return {};
    TorusElement r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
    return r;
  }
  template <class G, class Map>
  TorusElement<G> map_coefficients(Map&& f) const {
    TorusElement<G> r;
    for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, f(c));
    return r;
  }

  friend bool operator==(const TorusElement& a, const TorusElement& b) { return (a - b).is_zero(); }

 private:
  Terms terms_;
};

/// Left Ore witness for (s, a): b*s = h*a with h in S.
template <Field F>
struct OreWitness {
  LaurentPolynomial<F> h;
  TorusElement<F> b;
};

/// Multiplication in the quantum torus for a fixed q.
template <Field F>
class QuantumTorus {
 public:
  using Element = TorusElement<F>;

  explicit QuantumTorus(F q) : q_(std::move(q)), nu_(q_ * q_) {}

  const F& q() const { return q_; }
  const F& nu() const { return nu_; }

  /// (x^a y^b)(x^c y^d) = nu^{bc} x^{a+c} y^{b+d}.
  Element mul(const Element& a, const Element& b) const {
    Element r;
    std::map<long, F> nu_powers;
    for (const auto& [ka, ca] : a.terms())
      for (const auto& [kb, cb] : b.terms()) {
        const long e = static_cast<long>(ka.second) * kb.first;
        auto it = nu_powers.find(e);
        if (it == nu_powers.end()) it = nu_powers.emplace(e, power(nu_, e)).first;
        r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb * it->second);
      }
    return r;
  }

  /// Integer power; negative exponents only for single-term elements.
  Element pow(const Element& a, int exponent) const {
    if (exponent < 0) return pow(inverse(a), -exponent);
    Element r(F(1));
    for (int i = 0; i < exponent; ++i) r = mul(r, a);
    return r;
  }

  /// Units of R are the nonzero scalar multiples of x^a y^b.
  Element inverse(const Element& a) const {
    if (a.terms().size() != 1) throw NotInvertible();
    const auto& [k, c] = *a.terms().begin();
    // (x^a y^b)^{-1} = y^{-b} x^{-a} = nu^{ab} x^{-a} y^{-b}
    return Element::monomial(-k.first, -k.second, c.inverse() * power(nu_, static_cast<long>(k.first) * k.second));
  }

  Element commutator(const Element& a, const Element& b) const { return mul(a, b) - mul(b, a); }

  /// Left Ore condition for S = C[x^{+-1}] \ {0}: returns (h, b) with b s = h a,
  /// h = prod_{f_i != 0} s(nu^i x) and b_i = h f_i / s(nu^i x).
  OreWitness<F> ore_left_multiple(const LaurentPolynomial<F>& s, const Element& a) const {
    if (s.is_zero()) throw NotInS();
    if (a.is_zero()) return {s, Element{}};
    const auto parts = a.by_y_degree();
    std::map<int, LaurentPolynomial<F>> shifted;
    for (const auto& [i, f] : parts) shifted.emplace(i, s.dilated(power(nu_, i)));
    OreWitness<F> w;
    w.h = LaurentPolynomial<F>(F(1));
    for (const auto& [i, si] : shifted) w.h *= si;
    for (const auto& [i, f] : parts) {
      LaurentPolynomial<F> bi = f;
      for (const auto& [j, sj] : shifted)
        if (j != i) bi *= sj;
      for (const auto& [k, c] : bi.terms()) w.b.add_term(k, i, c);
    }
    return w;
  }

  OreWitness<F> ore_left_multiple(const RationalFunction<F>& s, const Element& a) const {
    if (s.is_zero() || !s.is_laurent()) throw NotInS();
    return ore_left_multiple(s.to_laurent(), a);
  }

 private:
  F q_;
  F nu_;
};

}  // namespace qalg
