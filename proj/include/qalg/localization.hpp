#pragma once

// B = S^{-1} R = C(x)[y, y^{-1}], with y r(x) = r(nu x) y. Coefficients are
// written on the left: sum_j r_j(x) y^j.

#include <limits>
#include <map>
#include <utility>

#include "qalg/torus.hpp"

namespace qalg {

template <Field F>
class BElement {
 public:
  using Coefficient = RationalFunction<F>;
  using Terms = std::map<int, Coefficient>;

  /// y-width of the zero element.
  static constexpr int kZeroWidth = std::numeric_limits<int>::min();

  BElement() = default;
  BElement(const Coefficient& r) { add_term(0, r); }  // NOLINT(google-explicit-constructor)
  BElement(const F& c) { add_term(0, Coefficient(c)); }  // NOLINT
  BElement(long c) : BElement(F(c)) {}  // NOLINT

  static BElement monomial(int yexp, const Coefficient& r = Coefficient(F(1))) {
    BElement b;
    b.add_term(yexp, r);
    return b;
  }
  static BElement y(int power = 1) { return monomial(power); }
  static BElement x(int power = 1) { return monomial(0, Coefficient::x(power)); }
  static BElement from_torus(const TorusElement<F>& t) {
    BElement b;
    for (const auto& [j, f] : t.by_y_degree()) b.add_term(j, Coefficient::from_laurent(f));
    return b;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_degree() const { return terms_.begin()->first; }
  int max_degree() const { return terms_.rbegin()->first; }
  int width() const { return is_zero() ? kZeroWidth : max_degree() - min_degree(); }
  Coefficient coefficient(int j) const {
    auto it = terms_.find(j);
    return it == terms_.end() ? Coefficient() : it->second;
  }

  void add_term(int yexp, const Coefficient& r) {
    if (r.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(yexp, r);
    if (!inserted) {
      it->second = it->second + r;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  BElement operator-() const {
    BElement r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }
  BElement& operator+=(const BElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  BElement& operator-=(const BElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend BElement operator+(BElement a, const BElement& b) { return a += b; }
  friend BElement operator-(BElement a, const BElement& b) { return a -= b; }
  /// Left multiplication by a coefficient r(x).
  BElement left_scaled(const Coefficient& r) const {
    BElement out;
    for (const auto& [k, c] : terms_) out.add_term(k, r * c);
    return out;
  }

  friend bool operator==(const BElement& a, const BElement& b) { return (a - b).is_zero(); }

 private:
  Terms terms_;
};

template <Field F>
struct BDivision {
  BElement<F> quotient;
  BElement<F> remainder;
};

template <Field F>
class LocalizedTorus {
 public:
  using Element = BElement<F>;
  using Coefficient = RationalFunction<F>;

  explicit LocalizedTorus(F q) : q_(std::move(q)), nu_(q_ * q_) {}

  const F& q() const { return q_; }
  const F& nu() const { return nu_; }

  /// r(x) with x replaced by nu^k x, i.e. y^k r(x) = shift(r, k) y^k.
  Coefficient shift(const Coefficient& r, int k) const { return k == 0 ? r : r.dilated(power(nu_, k)); }

  Element mul(const Element& a, const Element& b) const {
    Element r;
    for (const auto& [i, ri] : a.terms())
      for (const auto& [j, sj] : b.terms()) r.add_term(i + j, ri * shift(sj, i));
    return r;
  }

  Element pow(const Element& a, int exponent) const {
    if (exponent < 0) return pow(inverse(a), -exponent);
    Element r(F(1));
    for (int i = 0; i < exponent; ++i) r = mul(r, a);
    return r;
  }

  /// Units are exactly the nonzero monomials r(x) y^k.
  bool is_unit(const Element& a) const { return a.terms().size() == 1; }

  /// (r y^k)^{-1} = y^{-k} r^{-1} = r^{-1}(nu^{-k} x) y^{-k}.
  Element inverse(const Element& a) const {
    if (!is_unit(a)) throw NotInvertible();
    const auto& [k, r] = *a.terms().begin();
    return Element::monomial(-k, shift(r.inverse(), -k));
  }

  /// Every width-1 element is irreducible: widths add under multiplication and
  /// width-0 elements are units.
  bool is_irreducible_width1(const Element& a) const {
    const int w = a.width();
    if (w == Element::kZeroWidth || w == 0) return false;
    if (w == 1) return true;
    throw WidthTooLarge();
  }

  /// Left division a = quot * d + rem with width(rem) < width(d), eliminating
  /// from the top y-degree until rem also lies below the top degree of d.
  BDivision<F> divmod(const Element& a, const Element& d) const {
    if (d.is_zero()) throw DivisionByZeroElement();
    const int top = d.max_degree();
    const Coefficient& lead = d.coefficient(top);
    BDivision<F> out{Element{}, a};
    Element& rem = out.remainder;
    while (!rem.is_zero() && (rem.max_degree() >= top || rem.width() >= d.width())) {
      const int t = rem.max_degree();
      const int k = t - top;
      const Element term = Element::monomial(k, rem.coefficient(t) / shift(lead, k));
      out.quotient += term;
      rem -= mul(term, d);
    }
    return out;
  }

  Element commutator(const Element& a, const Element& b) const { return mul(a, b) - mul(b, a); }

 private:
  F q_;
  F nu_;
};

/// The ambient module B/B alpha for alpha of y-width 1, identified with C(x)
/// through the classes of r(x)*1. Normalizing alpha to f(x) y - g(x) gives
/// y = f^{-1} g mod B alpha.
template <Field F>
class QuotientModule {
 public:
  using Coefficient = RationalFunction<F>;

  QuotientModule(const LocalizedTorus<F>& ring, const BElement<F>& alpha) : ring_(ring) {
    if (alpha.width() != 1) throw Error("quotient action needs alpha of y-width 1");
    // y^{-k} alpha = a_{k+1}(nu^{-k} x) y + a_k(nu^{-k} x)
    const int k = alpha.min_degree();
    f_ = ring_.shift(alpha.coefficient(k + 1), -k);
    g_ = -ring_.shift(alpha.coefficient(k), -k);
  }

  const Coefficient& f() const { return f_; }
  const Coefficient& g() const { return g_; }

  /// y^j acting on v.
  Coefficient act_y(Coefficient v, int j) const {
    for (; j > 0; --j) v = ring_.shift(v, 1) * g_ / f_;
    for (; j < 0; ++j) v = ring_.shift(v * f_ / g_, -1);
    return v;
  }

  Coefficient act(const BElement<F>& e, const Coefficient& v) const {
    Coefficient out;
    for (const auto& [j, r] : e.terms()) out += r * act_y(v, j);
    return out;
  }
  Coefficient act(const TorusElement<F>& e, const Coefficient& v) const { return act(BElement<F>::from_torus(e), v); }

 private:
  LocalizedTorus<F> ring_;
  Coefficient f_;
  Coefficient g_;
};

}  // namespace qalg
