#pragma once

#include <algorithm>
#include <concepts>
#include <map>
#include <utility>

#include "qalg/scalar.hpp"

namespace qalg {

/// What the algorithms need from a coefficient field.
template <class F>
concept Field = std::regular<F> && std::constructible_from<F, long> && requires(const F& a, const F& b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a.inverse() } -> std::convertible_to<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
};

/// Sparse Laurent polynomial sum_k c_k t^k in one variable.
template <Field F>
class LaurentPolynomial {
 public:
  using Terms = std::map<int, F>;

  LaurentPolynomial() = default;
  LaurentPolynomial(const F& c) { add_term(0, c); }  // NOLINT(google-explicit-constructor)
  LaurentPolynomial(long c) : LaurentPolynomial(F(c)) {}  // NOLINT

  static LaurentPolynomial monomial(int exponent, const F& c = F(1)) {
    LaurentPolynomial p;
    p.add_term(exponent, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int min_degree() const { return terms_.begin()->first; }
  int max_degree() const { return terms_.rbegin()->first; }
  /// max - min degree; only meaningful for nonzero polynomials.
  int width() const { return max_degree() - min_degree(); }
  const F& leading() const { return terms_.rbegin()->second; }
  const F& lowest() const { return terms_.begin()->second; }
  F coefficient(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? F(0) : it->second;
  }
  bool is_monomial() const { return terms_.size() == 1; }

  void add_term(int exponent, const F& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LaurentPolynomial operator-() const {
    LaurentPolynomial r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }
  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (const auto& [i, ci] : a.terms_)
      for (const auto& [j, cj] : b.terms_) r.add_term(i + j, ci * cj);
    return r;
  }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

  LaurentPolynomial scaled(const F& s) const {
    if (s.is_zero()) return {};
    LaurentPolynomial r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
    return r;
  }
  /// Multiplication by t^k.
  LaurentPolynomial shifted(int k) const {
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }
  /// p(a*t).
  LaurentPolynomial dilated(const F& a) const {
    LaurentPolynomial r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * power(a, k));
    return r;
  }
  F evaluate(const F& t) const {
    F sum(0);
    for (const auto& [k, c] : terms_) sum = sum + c * power(t, k);
    return sum;
  }
  template <class G, class Map>
  LaurentPolynomial<G> map_coefficients(Map&& f) const {
    LaurentPolynomial<G> r;
    for (const auto& [k, c] : terms_) r.add_term(k, f(c));
    return r;
  }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [k, c] : a.terms_) {
      if (k != it->first || !(c == it->second)) return false;
      ++it;
    }
    return true;
  }

 private:
  Terms terms_;
};

/// Remainder of `u` after eliminating its top terms against `v` while
/// deg(u) >= deg(v). Returns the quotient through `quotient` when given.
template <Field F>
LaurentPolynomial<F> reduce_from_top(LaurentPolynomial<F> u, const LaurentPolynomial<F>& v,
                                     LaurentPolynomial<F>* quotient = nullptr) {
  while (!u.is_zero() && u.max_degree() >= v.max_degree()) {
    const int shift = u.max_degree() - v.max_degree();
    const F factor = u.leading() / v.leading();
    if (quotient) quotient->add_term(shift, factor);
    u -= v.shifted(shift).scaled(factor);
  }
  return u;
}

}  // namespace qalg
