#pragma once

// The coefficient field Q(q, lambda, mu, ...): exact rational functions in a
// few commuting indeterminates. "Generic" parameters are free indeterminates.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qalg/errors.hpp"
#include "qalg/mpolynomial.hpp"
#include "qalg/rational.hpp"

namespace qalg {

/// Ordered set of indeterminate names. The order fixes the grlex monomial
/// order used for sign normalization and printing.
class ScalarContext {
 public:
  ScalarContext() : ScalarContext({"q", "lambda", "mu", "c", "x1"}) {}
  explicit ScalarContext(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxSymbols) throw Error("too many indeterminates");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j]) throw Error("duplicate indeterminate '" + names_[i] + "'");
    if (!index_of("q")) throw Error("scalar context must contain q");
  }

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }
  std::size_t require(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw UnknownSymbol(std::string(name));
  }

  friend bool operator==(const ScalarContext& a, const ScalarContext& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

inline const ScalarContext& default_context() {
  static const ScalarContext ctx;
  return ctx;
}

/// Quotient of two integer polynomials, kept reduced (multivariate GCD),
/// with integer content 1 and a positive leading denominator coefficient.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(const mpz_class& v) : num_(v), den_(1) {}  // NOLINT
  Scalar(const Rational& r) : num_(r.numerator()), den_(r.denominator()) {}  // NOLINT

  static Scalar fraction(MPolynomial num, MPolynomial den) {
    if (den.is_zero()) throw DivisionByZero();
    Scalar s;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.normalize();
    return s;
  }
  static Scalar from_polynomial(MPolynomial p) {
    Scalar s;
    s.num_ = std::move(p);
    return s;
  }
  /// The indeterminate at `index`, raised to an integer power.
  static Scalar indeterminate(std::size_t index, int power = 1) {
    Scalar s;
    if (power >= 0)
      s.num_ = MPolynomial::variable(index, power);
    else
      s.den_ = MPolynomial::variable(index, -power);
    return s;
  }
  static Scalar symbol(std::string_view name, const ScalarContext& ctx = default_context()) {
    return indeterminate(ctx.require(name));
  }

  const MPolynomial& numerator() const { return num_; }
  const MPolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_negative() const { return !num_.is_zero() && num_.leading().second < 0; }
  std::uint32_t variables_mask() const { return num_.variables_mask() | den_.variables_mask(); }

  Scalar inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar s;
    s.num_ = den_;
    s.den_ = num_;
    if (s.den_.leading().second < 0) {
      s.num_ = -s.num_;
      s.den_ = -s.den_;
    }
    return s;
  }

  Scalar operator-() const {
    Scalar s = *this;
    s.num_ = -s.num_;
    return s;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return fraction(a.num_ + b.num_, a.den_);
    const MPolynomial g = gcd(a.den_, b.den_);
    const MPolynomial bd = *b.den_.divide_exact(g);
    const MPolynomial ad = *a.den_.divide_exact(g);
    return fraction(a.num_ * bd + b.num_ * ad, a.den_ * bd);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return from_polynomial(a.num_ * b.num_);
    // Cross-cancel before multiplying; the result is then already reduced.
    const MPolynomial g1 = gcd(a.num_, b.den_);
    const MPolynomial g2 = gcd(b.num_, a.den_);
    Scalar s;
    s.num_ = *a.num_.divide_exact(g1) * *b.num_.divide_exact(g2);
    s.den_ = *a.den_.divide_exact(g2) * *b.den_.divide_exact(g1);
    s.fix_sign();
    return s;
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  /// Identically equal as rational functions: a.num*b.den - b.num*a.den == 0.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
  }

 private:
  MPolynomial num_;
  MPolynomial den_;

  void fix_sign() {
    if (den_.leading().second < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = MPolynomial(1);
      return;
    }
    if (!den_.is_one()) {
      const MPolynomial g = gcd(num_, den_);
      if (!g.is_one()) {
        num_ = *num_.divide_exact(g);
        den_ = *den_.divide_exact(g);
      }
    }
    fix_sign();
  }
};

/// Integer power with negative exponents through inversion.
template <class F>
F power(const F& base, long exponent) {
  if (exponent < 0) return power(base.inverse(), -exponent);
  F result(1);
  F b = base;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1u) result = result * b;
    e >>= 1;
    if (e != 0) b = b * b;
  }
  return result;
}

/// Point of evaluation: one optional rational per indeterminate index.
using Valuation = std::vector<std::optional<Rational>>;

inline Valuation make_valuation(const std::map<std::string, Rational>& bindings,
                                const ScalarContext& ctx = default_context()) {
  Valuation v(ctx.size());
  for (const auto& [name, value] : bindings) v[ctx.require(name)] = value;
  return v;
}

namespace detail {

inline Rational evaluate_polynomial(const MPolynomial& p, const Valuation& at, const ScalarContext& ctx) {
  Rational sum;
  for (const auto& [e, c] : p.terms()) {
    Rational term(c);
    for (std::size_t i = 0; i < kMaxIndeterminates; ++i) {
      if (e[i] == 0) continue;
      if (i >= at.size() || !at[i]) throw UnboundSymbol(i < ctx.size() ? ctx.names()[i] : "#" + std::to_string(i));
      term *= power(*at[i], e[i]);
    }
    sum += term;
  }
  return sum;
}

}  // namespace detail

/// Value of `a` at a rational point. Ring homomorphism away from poles.
inline Rational evaluate(const Scalar& a, const Valuation& at, const ScalarContext& ctx = default_context()) {
  const Rational den = detail::evaluate_polynomial(a.denominator(), at, ctx);
  if (den.is_zero()) throw PoleAtPoint();
  return detail::evaluate_polynomial(a.numerator(), at, ctx) / den;
}

inline Rational evaluate(const Scalar& a, const std::map<std::string, Rational>& bindings,
                         const ScalarContext& ctx = default_context()) {
  return evaluate(a, make_valuation(bindings, ctx), ctx);
}

// ---------------------------------------------------------------------------
// Text rendering: integer coefficients, `^` for powers, explicit `*`,
// fractions as `(num)/(den)`, terms in descending grlex order.

namespace detail {

/// Renders terms whose exponents may be negative, in descending grlex order.
inline std::string render_terms(std::vector<MPolynomial::Term> terms, const ScalarContext& ctx) {
  if (terms.empty()) return "0";
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return grlex_greater(a.first, b.first); });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = c < 0;
    const mpz_class mag = negative ? mpz_class(-c) : c;
    std::string mono;
    for (std::size_t i = 0; i < kMaxIndeterminates; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < ctx.size() ? ctx.names()[i] : "#" + std::to_string(i);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    std::string term;
    if (mono.empty())
      term = mag.get_str();
    else if (mag == 1)
      term = mono;
    else
      term = mag.get_str() + "*" + mono;
    if (first)
      out = negative ? "-" + term : term;
    else
      out += negative ? " - " + term : " + " + term;
    first = false;
  }
  return out;
}

/// Denominator of the form m (a monomial with coefficient 1).
inline bool is_monic_monomial(const MPolynomial& p) { return p.is_monomial() && p.leading().second == 1; }

/// num/den as terms with negative exponents; den must be a monic monomial.
inline std::vector<MPolynomial::Term> laurent_terms(const Scalar& s) {
  const Exponents& de = s.denominator().leading().first;
  std::vector<MPolynomial::Term> out;
  for (const auto& [e, c] : s.numerator().terms()) {
    Exponents r;
    for (std::size_t i = 0; i < kMaxIndeterminates; ++i) r[i] = e[i] - de[i];
    out.emplace_back(r, c);
  }
  return out;
}

}  // namespace detail

inline std::string to_string(const MPolynomial& p, const ScalarContext& ctx = default_context()) {
  return detail::render_terms(p.terms(), ctx);
}

/// Integer polynomials print as sums of terms. A monomial denominator is
/// folded into negative exponents (q - q^-1); other fractions print as
/// (num)/(den).
inline std::string to_string(const Scalar& s, const ScalarContext& ctx = default_context()) {
  if (s.denominator().is_one()) return to_string(s.numerator(), ctx);
  if (detail::is_monic_monomial(s.denominator())) return detail::render_terms(detail::laurent_terms(s), ctx);
  return "(" + to_string(s.numerator(), ctx) + ")/(" + to_string(s.denominator(), ctx) + ")";
}

inline std::string to_string(const Rational& r) { return r.str(); }

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

/// True when the printed form is a single signed monomial (no parentheses needed
/// inside a product).
inline bool is_atomic(const Scalar& s) {
  return s.numerator().terms().size() <= 1 && (s.denominator().is_one() || detail::is_monic_monomial(s.denominator()));
}
inline bool is_atomic(const Rational& r) { return r.denominator() == 1; }

}  // namespace qalg
