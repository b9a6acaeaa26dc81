#pragma once

// Univariate polynomials and rational functions in x over a coefficient field.

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qalg/laurent.hpp"

namespace qalg {

/// Dense univariate polynomial, coefficient i belongs to x^i. No trailing zeros.
template <Field F>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const F& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) c_.push_back(c);
  }
  Polynomial(long c) : Polynomial(F(c)) {}  // NOLINT
  explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(int degree, const F& c = F(1)) {
    std::vector<F> v(static_cast<std::size_t>(degree) + 1, F(0));
    v.back() = c;
    return Polynomial(std::move(v));
  }

  const std::vector<F>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const F& leading() const { return c_.back(); }
  F coefficient(int i) const { return i >= 0 && i <= degree() ? c_[static_cast<std::size_t>(i)] : F(0); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == F(1); }
  /// Single term a*x^k.
  bool is_monomial() const {
    if (c_.empty()) return false;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<F> v(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(v));
  }
  Polynomial scaled(const F& s) const {
    if (s.is_zero()) return {};
    Polynomial r = *this;
    for (auto& x : r.c_) x = x * s;
    return r;
  }
  /// p(a*x).
  Polynomial dilated(const F& a) const {
    Polynomial r = *this;
    F factor(1);
    for (auto& x : r.c_) {
      x = x * factor;
      factor = factor * a;
    }
    return r;
  }
  Polynomial monic() const { return is_zero() ? *this : scaled(leading().inverse()); }

  F evaluate(const F& x) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Euclidean division over the field.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<F> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, F(0));
    std::vector<F> rem = a.c_;
    const F inv = b.leading().inverse();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      const auto top = static_cast<std::size_t>(k + b.degree());
      const F f = rem[top] * inv;
      quot[static_cast<std::size_t>(k)] = f;
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        rem[j + static_cast<std::size_t>(k)] = rem[j + static_cast<std::size_t>(k)] - f * b.c_[j];
    }
    rem.resize(static_cast<std::size_t>(b.degree()));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  std::vector<F> c_;

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
};

namespace detail {

/// Exponent of the lowest nonzero term.
template <Field F>
int valuation(const Polynomial<F>& p) {
  int i = 0;
  while (p.coefficient(i).is_zero()) ++i;
  return i;
}

/// gcd when one argument is a single term: a power of x.
template <Field F>
std::optional<Polynomial<F>> monomial_gcd(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  if (a.is_monomial() || b.is_monomial()) return Polynomial<F>::monomial(std::min(valuation(a), valuation(b)));
  return std::nullopt;
}

}  // namespace detail

/// Monic greatest common divisor.
template <Field F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  if (auto m = detail::monomial_gcd(a, b)) return *m;
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace detail {

/// Arithmetic modulo the prime 2^31 - 1.
inline constexpr std::uint64_t kModulus = 2147483647ULL;

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  b %= kModulus;
  for (; e; e >>= 1, b = b * b % kModulus)
    if (e & 1) r = r * b % kModulus;
  return r;
}

inline std::uint64_t mod_reduce(const mpz_class& c) {
  return static_cast<std::uint64_t>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(kModulus)));
}

/// Image of p in F_p[x] with every other indeterminate specialized.
inline std::vector<std::uint64_t> specialize_to_x(const MPolynomial& p, const std::array<std::uint64_t, kMaxIndeterminates>& at) {
  std::vector<std::uint64_t> out;
  for (const auto& [e, c] : p.terms()) {
    std::uint64_t v = mod_reduce(c);
    for (std::size_t i = 0; i < kMaxIndeterminates; ++i)
      if (i != kAuxiliaryIndeterminate && e[i] != 0) v = v * mod_pow(at[i], static_cast<std::uint64_t>(e[i])) % kModulus;
    const auto k = static_cast<std::size_t>(e[kAuxiliaryIndeterminate]);
    if (out.size() <= k) out.resize(k + 1, 0);
    out[k] = (out[k] + v) % kModulus;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

/// Degree of gcd(a, b) in F_p[x]; both nonzero.
inline int mod_gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const std::uint64_t inv = mod_pow(b.back(), kModulus - 2);
    while (a.size() >= b.size()) {
      const std::uint64_t f = a.back() * inv % kModulus;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = (a[i + shift] + kModulus - f * b[i] % kModulus) % kModulus;
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

/// True when a specialization of the scalar indeterminates modulo a prime keeps
/// both x-degrees and has coprime images. The x-degree of a gcd can only grow
/// under such a specialization, so the gcd over Q(q, ...)[x] is then 1.
inline bool certainly_coprime_in_x(const MPolynomial& a, const MPolynomial& b) {
  static constexpr std::array<std::uint64_t, 3> kBases{7919, 104729, 15485863};
  for (std::uint64_t base : kBases) {
    std::array<std::uint64_t, kMaxIndeterminates> at{};
    for (std::size_t i = 0; i < kMaxIndeterminates; ++i) at[i] = base + 37 * i;
    const auto pa = specialize_to_x(a, at), pb = specialize_to_x(b, at);
    if (static_cast<int>(pa.size()) - 1 != a.degree_in(kAuxiliaryIndeterminate) ||
        static_cast<int>(pb.size()) - 1 != b.degree_in(kAuxiliaryIndeterminate))
      continue;
    return mod_gcd_degree(pa, pb) == 0;
  }
  return false;
}

}  // namespace detail

/// Monic gcd over Q(q, ...)[x]. Euclid over the fraction field blows up the
/// coefficients, so x is embedded as the reserved indeterminate and the
/// multivariate primitive-PRS gcd over Z[q, ..., x] is used instead.
inline Polynomial<Scalar> gcd(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (auto m = detail::monomial_gcd(a, b)) return *m;
  auto embed = [](const Polynomial<Scalar>& p) {
    MPolynomial den(1);
    for (const Scalar& c : p.coefficients()) den = lcm(den, c.denominator());
    std::vector<MPolynomial> coeffs;
    for (const Scalar& c : p.coefficients()) coeffs.push_back(c.numerator() * *den.divide_exact(c.denominator()));
    return MPolynomial::from_coefficients(kAuxiliaryIndeterminate, coeffs);
  };
  const MPolynomial ea = embed(a), eb = embed(b);
  if (detail::certainly_coprime_in_x(ea, eb)) return Polynomial<Scalar>(Scalar(1));
  const MPolynomial g = gcd(ea, eb);
  std::vector<Scalar> coeffs;
  for (const MPolynomial& c : g.coefficients_in(kAuxiliaryIndeterminate)) coeffs.push_back(Scalar::from_polynomial(c));
  return Polynomial<Scalar>(std::move(coeffs)).monic();
}

/// Element of F(x) as num/den with den monic and gcd(num, den) = 1.
template <Field F>
class RationalFunction {
 public:
  RationalFunction() : den_(F(1)) {}
  RationalFunction(const F& c) : num_(c), den_(F(1)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : RationalFunction(F(c)) {}  // NOLINT
  RationalFunction(Polynomial<F> p) : num_(std::move(p)), den_(F(1)) {}  // NOLINT
  RationalFunction(Polynomial<F> num, Polynomial<F> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
  }
  static RationalFunction x(int power = 1) {
    if (power >= 0) return RationalFunction(Polynomial<F>::monomial(power));
    return RationalFunction(Polynomial<F>(F(1)), Polynomial<F>::monomial(-power));
  }
  static RationalFunction from_laurent(const LaurentPolynomial<F>& p) {
    if (p.is_zero()) return {};
    const int lo = std::min(0, p.min_degree());
    std::vector<F> v(static_cast<std::size_t>(p.max_degree() - lo) + 1, F(0));
    for (const auto& [k, c] : p.terms()) v[static_cast<std::size_t>(k - lo)] = c;
    return RationalFunction(Polynomial<F>(std::move(v)), Polynomial<F>::monomial(-lo));
  }

  const Polynomial<F>& numerator() const { return num_; }
  const Polynomial<F>& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  F constant_value() const { return num_.coefficient(0); }

  /// Laurent polynomial in x, i.e. an element of S when nonzero.
  bool is_laurent() const { return den_.is_monomial(); }
  LaurentPolynomial<F> to_laurent() const {
    assert(is_laurent());
    LaurentPolynomial<F> p;
    const int shift = den_.degree();
    for (int i = 0; i <= num_.degree(); ++i) p.add_term(i - shift, num_.coefficient(i));
    return p;
  }

  RationalFunction inverse() const {
    if (is_zero()) throw DivisionByZero();
    return RationalFunction(den_, num_);
  }
  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return RationalFunction(a.num_ * b.num_);
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  RationalFunction scaled(const F& s) const {
    if (s.is_zero()) return {};
    RationalFunction r = *this;
    r.num_ = r.num_.scaled(s);
    return r;
  }
  /// r(a*x); stays reduced, only the denominator needs rescaling.
  RationalFunction dilated(const F& a) const {
    RationalFunction r;
    r.num_ = num_.dilated(a);
    r.den_ = den_.dilated(a);
    const F lead = r.den_.leading();
    r.den_ = r.den_.scaled(lead.inverse());
    r.num_ = r.num_.scaled(lead.inverse());
    return r;
  }
  F evaluate(const F& x) const {
    const F d = den_.evaluate(x);
    if (d.is_zero()) throw PoleAtPoint();
    return num_.evaluate(x) / d;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

 private:
  Polynomial<F> num_;
  Polynomial<F> den_;

  void normalize() {
    if (num_.is_zero()) {
      den_ = Polynomial<F>(F(1));
      return;
    }
    if (den_.degree() > 0) {
      const Polynomial<F> g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
      }
    }
    const F lead = den_.leading();
    if (!(lead == F(1))) {
      const F inv = lead.inverse();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }
};

}  // namespace qalg
