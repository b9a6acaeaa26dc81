#pragma once

// Sparse multivariate polynomials over Z with a fixed small number of
// indeterminates, and their greatest common divisor.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qalg {

inline constexpr std::size_t kMaxIndeterminates = 8;
/// Slot kept free of named symbols; used internally for the variable x.
inline constexpr std::size_t kAuxiliaryIndeterminate = kMaxIndeterminates - 1;
inline constexpr std::size_t kMaxSymbols = kMaxIndeterminates - 1;

using Exponents = std::array<std::int32_t, kMaxIndeterminates>;

inline std::int64_t total_degree(const Exponents& e) {
  std::int64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

/// Graded lexicographic order, earlier indeterminates dominate.
inline bool grlex_greater(const Exponents& a, const Exponents& b) {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : e) h = (h ^ static_cast<std::uint32_t>(x)) * 1099511628211ULL;
    return static_cast<std::size_t>(h);
  }
};

struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const { return grlex_greater(a, b); }
};

class MPolynomial {
 public:
  using Term = std::pair<Exponents, mpz_class>;

  MPolynomial() = default;
  explicit MPolynomial(const mpz_class& c) {
    if (c != 0) terms_.emplace_back(Exponents{}, c);
  }
  explicit MPolynomial(long c) : MPolynomial(mpz_class(c)) {}

  static MPolynomial monomial(const Exponents& e, const mpz_class& c) {
    MPolynomial p;
    if (c != 0) p.terms_.emplace_back(e, c);
    return p;
  }
  static MPolynomial from_terms(std::vector<Term> terms) {
    MPolynomial p;
    p.terms_ = std::move(terms);
    p.sort_and_combine();
    return p;
  }
  static MPolynomial variable(std::size_t index, std::int32_t power = 1) {
    Exponents e{};
    e[index] = power;
    return monomial(e, 1);
  }

  /// Terms sorted by descending grlex order, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].first) == 0);
  }
  bool is_one() const { return is_constant() && !terms_.empty() && terms_[0].second == 1; }
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& leading() const { return terms_.front(); }
  mpz_class constant_value() const {
    if (terms_.empty() || total_degree(terms_.back().first) != 0) return 0;
    return terms_.back().second;
  }

  std::uint32_t variables_mask() const {
    std::uint32_t mask = 0;
    for (const auto& [e, c] : terms_)
      for (std::size_t i = 0; i < kMaxIndeterminates; ++i)
        if (e[i] != 0) mask |= (1u << i);
    return mask;
  }

  std::int32_t degree_in(std::size_t var) const {
    std::int32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }

  /// Coefficients as a polynomial in `var`; index i holds the coefficient of var^i.
  std::vector<MPolynomial> coefficients_in(std::size_t var) const {
    std::vector<MPolynomial> out(static_cast<std::size_t>(degree_in(var)) + 1);
    for (const auto& [e, c] : terms_) {
      Exponents r = e;
      r[var] = 0;
      out[static_cast<std::size_t>(e[var])].terms_.emplace_back(r, c);
    }
    for (auto& p : out) p.sort_and_combine();
    return out;
  }

  static MPolynomial from_coefficients(std::size_t var, const std::vector<MPolynomial>& coeffs) {
    MPolynomial p;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      for (const auto& [e, c] : coeffs[i].terms_) {
        Exponents r = e;
        r[var] = static_cast<std::int32_t>(i);
        p.terms_.emplace_back(r, c);
      }
    p.sort_and_combine();
    return p;
  }

  mpz_class content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  MPolynomial operator-() const {
    MPolynomial r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  MPolynomial& operator+=(const MPolynomial& o) { return *this = merge(*this, o, 1); }
  MPolynomial& operator-=(const MPolynomial& o) { return *this = merge(*this, o, -1); }
  friend MPolynomial operator+(const MPolynomial& a, const MPolynomial& b) { return merge(a, b, 1); }
  friend MPolynomial operator-(const MPolynomial& a, const MPolynomial& b) { return merge(a, b, -1); }

  friend MPolynomial operator*(const MPolynomial& a, const MPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1) return b.times_term(a.terms_[0].first, a.terms_[0].second);
    if (b.terms_.size() == 1) return a.times_term(b.terms_[0].first, b.terms_[0].second);
    std::unordered_map<Exponents, mpz_class, ExponentsHash> acc;
    acc.reserve(a.terms_.size() + b.terms_.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (std::size_t i = 0; i < kMaxIndeterminates; ++i) e[i] = ea[i] + eb[i];
        mpz_class& slot = acc[e];
        mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      }
    MPolynomial r;
    r.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
      if (c != 0) r.terms_.emplace_back(e, std::move(c));
    r.sort_terms();
    return r;
  }
  MPolynomial& operator*=(const MPolynomial& o) { return *this = *this * o; }

  MPolynomial times_scalar(const mpz_class& c) const {
    if (c == 0) return {};
    MPolynomial r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }

  MPolynomial times_term(const Exponents& e, const mpz_class& c) const {
    if (c == 0) return {};
    MPolynomial r;
    r.terms_.reserve(terms_.size());
    for (const auto& [te, tc] : terms_) {
      Exponents s;
      for (std::size_t i = 0; i < kMaxIndeterminates; ++i) s[i] = te[i] + e[i];
      r.terms_.emplace_back(s, tc * c);
    }
    return r;
  }

  /// Divides every coefficient by `c`; requires exact divisibility.
  MPolynomial divided_by_integer(const mpz_class& c) const {
    MPolynomial r = *this;
    for (auto& t : r.terms_) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), c.get_mpz_t());
    return r;
  }

  /// Exact quotient this/d, or nullopt when d does not divide this.
  std::optional<MPolynomial> divide_exact(const MPolynomial& d) const {
    assert(!d.is_zero());
    if (is_zero()) return MPolynomial{};
    if (d.is_constant()) {
      const mpz_class& c = d.terms_[0].second;
      for (const auto& t : terms_)
        if (!mpz_divisible_p(t.second.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
      return divided_by_integer(c);
    }
    const auto& [de, dc] = d.leading();
    std::map<Exponents, mpz_class, GrlexGreater> rem(terms_.begin(), terms_.end());
    std::vector<Term> quot;
    while (!rem.empty()) {
      const auto top = rem.begin();
      if (top->second == 0) {
        rem.erase(top);
        continue;
      }
      Exponents e;
      for (std::size_t i = 0; i < kMaxIndeterminates; ++i) {
        e[i] = top->first[i] - de[i];
        if (e[i] < 0) return std::nullopt;
      }
      if (!mpz_divisible_p(top->second.get_mpz_t(), dc.get_mpz_t())) return std::nullopt;
      mpz_class c;
      mpz_divexact(c.get_mpz_t(), top->second.get_mpz_t(), dc.get_mpz_t());
      rem.erase(top);
      for (std::size_t k = 1; k < d.terms_.size(); ++k) {
        Exponents s;
        for (std::size_t i = 0; i < kMaxIndeterminates; ++i) s[i] = d.terms_[k].first[i] + e[i];
        mpz_class& slot = rem[s];
        mpz_submul(slot.get_mpz_t(), c.get_mpz_t(), d.terms_[k].second.get_mpz_t());
      }
      quot.emplace_back(e, std::move(c));
    }
    MPolynomial q;
    q.terms_ = std::move(quot);
    return q;
  }

  /// Leading coefficient made positive.
  MPolynomial sign_normalized() const {
    if (!is_zero() && leading().second < 0) return -*this;
    return *this;
  }

  friend bool operator==(const MPolynomial& a, const MPolynomial& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term> terms_;

  /// Sorts distinct terms into grlex-descending order.
  void sort_terms() {
    std::vector<std::pair<std::int64_t, std::size_t>> keys(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) keys[i] = {total_degree(terms_[i].first), i};
    std::sort(keys.begin(), keys.end(), [&](const auto& x, const auto& y) {
      if (x.first != y.first) return x.first > y.first;
      return terms_[x.second].first > terms_[y.second].first;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& k : keys) out.push_back(std::move(terms_[k.second]));
    terms_ = std::move(out);
  }

  void sort_and_combine() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first)
        out.back().second += t.second;
      else
        out.push_back(std::move(t));
      if (out.back().second == 0) out.pop_back();
    }
    terms_ = std::move(out);
  }

  static MPolynomial merge(const MPolynomial& a, const MPolynomial& b, int sign) {
    MPolynomial r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() ||
          (i < a.terms_.size() && grlex_greater(a.terms_[i].first, b.terms_[j].first))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || grlex_greater(b.terms_[j].first, a.terms_[i].first)) {
        r.terms_.emplace_back(b.terms_[j].first, sign > 0 ? b.terms_[j].second : mpz_class(-b.terms_[j].second));
        ++j;
      } else {
        mpz_class c = sign > 0 ? mpz_class(a.terms_[i].second + b.terms_[j].second)
                               : mpz_class(a.terms_[i].second - b.terms_[j].second);
        if (c != 0) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }
};

namespace detail {

inline MPolynomial monomial_gcd(const MPolynomial& m, const MPolynomial& p) {
  Exponents e = m.leading().first;
  for (const auto& [te, tc] : p.terms())
    for (std::size_t i = 0; i < kMaxIndeterminates; ++i) e[i] = std::min(e[i], te[i]);
  mpz_class g;
  const mpz_class pc = p.content();
  mpz_gcd(g.get_mpz_t(), m.leading().second.get_mpz_t(), pc.get_mpz_t());
  return MPolynomial::monomial(e, g);
}

inline int highest_variable(std::uint32_t mask) {
  int v = -1;
  for (int i = 0; i < static_cast<int>(kMaxIndeterminates); ++i)
    if (mask & (1u << i)) v = i;
  return v;
}

using Dense = std::vector<MPolynomial>;  // coefficients in the main variable, low to high

inline void trim(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

}  // namespace detail

MPolynomial gcd(const MPolynomial& a, const MPolynomial& b);

namespace detail {

inline MPolynomial content_of(const Dense& p) {
  MPolynomial g;
  for (const auto& c : p) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

inline Dense primitive_part(const Dense& p) {
  const MPolynomial c = content_of(p);
  Dense out;
  out.reserve(p.size());
  for (const auto& x : p) out.push_back(*x.divide_exact(c));
  if (!out.empty() && out.back().leading().second < 0)
    for (auto& x : out) x = -x;
  return out;
}

/// Sparse pseudo-remainder of a by b (deg a >= deg b >= 1).
inline Dense pseudo_remainder(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const MPolynomial& lb = b.back();
  while (a.size() >= b.size()) {
    const MPolynomial la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& x : a) x = x * lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

}  // namespace detail

namespace detail {

inline mpz_class max_norm(const MPolynomial& p) {
  mpz_class m = 0;
  for (const auto& [e, c] : p.terms())
    if (abs(c) > m) m = abs(c);
  return m;
}

/// p with indeterminate `var` replaced by the integer xi.
inline MPolynomial evaluate_at(const MPolynomial& p, std::size_t var, const mpz_class& xi) {
  std::vector<MPolynomial::Term> out;
  out.reserve(p.terms().size());
  for (const auto& [e, c] : p.terms()) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(e[var]));
    Exponents r = e;
    r[var] = 0;
    out.emplace_back(r, c * f);
  }
  return MPolynomial::from_terms(std::move(out));
}

/// Inverse of evaluate_at for coefficients of absolute value < xi/2: the
/// xi-adic expansion with symmetric digits.
inline MPolynomial xi_adic_lift(MPolynomial gamma, std::size_t var, const mpz_class& xi) {
  const mpz_class half = xi / 2;
  std::vector<MPolynomial::Term> out;
  for (std::int32_t i = 0; !gamma.is_zero(); ++i) {
    std::vector<MPolynomial::Term> digit, rest;
    for (const auto& [e, c] : gamma.terms()) {
      mpz_class g;
      mpz_fdiv_r(g.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
      if (g > half) g -= xi;
      if (g != 0) {
        Exponents r = e;
        r[var] = i;
        out.emplace_back(r, g);
      }
      mpz_class next = c - g;
      mpz_divexact(next.get_mpz_t(), next.get_mpz_t(), xi.get_mpz_t());
      if (next != 0) rest.emplace_back(e, std::move(next));
    }
    gamma = MPolynomial::from_terms(std::move(rest));
    if (i > 4096) return {};
  }
  return MPolynomial::from_terms(std::move(out));
}

MPolynomial prs_gcd(const MPolynomial& a, const MPolynomial& b);

/// Heuristic gcd (evaluation at a large integer, xi-adic reconstruction,
/// verification by exact division); nullopt when every attempt failed.
inline std::optional<MPolynomial> heuristic_gcd(const MPolynomial& a, const MPolynomial& b, int depth = 0);

}  // namespace detail

/// Greatest common divisor in Z[vars], with positive leading coefficient.
/// Tries the heuristic gcd first and falls back to a recursive primitive
/// polynomial remainder sequence in the highest indeterminate present.
inline MPolynomial gcd(const MPolynomial& a, const MPolynomial& b) {
  if (a.is_zero()) return b.sign_normalized();
  if (b.is_zero()) return a.sign_normalized();
  if (a.is_constant() || b.is_constant()) {
    mpz_class g;
    const mpz_class ca = a.content(), cb = b.content();
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return MPolynomial(g);
  }
  if (a.is_monomial()) return detail::monomial_gcd(a, b);
  if (b.is_monomial()) return detail::monomial_gcd(b, a);
  if (a == b) return a.sign_normalized();
  if (auto g = detail::heuristic_gcd(a, b)) return *g;
  return detail::prs_gcd(a, b);
}

namespace detail {

inline std::optional<MPolynomial> heuristic_gcd(const MPolynomial& a0, const MPolynomial& b0, int depth) {
  if (depth > 8) return std::nullopt;
  const mpz_class ca = a0.content(), cb = b0.content();
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  const MPolynomial a = a0.divided_by_integer(ca), b = b0.divided_by_integer(cb);
  const int v = highest_variable(a.variables_mask() | b.variables_mask());
  if (v < 0) return MPolynomial(c);
  const auto var = static_cast<std::size_t>(v);
  if (a.degree_in(var) == 0 || b.degree_in(var) == 0) return std::nullopt;
  mpz_class xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const MPolynomial av = evaluate_at(a, var, xi), bv = evaluate_at(b, var, xi);
    if (!av.is_zero() && !bv.is_zero()) {
      MPolynomial gamma;
      if (av.is_constant() || bv.is_constant() || av.is_monomial() || bv.is_monomial()) {
        gamma = gcd(av, bv);
      } else if (auto g = heuristic_gcd(av, bv, depth + 1)) {
        gamma = *g;
      } else {
        return std::nullopt;
      }
      MPolynomial cand = xi_adic_lift(gamma, var, xi);
      if (!cand.is_zero()) {
        cand = cand.divided_by_integer(cand.content()).sign_normalized();
        if (a.divide_exact(cand) && b.divide_exact(cand)) return (cand * MPolynomial(c)).sign_normalized();
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

inline MPolynomial prs_gcd(const MPolynomial& a, const MPolynomial& b) {
  const int v = highest_variable(a.variables_mask() | b.variables_mask());
  const auto var = static_cast<std::size_t>(v);
  Dense pa = a.coefficients_in(var);
  Dense pb = b.coefficients_in(var);
  const MPolynomial ca = content_of(pa);
  const MPolynomial cb = content_of(pb);
  const MPolynomial cont = gcd(ca, cb);
  for (auto& x : pa) x = *x.divide_exact(ca);
  for (auto& x : pb) x = *x.divide_exact(cb);
  if (pa.size() == 1 || pb.size() == 1) return cont.sign_normalized();
  if (pa.size() < pb.size()) std::swap(pa, pb);

  Dense g;
  for (;;) {
    Dense r = pseudo_remainder(pa, pb);
    if (r.empty()) {
      g = pb;
      break;
    }
    if (r.size() == 1) {
      g = {MPolynomial(1)};
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r);
  }
  g = primitive_part(g);
  return (cont * MPolynomial::from_coefficients(var, g)).sign_normalized();
}

}  // namespace detail

inline MPolynomial lcm(const MPolynomial& a, const MPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return (a * *b.divide_exact(gcd(a, b))).sign_normalized();
}

}  // namespace qalg
