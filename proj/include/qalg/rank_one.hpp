#pragma once

// U_q(sl2)-modules that are free of rank one over C[K, K^{-1}]:
// V = C[K, K^{-1}] 1 with E 1 = fE(K) 1 and F 1 = fF(K) 1. Then
//   K . p(K) 1 = K p(K) 1,   E . p(K) 1 = p(q^-2 K) fE(K) 1,   F . p(K) 1 = p(q^2 K) fF(K) 1.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qalg/linalg.hpp"
#include "qalg/uqsl2.hpp"

namespace qalg {

/// p(K) 1.
template <Field F>
using KVector = LaurentPolynomial<F>;

enum class Family { I, II, III, Custom };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::I: return "I";
    case Family::II: return "II";
    case Family::III: return "III";
    case Family::Custom: return "custom";
  }
  return "custom";
}

template <Field F>
struct RankOneCheck {
  bool valid = false;
  std::optional<F> casimir;  // set when valid
};

template <Field F>
class RankOneModule {
 public:
  using Vector = KVector<F>;

  /// Family I:  F 1 = mu K^n 1,  E 1 = (q^{2n}/mu)(c - (q^-1 K + q K^-1)/d) K^-n 1.
  static RankOneModule family_i(const F& q, const F& mu, int n, const F& c) {
    const F d = denominator_d(q);
    Vector w = Vector::monomial(1, q.inverse() / d) + Vector::monomial(-1, q / d);
    Vector fe = (Vector(c) - w).shifted(-n).scaled(power(q, 2 * n) / mu);
    RankOneModule m(q, fe, Vector::monomial(n, mu));
    m.family_ = Family::I;
    m.mu_ = mu;
    m.n_ = n;
    m.casimir_ = c;
    return m;
  }

  /// Family II:  E 1 = mu K^n 1,  F 1 = (1/mu)(c - (q K + q^-1 K^-1)/d) q^{-2n} K^-n 1.
  static RankOneModule family_ii(const F& q, const F& mu, int n, const F& c) {
    const F d = denominator_d(q);
    Vector w = Vector::monomial(1, q / d) + Vector::monomial(-1, q.inverse() / d);
    Vector ff = (Vector(c) - w).shifted(-n).scaled(power(q, -2 * n) / mu);
    RankOneModule m(q, Vector::monomial(n, mu), ff);
    m.family_ = Family::II;
    m.mu_ = mu;
    m.n_ = n;
    m.casimir_ = c;
    return m;
  }

  /// Family III:  E 1 = mu K^n q^-1 (K - x1) 1,
  ///              F 1 = -(1/(mu d)) q^{-2n} K^-n (1 - q^-2 x2 K^-1) 1,
  /// with x1 x2 = q^2 and Casimir c = (q^-1 x1 + q x1^-1)/d.
  static RankOneModule family_iii(const F& q, const F& mu, int n, const F& x1) {
    if (x1.is_zero()) throw Error("x1 must be nonzero");
    const F d = denominator_d(q);
    const F qinv = q.inverse();
    const F x2 = q * q / x1;
    Vector fe = (Vector::monomial(1) - Vector(x1)).shifted(n).scaled(mu * qinv);
    Vector ff = (Vector(F(1)) - Vector::monomial(-1, qinv * qinv * x2)).shifted(-n).scaled(-(power(q, -2 * n) / (mu * d)));
    RankOneModule m(q, fe, ff);
    m.family_ = Family::III;
    m.mu_ = mu;
    m.n_ = n;
    m.x1_ = x1;
    m.casimir_ = (qinv * x1 + q / x1) / d;
    return m;
  }

  /// Module given only by its action polynomials; family unset.
  RankOneModule(F q, Vector fE, Vector fF) : q_(std::move(q)), fE_(std::move(fE)), fF_(std::move(fF)) {}

  const F& q() const { return q_; }
  const Vector& fE() const { return fE_; }
  const Vector& fF() const { return fF_; }
  Family family() const { return family_; }
  const std::optional<F>& mu() const { return mu_; }
  int n() const { return n_; }
  const std::optional<F>& x1() const { return x1_; }
  std::optional<F> x2() const {
    if (!x1_) return std::nullopt;
    return q_ * q_ / *x1_;
  }
  const std::optional<F>& casimir() const { return casimir_; }

  Vector act(Generator g, const Vector& v) const {
    switch (g) {
      case Generator::K: return v.shifted(1);
      case Generator::Kinv: return v.shifted(-1);
      case Generator::E: return v.dilated(q_.inverse() * q_.inverse()) * fE_;
      case Generator::F: return v.dilated(q_ * q_) * fF_;
    }
    return v;
  }
  /// Action of a PBW element: F^a K^b E^c acts as F^a(K^b(E^c v)).
  Vector act(const PBWElement<F>& u, const Vector& v) const {
    Vector out;
    for (const auto& [k, coeff] : u.terms()) {
      Vector w = v;
      for (int i = 0; i < k[2]; ++i) w = act(Generator::E, w);
      w = w.shifted(k[1]);
      for (int i = 0; i < k[0]; ++i) w = act(Generator::F, w);
      out += w.scaled(coeff);
    }
    return out;
  }

  static F denominator_d(const F& q) {
    const F t = q - q.inverse();
    return t * t;
  }

 private:
  F q_;
  Vector fE_;
  Vector fF_;
  Family family_ = Family::Custom;
  std::optional<F> mu_;
  int n_ = 0;
  std::optional<F> x1_;
  std::optional<F> casimir_;

  template <Field G>
  friend RankOneModule<G> rank_one_classify(const G& q, const KVector<G>& fE, const KVector<G>& fF);
};

/// [E, F] 1 = (K - K^-1)/(q - q^-1) 1, i.e.
/// fF(q^-2 K) fE(K) - fE(q^2 K) fF(K) = (K - K^-1)/(q - q^-1); then
/// Z_q 1 = (fF(q^-2 K) fE(K) + (q^-1 K + q K^-1)/d) 1 is the constant c.
template <Field F>
RankOneCheck<F> rank_one_check(const F& q, const KVector<F>& fE, const KVector<F>& fF) {
  const F qinv = q.inverse();
  const F d = RankOneModule<F>::denominator_d(q);
  const KVector<F> ef = fF.dilated(qinv * qinv) * fE;
  const KVector<F> fe = fE.dilated(q * q) * fF;
  const KVector<F> bracket = KVector<F>::monomial(1, F(1) / (q - qinv)) + KVector<F>::monomial(-1, -(F(1) / (q - qinv)));
  RankOneCheck<F> out;
  if (!(ef - fe == bracket)) return out;
  const KVector<F> z = ef + KVector<F>::monomial(1, qinv / d) + KVector<F>::monomial(-1, q / d);
  if (!z.is_zero() && (z.size() != 1 || z.min_degree() != 0)) return out;
  out.valid = true;
  out.casimir = z.coefficient(0);
  return out;
}

/// Matches a valid pair against the closed forms I, II, III. The widths of
/// fE and fF add up to 2, so exactly one family can match.
template <Field F>
RankOneModule<F> rank_one_classify(const F& q, const KVector<F>& fE, const KVector<F>& fF) {
  const auto check = rank_one_check(q, fE, fF);
  if (!check.valid) throw InvalidModule();
  const F c = *check.casimir;
  auto matches = [&](const RankOneModule<F>& m) { return m.fE() == fE && m.fF() == fF; };
  if (fF.is_monomial()) {
    auto m = RankOneModule<F>::family_i(q, fF.leading(), fF.min_degree(), c);
    if (matches(m)) return m;
  }
  if (fE.is_monomial()) {
    auto m = RankOneModule<F>::family_ii(q, fE.leading(), fE.min_degree(), c);
    if (matches(m)) return m;
  }
  if (fE.size() == 2 && fE.width() == 1) {
    const int n = fE.min_degree();
    const F mu = q * fE.leading();
    const F x1 = -(fE.lowest() / fE.leading());
    auto m = RankOneModule<F>::family_iii(q, mu, n, x1);
    if (matches(m)) return m;
  }
  throw NotFree();
}

/// Shifts so that the lowest K-degree is 0.
template <Field F>
KVector<F> normalized_support(const KVector<F>& v) {
  return v.is_zero() ? v : v.shifted(-v.min_degree());
}

/// Lowest coefficient scaled to 1 after shifting to min-degree 0.
template <Field F>
KVector<F> normalized_generator(const KVector<F>& v) {
  const KVector<F> s = normalized_support(v);
  return s.scaled(s.lowest().inverse());
}

/// Exact quotient a / b in C[K, K^{-1}], or nullopt.
template <Field F>
std::optional<KVector<F>> exact_quotient(const KVector<F>& a, const KVector<F>& b) {
  if (a.is_zero()) return KVector<F>{};
  KVector<F> quot;
  const KVector<F> rem = reduce_from_top(a.shifted(-a.min_degree()), b.shifted(-b.min_degree()), &quot);
  if (!rem.is_zero()) return std::nullopt;
  return quot.shifted(a.min_degree() - b.min_degree());
}

/// Degree-s f(K) (lowest coefficient 1) whose span C[K^{+-1}] f 1 is stable under
/// E and F, for a module with fE, fF of width 1. Solves the linear system
///   K^-nE E f = (alpha K + beta) f,   K^-nF F f = (gamma K + delta) f,
/// where alpha, beta, gamma, delta are forced by the top and bottom coefficients.
template <Field F>
std::optional<KVector<F>> find_invariant_generator(const RankOneModule<F>& m, int s) {
  if (s <= 0) return std::nullopt;
  const KVector<F>& fe = m.fE();
  const KVector<F>& ff = m.fF();
  if (fe.is_zero() || ff.is_zero() || fe.width() != 1 || ff.width() != 1) return std::nullopt;
  const F& q = m.q();
  const KVector<F> e = fe.shifted(-fe.min_degree());
  const KVector<F> h = ff.shifted(-ff.min_degree());
  const F alpha = e.coefficient(1) * power(q, -2 * s), beta = e.coefficient(0);
  const F gamma = h.coefficient(1) * power(q, 2 * s), delta = h.coefficient(0);

  const auto cols = static_cast<std::size_t>(s) + 1;
  Matrix<F> rows;
  for (int k = 0; k <= s + 1; ++k) {
    std::vector<F> row_e(cols, F(0)), row_f(cols, F(0));
    if (k <= s) {
      row_e[static_cast<std::size_t>(k)] = power(q, -2 * k) * e.coefficient(0) - beta;
      row_f[static_cast<std::size_t>(k)] = power(q, 2 * k) * h.coefficient(0) - delta;
    }
    if (k >= 1) {
      row_e[static_cast<std::size_t>(k - 1)] = row_e[static_cast<std::size_t>(k - 1)] + power(q, -2 * (k - 1)) * e.coefficient(1) - alpha;
      row_f[static_cast<std::size_t>(k - 1)] = row_f[static_cast<std::size_t>(k - 1)] + power(q, 2 * (k - 1)) * h.coefficient(1) - gamma;
    }
    rows.push_back(std::move(row_e));
    rows.push_back(std::move(row_f));
  }
  for (const auto& v : nullspace(rows, cols)) {
    if (v.front().is_zero() || v.back().is_zero()) continue;
    KVector<F> f;
    for (std::size_t i = 0; i < cols; ++i) f.add_term(static_cast<int>(i), v[i]);
    f = normalized_generator(f);
    if (exact_quotient(m.act(Generator::E, f), f) && exact_quotient(m.act(Generator::F, f), f)) return f;
  }
  return std::nullopt;
}

/// Family III module with x1 = sign q^{1-s}, x2 = sign q^{1+s}, and its generator.
template <Field F>
std::optional<KVector<F>> find_submodule_generator(const F& q, int s, int sign, int n, const F& mu) {
  const auto m = RankOneModule<F>::family_iii(q, mu, n, F(sign) * power(q, 1 - s));
  return find_invariant_generator(m, s);
}

/// The two factors of the submodule displays for family III:
///   (1/mu) K^-n q^{2s+1} E f 1 = e_factor(K) f 1,
///   mu d K^{n+1} q^{-2s} F f 1 = f_factor(K) f 1.
template <Field F>
struct DisplayFactors {
  std::optional<KVector<F>> e_factor;
  std::optional<KVector<F>> f_factor;
};

template <Field F>
DisplayFactors<F> submodule_display_factors(const RankOneModule<F>& m, const KVector<F>& f, int s) {
  const F& q = m.q();
  const F mu = m.mu().value_or(F(1));
  const F d = RankOneModule<F>::denominator_d(q);
  const KVector<F> lhs_e = m.act(Generator::E, f).shifted(-m.n()).scaled(power(q, 2 * s + 1) / mu);
  const KVector<F> lhs_f = m.act(Generator::F, f).shifted(m.n() + 1).scaled(mu * d * power(q, -2 * s));
  return {exact_quotient(lhs_e, f), exact_quotient(lhs_f, f)};
}

/// The recurrence a_j = -q^-2 a_{j-1} (q^{s-j} - q^{j-s})/(q^j - q^-j), a_0 = 1,
/// a closed-form candidate for the submodule generator. Kept for comparison only.
template <Field F>
KVector<F> printed_recurrence_generator(const F& q, int s) {
  KVector<F> f;
  F a(1);
  f.add_term(0, a);
  for (int j = 1; j <= s; ++j) {
    a = -(power(q, -2) * a * (power(q, s - j) - power(q, j - s)) / (power(q, j) - power(q, -j)));
    f.add_term(j, a);
  }
  return f;
}

/// One step of the degree reduction for width-1 action polynomials: applies
/// K^-nE E (Case 1), then K^-nF F (Case 2), and reduces the image modulo v.
/// A nonzero remainder has strictly smaller width. If both images are
/// multiples of v the line of v is invariant (Case 3).
template <Field F>
KVector<F> reduce_degree(const KVector<F>& v, const RankOneModule<F>& m) {
  if (v.is_zero()) throw ZeroVector();
  const KVector<F> w = normalized_support(v);
  if (w.max_degree() == 0) return v;
  for (Generator g : {Generator::E, Generator::F}) {
    const KVector<F>& fg = g == Generator::E ? m.fE() : m.fF();
    const KVector<F> u = m.act(g, w).shifted(-fg.min_degree());
    const KVector<F> r = reduce_from_top(u, w);
    if (!r.is_zero()) return normalized_support(r);
  }
  throw ExcludedParameter();
}

/// Result of the simplicity test.
template <Field F>
struct SimplicityVerdict {
  bool simple = false;
  std::optional<KVector<F>> witness;
  /// Largest s checked for x1 = +-q^{1-s}; empty when the test was exact.
  std::optional<int> checked_bound;
  int probes_certified = 0;
};

inline constexpr int kDefaultProbeDegree = 8;
inline constexpr int kDefaultExclusionBound = 64;

namespace detail {

/// x = sign q^k exactly, if so.
inline std::optional<std::pair<int, int>> as_signed_q_power(const Scalar& x, const Scalar& q) {
  if (x.is_zero() || !q.denominator().is_one() || !q.numerator().is_monomial()) return std::nullopt;
  const auto& qe = q.numerator().leading().first;
  std::size_t var = 0;
  while (var < kMaxIndeterminates && qe[var] == 0) ++var;
  if (var == kMaxIndeterminates) return std::nullopt;
  const int k = x.numerator().degree_in(var) - x.denominator().degree_in(var);
  for (int sign : {1, -1})
    if (x == Scalar(sign) * power(q, k)) return std::pair{sign, k};
  return std::nullopt;
}

inline std::optional<std::pair<int, int>> as_signed_q_power(const Rational&, const Rational&) { return std::nullopt; }

template <Field F>
KVector<F> probe_vector(int degree) {
  KVector<F> v;
  for (int i = 0; i <= degree; ++i) v.add_term(i, F(1));
  return v;
}

}  // namespace detail

/// s >= 1 with x1 = +-q^{1-s}, searched exactly when x1 is a signed power of q,
/// otherwise up to `bound`. The second member is the bound used (empty if exact).
template <Field F>
std::pair<std::optional<std::pair<int, int>>, std::optional<int>> excluded_index(const F& x1, const F& q, int bound) {
  if (auto p = detail::as_signed_q_power(x1, q)) {
    const auto [sign, k] = *p;
    if (k <= 0) return {std::pair{1 - k, sign}, std::nullopt};
    return {std::nullopt, std::nullopt};
  }
  for (int s = 1; s <= bound; ++s)
    for (int sign : {1, -1})
      if (x1 == F(sign) * power(q, 1 - s)) return {std::pair{s, sign}, bound};
  return {std::nullopt, bound};
}

/// Reduces the probe vector 1 + K + ... + K^degree to a single K-power; for
/// families I and II through the shift (1/mu) K^-n F (resp. E): p(K) -> p(q^2 K)
/// (resp. p(q^-2 K)), for family III through reduce_degree.
template <Field F>
KVector<F> reduce_to_monomial(const RankOneModule<F>& m, KVector<F> v) {
  v = normalized_support(v);
  while (v.max_degree() > 0) {
    KVector<F> next;
    if (m.family() == Family::I || m.family() == Family::II) {
      const Generator g = m.family() == Family::I ? Generator::F : Generator::E;
      const KVector<F> u = m.act(g, v).shifted(-m.n()).scaled(m.mu()->inverse());
      next = normalized_support(reduce_from_top(u, v));
      if (next.is_zero()) throw Error("shift operator fixed the line of a probe vector");
    } else {
      next = reduce_degree(v, m);
    }
    if (next.max_degree() >= v.max_degree()) throw Error("degree reduction made no progress");
    v = normalized_generator(next);
  }
  return v;
}

template <Field F>
SimplicityVerdict<F> is_simple_rank_one(const RankOneModule<F>& m, int probe_degree = kDefaultProbeDegree,
                                        int exclusion_bound = kDefaultExclusionBound) {
  SimplicityVerdict<F> out;
  if (m.family() == Family::Custom) throw NotFree();
  if (m.family() == Family::III) {
    const auto [excluded, bound] = excluded_index(*m.x1(), m.q(), exclusion_bound);
    out.checked_bound = bound;
    if (excluded) {
      out.simple = false;
      out.witness = find_invariant_generator(m, excluded->first);
      return out;
    }
  }
  for (int degree = 1; degree <= probe_degree; ++degree) {
    reduce_to_monomial(m, detail::probe_vector<F>(degree));
    ++out.probes_certified;
  }
  out.simple = true;
  return out;
}

}  // namespace qalg
