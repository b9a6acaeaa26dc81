#pragma once

// U_q(sl2) with PBW basis F^a K^b E^c, its Casimir element, and the embedding
// of U_c = U_q(sl2)/(Z_q - c) into the quantum torus with nu = q^2.

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "qalg/torus.hpp"

namespace qalg {

template <Field F>
class PBWElement {
 public:
  using Key = std::array<int, 3>;  // exponents of F, K, E
  using Terms = std::map<Key, F>;

  PBWElement() = default;
  PBWElement(const F& c) { add_term(0, 0, 0, c); }  // NOLINT(google-explicit-constructor)
  PBWElement(long c) : PBWElement(F(c)) {}  // NOLINT

  static PBWElement basis(int fexp, int kexp, int eexp, const F& c = F(1)) {
    PBWElement p;
    p.add_term(fexp, kexp, eexp, c);
    return p;
  }
  static PBWElement E() { return basis(0, 0, 1); }
  static PBWElement Fgen() { return basis(1, 0, 0); }
  static PBWElement K(int power = 1) { return basis(0, power, 0); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  F coefficient(int a, int b, int c) const {
    auto it = terms_.find(Key{a, b, c});
    return it == terms_.end() ? F(0) : it->second;
  }

  void add_term(int a, int b, int c, const F& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Key{a, b, c}, coeff);
    if (!inserted) {
      it->second = it->second + coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  PBWElement operator-() const {
    PBWElement r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }
  PBWElement& operator+=(const PBWElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k[0], k[1], k[2], c);
    return *this;
  }
  PBWElement& operator-=(const PBWElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k[0], k[1], k[2], -c);
    return *this;
  }
  friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
  friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
  PBWElement scaled(const F& s) const {
    if (s.is_zero()) return {};
    PBWElement r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
    return r;
  }
  template <class G, class Map>
  PBWElement<G> map_coefficients(Map&& f) const {
    PBWElement<G> r;
    for (const auto& [k, c] : terms_) r.add_term(k[0], k[1], k[2], f(c));
    return r;
  }

  friend bool operator==(const PBWElement& a, const PBWElement& b) { return (a - b).is_zero(); }

 private:
  Terms terms_;
};

enum class Generator { F, K, Kinv, E };

using Word = std::vector<Generator>;

/// Position in the PBW order F < K, K^{-1} < E.
inline int pbw_rank(Generator g) {
  switch (g) {
    case Generator::F: return 0;
    case Generator::K:
    case Generator::Kinv: return 1;
    case Generator::E: return 2;
  }
  return 0;
}

/// Termination measure of the rewriting system, compared lexicographically.
struct RewriteMeasure {
  long inversions = 0;
  long length = 0;
  friend auto operator<=>(const RewriteMeasure&, const RewriteMeasure&) = default;
};

inline RewriteMeasure rewrite_measure(const Word& w) {
  RewriteMeasure m;
  m.length = static_cast<long>(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (pbw_rank(w[i]) > pbw_rank(w[j])) ++m.inversions;
  return m;
}

/// Called for every rewrite step with the word before and each word produced.
using RewriteObserver = std::function<void(const Word& before, const Word& after)>;

template <Field F>
class Uqsl2 {
 public:
  using Element = PBWElement<F>;

  explicit Uqsl2(F q) : q_(std::move(q)), qinv_(q_.inverse()), bracket_(F(1) / (q_ - qinv_)) {}

  const F& q() const { return q_; }

  /// Rewrites a word to the PBW basis with
  ///   E K -> q^-2 K E,  E K^-1 -> q^2 K^-1 E,  K F -> q^-2 F K,  K^-1 F -> q^2 F K^-1,
  ///   E F -> F E + (K - K^-1)/(q - q^-1),  K K^-1 -> 1,  K^-1 K -> 1,
  /// always at the leftmost redex.
  Element normalize(const Word& word, const F& coeff = F(1), const RewriteObserver& observer = {}) const {
    Element out;
    std::vector<std::pair<Word, F>> work{{word, coeff}};
    while (!work.empty()) {
      auto [w, c] = std::move(work.back());
      work.pop_back();
      if (c.is_zero()) continue;
      std::size_t i = 0;
      for (; i + 1 < w.size(); ++i)
        if (is_redex(w[i], w[i + 1])) break;
      if (i + 1 >= w.size()) {
        out += basis_of_normal_word(w).scaled(c);
        continue;
      }
      for (auto& [next, factor] : rewrite_at(w, i)) {
        if (observer) observer(w, next);
        work.emplace_back(std::move(next), c * factor);
      }
    }
    return out;
  }

  Element mul(const Element& a, const Element& b) const {
    Element r;
    for (const auto& [ka, ca] : a.terms())
      for (const auto& [kb, cb] : b.terms()) r += basis_product(ka, kb).scaled(ca * cb);
    return r;
  }

  Element pow(const Element& a, int exponent) const {
    if (exponent < 0) {
      if (a.terms().size() != 1 || a.terms().begin()->first[0] != 0 || a.terms().begin()->first[2] != 0)
        throw NotInvertible();
      const auto& [k, c] = *a.terms().begin();
      return Element::basis(0, k[1] * exponent, 0, power(c.inverse(), -exponent));
    }
    Element r(F(1));
    for (int i = 0; i < exponent; ++i) r = mul(r, a);
    return r;
  }

  Element commutator(const Element& a, const Element& b) const { return mul(a, b) - mul(b, a); }

  /// Z_q = E F + (q^-1 K + q K^-1)/(q - q^-1)^2.
  Element casimir() const {
    const F d = (q_ - qinv_) * (q_ - qinv_);
    return mul(Element::E(), Element::Fgen()) + Element::K(1).scaled(qinv_ / d) + Element::K(-1).scaled(q_ / d);
  }

  /// phi: F -> y, K^{+-1} -> x^{+-1}, E -> (c - (q^-1 x + q x^-1)/(q - q^-1)^2) y^-1.
  TorusElement<F> phi(const Element& a, const F& c) const {
    const QuantumTorus<F> torus(q_);
    const TorusElement<F> image_e = phi_E(c);
    std::vector<TorusElement<F>> e_powers{TorusElement<F>(F(1))};
    TorusElement<F> out;
    for (const auto& [k, coeff] : a.terms()) {
      while (static_cast<int>(e_powers.size()) <= k[2]) e_powers.push_back(torus.mul(e_powers.back(), image_e));
      const TorusElement<F> head = torus.mul(TorusElement<F>::y(k[0]), TorusElement<F>::x(k[1]));
      out += torus.mul(head, e_powers[static_cast<std::size_t>(k[2])]).scaled(coeff);
    }
    return out;
  }

  TorusElement<F> phi_E(const F& c) const {
    const F d = (q_ - qinv_) * (q_ - qinv_);
    TorusElement<F> t = TorusElement<F>::monomial(0, -1, c);
    t.add_term(1, -1, -(qinv_ / d));
    t.add_term(-1, -1, -(q_ / d));
    return t;
  }

 private:
  F q_;
  F qinv_;
  F bracket_;  // 1/(q - q^-1)

  static bool is_redex(Generator a, Generator b) {
    if (pbw_rank(a) > pbw_rank(b)) return true;
    return (a == Generator::K && b == Generator::Kinv) || (a == Generator::Kinv && b == Generator::K);
  }

  std::vector<std::pair<Word, F>> rewrite_at(const Word& w, std::size_t i) const {
    auto splice = [&](std::initializer_list<Generator> mid) {
      Word r(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      r.insert(r.end(), mid);
      r.insert(r.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
      return r;
    };
    using G = Generator;
    const G a = w[i], b = w[i + 1];
    const F q2 = q_ * q_;
    const F qm2 = qinv_ * qinv_;
    if (a == G::E && b == G::F)
      return {{splice({G::F, G::E}), F(1)}, {splice({G::K}), bracket_}, {splice({G::Kinv}), -bracket_}};
    if (a == G::E && b == G::K) return {{splice({G::K, G::E}), qm2}};
    if (a == G::E && b == G::Kinv) return {{splice({G::Kinv, G::E}), q2}};
    if (a == G::K && b == G::F) return {{splice({G::F, G::K}), qm2}};
    if (a == G::Kinv && b == G::F) return {{splice({G::F, G::Kinv}), q2}};
    return {{splice({}), F(1)}};  // K K^-1 or K^-1 K
  }

  static Element basis_of_normal_word(const Word& w) {
    int a = 0, b = 0, c = 0;
    for (Generator g : w) {
      switch (g) {
        case Generator::F: ++a; break;
        case Generator::K: ++b; break;
        case Generator::Kinv: --b; break;
        case Generator::E: ++c; break;
      }
    }
    return Element::basis(a, b, c);
  }

  /// E^c F^d in normal form, built by left multiplication with E using
  ///   E F^i = F^i E + F^{i-1} (alpha_i K - beta_i K^-1)/(q - q^-1),
  ///   alpha_i = sum_{m<i} q^{-2m},  beta_i = sum_{m<i} q^{2m}.
  Element e_power_times_f_power(int c, int d) const {
    Element x = Element::basis(d, 0, 0);
    for (int step = 0; step < c; ++step) {
      Element next;
      for (const auto& [k, coeff] : x.terms()) {
        const int i = k[0], j = k[1], e = k[2];
        next.add_term(i, j, e + 1, coeff * power(q_, -2 * j));
        if (i > 0) {
          F alpha(0), beta(0);
          for (int m = 0; m < i; ++m) {
            alpha = alpha + power(q_, -2 * m);
            beta = beta + power(q_, 2 * m);
          }
          next.add_term(i - 1, j + 1, e, coeff * alpha * bracket_);
          next.add_term(i - 1, j - 1, e, -(coeff * beta * bracket_));
        }
      }
      x = std::move(next);
    }
    return x;
  }

  /// (F^a K^b E^c)(F^d K^e E^f).
  Element basis_product(const typename Element::Key& l, const typename Element::Key& r) const {
    const Element middle = e_power_times_f_power(l[2], r[0]);
    Element out;
    for (const auto& [k, coeff] : middle.terms()) {
      // K^b F^i = q^{-2bi} F^i K^b,  E^k K^e = q^{-2ek} K^e E^k
      const F factor = power(q_, -2 * (l[1] * k[0] + r[1] * k[2]));
      out.add_term(l[0] + k[0], l[1] + k[1] + r[1], k[2] + r[2], coeff * factor);
    }
    return out;
  }
};

}  // namespace qalg
