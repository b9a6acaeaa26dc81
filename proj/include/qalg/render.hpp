#pragma once

// Canonical text forms of ring elements. The output uses explicit `*`, `^`
// with integer exponents and parenthesized non-monomial coefficients, so it
// parses back to the same element.

#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qalg/localization.hpp"
#include "qalg/uqsl2.hpp"

namespace qalg {

namespace detail {

inline std::string power_string(const std::string& name, int exponent) {
  if (exponent == 0) return "";
  if (exponent == 1) return name;
  return name + "^" + std::to_string(exponent);
}

inline std::string join_product(const std::vector<std::string>& factors) {
  std::string out;
  for (const auto& f : factors) {
    if (f.empty()) continue;
    if (!out.empty()) out += "*";
    out += f;
  }
  return out;
}

/// coeff * mono, with 1 and -1 absorbed and non-atomic coefficients in parentheses.
template <class F>
std::string term_string(const F& coeff, const std::string& mono, const ScalarContext& ctx) {
  std::string c;
  if constexpr (std::is_same_v<F, Scalar>)
    c = to_string(coeff, ctx);
  else
    c = to_string(coeff);
  const bool atomic = is_atomic(coeff);
  if (mono.empty()) return atomic ? c : "(" + c + ")";
  if (c == "1") return mono;
  if (c == "-1") return "-" + mono;
  return (atomic ? c : "(" + c + ")") + "*" + mono;
}

/// Joins rendered terms, turning a leading '-' into a binary minus.
inline std::string join_sum(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i].front() == '-')
      out += " - " + terms[i].substr(1);
    else
      out += " + " + terms[i];
  }
  return out;
}

}  // namespace detail

/// Laurent polynomial in `var`, descending degree.
template <Field F>
std::string to_string(const LaurentPolynomial<F>& p, const std::string& var, const ScalarContext& ctx = default_context()) {
  std::vector<std::string> terms;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back(detail::term_string(it->second, detail::power_string(var, it->first), ctx));
  return detail::join_sum(terms);
}

/// Polynomial in `var`, descending degree.
template <Field F>
std::string to_string(const Polynomial<F>& p, const std::string& var, const ScalarContext& ctx = default_context()) {
  std::vector<std::string> terms;
  for (int i = p.degree(); i >= 0; --i)
    if (!p.coefficient(i).is_zero()) terms.push_back(detail::term_string(p.coefficient(i), detail::power_string(var, i), ctx));
  return detail::join_sum(terms);
}

/// Rational function in x: a polynomial, a Laurent polynomial when the
/// denominator is a power of x, or (num)/(den).
template <Field F>
std::string to_string(const RationalFunction<F>& r, const ScalarContext& ctx = default_context()) {
  if (r.is_laurent()) return to_string(r.to_laurent(), "x", ctx);
  return "(" + to_string(r.numerator(), "x", ctx) + ")/(" + to_string(r.denominator(), "x", ctx) + ")";
}

/// Terms ordered by (xexp, yexp).
template <Field F>
std::string to_string(const TorusElement<F>& t, const ScalarContext& ctx = default_context()) {
  std::vector<std::string> terms;
  for (const auto& [k, c] : t.terms())
    terms.push_back(detail::term_string(c, detail::join_product({detail::power_string("x", k.first), detail::power_string("y", k.second)}), ctx));
  return detail::join_sum(terms);
}

/// Terms ordered by (fexp, kexp, eexp).
template <Field F>
std::string to_string(const PBWElement<F>& u, const ScalarContext& ctx = default_context()) {
  std::vector<std::string> terms;
  for (const auto& [k, c] : u.terms())
    terms.push_back(detail::term_string(
        c, detail::join_product({detail::power_string("F", k[0]), detail::power_string("K", k[1]), detail::power_string("E", k[2])}),
        ctx));
  return detail::join_sum(terms);
}

/// Terms r_j(x) y^j ordered by j.
template <Field F>
std::string to_string(const BElement<F>& b, const ScalarContext& ctx = default_context()) {
  std::vector<std::string> terms;
  for (const auto& [j, r] : b.terms()) {
    const std::string y = detail::power_string("y", j);
    std::string coeff = to_string(r, ctx);
    const bool single = r.is_laurent() && r.to_laurent().is_monomial() && is_atomic(r.to_laurent().leading());
    if (y.empty())
      terms.push_back(single ? coeff : "(" + coeff + ")");
    else if (coeff == "1")
      terms.push_back(y);
    else if (coeff == "-1")
      terms.push_back("-" + y);
    else
      terms.push_back((single ? coeff : "(" + coeff + ")") + "*" + y);
  }
  return detail::join_sum(terms);
}

}  // namespace qalg
