#pragma once

// Weight modules M_lambda = C[y, y^{-1}] 1_lambda of the quantum torus:
// x . y^k 1 = lambda nu^{-k} y^k 1, y acts by multiplication.

#include <vector>

#include "qalg/torus.hpp"

namespace qalg {

/// sum_k c_k y^k 1_lambda.
template <Field F>
using MLambdaVector = LaurentPolynomial<F>;

template <Field F>
class MLambdaModule {
 public:
  using Vector = MLambdaVector<F>;

  MLambdaModule(F q, F lambda) : q_(std::move(q)), nu_(q_ * q_), lambda_(std::move(lambda)) {
    if (lambda_.is_zero()) throw Error("lambda must be nonzero");
  }

  const F& lambda() const { return lambda_; }

  static Vector generator() { return Vector::monomial(0); }

  /// x^a y^b . y^k 1 = lambda^a nu^{-a(b+k)} y^{b+k} 1.
  Vector act(const TorusElement<F>& e, const Vector& v) const {
    Vector out;
    for (const auto& [key, c] : e.terms()) {
      const auto [a, b] = key;
      for (const auto& [k, d] : v.terms())
        out.add_term(b + k, c * d * power(lambda_, a) * power(nu_, -static_cast<long>(a) * (b + k)));
    }
    return out;
  }

  /// Ring elements e_0, ..., e_r with e_r(...(e_0 v)) = 1_lambda. The first
  /// element is the polynomial prod_{i != top}(1 - lambda^{-1} nu^i x), which
  /// annihilates every y^i 1 except the top one (the Vandermonde solution for
  /// that row); the last is a scalar multiple of y^{-top}.
  std::vector<TorusElement<F>> recover_generator(const Vector& v) const {
    if (v.is_zero()) throw ZeroVector();
    if (v == generator()) return {};
    std::vector<TorusElement<F>> steps;
    const int top = v.max_degree();
    F surviving = v.leading();
    if (v.size() > 1) {
      LaurentPolynomial<F> p(F(1));
      const F lambda_inv = lambda_.inverse();
      for (const auto& [i, c] : v.terms()) {
        if (i == top) continue;
        LaurentPolynomial<F> factor(F(1));
        factor.add_term(1, -(lambda_inv * power(nu_, i)));
        p *= factor;
      }
      // p acts on y^top 1 as p(lambda nu^{-top}).
      surviving = surviving * p.evaluate(lambda_ * power(nu_, -top));
      steps.push_back(TorusElement<F>::from_x_laurent(p));
    }
    steps.push_back(TorusElement<F>::monomial(0, -top, surviving.inverse()));
    return steps;
  }

 private:
  F q_;
  F nu_;
  F lambda_;
};

}  // namespace qalg
