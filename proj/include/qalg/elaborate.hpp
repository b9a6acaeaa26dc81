#pragma once

// Evaluation of parsed expressions in a target ring. Scalar symbols (q,
// lambda, mu, c, x1) and integers become scalars; generator symbols must
// belong to the target ring; products use the ring's multiplication.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "qalg/expr.hpp"
#include "qalg/localization.hpp"
#include "qalg/uqsl2.hpp"

namespace qalg {

enum class RingKind { Uq, Torus, B };

inline std::string ring_name(RingKind r) {
  switch (r) {
    case RingKind::Uq: return "uq";
    case RingKind::Torus: return "torus";
    case RingKind::B: return "B";
  }
  return "uq";
}

inline RingKind parse_ring_kind(std::string_view name) {
  if (name == "uq") return RingKind::Uq;
  if (name == "torus") return RingKind::Torus;
  if (name == "B") return RingKind::B;
  throw Error("unknown ring '" + std::string(name) + "'");
}

namespace rings {

inline bool is_generator_name(std::string_view n) { return n == "E" || n == "F" || n == "K" || n == "x" || n == "y"; }

/// U_q(sl2) with generators E, F, K.
struct Uq {
  using Value = PBWElement<Scalar>;
  Uqsl2<Scalar> algebra;
  explicit Uq(const Scalar& q) : algebra(q) {}
  static std::string name() { return "uq"; }
  std::optional<Value> generator(std::string_view n) const {
    if (n == "E") return Value::E();
    if (n == "F") return Value::Fgen();
    if (n == "K") return Value::K();
    return std::nullopt;
  }
  Value mul(const Value& a, const Value& b) const { return algebra.mul(a, b); }
  Value pow(const Value& a, int e) const { return algebra.pow(a, e); }
  Value divide(const Value& a, const Value& d) const {
    if (d.is_zero()) throw DivisionByZero();
    if (d.terms().size() != 1 || d.terms().begin()->first != Value::Key{0, 0, 0}) throw NonScalarDenominator();
    return a.scaled(d.terms().begin()->second.inverse());
  }
};

/// Quantum torus with generators x, y.
struct Torus {
  using Value = TorusElement<Scalar>;
  QuantumTorus<Scalar> torus;
  explicit Torus(const Scalar& q) : torus(q) {}
  static std::string name() { return "torus"; }
  std::optional<Value> generator(std::string_view n) const {
    if (n == "x") return Value::x();
    if (n == "y") return Value::y();
    return std::nullopt;
  }
  Value mul(const Value& a, const Value& b) const { return torus.mul(a, b); }
  Value pow(const Value& a, int e) const { return torus.pow(a, e); }
  Value divide(const Value& a, const Value& d) const {
    if (d.is_zero()) throw DivisionByZero();
    if (d.terms().size() != 1 || d.terms().begin()->first != Value::Key{0, 0}) throw NonScalarDenominator();
    return a.scaled(d.terms().begin()->second.inverse());
  }
};

/// Localization B = C(x)[y, y^-1]; y-free denominators are allowed.
struct Localized {
  using Value = BElement<Scalar>;
  LocalizedTorus<Scalar> ring;
  explicit Localized(const Scalar& q) : ring(q) {}
  static std::string name() { return "B"; }
  std::optional<Value> generator(std::string_view n) const {
    if (n == "x") return Value::x();
    if (n == "y") return Value::y();
    return std::nullopt;
  }
  Value mul(const Value& a, const Value& b) const { return ring.mul(a, b); }
  Value pow(const Value& a, int e) const { return ring.pow(a, e); }
  Value divide(const Value& a, const Value& d) const {
    if (d.is_zero()) throw DivisionByZero();
    if (d.terms().size() != 1 || d.terms().begin()->first != 0) throw NonScalarDenominator();
    return ring.mul(a, ring.inverse(d));
  }
};

/// Laurent polynomials in one commuting variable (K or x).
struct Laurent {
  using Value = LaurentPolynomial<Scalar>;
  std::string var;
  std::string name() const { return var + "-Laurent"; }
  std::optional<Value> generator(std::string_view n) const {
    if (n == var) return Value::monomial(1);
    return std::nullopt;
  }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value pow(const Value& a, int e) const {
    Value base = a;
    if (e < 0) {
      if (!a.is_monomial()) throw NotInvertible();
      base = Value::monomial(-a.min_degree(), a.leading().inverse());
      e = -e;
    }
    Value r(Scalar(1));
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
  }
  Value divide(const Value& a, const Value& d) const {
    if (d.is_zero()) throw DivisionByZero();
    if (!d.is_monomial() || d.min_degree() != 0) throw NonScalarDenominator();
    return a.scaled(d.leading().inverse());
  }
};

/// Rational functions in x.
struct RatFunc {
  using Value = RationalFunction<Scalar>;
  static std::string name() { return "x-rational"; }
  std::optional<Value> generator(std::string_view n) const {
    if (n == "x") return Value::x();
    return std::nullopt;
  }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value pow(const Value& a, int e) const {
    Value base = e < 0 ? a.inverse() : a;
    Value r(Scalar(1));
    for (int i = 0; i < (e < 0 ? -e : e); ++i) r = r * base;
    return r;
  }
  Value divide(const Value& a, const Value& d) const { return a / d; }
};

/// The scalar field itself.
struct Scalars {
  using Value = Scalar;
  static std::string name() { return "scalars"; }
  std::optional<Value> generator(std::string_view) const { return std::nullopt; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value pow(const Value& a, int e) const { return power(a, e); }
  Value divide(const Value& a, const Value& d) const { return a / d; }
};

}  // namespace rings

template <class Ring>
typename Ring::Value evaluate_in(const Expr& e, const Ring& ring, const ScalarContext& ctx = default_context()) {
  using Value = typename Ring::Value;
  switch (e.kind) {
    case Expr::Kind::Sym: {
      if (ctx.index_of(e.name)) return Value(Scalar::symbol(e.name, ctx));
      if (auto g = ring.generator(e.name)) return *g;
      if (rings::is_generator_name(e.name)) throw IllegalSymbolForRing(e.name, ring.name());
      throw UnknownSymbol(e.name);
    }
    case Expr::Kind::Int: return Value(Scalar(e.value));
    case Expr::Kind::Add: return evaluate_in(*e.lhs, ring, ctx) + evaluate_in(*e.rhs, ring, ctx);
    case Expr::Kind::Sub: return evaluate_in(*e.lhs, ring, ctx) - evaluate_in(*e.rhs, ring, ctx);
    case Expr::Kind::Neg: return -evaluate_in(*e.lhs, ring, ctx);
    case Expr::Kind::Mul: return ring.mul(evaluate_in(*e.lhs, ring, ctx), evaluate_in(*e.rhs, ring, ctx));
    case Expr::Kind::Div: return ring.divide(evaluate_in(*e.lhs, ring, ctx), evaluate_in(*e.rhs, ring, ctx));
    case Expr::Kind::Pow: return ring.pow(evaluate_in(*e.lhs, ring, ctx), e.exponent);
  }
  throw Error("malformed expression");
}

using RingElement = std::variant<PBWElement<Scalar>, TorusElement<Scalar>, BElement<Scalar>>;

/// Evaluates `e` in U_q(sl2), the quantum torus or B.
inline RingElement elaborate(const Expr& e, RingKind ring, const ScalarContext& ctx = default_context()) {
  const Scalar q = Scalar::symbol("q", ctx);
  switch (ring) {
    case RingKind::Uq: return evaluate_in(e, rings::Uq(q), ctx);
    case RingKind::Torus: return evaluate_in(e, rings::Torus(q), ctx);
    case RingKind::B: return evaluate_in(e, rings::Localized(q), ctx);
  }
  throw Error("unknown ring");
}

inline PBWElement<Scalar> parse_uq(std::string_view src, const ScalarContext& ctx = default_context()) {
  return evaluate_in(*parse_expr(src), rings::Uq(Scalar::symbol("q", ctx)), ctx);
}
inline TorusElement<Scalar> parse_torus(std::string_view src, const ScalarContext& ctx = default_context()) {
  return evaluate_in(*parse_expr(src), rings::Torus(Scalar::symbol("q", ctx)), ctx);
}
inline BElement<Scalar> parse_b(std::string_view src, const ScalarContext& ctx = default_context()) {
  return evaluate_in(*parse_expr(src), rings::Localized(Scalar::symbol("q", ctx)), ctx);
}
inline LaurentPolynomial<Scalar> parse_laurent(std::string_view src, const std::string& var,
                                               const ScalarContext& ctx = default_context()) {
  return evaluate_in(*parse_expr(src), rings::Laurent{var}, ctx);
}
inline RationalFunction<Scalar> parse_ratfunc(std::string_view src, const ScalarContext& ctx = default_context()) {
  return evaluate_in(*parse_expr(src), rings::RatFunc{}, ctx);
}
inline Scalar parse_scalar(std::string_view src, const ScalarContext& ctx = default_context()) {
  return evaluate_in(*parse_expr(src), rings::Scalars{}, ctx);
}

}  // namespace qalg
