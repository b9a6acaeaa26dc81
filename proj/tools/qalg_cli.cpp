#include "qalg_cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qalg/qalg.hpp"

namespace qalg::cli {
namespace {

using json = nlohmann::ordered_json;
using U = PBWElement<Scalar>;
using T = TorusElement<Scalar>;
using B = BElement<Scalar>;
using RF = RationalFunction<Scalar>;
using LP = LaurentPolynomial<Scalar>;

Scalar q_symbol() { return Scalar::symbol("q"); }

json to_json(const U& u) {
  json terms = json::array();
  for (const auto& [k, c] : u.terms())
    terms.push_back({{"fexp", k[0]}, {"kexp", k[1]}, {"eexp", k[2]}, {"coeff", to_string(c)}});
  return {{"text", to_string(u)}, {"terms", terms}};
}

json to_json(const T& t) {
  json terms = json::array();
  for (const auto& [k, c] : t.terms()) terms.push_back({{"xexp", k.first}, {"yexp", k.second}, {"coeff", to_string(c)}});
  return {{"text", to_string(t)}, {"terms", terms}};
}

json to_json(const B& b) {
  json terms = json::array();
  for (const auto& [j, r] : b.terms())
    terms.push_back({{"yexp", j}, {"num", to_string(r.numerator(), "x")}, {"den", to_string(r.denominator(), "x")}});
  return {{"text", to_string(b)}, {"terms", terms}};
}

json to_json(const RingElement& e) {
  return std::visit([](const auto& v) { return to_json(v); }, e);
}

std::string render(const RingElement& e) {
  return std::visit([](const auto& v) { return to_string(v); }, e);
}

std::string render_k(const LP& p) { return to_string(p, "K"); }

T torus_from_x(const LP& p) {
  T t;
  for (const auto& [k, c] : p.terms()) t.add_term(k, 0, c);
  return t;
}

/// Lowercase family tag, as accepted by --family.
std::string family_tag(Family f) {
  std::string s = family_name(f);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

json optional_scalar(const std::optional<Scalar>& s) { return s ? json(to_string(*s)) : json(nullptr); }

int probe_degree_default() {
  if (const char* env = std::getenv("QALG_PROBE_DEGREE")) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(env, &used);
      if (used == std::string(env).size() && v >= 0) return v;
    } catch (const std::exception&) {
    }
    throw Error("QALG_PROBE_DEGREE must be a non-negative integer");
  }
  return kDefaultProbeDegree;
}

int parse_sign(const std::string& s) {
  if (s == "+" || s == "+1" || s == "1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw Error("sign must be + or -");
}

RingElement commutator(RingKind ring, const RingElement& a, const RingElement& b) {
  const Scalar q = q_symbol();
  switch (ring) {
    case RingKind::Uq: return Uqsl2<Scalar>(q).commutator(std::get<U>(a), std::get<U>(b));
    case RingKind::Torus: return QuantumTorus<Scalar>(q).commutator(std::get<T>(a), std::get<T>(b));
    case RingKind::B: return LocalizedTorus<Scalar>(q).commutator(std::get<B>(a), std::get<B>(b));
  }
  throw Error("unknown ring");
}

RankOneModule<Scalar> family_module(const std::string& family, const Scalar& mu, int n, const Scalar& c, const Scalar& x1) {
  const Scalar q = q_symbol();
  if (family == "i") return RankOneModule<Scalar>::family_i(q, mu, n, c);
  if (family == "ii") return RankOneModule<Scalar>::family_ii(q, mu, n, c);
  if (family == "iii") return RankOneModule<Scalar>::family_iii(q, mu, n, x1);
  throw Error("family must be i, ii or iii");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in quantum tori, their localization and U_q(sl2) modules", "qalg"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print JSON")->configurable(false);

  // normalize
  std::string ring_arg = "uq";
  std::string expr_a, expr_b;
  auto* normalize = app.add_subcommand("normalize", "Canonical form of an expression");
  normalize->add_option("--ring", ring_arg, "uq, torus or B")->check(CLI::IsMember({"uq", "torus", "B"}));
  normalize->add_option("expr", expr_a, "Expression")->required();
  normalize->add_flag("--json", as_json, "Print JSON");

  auto* commutator_cmd = app.add_subcommand("commutator", "AB - BA");
  commutator_cmd->add_option("--ring", ring_arg, "uq, torus or B")->check(CLI::IsMember({"uq", "torus", "B"}));
  commutator_cmd->add_option("a", expr_a, "First expression")->required();
  commutator_cmd->add_option("b", expr_b, "Second expression")->required();
  commutator_cmd->add_flag("--json", as_json, "Print JSON");

  bool check = false;
  auto* casimir_cmd = app.add_subcommand("casimir", "The Casimir element Z_q");
  casimir_cmd->add_flag("--check", check, "Verify that Z_q commutes with E, F and K");
  casimir_cmd->add_flag("--json", as_json, "Print JSON");

  std::string c_arg = "c";
  auto* phi_cmd = app.add_subcommand("phi", "Image of a U_q(sl2) element in the quantum torus");
  phi_cmd->add_option("expr", expr_a, "U_q(sl2) expression")->required();
  phi_cmd->add_option("--c", c_arg, "Scalar parameter c (default: the symbol c)");
  phi_cmd->add_flag("--json", as_json, "Print JSON");

  std::string s_arg;
  auto* ore_cmd = app.add_subcommand("ore", "Left Ore witness (h, b) with b s = h a");
  ore_cmd->add_option("--s", s_arg, "Nonzero Laurent polynomial in x")->required();
  ore_cmd->add_option("--a", expr_a, "Torus expression")->required();
  ore_cmd->add_flag("--json", as_json, "Print JSON (always on)");

  auto* divmod_cmd = app.add_subcommand("divmod", "Division with remainder in B");
  divmod_cmd->add_option("--a", expr_a, "Dividend in B")->required();
  divmod_cmd->add_option("--d", expr_b, "Divisor in B")->required();
  divmod_cmd->add_flag("--json", as_json, "Print JSON (always on)");

  auto* module_cmd = app.add_subcommand("module", "Rank-one U_q(sl2)-modules on C[K, K^-1]");
  module_cmd->require_subcommand(1);

  std::string fe_arg, ff_arg;
  auto* classify_cmd = module_cmd->add_subcommand("classify", "Family and parameters of E 1, F 1");
  classify_cmd->add_option("--E", fe_arg, "Laurent polynomial in K giving E 1")->required();
  classify_cmd->add_option("--F", ff_arg, "Laurent polynomial in K giving F 1")->required();
  classify_cmd->add_flag("--json", as_json, "Print JSON");

  std::string family_arg, mu_arg = "1", x1_arg = "x1";
  int n_arg = 0;
  std::optional<int> probe_arg;
  auto* simple_cmd = module_cmd->add_subcommand("simple", "Simplicity verdict");
  auto* family_opt = simple_cmd->add_option("--family", family_arg, "i, ii or iii")->check(CLI::IsMember({"i", "ii", "iii"}));
  simple_cmd->add_option("--mu", mu_arg, "Scalar mu (default 1)");
  simple_cmd->add_option("--n", n_arg, "Integer n (default 0)");
  simple_cmd->add_option("--x1", x1_arg, "Scalar x1 for family iii (default: the symbol x1)");
  simple_cmd->add_option("--c", c_arg, "Casimir scalar for families i and ii (default: the symbol c)");
  auto* e_opt = simple_cmd->add_option("--E", fe_arg, "Laurent polynomial in K giving E 1");
  auto* f_opt = simple_cmd->add_option("--F", ff_arg, "Laurent polynomial in K giving F 1");
  simple_cmd->add_option("--probe-degree", probe_arg, "Highest probe degree (default 8 or QALG_PROBE_DEGREE)");
  simple_cmd->add_flag("--json", as_json, "Print JSON (always on)");
  family_opt->excludes(e_opt)->excludes(f_opt);
  e_opt->needs(f_opt);
  f_opt->needs(e_opt);

  int s_int = 1;
  std::string sign_arg = "+";
  bool compare = false;
  auto* generator_cmd = module_cmd->add_subcommand("generator", "Generator f(K) of the finite-codimension submodule");
  generator_cmd->add_option("--s", s_int, "s >= 1")->required();
  generator_cmd->add_option("--sign", sign_arg, "+ or -")->required();
  generator_cmd->add_option("--n", n_arg, "Integer n (default 0)");
  generator_cmd->add_option("--mu", mu_arg, "Scalar mu (default 1)");
  generator_cmd->add_flag("--compare-recurrence", compare, "Also report the closed recurrence and whether it agrees");
  generator_cmd->add_flag("--json", as_json, "Print JSON");

  std::string v_arg;
  auto* act_cmd = app.add_subcommand("quotient-act", "Action of B on B/B alpha, identified with C(x)");
  act_cmd->add_option("--alpha", s_arg, "Width-one element of B")->required();
  act_cmd->add_option("--elem", expr_a, "Element of B")->required();
  act_cmd->add_option("--v", v_arg, "Rational function in x")->required();
  act_cmd->add_flag("--json", as_json, "Print JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Scalar q = q_symbol();
    if (normalize->parsed()) {
      const RingKind ring = parse_ring_kind(ring_arg);
      const RingElement v = elaborate(*parse_expr(expr_a), ring);
      if (as_json)
        out << json{{"command", "normalize"}, {"ring", ring_name(ring)}, {"result", to_json(v)}}.dump() << "\n";
      else
        out << render(v) << "\n";
      return 0;
    }
    if (commutator_cmd->parsed()) {
      const RingKind ring = parse_ring_kind(ring_arg);
      const RingElement v = commutator(ring, elaborate(*parse_expr(expr_a), ring), elaborate(*parse_expr(expr_b), ring));
      if (as_json)
        out << json{{"command", "commutator"}, {"ring", ring_name(ring)}, {"result", to_json(v)}}.dump() << "\n";
      else
        out << render(v) << "\n";
      return 0;
    }
    if (casimir_cmd->parsed()) {
      const Uqsl2<Scalar> uq(q);
      const U z = uq.casimir();
      bool central = true;
      for (const U& g : {U::E(), U::Fgen(), U::K(), U::K(-1)}) central = central && uq.commutator(z, g).is_zero();
      if (as_json) {
        json j{{"command", "casimir"}, {"result", to_json(z)}};
        if (check) j["central"] = central;
        out << j.dump() << "\n";
      } else {
        out << to_string(z) << "\n";
        if (check) out << (central ? "central" : "not central") << "\n";
      }
      if (check && !central) {
        err << "error: Z_q does not commute with every generator\n";
        return 1;
      }
      return 0;
    }
    if (phi_cmd->parsed()) {
      const Scalar c = parse_scalar(c_arg);
      const T image = Uqsl2<Scalar>(q).phi(parse_uq(expr_a), c);
      if (as_json)
        out << json{{"command", "phi"}, {"c", to_string(c)}, {"result", to_json(image)}}.dump() << "\n";
      else
        out << to_string(image) << "\n";
      return 0;
    }
    if (ore_cmd->parsed()) {
      const QuantumTorus<Scalar> torus(q);
      const LP s = parse_laurent(s_arg, "x");
      const T a = parse_torus(expr_a);
      const auto w = torus.ore_left_multiple(s, a);
      const bool identity = torus.mul(w.b, torus_from_x(s)) == torus.mul(torus_from_x(w.h), a);
      out << json{{"command", "ore"}, {"h", to_string(w.h, "x")}, {"b", to_json(w.b)}, {"identity", identity}}.dump() << "\n";
      return 0;
    }
    if (divmod_cmd->parsed()) {
      const LocalizedTorus<Scalar> ring(q);
      const B a = parse_b(expr_a), d = parse_b(expr_b);
      const auto r = ring.divmod(a, d);
      const bool identity = ring.mul(r.quotient, d) + r.remainder == a && r.remainder.width() < d.width();
      out << json{{"command", "divmod"}, {"quot", to_json(r.quotient)}, {"rem", to_json(r.remainder)}, {"identity", identity}}.dump()
          << "\n";
      return 0;
    }
    if (classify_cmd->parsed()) {
      const auto m = rank_one_classify(q, parse_laurent(fe_arg, "K"), parse_laurent(ff_arg, "K"));
      const json j{{"command", "module classify"}, {"family", family_tag(m.family())}, {"mu", optional_scalar(m.mu())},
                   {"n", m.n()},                   {"x1", optional_scalar(m.x1())},      {"casimir", optional_scalar(m.casimir())}};
      if (as_json) {
        out << j.dump() << "\n";
      } else {
        for (const auto& [k, v] : j.items())
          if (k != "command") out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
      return 0;
    }
    if (simple_cmd->parsed()) {
      std::optional<RankOneModule<Scalar>> m;
      if (!family_arg.empty())
        m = family_module(family_arg, parse_scalar(mu_arg), n_arg, parse_scalar(c_arg), parse_scalar(x1_arg));
      else if (!fe_arg.empty())
        m = rank_one_classify(q, parse_laurent(fe_arg, "K"), parse_laurent(ff_arg, "K"));
      else
        throw Error("module simple needs --family or --E and --F");
      const int probe = probe_arg ? *probe_arg : probe_degree_default();
      if (probe < 0) throw Error("--probe-degree must be non-negative");
      const auto v = is_simple_rank_one(*m, probe);
      out << json{{"command", "module simple"},
                  {"family", family_tag(m->family())},
                  {"simple", v.simple},
                  {"witness", v.witness ? json(render_k(*v.witness)) : json(nullptr)},
                  {"checked_bound", v.checked_bound ? json(*v.checked_bound) : json(nullptr)},
                  {"probe_degree", probe},
                  {"probes_certified", v.probes_certified}}
                 .dump()
          << "\n";
      return 0;
    }
    if (generator_cmd->parsed()) {
      const int sign = parse_sign(sign_arg);
      if (s_int < 1) throw Error("--s must be at least 1");
      const Scalar mu = parse_scalar(mu_arg);
      const auto f = find_submodule_generator(q, s_int, sign, n_arg, mu);
      if (!f) throw Error("no invariant generator found");
      const auto m = RankOneModule<Scalar>::family_iii(q, mu, n_arg, Scalar(sign) * power(q, 1 - s_int));
      const auto displays = submodule_display_factors(m, *f, s_int);
      const LP printed = printed_recurrence_generator(q, s_int);
      const bool agrees = normalized_generator(printed) == normalized_generator(*f);
      if (as_json) {
        json j{{"command", "module generator"},
               {"s", s_int},
               {"sign", sign > 0 ? "+" : "-"},
               {"generator", render_k(*f)},
               {"e_factor", displays.e_factor ? json(render_k(*displays.e_factor)) : json(nullptr)},
               {"f_factor", displays.f_factor ? json(render_k(*displays.f_factor)) : json(nullptr)},
               {"casimir", to_string(*m.casimir())}};
        if (compare) j["recurrence"] = {{"generator", render_k(printed)}, {"agrees", agrees}};
        out << j.dump() << "\n";
      } else {
        out << render_k(*f) << "\n";
        if (compare) out << "printed recurrence: " << render_k(printed) << (agrees ? " (agrees)" : " (disagrees)") << "\n";
      }
      return 0;
    }
    if (act_cmd->parsed()) {
      const LocalizedTorus<Scalar> ring(q);
      const QuotientModule<Scalar> module(ring, parse_b(s_arg));
      const RF result = module.act(parse_b(expr_a), parse_ratfunc(v_arg));
      if (as_json)
        out << json{{"command", "quotient-act"}, {"result", to_string(result)}}.dump() << "\n";
      else
        out << to_string(result) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace qalg::cli
