// The Casimir element of U_q(sl2), its centrality, and its image under the
// embedding into the quantum torus.

#include <iostream>

#include "qalg/qalg.hpp"

int main() {
  using namespace qalg;
  const Scalar q = Scalar::symbol("q");
  const Scalar c = Scalar::symbol("c");
  const Uqsl2<Scalar> uq(q);

  const auto z = uq.casimir();
  std::cout << "Z_q = " << to_string(z) << "\n";
  std::cout << "[Z_q, E] = " << to_string(uq.commutator(z, parse_uq("E"))) << "\n";
  std::cout << "phi(E) = " << to_string(uq.phi(parse_uq("E"), c)) << "\n";
  std::cout << "phi(Z_q) = " << to_string(uq.phi(z, c)) << "\n";

  // The same computation at a rational point.
  const Uqsl2<Rational> uq_num(Rational(mpq_class(5, 3)));
  std::cout << "Z_q at q = 5/3: " << to_string(uq_num.casimir()) << "\n";
}
