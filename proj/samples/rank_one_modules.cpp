// Rank-one modules C[K, K^-1]: classification, the invariant line for an
// excluded parameter, and the simplicity verdict for a generic one.

#include <iostream>

#include "qalg/qalg.hpp"

int main() {
  using namespace qalg;
  const Scalar q = Scalar::symbol("q");
  const Scalar mu = Scalar::symbol("mu");

  const auto excluded = RankOneModule<Scalar>::family_iii(q, mu, 0, Scalar(1));
  const auto m = rank_one_classify(q, excluded.fE(), excluded.fF());
  std::cout << "E 1 = " << to_string(m.fE(), "K") << "\n";
  std::cout << "F 1 = " << to_string(m.fF(), "K") << "\n";
  std::cout << "family " << family_name(m.family()) << ", Casimir " << to_string(*m.casimir()) << "\n";

  const auto verdict = is_simple_rank_one(m);
  std::cout << "x1 = 1: simple = " << std::boolalpha << verdict.simple << ", invariant line spanned by "
            << to_string(*verdict.witness, "K") << "\n";

  const auto generic = RankOneModule<Scalar>::family_iii(q, mu, 0, power(q, 3));
  const auto v = is_simple_rank_one(generic, 4);
  std::cout << "x1 = q^3: simple = " << v.simple << " (" << v.probes_certified << " probe vectors reduced)\n";
}
