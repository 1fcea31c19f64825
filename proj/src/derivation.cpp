#include "ordgame/derivation.hpp"

namespace ordgame {

DerivationSystem<NodePath> tree_derivation(const FiniteBTree& tree) {
  return DerivationSystem<NodePath>(tree.nodes(), [](const std::set<NodePath>& s) {
    return derive(FiniteBTree(s)).nodes();
  });
}

Ordinal cb_stage(const Ordinal& alpha, const Ordinal& gamma) { return quot_rem_omega_pow(alpha, gamma).quotient; }

Ordinal cb_step(const Ordinal& alpha) { return cb_stage(alpha, Ordinal(1)); }

Ordinal cb_index(const Ordinal& alpha) {
  if (alpha.is_zero()) return Ordinal();
  return succ(alpha.leading_exponent());
}

DzBound dz_bound(const Ordinal& sz) {
  if (sz.is_zero()) throw DomainError("dz_bound: Szlenk index 0 is not attained by a nonempty set");
  const auto& terms = sz.terms();
  if (terms.size() == 1 && terms[0].coefficient == 1)
    return {omega_pow(add(Ordinal(1), terms[0].exponent)), false};
  return {omega_times(sz), true};
}

}  // namespace ordgame
