#include "ordgame/model.hpp"

#include <string>

#include "ordgame/errors.hpp"

namespace ordgame {

namespace {

Rational abs_value(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace

Rational apply_functional(const Vector& functional, const Vector& x) {
  if (functional.size() != x.size()) throw DomainError("functional and vector lengths differ");
  Rational acc;
  for (std::size_t i = 0; i < x.size(); ++i) acc += functional[i] * x[i];
  return acc;
}

Rational norm_of(const Vector& x, Norm norm) {
  Rational acc;
  for (const auto& v : x) {
    if (norm == Norm::sum)
      acc += abs_value(v);
    else if (abs_value(v) > acc)
      acc = abs_value(v);
  }
  return acc;
}

bool Subspace::contains(const Vector& x) const {
  for (const auto& row : constraints)
    if (apply_functional(row, x) != 0) return false;
  return true;
}

bool ModelSpace::in_ball(const Vector& x) const { return norm_of(x, norm) <= 1; }

std::vector<std::size_t> ModelSpace::selectable(std::size_t subspace, std::size_t compact) const {
  std::vector<std::size_t> out;
  const auto& set = compacts.at(compact);
  for (std::size_t i = 0; i < set.size(); ++i)
    if (in_ball(set[i]) && subspaces.at(subspace).contains(set[i])) out.push_back(i);
  return out;
}

void ModelSpace::validate() const {
  if (dim < 1) throw DomainError("model: dim must be positive");
  if (subspaces.empty()) throw DomainError("model: subspace alphabet is empty");
  if (compacts.empty()) throw DomainError("model: compact-set alphabet is empty");
  if (epsilon <= 0) throw DomainError("model: epsilon must be positive");
  auto check = [&](const Vector& v, const std::string& what) {
    if (v.size() != dim)
      throw DomainError("model: " + what + " has length " + std::to_string(v.size()) + ", expected " +
                        std::to_string(dim));
  };
  for (const auto& z : subspaces)
    for (const auto& row : z.constraints) check(row, "subspace constraint row");
  for (const auto& c : compacts)
    for (const auto& v : c) check(v, "compact-set vector");
  for (const auto& f : functionals) check(f, "functional");
}

}  // namespace ordgame
