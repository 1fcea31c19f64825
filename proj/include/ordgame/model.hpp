#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ordgame/numeric.hpp"

namespace ordgame {

using Vector = std::vector<Rational>;

enum class Norm { max, sum };

/// {x : Mx = 0}; no constraint rows means the whole space.
struct Subspace {
  std::vector<Vector> constraints;

  bool contains(const Vector& x) const;
};

/// A finite-dimensional rational model of the Szlenk game data: the subspace
/// alphabet, the compact-set alphabet, the functionals K, epsilon and the norm
/// whose unit ball is B_X. Scalars are real, so Re is the identity.
struct ModelSpace {
  std::size_t dim = 1;
  std::vector<Subspace> subspaces;
  std::vector<std::vector<Vector>> compacts;
  std::vector<Vector> functionals;
  Rational epsilon{1};
  Norm norm = Norm::max;

  /// Throws DomainError on shape mismatches, empty alphabets or epsilon <= 0.
  void validate() const;

  bool in_ball(const Vector& x) const;

  /// B_X n Z n C for the given alphabet indices, in the order of C.
  std::vector<std::size_t> selectable(std::size_t subspace, std::size_t compact) const;
};

Rational apply_functional(const Vector& functional, const Vector& x);

Rational norm_of(const Vector& x, Norm norm);

}  // namespace ordgame
