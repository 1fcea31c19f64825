#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "ordgame/btree.hpp"
#include "ordgame/errors.hpp"
#include "ordgame/ordinal.hpp"

namespace ordgame {

/// An ordinal or the marker infinity, which sits above every ordinal.
class TransfiniteIndex {
 public:
  TransfiniteIndex() = default;
  TransfiniteIndex(Ordinal value) : value_(std::move(value)) {}  // NOLINT
  static TransfiniteIndex infinity() {
    TransfiniteIndex out;
    out.value_.reset();
    return out;
  }

  bool is_infinite() const { return !value_; }
  const Ordinal& value() const {
    if (!value_) throw DomainError("index is infinite");
    return *value_;
  }
  std::string to_string() const { return value_ ? value_->to_string() : "inf"; }

  friend bool operator==(const TransfiniteIndex&, const TransfiniteIndex&) = default;
  friend std::strong_ordering operator<=>(const TransfiniteIndex& a, const TransfiniteIndex& b) {
    if (!a.value_ || !b.value_) return !!b.value_ <=> !!a.value_;
    return *a.value_ <=> *b.value_;
  }

 private:
  std::optional<Ordinal> value_ = Ordinal();
};

/// A contractive derivation on subsets of a finite ground set.
template <class Element>
class DerivationSystem {
 public:
  using Set = std::set<Element>;
  using Step = std::function<Set(const Set&)>;

  DerivationSystem(Set ground, Step step) : ground_(std::move(ground)), step_(std::move(step)) {}

  const Set& ground() const { return ground_; }

  /// One application. Throws DomainError if the step is not contractive.
  Set apply(const Set& s) const {
    Set out = step_(s);
    if (!std::includes(s.begin(), s.end(), out.begin(), out.end(), s.key_comp()))
      throw DomainError("derivation step is not contractive");
    return out;
  }

 private:
  Set ground_;
  Step step_;
};

/// Least k with step^k(start) empty, or infinity once a nonempty fixed point
/// is reached. A finite ground set guarantees one of the two.
template <class Element>
TransfiniteIndex derivation_index(const DerivationSystem<Element>& sys,
                                  const typename DerivationSystem<Element>::Set& start) {
  if (!std::includes(sys.ground().begin(), sys.ground().end(), start.begin(), start.end(), start.key_comp()))
    throw DomainError("derivation start is not a subset of the ground set");
  std::uint64_t k = 0;
  auto cur = start;
  while (!cur.empty()) {
    auto next = sys.apply(cur);
    if (next == cur) return TransfiniteIndex::infinity();
    cur = std::move(next);
    ++k;
  }
  return Ordinal(k);
}

/// Leaf-stripping on the nodes of a finite B-tree.
DerivationSystem<NodePath> tree_derivation(const FiniteBTree& tree);

// Cantor-Bendixson derivatives of the ordinal interval [1, alpha]. The
// gamma-th derivative consists of the points divisible by w^gamma, which form
// a copy of [1, q] for the left quotient q of alpha by w^gamma; "stage" values
// below are that q.

Ordinal cb_stage(const Ordinal& alpha, const Ordinal& gamma);

Ordinal cb_step(const Ordinal& alpha);

/// Least gamma whose stage is empty: 0 for alpha = 0, else lead exponent + 1.
Ordinal cb_index(const Ordinal& alpha);

struct DzBound {
  Ordinal bound;
  /// True when the input was not a pure power w^xi and the general w*sz rule
  /// was applied.
  bool extension = false;
};

/// w^xi |-> w^(1+xi); other inputs map to w*sz. Throws DomainError on 0.
DzBound dz_bound(const Ordinal& sz);

}  // namespace ordgame
