#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ordgame/btree.hpp"
#include "ordgame/generator.hpp"
#include "ordgame/numeric.hpp"
#include "ordgame/ordinal.hpp"

namespace ordgame {

// The canonical well-founded tree families, handled symbolically:
//
//   T_0 = {},  T_(x+1) = {(x+1)^t : t in {()} u T_x},  T_lim = U_(z<lim) T_(z+1)
//   G_0 = {(1)},
//   G_(x+1) = {(w^x(n-1)+t_1)^...^(w^x(n-m)+t_m) : 1<=m<=n, t_i in G_x,
//              t_i maximal in G_x for i<m}
//   G_lim = U_(z<lim) (w^z + G_(z+1))
//
// with o(T_x) = x and o(G_x) = w^x. Both are infinitely branching at limit
// stages (and G at every positive stage), so enumeration takes a budget.

enum class FamilyKind { T, Gamma };

struct FamilyId {
  FamilyKind kind = FamilyKind::T;
  Ordinal xi;
};

/// Caps the "n in N" choice of G_(x+1) and the "z < lim" choice at limits to
/// the first max_n values (n = 1..max_n; z along the fundamental sequence),
/// and never materializes paths longer than max_depth.
struct TruncationBudget {
  std::uint64_t max_n = 1;
  std::uint64_t max_depth = 1024;
};

bool member(const FamilyId& f, const NodePath& t);

/// Labels mu with t^(mu) in the family, ascending; t may be empty (roots).
/// Complete wherever the branching is finite. Throws DomainError if t is
/// neither empty nor a member.
std::vector<Ordinal> children(const FamilyId& f, const NodePath& t, const TruncationBudget& budget);

/// Maximality in the full (untruncated) family. Throws DomainError on non-members.
bool is_maximal(const FamilyId& f, const NodePath& t);

/// P_xi(t). Throws DomainError unless t is in G_xi.
Weight weight(const Ordinal& xi, const NodePath& t);

/// P_xi(t|_1), ..., P_xi(t|_|t|).
std::vector<Weight> weights_along(const Ordinal& xi, const NodePath& t);

struct BranchSum {
  Rational sum;
  /// False when t is not maximal; the sum is then a partial sum below 1.
  bool maximal = false;
};

BranchSum branch_weight_sum(const Ordinal& xi, const NodePath& t);

/// Lazy stream of maximal branches of the full family reachable within a
/// budget. Never yields a pseudo-leaf: branches that would exceed max_depth are
/// dropped and counted in truncation_events().
class BranchStream {
 public:
  BranchStream(const FamilyId& f, const TruncationBudget& budget);

  std::optional<NodePath> next();
  std::size_t truncation_events() const { return *truncated_; }

 private:
  std::shared_ptr<std::size_t> truncated_;
  Generator<NodePath> gen_;
};

BranchStream enumerate_maximal_branches(const FamilyId& f, const TruncationBudget& budget);

/// All members reachable from the roots through budget-bounded children().
FiniteBTree truncate_to_finite(const FamilyId& f, const TruncationBudget& budget);

/// Rank of t in the full family (an ordinal; G ranks are transfinite).
Ordinal symbolic_rank(const FamilyId& f, const NodePath& t);

/// Length-preserving monotone map T_xi -> T_gamma (xi <= gamma).
class TEmbedding {
 public:
  TEmbedding(Ordinal xi, Ordinal gamma);

  /// Throws DomainError unless s is in T_xi.
  NodePath operator()(const NodePath& s) const;

  /// The map on every node of a finite subtree of T_xi.
  PathMap on(const FiniteBTree& source) const;

  const Ordinal& source_index() const { return xi_; }
  const Ordinal& target_index() const { return gamma_; }

 private:
  Ordinal xi_;
  Ordinal gamma_;
};

/// Throws DomainError if xi > gamma.
TEmbedding embed_t(const Ordinal& xi, const Ordinal& gamma);

}  // namespace ordgame
