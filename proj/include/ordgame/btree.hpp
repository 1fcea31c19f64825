#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ordgame/ordinal.hpp"

namespace ordgame {

/// A finite sequence of ordinal labels. Members of a B-tree are nonempty; the
/// empty path is used only as the virtual root.
using NodePath = std::vector<Ordinal>;

/// `(3,2,1)`; the empty path prints as `()`.
std::string format_path(const NodePath& t);
NodePath parse_path(std::string_view text);

bool is_prefix(const NodePath& s, const NodePath& t);
bool is_strict_prefix(const NodePath& s, const NodePath& t);

/// An explicit finite set of nonempty label sequences.
///
/// Construction never fails; closure under nonempty initial segments is
/// checked once and reported by validate(). Operations that need a genuine
/// B-tree throw DomainError on an invalid one.
class FiniteBTree {
 public:
  FiniteBTree() = default;
  explicit FiniteBTree(std::set<NodePath> nodes);

  const std::set<NodePath>& nodes() const { return nodes_; }
  bool empty() const { return nodes_.empty(); }
  std::size_t size() const { return nodes_.size(); }
  bool contains(const NodePath& t) const { return nodes_.count(t) != 0; }
  bool is_valid() const { return valid_; }

  /// Labels mu with t^(mu) in the tree, ascending. The empty t yields the roots.
  std::vector<Ordinal> child_labels(const NodePath& t) const;

  /// {s nonempty : t^s in T}.
  FiniteBTree subtree_after(const NodePath& t) const;

 private:
  std::set<NodePath> nodes_;
  bool valid_ = true;
};

bool validate(const FiniteBTree& tree);

std::set<NodePath> max_nodes(const FiniteBTree& tree);

/// T' = T minus MAX(T).
FiniteBTree derive(const FiniteBTree& tree);

/// Least k with the k-th derivative empty, from memoized node heights.
std::size_t order(const FiniteBTree& tree);

/// Same quantity by literally iterating derive().
std::size_t order_by_derivation(const FiniteBTree& tree);

/// Largest k with t in the k-th derivative. Throws DomainError if t is not a node.
std::size_t rank(const FiniteBTree& tree, const NodePath& t);

/// rank() for every node at once.
std::map<NodePath, std::size_t> ranks(const FiniteBTree& tree);

using PathMap = std::map<NodePath, NodePath>;

/// True iff f is defined on all of `source`, lands in `target`, and sends
/// strict extensions to strict extensions.
bool verify_monotone_map(const FiniteBTree& source, const FiniteBTree& target, const PathMap& f);

}  // namespace ordgame
