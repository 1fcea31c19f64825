#include "ordgame/btree.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <utility>

#include "ordgame/errors.hpp"

namespace ordgame {

std::string format_path(const NodePath& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += t[i].to_string();
  }
  return out + ')';
}

NodePath parse_path(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw ParseError("path '" + std::string(text) + "' must be parenthesized, e.g. (3,2,1)");
  s = trim(s.substr(1, s.size() - 2));
  NodePath out;
  if (s.empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      out.push_back(Ordinal::parse(s.substr(start, i - start)));
      start = i + 1;
    } else if (s[i] == '(') {
      ++depth;
    } else if (s[i] == ')') {
      --depth;
    }
  }
  return out;
}

bool is_prefix(const NodePath& s, const NodePath& t) {
  return s.size() <= t.size() && std::equal(s.begin(), s.end(), t.begin());
}

bool is_strict_prefix(const NodePath& s, const NodePath& t) {
  return s.size() < t.size() && is_prefix(s, t);
}

FiniteBTree::FiniteBTree(std::set<NodePath> nodes) : nodes_(std::move(nodes)) {
  for (const auto& t : nodes_) {
    if (t.empty()) {
      valid_ = false;
      break;
    }
    if (t.size() > 1 && !contains(NodePath(t.begin(), t.end() - 1))) {
      valid_ = false;
      break;
    }
  }
}

std::vector<Ordinal> FiniteBTree::child_labels(const NodePath& t) const {
  std::vector<Ordinal> out;
  // Extensions of t form a contiguous run starting at t in lexicographic order.
  for (auto it = nodes_.lower_bound(t); it != nodes_.end() && is_prefix(t, *it); ++it)
    if (it->size() == t.size() + 1) out.push_back(it->back());
  return out;
}

FiniteBTree FiniteBTree::subtree_after(const NodePath& t) const {
  std::set<NodePath> out;
  for (auto it = nodes_.upper_bound(t); it != nodes_.end() && is_prefix(t, *it); ++it)
    out.emplace_hint(out.end(), it->begin() + static_cast<std::ptrdiff_t>(t.size()), it->end());
  return FiniteBTree(std::move(out));
}

namespace {

void require_valid(const FiniteBTree& tree) {
  if (!tree.is_valid()) throw DomainError("not a B-tree: missing initial segment or empty node");
}

}  // namespace

bool validate(const FiniteBTree& tree) { return tree.is_valid(); }

std::set<NodePath> max_nodes(const FiniteBTree& tree) {
  require_valid(tree);
  std::set<NodePath> out;
  const auto& nodes = tree.nodes();
  for (auto it = nodes.begin(); it != nodes.end(); ++it) {
    auto next = std::next(it);
    if (next == nodes.end() || !is_strict_prefix(*it, *next)) out.insert(out.end(), *it);
  }
  return out;
}

FiniteBTree derive(const FiniteBTree& tree) {
  const std::set<NodePath> leaves = max_nodes(tree);
  std::set<NodePath> out;
  std::set_difference(tree.nodes().begin(), tree.nodes().end(), leaves.begin(), leaves.end(),
                      std::inserter(out, out.end()));
  return FiniteBTree(std::move(out));
}

std::map<NodePath, std::size_t> ranks(const FiniteBTree& tree) {
  require_valid(tree);
  std::map<NodePath, std::size_t> height;
  // Reverse lexicographic order visits every node after all of its extensions.
  for (auto it = tree.nodes().rbegin(); it != tree.nodes().rend(); ++it) {
    const std::size_t h = height.try_emplace(*it, 0).first->second;
    if (it->size() > 1) {
      auto& ph = height[NodePath(it->begin(), it->end() - 1)];
      ph = std::max(ph, h + 1);
    }
  }
  return height;
}

std::size_t order(const FiniteBTree& tree) {
  std::size_t best = 0;
  for (const auto& [node, h] : ranks(tree)) best = std::max(best, h + 1);
  return best;
}

std::size_t order_by_derivation(const FiniteBTree& tree) {
  require_valid(tree);
  std::size_t k = 0;
  FiniteBTree cur = tree;
  while (!cur.empty()) {
    cur = derive(cur);
    ++k;
  }
  return k;
}

std::size_t rank(const FiniteBTree& tree, const NodePath& t) {
  require_valid(tree);
  if (!tree.contains(t)) throw DomainError("rank: " + format_path(t) + " is not a node");
  return order(tree.subtree_after(t));
}

bool verify_monotone_map(const FiniteBTree& source, const FiniteBTree& target, const PathMap& f) {
  for (const auto& s : source.nodes()) {
    auto img = f.find(s);
    if (img == f.end() || img->second.empty() || !target.contains(img->second)) return false;
    if (s.size() > 1) {
      auto parent = f.find(NodePath(s.begin(), s.end() - 1));
      if (parent == f.end() || !is_strict_prefix(parent->second, img->second)) return false;
    }
  }
  return true;
}

}  // namespace ordgame
