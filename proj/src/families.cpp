#include "ordgame/families.hpp"

#include <algorithm>
#include <utility>

#include "ordgame/errors.hpp"

namespace ordgame {

namespace {

void check_budget(const TruncationBudget& b) {
  if (b.max_n < 1) throw DomainError("budget max_n must be >= 1");
  if (b.max_depth < 1) throw DomainError("budget max_depth must be >= 1");
}

NodePath shifted(const Ordinal& offset, const NodePath& t) {
  NodePath out;
  out.reserve(t.size());
  for (const auto& mu : t) out.push_back(add(offset, mu));
  return out;
}

void sort_unique(std::vector<Ordinal>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

[[noreturn]] void not_a_member(const FamilyId& f, const NodePath& t) {
  throw DomainError(format_path(t) + " is not a member of " + (f.kind == FamilyKind::T ? "T_" : "Gamma_") +
                    f.xi.to_string());
}

// ---------------------------------------------------------------------------
// T family

// Walks t through T_xi; returns beta with {s : t^s in T_xi} = T_beta.
std::optional<Ordinal> t_residual(const Ordinal& xi, const NodePath& t) {
  Ordinal beta = xi;
  for (const auto& mu : t) {
    if (beta.is_zero()) return std::nullopt;
    if (beta.is_successor()) {
      if (mu != beta) return std::nullopt;
      beta = pred(beta);
    } else {
      // component T_mu with mu = z+1, z < beta
      if (!mu.is_successor() || !(mu < beta)) return std::nullopt;
      beta = pred(mu);
    }
  }
  return beta;
}

std::vector<Ordinal> t_roots(const Ordinal& beta, const TruncationBudget& b) {
  if (beta.is_zero()) return {};
  if (beta.is_successor()) return {beta};
  std::vector<Ordinal> out;
  for (std::uint64_t k = 0; k < b.max_n; ++k) out.push_back(succ(fundamental(beta, k)));
  sort_unique(out);
  return out;
}

// ---------------------------------------------------------------------------
// Gamma family

struct GammaInfo {
  bool maximal = false;
  Rational weight;
  Ordinal rank;
};

struct Blocks {
  Natural n;
  std::vector<NodePath> blocks;
};

// Splits successor-stage labels w^inner*q + r (0 < r <= w^inner) into runs of
// equal quotient; quotients must read n-1, n-2, ..., n-m.
std::optional<Blocks> split_blocks(const Ordinal& inner, const NodePath& t) {
  Blocks out;
  std::optional<Natural> prev;
  for (const auto& mu : t) {
    if (mu.is_zero()) return std::nullopt;
    QuotRem qr;
    try {
      qr = quot_rem_omega_pow_upper(mu, inner);
    } catch (const DomainError&) {
      return std::nullopt;
    }
    auto q = qr.quotient.as_natural();
    if (!q) return std::nullopt;
    if (!prev) {
      out.n = *q + 1;
      out.blocks.emplace_back();
    } else if (*q + 1 == *prev) {
      out.blocks.emplace_back();
    } else if (*q != *prev) {
      return std::nullopt;
    }
    prev = std::move(q);
    out.blocks.back().push_back(std::move(qr.remainder));
  }
  return out;
}

std::optional<GammaInfo> gamma_info(const Ordinal& xi, const NodePath& t);

struct Component {
  Ordinal zeta;
  NodePath stripped;
  GammaInfo info;
};

// For limit xi: G_xi = U (w^z + G_(z+1)). The first label mu lies in
// (w^z, w^(z+1)], so the only candidates are z = lead exponent e of mu and,
// when mu = w^e with e a successor, z = e-1. Largest first.
std::optional<Component> resolve_component(const Ordinal& xi, const NodePath& t) {
  const Ordinal& mu = t.front();
  if (mu.is_zero()) return std::nullopt;
  const Ordinal& e = mu.leading_exponent();
  std::vector<Ordinal> candidates{e};
  if (e.is_successor() && mu == omega_pow(e)) candidates.push_back(pred(e));
  for (const auto& zeta : candidates) {
    if (!(zeta < xi)) continue;
    const Ordinal offset = omega_pow(zeta);
    NodePath stripped;
    stripped.reserve(t.size());
    bool ok = true;
    for (const auto& label : t) {
      if (label < offset) {
        ok = false;
        break;
      }
      stripped.push_back(subtract_left(offset, label));
    }
    if (!ok) continue;
    if (auto info = gamma_info(succ(zeta), stripped)) return Component{zeta, std::move(stripped), *info};
  }
  return std::nullopt;
}

std::optional<GammaInfo> gamma_info(const Ordinal& xi, const NodePath& t) {
  if (t.empty()) return std::nullopt;
  if (xi.is_zero()) {
    if (t.size() == 1 && t[0] == Ordinal(1)) return GammaInfo{true, Rational(1), Ordinal()};
    return std::nullopt;
  }
  if (xi.is_limit()) {
    auto c = resolve_component(xi, t);
    if (!c) return std::nullopt;
    return c->info;
  }
  const Ordinal inner = pred(xi);
  auto split = split_blocks(inner, t);
  if (!split) return std::nullopt;
  const auto& blocks = split->blocks;
  const Natural m = blocks.size();
  if (split->n < m) return std::nullopt;
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    auto info = gamma_info(inner, blocks[i]);
    if (!info || !info->maximal) return std::nullopt;
  }
  auto last = gamma_info(inner, blocks.back());
  if (!last) return std::nullopt;
  GammaInfo out;
  out.maximal = split->n == m && last->maximal;
  out.weight = last->weight / Rational(split->n);
  out.rank = add(mul_nat(omega_pow(inner), split->n - m), last->rank);
  return out;
}

GammaInfo gamma_info_or_throw(const Ordinal& xi, const NodePath& t) {
  auto info = gamma_info(xi, t);
  if (!info) not_a_member(FamilyId{FamilyKind::Gamma, xi}, t);
  return *info;
}

// One pass over t: appends the weight of every prefix and reports maximality;
// nullopt when t is not a member of G_xi. Weights are unit fractions, so the
// running scale is carried as the denominator.
std::optional<bool> walk_weights(const Ordinal& xi, const NodePath& t, const Natural& denom, std::vector<Weight>& out) {
  if (t.empty()) return std::nullopt;
  if (xi.is_zero()) {
    if (t.size() != 1 || t[0] != Ordinal(1)) return std::nullopt;
    out.emplace_back(Rational(Natural(1), denom));
    return true;
  }
  if (xi.is_limit()) {
    auto c = resolve_component(xi, t);
    if (!c) return std::nullopt;
    return walk_weights(succ(c->zeta), c->stripped, denom, out);
  }
  const Ordinal inner = pred(xi);
  auto split = split_blocks(inner, t);
  if (!split) return std::nullopt;
  const auto& blocks = split->blocks;
  const Natural m = blocks.size();
  if (split->n < m) return std::nullopt;
  const Natural sub = denom * split->n;
  bool last_maximal = false;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto maximal = walk_weights(inner, blocks[i], sub, out);
    if (!maximal || (i + 1 < blocks.size() && !*maximal)) return std::nullopt;
    last_maximal = *maximal;
  }
  return split->n == m && last_maximal;
}

std::vector<Ordinal> gamma_roots(const Ordinal& xi, const TruncationBudget& b) {
  if (xi.is_zero()) return {Ordinal(1)};
  std::vector<Ordinal> out;
  if (xi.is_successor()) {
    const Ordinal inner = pred(xi);
    const Ordinal unit = omega_pow(inner);
    const std::vector<Ordinal> inner_roots = gamma_roots(inner, b);
    for (std::uint64_t n = 1; n <= b.max_n; ++n) {
      const Ordinal offset = mul_nat(unit, Natural(n - 1));
      for (const auto& r : inner_roots) out.push_back(add(offset, r));
    }
  } else {
    for (std::uint64_t k = 0; k < b.max_n; ++k) {
      const Ordinal zeta = fundamental(xi, k);
      const Ordinal offset = omega_pow(zeta);
      for (const auto& r : gamma_roots(succ(zeta), b)) out.push_back(add(offset, r));
    }
  }
  sort_unique(out);
  return out;
}

// t is known to be a nonempty member of G_xi.
std::vector<Ordinal> gamma_children(const Ordinal& xi, const NodePath& t, const TruncationBudget& b) {
  if (xi.is_zero()) return {};
  std::vector<Ordinal> out;
  if (xi.is_limit()) {
    auto c = resolve_component(xi, t);
    const Ordinal offset = omega_pow(c->zeta);
    for (const auto& mu : gamma_children(succ(c->zeta), c->stripped, b)) out.push_back(add(offset, mu));
    return out;
  }
  const Ordinal inner = pred(xi);
  const Ordinal unit = omega_pow(inner);
  auto split = split_blocks(inner, t);
  const Natural m = split->blocks.size();
  const NodePath& last = split->blocks.back();
  const Ordinal offset = mul_nat(unit, split->n - m);
  for (const auto& mu : gamma_children(inner, last, b)) out.push_back(add(offset, mu));
  if (m < split->n && gamma_info(inner, last)->maximal) {
    const Ordinal next_offset = mul_nat(unit, split->n - m - 1);
    for (const auto& r : gamma_roots(inner, b)) out.push_back(add(next_offset, r));
  }
  sort_unique(out);
  return out;
}

// ---------------------------------------------------------------------------
// Lazy maximal-branch enumeration

struct EnumContext {
  TruncationBudget budget;
  std::shared_ptr<std::size_t> truncated;
};

Generator<NodePath> gamma_branches(Ordinal xi, std::uint64_t depth_left, EnumContext ctx);

// Blocks i..n of an outer parameter n at a successor stage; block j carries
// the offset w^inner*(n-j).
Generator<NodePath> gamma_blocks(Ordinal inner, Ordinal unit, std::uint64_t n, std::uint64_t i,
                                 std::uint64_t depth_left, EnumContext ctx) {
  const Ordinal offset = mul_nat(unit, Natural(n - i));
  auto heads = gamma_branches(inner, depth_left, ctx);
  while (auto head = heads.next()) {
    NodePath prefix = shifted(offset, *head);
    if (i == n) {
      co_yield std::move(prefix);
      continue;
    }
    if (prefix.size() >= depth_left) {
      ++*ctx.truncated;
      continue;
    }
    auto tails = gamma_blocks(inner, unit, n, i + 1, depth_left - prefix.size(), ctx);
    while (auto tail = tails.next()) {
      NodePath full = prefix;
      full.insert(full.end(), tail->begin(), tail->end());
      co_yield std::move(full);
    }
  }
}

Generator<NodePath> gamma_branches(Ordinal xi, std::uint64_t depth_left, EnumContext ctx) {
  if (depth_left == 0) {
    ++*ctx.truncated;
    co_return;
  }
  if (xi.is_zero()) {
    NodePath leaf(1, Ordinal(1));
    co_yield std::move(leaf);
    co_return;
  }
  if (xi.is_successor()) {
    const Ordinal inner = pred(xi);
    const Ordinal unit = omega_pow(inner);
    for (std::uint64_t n = 1; n <= ctx.budget.max_n; ++n) {
      auto blocks = gamma_blocks(inner, unit, n, 1, depth_left, ctx);
      while (auto b = blocks.next()) co_yield std::move(*b);
    }
    co_return;
  }
  // Limit stage: interleave the components round-robin so that a bounded
  // prefix of the stream samples every component in the window.
  std::vector<Ordinal> offsets;
  std::vector<Generator<NodePath>> parts;
  for (std::uint64_t k = 0; k < ctx.budget.max_n; ++k) {
    const Ordinal zeta = fundamental(xi, k);
    offsets.push_back(omega_pow(zeta));
    parts.push_back(gamma_branches(succ(zeta), depth_left, ctx));
  }
  for (bool any = true; any;) {
    any = false;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (auto b = parts[k].next()) {
        any = true;
        co_yield shifted(offsets[k], *b);
      }
    }
  }
}

// Maximal suffixes s with s in T_beta (the empty suffix when beta = 0).
Generator<NodePath> t_branches(Ordinal beta, std::uint64_t depth_left, EnumContext ctx) {
  if (beta.is_zero()) {
    NodePath empty;
    co_yield std::move(empty);
    co_return;
  }
  if (depth_left == 0) {
    ++*ctx.truncated;
    co_return;
  }
  if (beta.is_successor()) {
    auto tails = t_branches(pred(beta), depth_left - 1, ctx);
    while (auto tail = tails.next()) {
      NodePath full(1, beta);
      full.insert(full.end(), tail->begin(), tail->end());
      co_yield std::move(full);
    }
    co_return;
  }
  std::vector<Generator<NodePath>> parts;
  for (std::uint64_t k = 0; k < ctx.budget.max_n; ++k)
    parts.push_back(t_branches(succ(fundamental(beta, k)), depth_left, ctx));
  for (bool any = true; any;) {
    any = false;
    for (auto& part : parts) {
      if (auto b = part.next()) {
        any = true;
        co_yield std::move(*b);
      }
    }
  }
}

Generator<NodePath> family_branches(FamilyId f, EnumContext ctx) {
  if (f.kind == FamilyKind::Gamma) {
    auto g = gamma_branches(f.xi, ctx.budget.max_depth, ctx);
    while (auto b = g.next()) co_yield std::move(*b);
  } else if (!f.xi.is_zero()) {
    auto g = t_branches(f.xi, ctx.budget.max_depth, ctx);
    while (auto b = g.next()) co_yield std::move(*b);
  }
}

}  // namespace

bool member(const FamilyId& f, const NodePath& t) {
  if (t.empty()) return false;
  if (f.kind == FamilyKind::T) return t_residual(f.xi, t).has_value();
  return gamma_info(f.xi, t).has_value();
}

std::vector<Ordinal> children(const FamilyId& f, const NodePath& t, const TruncationBudget& budget) {
  check_budget(budget);
  if (f.kind == FamilyKind::T) {
    auto beta = t_residual(f.xi, t);
    if (!beta) not_a_member(f, t);
    return t_roots(*beta, budget);
  }
  if (t.empty()) return gamma_roots(f.xi, budget);
  gamma_info_or_throw(f.xi, t);
  return gamma_children(f.xi, t, budget);
}

bool is_maximal(const FamilyId& f, const NodePath& t) {
  if (f.kind == FamilyKind::T) {
    auto beta = t.empty() ? std::nullopt : t_residual(f.xi, t);
    if (!beta) not_a_member(f, t);
    return beta->is_zero();
  }
  return gamma_info_or_throw(f.xi, t).maximal;
}

Weight weight(const Ordinal& xi, const NodePath& t) { return Weight(gamma_info_or_throw(xi, t).weight); }

std::vector<Weight> weights_along(const Ordinal& xi, const NodePath& t) {
  std::vector<Weight> out;
  out.reserve(t.size());
  if (!walk_weights(xi, t, Natural(1), out)) not_a_member(FamilyId{FamilyKind::Gamma, xi}, t);
  return out;
}

BranchSum branch_weight_sum(const Ordinal& xi, const NodePath& t) {
  std::vector<Weight> weights;
  weights.reserve(t.size());
  auto maximal = walk_weights(xi, t, Natural(1), weights);
  if (!maximal) not_a_member(FamilyId{FamilyKind::Gamma, xi}, t);
  BranchSum out;
  out.maximal = *maximal;
  for (const auto& w : weights) out.sum += w.value();
  return out;
}

BranchStream::BranchStream(const FamilyId& f, const TruncationBudget& budget)
    : truncated_(std::make_shared<std::size_t>(0)),
      gen_((check_budget(budget), family_branches(f, EnumContext{budget, truncated_}))) {}

std::optional<NodePath> BranchStream::next() { return gen_.next(); }

BranchStream enumerate_maximal_branches(const FamilyId& f, const TruncationBudget& budget) {
  return BranchStream(f, budget);
}

FiniteBTree truncate_to_finite(const FamilyId& f, const TruncationBudget& budget) {
  std::set<NodePath> nodes;
  std::vector<NodePath> stack;
  for (const auto& mu : children(f, {}, budget)) stack.push_back(NodePath{mu});
  while (!stack.empty()) {
    NodePath t = std::move(stack.back());
    stack.pop_back();
    if (t.size() > budget.max_depth) continue;
    for (const auto& mu : children(f, t, budget)) {
      NodePath c = t;
      c.push_back(mu);
      stack.push_back(std::move(c));
    }
    nodes.insert(std::move(t));
  }
  return FiniteBTree(std::move(nodes));
}

Ordinal symbolic_rank(const FamilyId& f, const NodePath& t) {
  if (f.kind == FamilyKind::T) {
    auto beta = t.empty() ? std::nullopt : t_residual(f.xi, t);
    if (!beta) not_a_member(f, t);
    return *beta;
  }
  return gamma_info_or_throw(f.xi, t).rank;
}

TEmbedding::TEmbedding(Ordinal xi, Ordinal gamma) : xi_(std::move(xi)), gamma_(std::move(gamma)) {
  if (gamma_ < xi_) throw DomainError("embed_t: " + xi_.to_string() + " > " + gamma_.to_string());
}

NodePath TEmbedding::operator()(const NodePath& s) const {
  if (!member(FamilyId{FamilyKind::T, xi_}, s)) not_a_member(FamilyId{FamilyKind::T, xi_}, s);
  // Unfolds the recursive embedding phi and keeps its first |s| labels:
  //   equal indices or limit target: inclusion (identity);
  //   successor -> successor: (x+1)^t |-> (g+1)^phi'(t) with phi': T_x -> T_g;
  //   limit -> successor: s |-> (g+1)^phi''(s) with phi'': T_lim -> T_g.
  NodePath out;
  out.reserve(s.size());
  Ordinal x = xi_;
  Ordinal g = gamma_;
  std::size_t i = 0;
  while (out.size() < s.size()) {
    if (x == g || g.is_limit()) {
      const std::size_t need = s.size() - out.size();
      out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(i),
                 s.begin() + static_cast<std::ptrdiff_t>(i + need));
      break;
    }
    out.push_back(g);
    if (x.is_successor()) {
      x = pred(x);
      ++i;
    }
    g = pred(g);
  }
  return out;
}

PathMap TEmbedding::on(const FiniteBTree& source) const {
  PathMap out;
  for (const auto& s : source.nodes()) out.emplace_hint(out.end(), s, (*this)(s));
  return out;
}

TEmbedding embed_t(const Ordinal& xi, const Ordinal& gamma) { return TEmbedding(xi, gamma); }

}  // namespace ordgame
