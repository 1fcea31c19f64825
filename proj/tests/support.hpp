#pragma once

// Hand-rolled random generators shared by the unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "ordgame/btree.hpp"
#include "ordgame/games.hpp"
#include "ordgame/model.hpp"
#include "ordgame/ordinal.hpp"

namespace testing_support {

using namespace ordgame;
using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

/// Random ordinal with exponents nested at most `height` deep.
inline Ordinal random_ordinal(Rng& rng, int height, std::uint64_t max_terms = 3, std::uint64_t max_coef = 5) {
  if (height <= 0) return Ordinal(uniform(rng, 0, max_coef));
  std::vector<Ordinal> exps;
  const auto n = uniform(rng, 0, max_terms);
  for (std::uint64_t i = 0; i < n; ++i) exps.push_back(random_ordinal(rng, height - 1, max_terms, max_coef));
  std::sort(exps.begin(), exps.end(), std::greater<>());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<Ordinal::Term> terms;
  for (auto& e : exps) terms.push_back(Ordinal::Term{e, Natural(uniform(rng, 1, max_coef))});
  return Ordinal::from_terms(std::move(terms));
}

/// Random ordinal below w^max_exp with natural exponents.
inline Ordinal random_below_omega_pow(Rng& rng, std::uint64_t max_exp, std::uint64_t max_coef = 5) {
  std::vector<Ordinal::Term> terms;
  for (std::uint64_t e = max_exp; e-- > 0;)
    if (coin(rng)) terms.push_back(Ordinal::Term{Ordinal(e), Natural(uniform(rng, 1, max_coef))});
  return Ordinal::from_terms(std::move(terms));
}

/// w^g * q for arbitrary q (left distributivity over the CNF of q).
inline Ordinal omega_pow_times(const Ordinal& g, const Ordinal& q) {
  Ordinal out;
  for (const auto& t : q.terms()) out = add(out, mul_nat(omega_pow(add(g, t.exponent)), t.coefficient));
  return out;
}

/// Random finite B-tree with small ordinal labels; at most max_nodes nodes.
inline FiniteBTree random_tree(Rng& rng, std::size_t max_nodes, std::size_t max_depth, std::uint64_t max_branch = 3) {
  std::set<NodePath> nodes;
  std::vector<NodePath> frontier{NodePath{}};
  while (!frontier.empty() && nodes.size() < max_nodes) {
    const auto i = uniform(rng, 0, frontier.size() - 1);
    NodePath t = frontier[i];
    frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(i));
    if (t.size() >= max_depth) continue;
    const auto k = t.empty() ? uniform(rng, 1, max_branch) : uniform(rng, 0, max_branch);
    std::set<Ordinal> labels;
    for (std::uint64_t j = 0; j < k; ++j) {
      Ordinal mu = coin(rng, 0.8) ? Ordinal(uniform(rng, 1, 6)) : add(Ordinal::omega(), Ordinal(uniform(rng, 0, 3)));
      labels.insert(mu);
    }
    for (const auto& mu : labels) {
      if (nodes.size() >= max_nodes) break;
      NodePath c = t;
      c.push_back(mu);
      nodes.insert(c);
      frontier.push_back(c);
    }
  }
  return FiniteBTree(std::move(nodes));
}

inline Rational random_rational(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t den) {
  const auto d = static_cast<std::int64_t>(uniform(rng, 1, static_cast<std::uint64_t>(den)));
  const auto n = std::uniform_int_distribution<std::int64_t>(lo * d, hi * d)(rng);
  return Rational(n, d);
}

inline Vector random_vector(Rng& rng, std::size_t dim, std::int64_t lo, std::int64_t hi, std::int64_t den) {
  Vector v;
  for (std::size_t i = 0; i < dim; ++i) v.push_back(random_rational(rng, lo, hi, den));
  return v;
}

/// Random model: subspaces drawn from {whole, {0}, coordinate hyperplanes},
/// compact sets of a few small vectors (some outside the ball).
inline ModelSpace random_model(Rng& rng, std::size_t n_sub, std::size_t n_comp, std::size_t max_set = 3) {
  ModelSpace m;
  m.dim = uniform(rng, 1, 3);
  m.norm = coin(rng) ? Norm::max : Norm::sum;
  for (std::size_t i = 0; i < n_sub; ++i) {
    Subspace z;
    const auto kind = uniform(rng, 0, 3);
    if (kind == 1) {
      for (std::size_t d = 0; d < m.dim; ++d) {
        Vector row(m.dim);
        row[d] = 1;
        z.constraints.push_back(row);
      }
    } else if (kind >= 2) {
      Vector row(m.dim);
      row[uniform(rng, 0, m.dim - 1)] = 1;
      z.constraints.push_back(row);
    }
    m.subspaces.push_back(std::move(z));
  }
  for (std::size_t i = 0; i < n_comp; ++i) {
    std::vector<Vector> set;
    const auto k = uniform(rng, 1, max_set);
    for (std::uint64_t j = 0; j < k; ++j) {
      Vector v = random_vector(rng, m.dim, -1, 1, 2);
      if (coin(rng, 0.15)) v[0] = 2;
      set.push_back(std::move(v));
    }
    m.compacts.push_back(std::move(set));
  }
  const auto nf = uniform(rng, 1, 3);
  for (std::uint64_t j = 0; j < nf; ++j) m.functionals.push_back(random_vector(rng, m.dim, -1, 1, 2));
  m.epsilon = Rational(static_cast<std::int64_t>(uniform(rng, 1, 4)), 4);
  return m;
}

/// Arbitrary weights from {0, 1/4, ..., 1}; games accept any values in [0, 1].
inline std::map<NodePath, Weight> random_weights(Rng& rng, const FiniteBTree& tree) {
  std::map<NodePath, Weight> w;
  for (const auto& t : tree.nodes()) w.emplace(t, Weight(Rational(static_cast<std::int64_t>(uniform(rng, 0, 4)), 4)));
  return w;
}

/// Every maximal history of a game, in lexicographic order.
inline std::vector<Position> maximal_histories(const GameSpec& g) {
  std::vector<Position> out;
  std::vector<Position> stack{Position{}};
  while (!stack.empty()) {
    Position p = std::move(stack.back());
    stack.pop_back();
    const NodePath here = projection(p);
    const auto labels = g.tree().child_labels(here);
    if (!p.empty() && labels.empty()) {
      out.push_back(std::move(p));
      continue;
    }
    for (const auto& mu : labels)
      for (std::size_t z = 0; z < g.subspace_count(); ++z)
        for (std::size_t c = 0; c < g.compact_count(); ++c) {
          Position q = p;
          q.push_back(Step{mu, z, c});
          stack.push_back(std::move(q));
        }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Random game of bounded size; about half use the Szlenk payoff.
inline GameSpec random_game(Rng& rng, std::size_t max_nodes = 30, std::size_t max_depth = 4,
                            std::size_t max_positions = 200'000) {
  for (;;) {
    const std::size_t n_sub = uniform(rng, 1, 3);
    const std::size_t n_comp = uniform(rng, 1, 3);
    FiniteBTree tree = random_tree(rng, uniform(rng, 1, max_nodes), uniform(rng, 1, max_depth));
    ModelSpace model = random_model(rng, n_sub, n_comp);
    auto weights = random_weights(rng, tree);
    if (coin(rng)) {
      GameSpec g(tree, model, weights, SzlenkPayoff{});
      if (g.position_count() <= max_positions) return g;
      continue;
    }
    GameSpec shape(tree, model, weights, TablePayoff{});
    if (shape.position_count() > max_positions) continue;
    const double density = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    TablePayoff table;
    for (auto& h : maximal_histories(shape))
      if (coin(rng, density)) table.winning.insert(std::move(h));
    return GameSpec(std::move(tree), std::move(model), std::move(weights), std::move(table));
  }
}

}  // namespace testing_support
