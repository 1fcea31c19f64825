#include "ordgame/games.hpp"

#include <cctype>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>

#include "ordgame/errors.hpp"

namespace ordgame {

const char* to_string(Player p) { return p == Player::I ? "I" : "II"; }

NodePath projection(const Position& p) {
  NodePath out;
  out.reserve(p.size());
  for (const auto& s : p) out.push_back(s.zeta);
  return out;
}

NodePath projection(const TDPath& p) {
  NodePath out;
  out.reserve(p.size());
  for (const auto& s : p) out.push_back(s.zeta);
  return out;
}

std::string format_position(const Position& p) {
  std::string out;
  for (const auto& s : p)
    out += '(' + s.zeta.to_string() + ',' + std::to_string(s.subspace) + ',' + std::to_string(s.compact) + ')';
  return out;
}

std::string format_td_path(const TDPath& p) {
  std::string out;
  for (const auto& s : p) out += '(' + s.zeta.to_string() + ',' + std::to_string(s.subspace) + ')';
  return out;
}

namespace {

std::size_t parse_index(std::string_view s, std::string_view whole) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty() || s.size() > 18) throw ParseError("history '" + std::string(whole) + "': bad index");
  std::size_t v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ParseError("history '" + std::string(whole) + "': bad index");
    v = v * 10 + static_cast<std::size_t>(ch - '0');
  }
  return v;
}

}  // namespace

Position parse_position(std::string_view text) {
  Position out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("history '" + std::string(text) + "': expected '('");
    const std::size_t open = ++i;
    int depth = 1;
    std::vector<std::size_t> commas;
    for (; i < text.size() && depth > 0; ++i) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      if (text[i] == ',' && depth == 1) commas.push_back(i);
    }
    if (depth != 0 || commas.size() != 2)
      throw ParseError("history '" + std::string(text) + "': each round must read (zeta,Z,C)");
    const std::size_t close = i - 1;
    out.push_back(Step{Ordinal::parse(text.substr(open, commas[0] - open)),
                       parse_index(text.substr(commas[0] + 1, commas[1] - commas[0] - 1), text),
                       parse_index(text.substr(commas[1] + 1, close - commas[1] - 1), text)});
    skip_ws();
  }
  return out;
}

namespace {

// Node-indexed view of the game tree; children are in ascending label order.
struct Indexed {
  std::vector<Ordinal> label;
  std::vector<std::vector<std::uint32_t>> children;
  std::vector<std::uint32_t> roots;
  std::vector<Rational> weight;

  explicit Indexed(const GameSpec& g) {
    std::map<NodePath, std::uint32_t> index;
    for (const auto& t : g.tree().nodes()) {
      const auto id = static_cast<std::uint32_t>(label.size());
      label.push_back(t.back());
      children.emplace_back();
      weight.push_back(g.weight_of(t));
      index.emplace(t, id);
      if (t.size() == 1)
        roots.push_back(id);
      else
        children[index.at(NodePath(t.begin(), t.end() - 1))].push_back(id);
    }
  }

  bool maximal(std::uint32_t v) const { return children[v].empty(); }

  const std::vector<std::uint32_t>& moves_after(const std::optional<std::uint32_t>& v) const {
    return v ? children[*v] : roots;
  }

  std::optional<std::uint32_t> find(const std::optional<std::uint32_t>& parent, const Ordinal& mu) const {
    for (auto c : moves_after(parent))
      if (label[c] == mu) return c;
    return std::nullopt;
  }
};

struct Round {
  std::uint32_t node;
  std::uint32_t subspace;
  std::uint32_t compact;

  friend auto operator<=>(const Round&, const Round&) = default;
};

using Rounds = std::vector<Round>;

std::optional<std::uint32_t> current(const Rounds& h) {
  if (h.empty()) return std::nullopt;
  return h.back().node;
}

// Maps a public history onto node ids; nullopt if it leaves the tree or an
// alphabet.
std::optional<Rounds> to_rounds(const Indexed& ix, const GameSpec& g, const Position& p) {
  Rounds out;
  for (const auto& s : p) {
    auto v = ix.find(current(out), s.zeta);
    if (!v || s.subspace >= g.subspace_count() || s.compact >= g.compact_count()) return std::nullopt;
    out.push_back(Round{*v, static_cast<std::uint32_t>(s.subspace), static_cast<std::uint32_t>(s.compact)});
  }
  return out;
}

// Payoff on node-indexed histories, with the Szlenk maxima over each
// selectable set precomputed per (functional, Z, C).
class PayoffTable {
 public:
  PayoffTable(const GameSpec& g, const Indexed& ix) : g_(g), ix_(ix) {
    const auto& m = g.model();
    nz_ = g.subspace_count();
    nc_ = g.compact_count();
    if (g.is_szlenk()) {
      best_.resize(m.functionals.size() * nz_ * nc_);
      for (std::size_t z = 0; z < nz_; ++z) {
        for (std::size_t c = 0; c < nc_; ++c) {
          const auto sel = m.selectable(z, c);
          for (std::size_t f = 0; f < m.functionals.size(); ++f) {
            std::optional<Rational> top;
            for (auto i : sel) {
              Rational v = apply_functional(m.functionals[f], m.compacts[c][i]);
              if (!top || v > *top) top = std::move(v);
            }
            best_[(f * nz_ + z) * nc_ + c] = std::move(top);
          }
          if (sel.empty()) empty_.emplace(z, c);
        }
      }
    } else {
      for (const auto& p : std::get<TablePayoff>(g.payoff()).winning) winning_.insert(*to_rounds(ix, g, p));
    }
  }

  bool operator()(const Rounds& h) const {
    if (!g_.is_szlenk()) return winning_.count(h) != 0;
    for (const auto& r : h)
      if (empty_.count({r.subspace, r.compact})) return false;
    const auto& m = g_.model();
    for (std::size_t f = 0; f < m.functionals.size(); ++f) {
      Rational total;
      for (const auto& r : h) total += ix_.weight[r.node] * *best_[(f * nz_ + r.subspace) * nc_ + r.compact];
      if (total >= m.epsilon) return true;
    }
    return false;
  }

 private:
  const GameSpec& g_;
  const Indexed& ix_;
  std::size_t nz_ = 0;
  std::size_t nc_ = 0;
  std::vector<std::optional<Rational>> best_;
  std::set<std::pair<std::size_t, std::size_t>> empty_;
  std::set<Rounds> winning_;
};

Position to_position(const Indexed& ix, const Rounds& h) {
  Position out;
  out.reserve(h.size());
  for (const auto& r : h) out.push_back(Step{ix.label[r.node], r.subspace, r.compact});
  return out;
}

class Solver {
 public:
  Solver(const GameSpec& g, const Indexed& ix, const PayoffTable& pay)
      : ix_(ix), pay_(pay), nz_(g.subspace_count()), nc_(g.compact_count()) {}

  // True iff Player I wins the subgame after h. Records both players' choices
  // at every decision point below h.
  bool first_player_wins(Rounds& h) {
    const auto& moves = ix_.moves_after(current(h));
    std::optional<std::pair<std::uint32_t, std::uint32_t>> chosen;
    for (auto v : moves) {
      for (std::uint32_t z = 0; z < nz_; ++z) {
        bool in_w = true;
        std::optional<std::uint32_t> answer;
        for (std::uint32_t c = 0; c < nc_; ++c) {
          h.push_back(Round{v, z, c});
          const bool first_wins = ix_.maximal(v) ? !pay_(h) : first_player_wins(h);
          h.pop_back();
          if (!first_wins) {
            in_w = false;
            if (!answer) answer = c;
          }
        }
        if (in_w && !chosen) chosen.emplace(v, z);
        second_.emplace(std::make_pair(h, std::make_pair(v, z)), answer.value_or(0));
      }
    }
    first_.emplace(h, chosen.value_or(std::make_pair(moves.front(), 0u)));
    return chosen.has_value();
  }

  Strategy strategy_for(Player p) const {
    Strategy s;
    s.player = p;
    if (p == Player::I) {
      for (const auto& [h, mv] : first_)
        s.first.emplace(to_position(ix_, h), IMove{ix_.label[mv.first], mv.second});
    } else {
      for (const auto& [key, c] : second_)
        s.second.emplace(std::make_pair(to_position(ix_, key.first),
                                        IMove{ix_.label[key.second.first], key.second.second}),
                         c);
    }
    return s;
  }

 private:
  const Indexed& ix_;
  const PayoffTable& pay_;
  std::uint32_t nz_;
  std::uint32_t nc_;
  std::map<Rounds, std::pair<std::uint32_t, std::uint32_t>> first_;
  std::map<std::pair<Rounds, std::pair<std::uint32_t, std::uint32_t>>, std::uint32_t> second_;
};

class Verifier {
 public:
  Verifier(const GameSpec& g, const Indexed& ix, const PayoffTable& pay, const Strategy& s)
      : g_(g), ix_(ix), pay_(pay), s_(s) {}

  bool run() {
    Rounds h;
    Position p;
    return visit(h, p);
  }

 private:
  bool terminal_ok(const Rounds& h) const { return pay_(h) == (s_.player == Player::II); }

  bool step(Rounds& h, Position& p, std::uint32_t v, std::uint32_t z, std::uint32_t c) {
    h.push_back(Round{v, z, c});
    p.push_back(Step{ix_.label[v], z, c});
    const bool ok = ix_.maximal(v) ? terminal_ok(h) : visit(h, p);
    h.pop_back();
    p.pop_back();
    return ok;
  }

  bool visit(Rounds& h, Position& p) {
    const auto& moves = ix_.moves_after(current(h));
    if (s_.player == Player::I) {
      auto it = s_.first.find(p);
      if (it == s_.first.end() || it->second.subspace >= g_.subspace_count()) return false;
      auto v = ix_.find(current(h), it->second.zeta);
      if (!v) return false;
      const auto z = static_cast<std::uint32_t>(it->second.subspace);
      for (std::uint32_t c = 0; c < g_.compact_count(); ++c)
        if (!step(h, p, *v, z, c)) return false;
      return true;
    }
    for (auto v : moves) {
      for (std::uint32_t z = 0; z < g_.subspace_count(); ++z) {
        auto it = s_.second.find(std::make_pair(p, IMove{ix_.label[v], z}));
        if (it == s_.second.end() || it->second >= g_.compact_count()) return false;
        if (!step(h, p, v, z, static_cast<std::uint32_t>(it->second))) return false;
      }
    }
    return true;
  }

  const GameSpec& g_;
  const Indexed& ix_;
  const PayoffTable& pay_;
  const Strategy& s_;
};

void check_leaf(const GameSpec& g, const Position& leaf) {
  if (leaf.empty()) throw DomainError("payoff: empty history");
  const NodePath t = projection(leaf);
  if (!g.tree().contains(t) || !g.tree().child_labels(t).empty())
    throw DomainError("payoff: " + format_position(leaf) + " does not end at a maximal node");
  for (const auto& s : leaf)
    if (s.subspace >= g.subspace_count() || s.compact >= g.compact_count())
      throw DomainError("payoff: " + format_position(leaf) + " uses an index outside the alphabets");
}

}  // namespace

GameSpec::GameSpec(FiniteBTree tree, ModelSpace model, std::map<NodePath, Weight> weights, Payoff payoff)
    : tree_(std::move(tree)), model_(std::move(model)), weights_(std::move(weights)), payoff_(std::move(payoff)) {
  if (!tree_.is_valid()) throw DomainError("game tree is not a B-tree");
  if (tree_.empty()) throw DomainError("game tree is empty");
  model_.validate();
  for (const auto& [t, w] : weights_)
    if (!tree_.contains(t)) throw DomainError("weight given for non-node " + format_path(t));
  if (is_szlenk()) {
    for (const auto& t : tree_.nodes())
      if (!weights_.count(t)) throw DomainError("Szlenk game lacks a weight for " + format_path(t));
  } else {
    for (const auto& p : std::get<TablePayoff>(payoff_).winning) check_leaf(*this, p);
  }
}

const Rational& GameSpec::weight_of(const NodePath& t) const {
  static const Rational zero;
  auto it = weights_.find(t);
  return it == weights_.end() ? zero : it->second.value();
}

std::size_t GameSpec::position_count() const {
  constexpr std::size_t cap = std::numeric_limits<std::size_t>::max();
  const std::size_t per_round = subspace_count() * compact_count();
  std::size_t total = 0;
  for (const auto& t : tree_.nodes()) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < t.size(); ++i) n = n > cap / per_round ? cap : n * per_round;
    total = total > cap - n ? cap : total + n;
  }
  return total;
}

std::optional<SzlenkWitness> szlenk_witness(const GameSpec& g, const Position& leaf) {
  check_leaf(g, leaf);
  const auto& m = g.model();
  std::vector<std::vector<std::size_t>> selectable;
  for (const auto& s : leaf) {
    selectable.push_back(m.selectable(s.subspace, s.compact));
    if (selectable.back().empty()) return std::nullopt;
  }
  std::optional<SzlenkWitness> best;
  NodePath prefix;
  for (std::size_t f = 0; f < m.functionals.size(); ++f) {
    SzlenkWitness w;
    w.functional = f;
    prefix.clear();
    for (std::size_t i = 0; i < leaf.size(); ++i) {
      prefix.push_back(leaf[i].zeta);
      const auto& set = m.compacts[leaf[i].compact];
      std::size_t pick = selectable[i].front();
      Rational top = apply_functional(m.functionals[f], set[pick]);
      for (auto j : selectable[i]) {
        Rational v = apply_functional(m.functionals[f], set[j]);
        if (v > top) {
          top = std::move(v);
          pick = j;
        }
      }
      w.picks.push_back(pick);
      w.value += g.weight_of(prefix) * top;
    }
    if (!best || w.value > best->value) best = std::move(w);
  }
  return best;
}

bool eval_payoff(const GameSpec& g, const Position& leaf) {
  check_leaf(g, leaf);
  if (!g.is_szlenk()) return std::get<TablePayoff>(g.payoff()).winning.count(leaf) != 0;
  auto w = szlenk_witness(g, leaf);
  return w && w->value >= g.model().epsilon;
}

Solution solve(const GameSpec& g) {
  const Indexed ix(g);
  const PayoffTable pay(g, ix);
  Solver solver(g, ix, pay);
  Rounds h;
  const Player winner = solver.first_player_wins(h) ? Player::I : Player::II;
  return Solution{winner, solver.strategy_for(winner)};
}

bool verify_strategy(const GameSpec& g, const Strategy& s) {
  const Indexed ix(g);
  const PayoffTable pay(g, ix);
  return Verifier(g, ix, pay, s).run();
}

Player brute_force_winner(const GameSpec& g, std::size_t position_cap) {
  if (g.position_count() > position_cap)
    throw ResourceLimit("brute force: " + std::to_string(g.position_count()) + " positions exceed the cap of " +
                        std::to_string(position_cap));
  const FiniteBTree& tree = g.tree();
  // second_wins(p): for every (zeta, Z) there is a C after which II wins.
  std::function<bool(Position&)> second_wins = [&](Position& p) -> bool {
    const NodePath here = projection(p);
    for (const auto& zeta : tree.child_labels(here)) {
      NodePath next = here;
      next.push_back(zeta);
      const bool leaf = tree.child_labels(next).empty();
      for (std::size_t z = 0; z < g.subspace_count(); ++z) {
        bool answered = false;
        for (std::size_t c = 0; c < g.compact_count() && !answered; ++c) {
          p.push_back(Step{zeta, z, c});
          answered = leaf ? eval_payoff(g, p) : second_wins(p);
          p.pop_back();
        }
        if (!answered) return false;
      }
    }
    return true;
  };
  Position start;
  return second_wins(start) ? Player::II : Player::I;
}

Strategy complete_substrategy(const GameSpec& g, const Strategy& sub, std::size_t fallback_subspace) {
  if (sub.player != Player::I) throw DomainError("substrategy must belong to Player I");
  if (fallback_subspace >= g.subspace_count()) throw DomainError("fallback subspace index out of range");
  const Indexed ix(g);

  auto opening = sub.first.find(Position{});
  if (opening == sub.first.end()) throw DomainError("substrategy has no opening move");
  if (!ix.find(std::nullopt, opening->second.zeta))
    throw DomainError("substrategy opening label " + opening->second.zeta.to_string() + " is not a root");

  for (const auto& [p, mv] : sub.first) {
    auto h = to_rounds(ix, g, p);
    if (!h || (!h->empty() && ix.maximal(h->back().node)))
      throw DomainError("substrategy prescribes at " + format_position(p) + ", which is not a decision point");
    if (!ix.find(current(*h), mv.zeta) || mv.subspace >= g.subspace_count())
      throw DomainError("substrategy move at " + format_position(p) + " is illegal");
  }

  // Every decision point reachable under sub must be prescribed.
  std::function<void(Rounds&, Position&)> reach = [&](Rounds& h, Position& p) {
    auto it = sub.first.find(p);
    if (it == sub.first.end())
      throw DomainError("substrategy undefined at reachable position " + format_position(p));
    const auto v = *ix.find(current(h), it->second.zeta);
    if (ix.maximal(v)) return;
    for (std::uint32_t c = 0; c < g.compact_count(); ++c) {
      h.push_back(Round{v, static_cast<std::uint32_t>(it->second.subspace), c});
      p.push_back(Step{it->second.zeta, it->second.subspace, c});
      reach(h, p);
      h.pop_back();
      p.pop_back();
    }
  };
  Rounds h0;
  Position p0;
  reach(h0, p0);

  Strategy out;
  out.player = Player::I;
  std::function<void(Rounds&, Position&)> fill = [&](Rounds& h, Position& p) {
    const auto& moves = ix.moves_after(current(h));
    auto it = sub.first.find(p);
    out.first.emplace(p, it != sub.first.end() ? it->second : IMove{ix.label[moves.front()], fallback_subspace});
    for (auto v : moves) {
      if (ix.maximal(v)) continue;
      for (std::uint32_t z = 0; z < g.subspace_count(); ++z) {
        for (std::uint32_t c = 0; c < g.compact_count(); ++c) {
          h.push_back(Round{v, z, c});
          p.push_back(Step{ix.label[v], z, c});
          fill(h, p);
          h.pop_back();
          p.pop_back();
        }
      }
    }
  };
  fill(h0, p0);
  return out;
}

Collections extract_collections(const GameSpec& g, const Strategy& s) {
  if (!g.is_szlenk()) throw DomainError("extraction needs a Szlenk payoff");
  if (s.player != Player::II) throw DomainError("extraction needs a Player II strategy");
  if (!verify_strategy(g, s)) throw DomainError("strategy is not a winning Player II strategy");
  const Indexed ix(g);
  const auto& m = g.model();
  Collections out;
  TDPath td;
  Position hist;
  std::function<void(std::optional<std::uint32_t>)> visit = [&](std::optional<std::uint32_t> at) {
    for (auto v : ix.moves_after(at)) {
      for (std::size_t z = 0; z < g.subspace_count(); ++z) {
        const IMove mv{ix.label[v], z};
        const std::size_t c = s.second.at(std::make_pair(hist, mv));
        td.push_back(mv);
        hist.push_back(Step{mv.zeta, z, c});
        out.compact.emplace(td, c);
        if (ix.maximal(v)) {
          // The history is admissible for a winning strategy, so it is in E.
          auto w = szlenk_witness(g, hist);
          if (!w || w->value < m.epsilon) throw Error("admissible history " + format_position(hist) + " not in E");
          out.functional.emplace(td, m.functionals[w->functional]);
          for (std::size_t i = 0; i < hist.size(); ++i)
            out.vectors.emplace(std::make_pair(TDPath(td.begin(), td.begin() + static_cast<std::ptrdiff_t>(i + 1)), td),
                                m.compacts[hist[i].compact][w->picks[i]]);
        } else {
          visit(v);
        }
        td.pop_back();
        hist.pop_back();
      }
    }
  };
  visit(std::nullopt);
  return out;
}

GameSpec build_szlenk_game(const Ordinal& xi, const TruncationBudget& budget, ModelSpace model) {
  FiniteBTree tree = truncate_to_finite(FamilyId{FamilyKind::Gamma, xi}, budget);
  std::map<NodePath, Weight> weights;
  for (const auto& t : tree.nodes()) weights.emplace(t, weight(xi, t));
  return GameSpec(std::move(tree), std::move(model), std::move(weights), SzlenkPayoff{});
}

}  // namespace ordgame
