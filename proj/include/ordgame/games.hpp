#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "ordgame/btree.hpp"
#include "ordgame/families.hpp"
#include "ordgame/model.hpp"
#include "ordgame/numeric.hpp"

namespace ordgame {

// Two-player games on a finite well-founded B-tree T with move alphabets D
// (subspace indices) and K (compact-set indices). Player I picks (zeta, Z)
// extending the current node, Player II answers with C; play stops at a
// maximal node of T. II wins iff the history lies in the payoff set.

enum class Player { I, II };

const char* to_string(Player p);

/// One round (zeta, Z, C).
struct Step {
  Ordinal zeta;
  std::size_t subspace = 0;
  std::size_t compact = 0;

  friend auto operator<=>(const Step&, const Step&) = default;
  friend bool operator==(const Step&, const Step&) = default;
};

/// Player I's half of a round, (zeta, Z).
struct IMove {
  Ordinal zeta;
  std::size_t subspace = 0;

  friend auto operator<=>(const IMove&, const IMove&) = default;
  friend bool operator==(const IMove&, const IMove&) = default;
};

/// A history of rounds; the empty history is the start of play.
using Position = std::vector<Step>;

/// A sequence of Player I moves, i.e. an element of T.D.
using TDPath = std::vector<IMove>;

NodePath projection(const Position& p);
NodePath projection(const TDPath& p);

/// `(3,0,1)(2,1,0)`; the empty history is the empty string.
std::string format_position(const Position& p);
Position parse_position(std::string_view text);

/// `(3,0)(2,1)`.
std::string format_td_path(const TDPath& p);

/// Payoff via the finite Szlenk payoff set E_{K,eps}.
struct SzlenkPayoff {};

/// Payoff via an explicit list of maximal histories won by Player II.
struct TablePayoff {
  std::set<Position> winning;
};

using Payoff = std::variant<SzlenkPayoff, TablePayoff>;

class GameSpec {
 public:
  /// Throws DomainError if the tree is empty or not a B-tree, the model is
  /// malformed, a Szlenk game lacks a weight for some node, or a table entry
  /// is not a maximal history.
  GameSpec(FiniteBTree tree, ModelSpace model, std::map<NodePath, Weight> weights, Payoff payoff);

  const FiniteBTree& tree() const { return tree_; }
  const ModelSpace& model() const { return model_; }
  const std::map<NodePath, Weight>& weights() const { return weights_; }
  const Payoff& payoff() const { return payoff_; }
  bool is_szlenk() const { return std::holds_alternative<SzlenkPayoff>(payoff_); }

  std::size_t subspace_count() const { return model_.subspaces.size(); }
  std::size_t compact_count() const { return model_.compacts.size(); }

  /// Weight of a tree node; 0 where none was supplied.
  const Rational& weight_of(const NodePath& t) const;

  /// Number of histories (nonempty elements of T.D.K).
  std::size_t position_count() const;

 private:
  FiniteBTree tree_;
  ModelSpace model_;
  std::map<NodePath, Weight> weights_;
  Payoff payoff_;
};

/// A decision rule for one player. Player I's rule maps I-to-move positions to
/// moves; Player II's maps (position, pending I move) to a compact index.
struct Strategy {
  Player player = Player::I;
  std::map<Position, IMove> first;
  std::map<std::pair<Position, IMove>, std::size_t> second;
};

/// Witness for the Szlenk payoff at a maximal history: the functional and,
/// per round, the chosen vector of C_i n Z_i n B_X (indices into C_i).
struct SzlenkWitness {
  std::size_t functional = 0;
  std::vector<std::size_t> picks;
  Rational value;
};

/// Best witness by exact max-decomposition (weights are nonnegative, so the
/// optimum separates per round); ties go to the lowest index. nullopt when no
/// selection exists (some selectable set is empty, or K is empty).
std::optional<SzlenkWitness> szlenk_witness(const GameSpec& g, const Position& leaf);

/// Throws DomainError unless leaf is a maximal history of T.D.K.
bool eval_payoff(const GameSpec& g, const Position& leaf);

struct Solution {
  Player winner = Player::I;
  Strategy strategy;
};

/// Backward induction over the W-set recursion. The returned strategy is
/// total on the winner's decision points: where the winner's subgame is won it
/// plays the least winning move, elsewhere it falls back to the least legal
/// move (Z = 0 for Player I, C = 0 for Player II).
Solution solve(const GameSpec& g);

/// Plays out every admissible complete history against every opponent move
/// and checks that each one is won by s.player. Missing or illegal
/// prescriptions on reachable positions make the check fail.
bool verify_strategy(const GameSpec& g, const Strategy& s);

/// Plain exists/forall minimax on the public tree and payoff, independent of
/// solve(). Throws ResourceLimit after visiting more than position_cap positions.
Player brute_force_winner(const GameSpec& g, std::size_t position_cap = 1'000'000);

/// Extends a Player I substrategy to all non-terminal histories: keeps every
/// prescription of sub and plays (least legal zeta, fallback_subspace)
/// elsewhere. Throws DomainError if the first move is missing or not a root,
/// a prescription is illegal, or a position reachable under sub is missing.
Strategy complete_substrategy(const GameSpec& g, const Strategy& sub, std::size_t fallback_subspace);

/// Collections read off a winning Player II strategy in a Szlenk game:
/// C_s for every s in T.D; for every maximal t a functional x*_t and vectors
/// x_(s,t) in C_s n Z_|s| n B_X (for s <= t) with
/// sum_{s<=t} P(s) x*_t(x_(s,t)) >= eps.
struct Collections {
  std::map<TDPath, std::size_t> compact;
  std::map<TDPath, Vector> functional;
  std::map<std::pair<TDPath, TDPath>, Vector> vectors;
};

/// Throws DomainError unless g is a Szlenk game and s a verified Player II win.
Collections extract_collections(const GameSpec& g, const Strategy& s);

/// The Szlenk game on the truncation of G_xi with weights P_xi.
GameSpec build_szlenk_game(const Ordinal& xi, const TruncationBudget& budget, ModelSpace model);

}  // namespace ordgame
