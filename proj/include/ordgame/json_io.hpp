#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "ordgame/btree.hpp"
#include "ordgame/families.hpp"
#include "ordgame/games.hpp"
#include "ordgame/model.hpp"

namespace ordgame::json_io {

using nlohmann::json;

/// Parses text, mapping syntax errors to ParseError.
json parse(std::string_view text);

// Ordinals inside JSON may be CNF strings or nonnegative integers; rationals
// may be "p/q" strings or integers. Malformed documents raise ParseError.

Ordinal ordinal_from(const json& j);
Rational rational_from(const json& j);
NodePath path_from(const json& j);

/// {"nodes": [[ord, ...], ...]}
FiniteBTree tree_from(const json& j);
json to_json(const FiniteBTree& tree);

/// {"dim", "subspaces", "compacts", "functionals", "epsilon", "norm"}
ModelSpace model_from(const json& j);
json to_json(const ModelSpace& model);

/// {"tree", "weights": {"<path>": "p/q"}, "model", "payoff": "szlenk" | {"table": [...]}}
GameSpec game_from(const json& j);
json to_json(const GameSpec& g);

/// {"player": "I", "moves": {"<history>": {"zeta", "Z"}}} or
/// {"player": "II", "moves": {"<history>": [{"zeta", "Z", "C"}, ...]}}.
/// A solver output {"winner", "strategy"} is accepted as well.
Strategy strategy_from(const json& j);
json to_json(const Strategy& s);

/// {"winner", "strategy"}
json to_json(const Solution& s);

json to_json(const Collections& c);

/// {"kind": "T" | "Gamma", "xi": "<CNF>"}
FamilyId family_from(const json& j);
/// {"max_n": N, "max_depth": D}; absent keys keep their defaults.
TruncationBudget budget_from(const json& j, TruncationBudget base = {});

std::string dump(const json& j);

}  // namespace ordgame::json_io
