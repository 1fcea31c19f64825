#include "ordgame/json_io.hpp"

#include "ordgame/errors.hpp"

namespace ordgame::json_io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError("json: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key '") + key + "'");
  return *it;
}

const json& array(const json& j, const std::string& what) {
  if (!j.is_array()) bad(what + " must be an array");
  return j;
}

std::size_t index_from(const json& j, const std::string& what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    bad(what + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

Vector vector_from(const json& j, const std::string& what) {
  Vector out;
  for (const auto& x : array(j, what)) out.push_back(rational_from(x));
  return out;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(format_rational(x));
  return out;
}

json path_to_json(const NodePath& t) {
  json out = json::array();
  for (const auto& mu : t) out.push_back(mu.to_string());
  return out;
}

Position position_from(const json& j) {
  if (j.is_string()) return parse_position(j.get<std::string>());
  Position out;
  for (const auto& step : array(j, "history")) {
    if (!step.is_array() || step.size() != 3) bad("history round must be [zeta, Z, C]");
    out.push_back(Step{ordinal_from(step[0]), index_from(step[1], "Z"), index_from(step[2], "C")});
  }
  return out;
}

json imove_to_json(const IMove& m) { return json{{"zeta", m.zeta.to_string()}, {"Z", m.subspace}}; }

}  // namespace

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
}

Ordinal ordinal_from(const json& j) {
  if (j.is_string()) return Ordinal::parse(j.get<std::string>());
  if (j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0))
    return Ordinal(j.get<std::uint64_t>());
  bad("ordinal must be a CNF string or a nonnegative integer");
}

Rational rational_from(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  bad("rational must be a \"p/q\" string or an integer");
}

NodePath path_from(const json& j) {
  if (j.is_string()) return parse_path(j.get<std::string>());
  NodePath out;
  for (const auto& mu : array(j, "path")) out.push_back(ordinal_from(mu));
  return out;
}

FiniteBTree tree_from(const json& j) {
  std::set<NodePath> nodes;
  for (const auto& t : array(field(j, "nodes"), "nodes")) {
    NodePath p = path_from(t);
    if (p.empty()) bad("tree nodes must be nonempty");
    nodes.insert(std::move(p));
  }
  return FiniteBTree(std::move(nodes));
}

json to_json(const FiniteBTree& tree) {
  json nodes = json::array();
  for (const auto& t : tree.nodes()) nodes.push_back(path_to_json(t));
  return json{{"nodes", nodes}};
}

ModelSpace model_from(const json& j) {
  ModelSpace m;
  m.dim = index_from(field(j, "dim"), "dim");
  for (const auto& z : array(field(j, "subspaces"), "subspaces")) {
    Subspace s;
    for (const auto& row : array(z, "subspace")) s.constraints.push_back(vector_from(row, "constraint row"));
    m.subspaces.push_back(std::move(s));
  }
  for (const auto& c : array(field(j, "compacts"), "compacts")) {
    std::vector<Vector> set;
    for (const auto& v : array(c, "compact set")) set.push_back(vector_from(v, "vector"));
    m.compacts.push_back(std::move(set));
  }
  for (const auto& f : array(field(j, "functionals"), "functionals")) m.functionals.push_back(vector_from(f, "functional"));
  if (j.contains("epsilon")) m.epsilon = rational_from(j["epsilon"]);
  if (j.contains("norm")) {
    const auto& n = j["norm"];
    if (n == "max")
      m.norm = Norm::max;
    else if (n == "sum")
      m.norm = Norm::sum;
    else
      bad("norm must be \"max\" or \"sum\"");
  }
  return m;
}

json to_json(const ModelSpace& m) {
  json subspaces = json::array();
  for (const auto& z : m.subspaces) {
    json rows = json::array();
    for (const auto& r : z.constraints) rows.push_back(vector_to_json(r));
    subspaces.push_back(rows);
  }
  json compacts = json::array();
  for (const auto& c : m.compacts) {
    json set = json::array();
    for (const auto& v : c) set.push_back(vector_to_json(v));
    compacts.push_back(set);
  }
  json functionals = json::array();
  for (const auto& f : m.functionals) functionals.push_back(vector_to_json(f));
  return json{{"dim", m.dim},
              {"subspaces", subspaces},
              {"compacts", compacts},
              {"functionals", functionals},
              {"epsilon", format_rational(m.epsilon)},
              {"norm", m.norm == Norm::max ? "max" : "sum"}};
}

GameSpec game_from(const json& j) {
  FiniteBTree tree = tree_from(field(j, "tree"));
  ModelSpace model = model_from(field(j, "model"));
  std::map<NodePath, Weight> weights;
  if (j.contains("weights")) {
    const auto& w = j["weights"];
    if (!w.is_object()) bad("weights must be an object keyed by path strings");
    for (const auto& [key, value] : w.items()) weights.emplace(parse_path(key), Weight(rational_from(value)));
  }
  const auto& p = field(j, "payoff");
  Payoff payoff;
  if (p == "szlenk") {
    payoff = SzlenkPayoff{};
  } else if (p.is_object() && p.contains("table")) {
    TablePayoff table;
    for (const auto& h : array(p["table"], "table")) table.winning.insert(position_from(h));
    payoff = std::move(table);
  } else {
    bad("payoff must be \"szlenk\" or {\"table\": [...]}");
  }
  return GameSpec(std::move(tree), std::move(model), std::move(weights), std::move(payoff));
}

json to_json(const GameSpec& g) {
  json weights = json::object();
  for (const auto& [t, w] : g.weights()) weights[format_path(t)] = w.to_string();
  json payoff;
  if (g.is_szlenk()) {
    payoff = "szlenk";
  } else {
    json table = json::array();
    for (const auto& h : std::get<TablePayoff>(g.payoff()).winning) table.push_back(format_position(h));
    payoff = json{{"table", table}};
  }
  return json{{"tree", to_json(g.tree())}, {"weights", weights}, {"model", to_json(g.model())}, {"payoff", payoff}};
}

Strategy strategy_from(const json& j) {
  // Solver output wraps the strategy next to the winner.
  if (j.is_object() && j.contains("strategy") && !j.contains("player")) return strategy_from(j["strategy"]);
  Strategy s;
  const auto& player = field(j, "player");
  if (player == "I")
    s.player = Player::I;
  else if (player == "II")
    s.player = Player::II;
  else
    bad("player must be \"I\" or \"II\"");
  const auto& moves = field(j, "moves");
  if (!moves.is_object()) bad("moves must be an object keyed by history strings");
  for (const auto& [key, value] : moves.items()) {
    Position h = parse_position(key);
    if (s.player == Player::I) {
      s.first.emplace(std::move(h), IMove{ordinal_from(field(value, "zeta")), index_from(field(value, "Z"), "Z")});
    } else {
      for (const auto& answer : array(value, "Player II answers")) {
        IMove m{ordinal_from(field(answer, "zeta")), index_from(field(answer, "Z"), "Z")};
        s.second.emplace(std::make_pair(h, std::move(m)), index_from(field(answer, "C"), "C"));
      }
    }
  }
  return s;
}

json to_json(const Strategy& s) {
  json moves = json::object();
  if (s.player == Player::I) {
    for (const auto& [h, m] : s.first) moves[format_position(h)] = imove_to_json(m);
  } else {
    for (const auto& [key, c] : s.second) {
      json answer = imove_to_json(key.second);
      answer["C"] = c;
      auto& slot = moves[format_position(key.first)];
      if (slot.is_null()) slot = json::array();
      slot.push_back(std::move(answer));
    }
  }
  return json{{"player", to_string(s.player)}, {"moves", moves}};
}

json to_json(const Solution& s) { return json{{"winner", to_string(s.winner)}, {"strategy", to_json(s.strategy)}}; }

json to_json(const Collections& c) {
  json compact = json::object();
  for (const auto& [s, k] : c.compact) compact[format_td_path(s)] = k;
  json functional = json::object();
  for (const auto& [t, f] : c.functional) functional[format_td_path(t)] = vector_to_json(f);
  json vectors = json::array();
  for (const auto& [st, x] : c.vectors)
    vectors.push_back(json{{"s", format_td_path(st.first)}, {"t", format_td_path(st.second)}, {"x", vector_to_json(x)}});
  return json{{"compact", compact}, {"functional", functional}, {"vectors", vectors}};
}

FamilyId family_from(const json& j) {
  FamilyId f;
  const auto& kind = field(j, "kind");
  if (kind == "T")
    f.kind = FamilyKind::T;
  else if (kind == "Gamma")
    f.kind = FamilyKind::Gamma;
  else
    bad("family kind must be \"T\" or \"Gamma\"");
  f.xi = ordinal_from(field(j, "xi"));
  return f;
}

TruncationBudget budget_from(const json& j, TruncationBudget base) {
  if (!j.is_object()) bad("budget must be an object");
  if (j.contains("max_n")) base.max_n = index_from(j["max_n"], "max_n");
  if (j.contains("max_depth")) base.max_depth = index_from(j["max_depth"], "max_depth");
  return base;
}

std::string dump(const json& j) { return j.dump(2); }

}  // namespace ordgame::json_io
