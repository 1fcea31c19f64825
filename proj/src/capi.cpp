#include "ordgame/ordgame.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "ordgame/derivation.hpp"
#include "ordgame/errors.hpp"
#include "ordgame/families.hpp"
#include "ordgame/games.hpp"
#include "ordgame/json_io.hpp"

using namespace ordgame;

struct og_ordinal {
  Ordinal value;
};
struct og_tree {
  FiniteBTree value;
};
struct og_family {
  FamilyId value;
};
struct og_branch_cursor {
  BranchStream stream;
};
struct og_game {
  GameSpec value;
};
struct og_strategy {
  Strategy value;
};

namespace {

thread_local std::string last_error;

og_status fail(og_status s, const char* what) {
  last_error = what;
  return s;
}

class NullArgument : public std::exception {};

template <class... P>
void need(const P*... ptrs) {
  if (((ptrs == nullptr) || ...)) throw NullArgument();
}

template <class F>
og_status guard(F&& body) {
  try {
    body();
    return OG_OK;
  } catch (const NullArgument&) {
    return fail(OG_ERR_ARGUMENT, "null argument");
  } catch (const ParseError& e) {
    return fail(OG_ERR_PARSE, e.what());
  } catch (const DomainError& e) {
    return fail(OG_ERR_DOMAIN, e.what());
  } catch (const ResourceLimit& e) {
    return fail(OG_ERR_RESOURCE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(OG_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(OG_ERR_INTERNAL, e.what());
  }
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

og_ordinal* wrap(Ordinal a) { return new og_ordinal{std::move(a)}; }

TruncationBudget budget_of(const og_budget* b) {
  if (!b) return TruncationBudget{};
  return TruncationBudget{b->max_n, b->max_depth};
}

og_player player_of(Player p) { return p == Player::I ? OG_PLAYER_I : OG_PLAYER_II; }

Natural finite_value(const Ordinal& n) {
  auto v = n.as_natural();
  if (!v) throw DomainError("multiplier " + n.to_string() + " is not finite");
  return *v;
}

}  // namespace

extern "C" {

const char* og_last_error(void) { return last_error.c_str(); }

void og_string_free(char* s) { std::free(s); }

const char* og_version(void) { return "1.0.0"; }

og_budget og_budget_default(void) {
  TruncationBudget b;
  return og_budget{b.max_n, b.max_depth};
}

og_status og_budget_from_json(const char* json, og_budget* inout) {
  return guard([&] {
    need(json, inout);
    auto b = json_io::budget_from(json_io::parse(json), budget_of(inout));
    *inout = og_budget{b.max_n, b.max_depth};
  });
}

og_status og_ordinal_parse(const char* text, og_ordinal** out) {
  return guard([&] {
    need(text, out);
    *out = wrap(Ordinal::parse(text));
  });
}

og_status og_ordinal_from_u64(uint64_t n, og_ordinal** out) {
  return guard([&] {
    need(out);
    *out = wrap(Ordinal(n));
  });
}

void og_ordinal_free(og_ordinal* a) { delete a; }

og_status og_ordinal_to_string(const og_ordinal* a, char** out) {
  return guard([&] {
    need(a, out);
    *out = copy_out(a->value.to_string());
  });
}

og_status og_ordinal_cmp(const og_ordinal* a, const og_ordinal* b, int* out) {
  return guard([&] {
    need(a, b, out);
    const auto c = cmp(a->value, b->value);
    *out = c == Comparison::less ? -1 : c == Comparison::equal ? 0 : 1;
  });
}

og_status og_ordinal_is_limit(const og_ordinal* a, int* out) {
  return guard([&] {
    need(a, out);
    *out = is_limit(a->value) ? 1 : 0;
  });
}

og_status og_ordinal_add(const og_ordinal* a, const og_ordinal* b, og_ordinal** out) {
  return guard([&] {
    need(a, b, out);
    *out = wrap(add(a->value, b->value));
  });
}

og_status og_ordinal_mul(const og_ordinal* a, const og_ordinal* n, og_ordinal** out) {
  return guard([&] {
    need(a, n, out);
    *out = wrap(mul_nat(a->value, finite_value(n->value)));
  });
}

og_status og_ordinal_omega_pow(const og_ordinal* a, og_ordinal** out) {
  return guard([&] {
    need(a, out);
    *out = wrap(omega_pow(a->value));
  });
}

og_status og_ordinal_omega_times(const og_ordinal* a, og_ordinal** out) {
  return guard([&] {
    need(a, out);
    *out = wrap(omega_times(a->value));
  });
}

og_status og_ordinal_sub(const og_ordinal* a, const og_ordinal* b, og_ordinal** out) {
  return guard([&] {
    need(a, b, out);
    *out = wrap(subtract_left(a->value, b->value));
  });
}

og_status og_ordinal_succ(const og_ordinal* a, og_ordinal** out) {
  return guard([&] {
    need(a, out);
    *out = wrap(succ(a->value));
  });
}

og_status og_ordinal_pred(const og_ordinal* a, og_ordinal** out) {
  return guard([&] {
    need(a, out);
    *out = wrap(pred(a->value));
  });
}

og_status og_ordinal_fundamental(const og_ordinal* lambda, uint64_t k, og_ordinal** out) {
  return guard([&] {
    need(lambda, out);
    *out = wrap(fundamental(lambda->value, k));
  });
}

og_status og_ordinal_quotrem(const og_ordinal* a, const og_ordinal* g, int upper, og_ordinal** q, og_ordinal** r) {
  return guard([&] {
    need(a, g, q, r);
    auto qr = upper ? quot_rem_omega_pow_upper(a->value, g->value) : quot_rem_omega_pow(a->value, g->value);
    *q = wrap(std::move(qr.quotient));
    *r = wrap(std::move(qr.remainder));
  });
}

og_status og_cb_stage(const og_ordinal* alpha, const og_ordinal* gamma, og_ordinal** out) {
  return guard([&] {
    need(alpha, gamma, out);
    *out = wrap(cb_stage(alpha->value, gamma->value));
  });
}

og_status og_cb_step(const og_ordinal* alpha, og_ordinal** out) {
  return guard([&] {
    need(alpha, out);
    *out = wrap(cb_step(alpha->value));
  });
}

og_status og_cb_index(const og_ordinal* alpha, og_ordinal** out) {
  return guard([&] {
    need(alpha, out);
    *out = wrap(cb_index(alpha->value));
  });
}

og_status og_dz_bound(const og_ordinal* sz, og_ordinal** out, int* extension) {
  return guard([&] {
    need(sz, out);
    auto b = dz_bound(sz->value);
    if (extension) *extension = b.extension ? 1 : 0;
    *out = wrap(std::move(b.bound));
  });
}

og_status og_tree_from_json(const char* json, og_tree** out) {
  return guard([&] {
    need(json, out);
    *out = new og_tree{json_io::tree_from(json_io::parse(json))};
  });
}

void og_tree_free(og_tree* t) { delete t; }

og_status og_tree_to_json(const og_tree* t, char** out) {
  return guard([&] {
    need(t, out);
    *out = copy_out(json_io::dump(json_io::to_json(t->value)));
  });
}

og_status og_tree_is_valid(const og_tree* t, int* out) {
  return guard([&] {
    need(t, out);
    *out = validate(t->value) ? 1 : 0;
  });
}

og_status og_tree_size(const og_tree* t, size_t* out) {
  return guard([&] {
    need(t, out);
    *out = t->value.size();
  });
}

og_status og_tree_order(const og_tree* t, size_t* out) {
  return guard([&] {
    need(t, out);
    *out = order(t->value);
  });
}

og_status og_tree_order_by_derivation(const og_tree* t, size_t* out) {
  return guard([&] {
    need(t, out);
    *out = order_by_derivation(t->value);
  });
}

og_status og_tree_rank(const og_tree* t, const char* path, size_t* out) {
  return guard([&] {
    need(t, path, out);
    *out = rank(t->value, parse_path(path));
  });
}

og_status og_tree_derive(const og_tree* t, og_tree** out) {
  return guard([&] {
    need(t, out);
    *out = new og_tree{derive(t->value)};
  });
}

og_status og_tree_max_nodes(const og_tree* t, char** out) {
  return guard([&] {
    need(t, out);
    json_io::json j = json_io::json::array();
    for (const auto& p : max_nodes(t->value)) j.push_back(format_path(p));
    *out = copy_out(j.dump());
  });
}

og_status og_tree_verify_monotone(const og_tree* source, const og_tree* target, const char* map_json, int* out) {
  return guard([&] {
    need(source, target, map_json, out);
    const auto j = json_io::parse(map_json);
    if (!j.is_object()) throw ParseError("map must be a JSON object of path strings");
    PathMap f;
    for (const auto& [key, value] : j.items()) f.emplace(parse_path(key), json_io::path_from(value));
    *out = verify_monotone_map(source->value, target->value, f) ? 1 : 0;
  });
}

og_status og_family_new(og_family_kind kind, const og_ordinal* xi, og_family** out) {
  return guard([&] {
    need(xi, out);
    if (kind != OG_FAMILY_T && kind != OG_FAMILY_GAMMA) throw NullArgument();
    *out = new og_family{FamilyId{kind == OG_FAMILY_T ? FamilyKind::T : FamilyKind::Gamma, xi->value}};
  });
}

og_status og_family_from_json(const char* json, og_family** out) {
  return guard([&] {
    need(json, out);
    *out = new og_family{json_io::family_from(json_io::parse(json))};
  });
}

void og_family_free(og_family* f) { delete f; }

og_status og_family_get_kind(const og_family* f, og_family_kind* out) {
  return guard([&] {
    need(f, out);
    *out = f->value.kind == FamilyKind::T ? OG_FAMILY_T : OG_FAMILY_GAMMA;
  });
}

og_status og_family_member(const og_family* f, const char* path, int* out) {
  return guard([&] {
    need(f, path, out);
    *out = member(f->value, parse_path(path)) ? 1 : 0;
  });
}

og_status og_family_children(const og_family* f, const char* path, const og_budget* budget, char** out) {
  return guard([&] {
    need(f, path, out);
    json_io::json j = json_io::json::array();
    for (const auto& mu : children(f->value, parse_path(path), budget_of(budget))) j.push_back(mu.to_string());
    *out = copy_out(j.dump());
  });
}

og_status og_family_is_maximal(const og_family* f, const char* path, int* out) {
  return guard([&] {
    need(f, path, out);
    *out = is_maximal(f->value, parse_path(path)) ? 1 : 0;
  });
}

namespace {

const Ordinal& gamma_index(const og_family* f) {
  if (f->value.kind != FamilyKind::Gamma) throw DomainError("weights are defined on Gamma families only");
  return f->value.xi;
}

}  // namespace

og_status og_family_weight(const og_family* f, const char* path, char** out) {
  return guard([&] {
    need(f, path, out);
    *out = copy_out(weight(gamma_index(f), parse_path(path)).to_string());
  });
}

og_status og_family_weights_along(const og_family* f, const char* path, char** out) {
  return guard([&] {
    need(f, path, out);
    json_io::json j = json_io::json::array();
    for (const auto& w : weights_along(gamma_index(f), parse_path(path))) j.push_back(w.to_string());
    *out = copy_out(j.dump());
  });
}

og_status og_family_branch_sum(const og_family* f, const char* path, char** sum, int* maximal) {
  return guard([&] {
    need(f, path, sum);
    auto b = branch_weight_sum(gamma_index(f), parse_path(path));
    if (maximal) *maximal = b.maximal ? 1 : 0;
    *sum = copy_out(format_rational(b.sum));
  });
}

og_status og_family_rank(const og_family* f, const char* path, og_ordinal** out) {
  return guard([&] {
    need(f, path, out);
    *out = wrap(symbolic_rank(f->value, parse_path(path)));
  });
}

og_status og_family_truncate(const og_family* f, const og_budget* budget, og_tree** out) {
  return guard([&] {
    need(f, out);
    *out = new og_tree{truncate_to_finite(f->value, budget_of(budget))};
  });
}

og_status og_embed_t(const og_ordinal* xi, const og_ordinal* gamma, const char* path, char** out) {
  return guard([&] {
    need(xi, gamma, path, out);
    *out = copy_out(format_path(embed_t(xi->value, gamma->value)(parse_path(path))));
  });
}

og_status og_branch_cursor_new(const og_family* f, const og_budget* budget, og_branch_cursor** out) {
  return guard([&] {
    need(f, out);
    *out = new og_branch_cursor{enumerate_maximal_branches(f->value, budget_of(budget))};
  });
}

void og_branch_cursor_free(og_branch_cursor* c) { delete c; }

og_status og_branch_cursor_next(og_branch_cursor* c, char** path) {
  return guard([&] {
    need(c, path);
    auto t = c->stream.next();
    *path = t ? copy_out(format_path(*t)) : nullptr;
  });
}

og_status og_branch_cursor_truncations(const og_branch_cursor* c, size_t* out) {
  return guard([&] {
    need(c, out);
    *out = c->stream.truncation_events();
  });
}

og_status og_game_from_json(const char* json, og_game** out) {
  return guard([&] {
    need(json, out);
    *out = new og_game{json_io::game_from(json_io::parse(json))};
  });
}

og_status og_game_build_szlenk(const og_ordinal* xi, const og_budget* budget, const char* model_json,
                               og_game** out) {
  return guard([&] {
    need(xi, model_json, out);
    *out = new og_game{build_szlenk_game(xi->value, budget_of(budget), json_io::model_from(json_io::parse(model_json)))};
  });
}

void og_game_free(og_game* g) { delete g; }

og_status og_game_to_json(const og_game* g, char** out) {
  return guard([&] {
    need(g, out);
    *out = copy_out(json_io::dump(json_io::to_json(g->value)));
  });
}

og_status og_game_position_count(const og_game* g, size_t* out) {
  return guard([&] {
    need(g, out);
    *out = g->value.position_count();
  });
}

og_status og_game_eval_payoff(const og_game* g, const char* history, int* out) {
  return guard([&] {
    need(g, history, out);
    *out = eval_payoff(g->value, parse_position(history)) ? 1 : 0;
  });
}

og_status og_game_solve(const og_game* g, og_player* winner, og_strategy** strategy) {
  return guard([&] {
    need(g, winner, strategy);
    auto s = solve(g->value);
    *winner = player_of(s.winner);
    *strategy = new og_strategy{std::move(s.strategy)};
  });
}

og_status og_game_brute_force(const og_game* g, size_t position_cap, og_player* winner) {
  return guard([&] {
    need(g, winner);
    *winner = player_of(brute_force_winner(g->value, position_cap));
  });
}

og_status og_game_verify(const og_game* g, const og_strategy* s, int* out) {
  return guard([&] {
    need(g, s, out);
    *out = verify_strategy(g->value, s->value) ? 1 : 0;
  });
}

og_status og_game_complete(const og_game* g, const og_strategy* sub, size_t fallback_subspace, og_strategy** out) {
  return guard([&] {
    need(g, sub, out);
    *out = new og_strategy{complete_substrategy(g->value, sub->value, fallback_subspace)};
  });
}

og_status og_game_extract(const og_game* g, const og_strategy* s, char** out) {
  return guard([&] {
    need(g, s, out);
    *out = copy_out(json_io::dump(json_io::to_json(extract_collections(g->value, s->value))));
  });
}

og_status og_strategy_from_json(const char* json, og_strategy** out) {
  return guard([&] {
    need(json, out);
    *out = new og_strategy{json_io::strategy_from(json_io::parse(json))};
  });
}

void og_strategy_free(og_strategy* s) { delete s; }

og_status og_strategy_to_json(const og_strategy* s, char** out) {
  return guard([&] {
    need(s, out);
    *out = copy_out(json_io::dump(json_io::to_json(s->value)));
  });
}

og_status og_solution_to_json(og_player winner, const og_strategy* s, char** out) {
  return guard([&] {
    need(s, out);
    if (winner != OG_PLAYER_I && winner != OG_PLAYER_II) throw NullArgument();
    const Solution sol{winner == OG_PLAYER_I ? Player::I : Player::II, s->value};
    *out = copy_out(json_io::dump(json_io::to_json(sol)));
  });
}

og_status og_strategy_player(const og_strategy* s, og_player* out) {
  return guard([&] {
    need(s, out);
    *out = player_of(s->value.player);
  });
}

}  // extern "C"
