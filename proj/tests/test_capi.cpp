#include <doctest.h>

#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "ordgame/ordgame.h"

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(FIXTURES) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Takes ownership of a library string.
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  og_string_free(s);
  return out;
}

struct Ord {
  og_ordinal* p = nullptr;
  Ord() = default;
  explicit Ord(const char* text) { REQUIRE(og_ordinal_parse(text, &p) == OG_OK); }
  Ord(const Ord&) = delete;
  Ord& operator=(const Ord&) = delete;
  ~Ord() { og_ordinal_free(p); }
  std::string str() const {
    char* s = nullptr;
    REQUIRE(og_ordinal_to_string(p, &s) == OG_OK);
    return take(s);
  }
};

struct Game {
  og_game* p = nullptr;
  ~Game() { og_game_free(p); }
};

struct Strat {
  og_strategy* p = nullptr;
  ~Strat() { og_strategy_free(p); }
};

}  // namespace

TEST_CASE("version and error channel") {
  CHECK(std::string(og_version()) == "1.0.0");
  og_ordinal* a = nullptr;
  CHECK(og_ordinal_parse("w+", &a) == OG_ERR_PARSE);
  CHECK(a == nullptr);
  CHECK(std::strlen(og_last_error()) > 0);
  const std::string parse_error = og_last_error();
  CHECK(og_ordinal_parse(nullptr, &a) == OG_ERR_ARGUMENT);
  CHECK(std::string(og_last_error()) != parse_error);
  CHECK(og_ordinal_parse("w", nullptr) == OG_ERR_ARGUMENT);
  const std::string argument_error = og_last_error();
  REQUIRE(og_ordinal_parse("w", &a) == OG_OK);
  CHECK(std::string(og_last_error()) == argument_error);  // kept until the next failure
  og_ordinal_free(a);
  og_ordinal_free(nullptr);
  og_string_free(nullptr);
}

TEST_CASE("ordinal arithmetic") {
  Ord w("w"), one("1"), two("2");
  Ord sum;
  REQUIRE(og_ordinal_add(w.p, one.p, &sum.p) == OG_OK);
  CHECK(sum.str() == "w+1");
  Ord left;
  REQUIRE(og_ordinal_add(one.p, w.p, &left.p) == OG_OK);
  CHECK(left.str() == "w");

  int c = 9;
  REQUIRE(og_ordinal_cmp(w.p, sum.p, &c) == OG_OK);
  CHECK(c == -1);
  REQUIRE(og_ordinal_cmp(sum.p, w.p, &c) == OG_OK);
  CHECK(c == 1);
  REQUIRE(og_ordinal_cmp(w.p, w.p, &c) == OG_OK);
  CHECK(c == 0);

  Ord prod;
  REQUIRE(og_ordinal_mul(sum.p, two.p, &prod.p) == OG_OK);
  CHECK(prod.str() == "w*2+1");
  Ord bad;
  CHECK(og_ordinal_mul(two.p, w.p, &bad.p) == OG_ERR_DOMAIN);

  Ord pw, tw;
  REQUIRE(og_ordinal_omega_pow(w.p, &pw.p) == OG_OK);
  CHECK(pw.str() == "w^(w)");
  REQUIRE(og_ordinal_omega_times(pw.p, &tw.p) == OG_OK);
  CHECK(tw.str() == "w^(w)");

  Ord diff;
  REQUIRE(og_ordinal_sub(w.p, prod.p, &diff.p) == OG_OK);
  CHECK(diff.str() == "w+1");
  Ord neg;
  CHECK(og_ordinal_sub(prod.p, w.p, &neg.p) == OG_ERR_DOMAIN);

  Ord p, s;
  CHECK(og_ordinal_pred(w.p, &p.p) == OG_ERR_DOMAIN);
  REQUIRE(og_ordinal_succ(w.p, &s.p) == OG_OK);
  CHECK(s.str() == "w+1");
  int lim = -1;
  REQUIRE(og_ordinal_is_limit(w.p, &lim) == OG_OK);
  CHECK(lim == 1);

  Ord f;
  REQUIRE(og_ordinal_fundamental(pw.p, 3, &f.p) == OG_OK);
  CHECK(f.str() == "w^3");

  Ord a("w^2*3+w+4"), q, r;
  REQUIRE(og_ordinal_quotrem(a.p, two.p, 0, &q.p, &r.p) == OG_OK);
  CHECK(q.str() == "3");
  CHECK(r.str() == "w+4");
  Ord b("w*3"), q2, r2;
  REQUIRE(og_ordinal_quotrem(b.p, one.p, 1, &q2.p, &r2.p) == OG_OK);
  CHECK(q2.str() == "2");
  CHECK(r2.str() == "w");

  Ord big;
  REQUIRE(og_ordinal_from_u64(18446744073709551615ULL, &big.p) == OG_OK);
  CHECK(big.str() == "18446744073709551615");
}

TEST_CASE("derivation indices") {
  Ord a("w^2*3+w+4"), one("1"), ww("w^w");
  Ord st, sp, idx, dz;
  REQUIRE(og_cb_stage(a.p, one.p, &st.p) == OG_OK);
  CHECK(st.str() == "w*3+1");
  REQUIRE(og_cb_step(ww.p, &sp.p) == OG_OK);
  CHECK(sp.str() == "w^(w)");
  REQUIRE(og_cb_index(ww.p, &idx.p) == OG_OK);
  CHECK(idx.str() == "w+1");
  int ext = -1;
  REQUIRE(og_dz_bound(ww.p, &dz.p, &ext) == OG_OK);
  CHECK(dz.str() == "w^(w)");
  CHECK(ext == 0);
  Ord zero("0"), bad;
  CHECK(og_dz_bound(zero.p, &bad.p, &ext) == OG_ERR_DOMAIN);
}

TEST_CASE("trees") {
  og_tree* t = nullptr;
  REQUIRE(og_tree_from_json(R"j({"nodes": [["3"], ["3","2"], ["3","2","1"], ["1"]]})j", &t) == OG_OK);
  int valid = 0;
  REQUIRE(og_tree_is_valid(t, &valid) == OG_OK);
  CHECK(valid == 1);
  size_t n = 0;
  REQUIRE(og_tree_size(t, &n) == OG_OK);
  CHECK(n == 4);
  REQUIRE(og_tree_order(t, &n) == OG_OK);
  CHECK(n == 3);
  REQUIRE(og_tree_order_by_derivation(t, &n) == OG_OK);
  CHECK(n == 3);
  REQUIRE(og_tree_rank(t, "(3)", &n) == OG_OK);
  CHECK(n == 2);
  CHECK(og_tree_rank(t, "(2)", &n) == OG_ERR_DOMAIN);
  CHECK(og_tree_rank(t, "(2", &n) == OG_ERR_PARSE);

  char* s = nullptr;
  REQUIRE(og_tree_max_nodes(t, &s) == OG_OK);
  CHECK(take(s) == R"j(["(1)","(3,2,1)"])j");

  og_tree* d = nullptr;
  REQUIRE(og_tree_derive(t, &d) == OG_OK);
  REQUIRE(og_tree_size(d, &n) == OG_OK);
  CHECK(n == 2);

  int mono = -1;
  REQUIRE(og_tree_verify_monotone(d, t, R"j({"(3)": "(3)", "(3,2)": "(3,2)"})j", &mono) == OG_OK);
  CHECK(mono == 1);
  REQUIRE(og_tree_verify_monotone(d, t, R"j({"(3)": "(3)", "(3,2)": "(3)"})j", &mono) == OG_OK);
  CHECK(mono == 0);

  REQUIRE(og_tree_to_json(d, &s) == OG_OK);
  og_tree* back = nullptr;
  REQUIRE(og_tree_from_json(take(s).c_str(), &back) == OG_OK);
  REQUIRE(og_tree_size(back, &n) == OG_OK);
  CHECK(n == 2);
  og_tree_free(back);
  og_tree_free(d);
  og_tree_free(t);

  CHECK(og_tree_from_json("{", &t) == OG_ERR_PARSE);
  REQUIRE(og_tree_from_json(R"j({"nodes": [["2","1"]]})j", &t) == OG_OK);
  REQUIRE(og_tree_is_valid(t, &valid) == OG_OK);
  CHECK(valid == 0);
  og_tree_free(t);
}

TEST_CASE("families") {
  Ord one("1");
  og_family* g1 = nullptr;
  REQUIRE(og_family_new(OG_FAMILY_GAMMA, one.p, &g1) == OG_OK);
  og_family_kind kind = OG_FAMILY_T;
  REQUIRE(og_family_get_kind(g1, &kind) == OG_OK);
  CHECK(kind == OG_FAMILY_GAMMA);
  int yes = -1;
  REQUIRE(og_family_member(g1, "(3,2)", &yes) == OG_OK);
  CHECK(yes == 1);
  REQUIRE(og_family_member(g1, "(2,2)", &yes) == OG_OK);
  CHECK(yes == 0);
  REQUIRE(og_family_is_maximal(g1, "(3,2)", &yes) == OG_OK);
  CHECK(yes == 0);

  const og_budget b{3, 64};
  char* s = nullptr;
  REQUIRE(og_family_children(g1, "()", &b, &s) == OG_OK);
  CHECK(take(s) == R"j(["1","2","3"])j");
  REQUIRE(og_family_weight(g1, "(3,2)", &s) == OG_OK);
  CHECK(take(s) == "1/3");
  REQUIRE(og_family_weights_along(g1, "(2,1)", &s) == OG_OK);
  CHECK(take(s) == R"j(["1/2","1/2"])j");
  int maximal = -1;
  REQUIRE(og_family_branch_sum(g1, "(3,2)", &s, &maximal) == OG_OK);
  CHECK(take(s) == "2/3");
  CHECK(maximal == 0);
  CHECK(og_family_weight(g1, "(2,2)", &s) == OG_ERR_DOMAIN);

  og_ordinal* r = nullptr;
  REQUIRE(og_family_rank(g1, "(3)", &r) == OG_OK);
  REQUIRE(og_ordinal_to_string(r, &s) == OG_OK);
  CHECK(take(s) == "2");
  og_ordinal_free(r);

  og_tree* t = nullptr;
  REQUIRE(og_family_truncate(g1, &b, &t) == OG_OK);
  size_t n = 0;
  REQUIRE(og_tree_order(t, &n) == OG_OK);
  CHECK(n == 3);
  og_tree_free(t);

  og_branch_cursor* c = nullptr;
  REQUIRE(og_branch_cursor_new(g1, &b, &c) == OG_OK);
  std::vector<std::string> got;
  for (;;) {
    REQUIRE(og_branch_cursor_next(c, &s) == OG_OK);
    if (!s) break;
    got.push_back(take(s));
  }
  CHECK(got == std::vector<std::string>{"(1)", "(2,1)", "(3,2,1)"});
  REQUIRE(og_branch_cursor_truncations(c, &n) == OG_OK);
  CHECK(n == 0);
  og_branch_cursor_free(c);
  og_family_free(g1);

  og_family* t5 = nullptr;
  REQUIRE(og_family_from_json(R"j({"kind": "T", "xi": "5"})j", &t5) == OG_OK);
  REQUIRE(og_family_rank(t5, "(5,4)", &r) == OG_OK);
  REQUIRE(og_ordinal_to_string(r, &s) == OG_OK);
  CHECK(take(s) == "3");
  og_ordinal_free(r);
  CHECK(og_family_weight(t5, "(5)", &s) == OG_ERR_DOMAIN);
  og_family_free(t5);

  CHECK(og_family_new(static_cast<og_family_kind>(7), one.p, &g1) == OG_ERR_ARGUMENT);

  Ord two("2"), three("3"), w("w");
  REQUIRE(og_embed_t(two.p, three.p, "(2,1)", &s) == OG_OK);
  CHECK(take(s) == "(3,2)");
  REQUIRE(og_embed_t(three.p, w.p, "(3,2,1)", &s) == OG_OK);
  CHECK(take(s) == "(3,2,1)");
  CHECK(og_embed_t(three.p, two.p, "(3)", &s) == OG_ERR_DOMAIN);
}

TEST_CASE("budgets") {
  og_budget b = og_budget_default();
  CHECK(b.max_n > 0);
  CHECK(b.max_depth > 0);
  REQUIRE(og_budget_from_json(R"j({"max_n": 4})j", &b) == OG_OK);
  CHECK(b.max_n == 4);
  CHECK(og_budget_from_json("[", &b) == OG_ERR_PARSE);
}

TEST_CASE("games") {
  Game g;
  REQUIRE(og_game_from_json(slurp("szlenk_small.json").c_str(), &g.p) == OG_OK);
  size_t n = 0;
  REQUIRE(og_game_position_count(g.p, &n) == OG_OK);
  CHECK(n > 0);

  og_player winner = OG_PLAYER_I;
  Strat s;
  REQUIRE(og_game_solve(g.p, &winner, &s.p) == OG_OK);
  CHECK(winner == OG_PLAYER_II);
  og_player who = OG_PLAYER_I;
  REQUIRE(og_strategy_player(s.p, &who) == OG_OK);
  CHECK(who == OG_PLAYER_II);
  int ok = 0;
  REQUIRE(og_game_verify(g.p, s.p, &ok) == OG_OK);
  CHECK(ok == 1);
  REQUIRE(og_game_brute_force(g.p, 1'000'000, &who) == OG_OK);
  CHECK(who == winner);
  CHECK(og_game_brute_force(g.p, 1, &who) == OG_ERR_RESOURCE);

  char* text = nullptr;
  REQUIRE(og_solution_to_json(winner, s.p, &text) == OG_OK);
  Strat back;
  REQUIRE(og_strategy_from_json(take(text).c_str(), &back.p) == OG_OK);
  REQUIRE(og_game_verify(g.p, back.p, &ok) == OG_OK);
  CHECK(ok == 1);

  REQUIRE(og_game_extract(g.p, s.p, &text) == OG_OK);
  CHECK(take(text).find("\"vectors\"") != std::string::npos);

  int pay = -1;
  REQUIRE(og_game_eval_payoff(g.p, "(1,0,0)", &pay) == OG_OK);
  CHECK(pay == 1);
  CHECK(og_game_eval_payoff(g.p, "(2,0,0)", &pay) == OG_ERR_DOMAIN);
  CHECK(og_game_eval_payoff(g.p, "(2,0", &pay) == OG_ERR_PARSE);

  REQUIRE(og_game_to_json(g.p, &text) == OG_OK);
  Game again;
  REQUIRE(og_game_from_json(take(text).c_str(), &again.p) == OG_OK);

  Game table;
  REQUIRE(og_game_from_json(slurp("table_small.json").c_str(), &table.p) == OG_OK);
  Strat i_wins;
  REQUIRE(og_game_solve(table.p, &winner, &i_wins.p) == OG_OK);
  CHECK(winner == OG_PLAYER_I);
  CHECK(og_game_extract(table.p, i_wins.p, &text) == OG_ERR_DOMAIN);
  Strat full;
  REQUIRE(og_game_complete(table.p, i_wins.p, 0, &full.p) == OG_OK);
  REQUIRE(og_game_verify(table.p, full.p, &ok) == OG_OK);
  CHECK(ok == 1);
  REQUIRE(og_game_verify(g.p, i_wins.p, &ok) == OG_OK);
  CHECK(ok == 0);

  CHECK(og_game_from_json(R"j({"tree": {"nodes": []}})j", &table.p) != OG_OK);
  CHECK(og_game_solve(nullptr, &winner, &s.p) == OG_ERR_ARGUMENT);
}

TEST_CASE("building Szlenk games") {
  Ord one("1");
  const og_budget b{3, 64};
  Game g;
  REQUIRE(og_game_build_szlenk(one.p, &b, slurp("model_whole.json").c_str(), &g.p) == OG_OK);
  og_player winner = OG_PLAYER_I;
  Strat s;
  REQUIRE(og_game_solve(g.p, &winner, &s.p) == OG_OK);
  CHECK(winner == OG_PLAYER_II);
  Game bad;
  CHECK(og_game_build_szlenk(one.p, &b, "{}", &bad.p) == OG_ERR_PARSE);
}
