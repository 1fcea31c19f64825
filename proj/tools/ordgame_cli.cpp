// Command-line front end over the C interface.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ordgame/ordgame.h"

namespace {

struct Failure {
  int code;
  std::string message;
};

void check(og_status s) {
  if (s == OG_OK) return;
  const int code = (s == OG_ERR_PARSE || s == OG_ERR_ARGUMENT) ? 2 : 1;
  throw Failure{code, og_last_error()};
}

struct Free {
  void operator()(og_ordinal* p) const { og_ordinal_free(p); }
  void operator()(og_tree* p) const { og_tree_free(p); }
  void operator()(og_family* p) const { og_family_free(p); }
  void operator()(og_branch_cursor* p) const { og_branch_cursor_free(p); }
  void operator()(og_game* p) const { og_game_free(p); }
  void operator()(og_strategy* p) const { og_strategy_free(p); }
};

template <class T>
using Handle = std::unique_ptr<T, Free>;
using Ord = Handle<og_ordinal>;

template <class T>
struct Out {
  T* raw = nullptr;
  T** operator&() { return &raw; }
  Handle<T> take() { return Handle<T>(raw); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  og_string_free(s);
  return out;
}

Ord ord(const std::string& text) {
  Out<og_ordinal> out;
  check(og_ordinal_parse(text.c_str(), &out));
  return out.take();
}

std::string str(const Ord& a) {
  char* s = nullptr;
  check(og_ordinal_to_string(a.get(), &s));
  return take(s);
}

std::string read_input(const std::string& file) {
  if (file.empty() || file == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Failure{2, "cannot open " + file};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Handle<og_tree> load_tree(const std::string& file) {
  Out<og_tree> out;
  check(og_tree_from_json(read_input(file).c_str(), &out));
  return out.take();
}

Handle<og_game> load_game(const std::string& file) {
  Out<og_game> out;
  check(og_game_from_json(read_input(file).c_str(), &out));
  return out.take();
}

Handle<og_strategy> load_strategy(const std::string& file) {
  Out<og_strategy> out;
  check(og_strategy_from_json(read_input(file).c_str(), &out));
  return out.take();
}

// A family is either `KIND XI` or one JSON descriptor argument.
struct FamilyArgs {
  Handle<og_family> family;
  std::vector<std::string> rest;
};

FamilyArgs family_args(const std::vector<std::string>& args) {
  if (args.empty()) throw Failure{2, "missing family (KIND XI or a JSON descriptor)"};
  Out<og_family> out;
  std::size_t used = 1;
  if (!args[0].empty() && args[0][0] == '{') {
    check(og_family_from_json(args[0].c_str(), &out));
  } else {
    if (args.size() < 2) throw Failure{2, "missing family index"};
    og_family_kind kind;
    if (args[0] == "T")
      kind = OG_FAMILY_T;
    else if (args[0] == "Gamma")
      kind = OG_FAMILY_GAMMA;
    else
      throw Failure{2, "family kind must be T or Gamma"};
    check(og_family_new(kind, ord(args[1]).get(), &out));
    used = 2;
  }
  return FamilyArgs{out.take(), std::vector<std::string>(args.begin() + static_cast<std::ptrdiff_t>(used), args.end())};
}

const std::string& one_path(const FamilyArgs& f) {
  if (f.rest.size() != 1) throw Failure{2, "expected exactly one path argument"};
  return f.rest[0];
}

// ["1/2","1/2"] -> 1/2,1/2
std::string flatten_list(const std::string& json_array) {
  std::string out;
  for (char c : json_array)
    if (c != '[' && c != ']' && c != '"' && c != ' ' && c != '\n') out += c;
  return out;
}

const char* yes_no(int b) { return b ? "true" : "false"; }

struct BudgetFlags {
  std::string json;
  std::optional<std::uint64_t> max_n;
  std::optional<std::uint64_t> max_depth;

  void attach(CLI::App* app) {
    app->add_option("--budget", json, "budget JSON {\"max_n\":N,\"max_depth\":D}");
    app->add_option("--max-n", max_n, "branching cap");
    app->add_option("--max-depth", max_depth, "depth cap");
  }

  og_budget get() const {
    og_budget b = og_budget_default();
    if (!json.empty()) check(og_budget_from_json(json.c_str(), &b));
    if (max_n) b.max_n = *max_n;
    if (max_depth) b.max_depth = *max_depth;
    return b;
  }
};

void print(const std::string& s) { std::cout << s << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordinal arithmetic, well-founded tree families and determinacy of games on B-trees"};
  app.require_subcommand(1);
  app.set_version_flag("--version", og_version());

  std::vector<std::string> args;
  std::string file, file2;
  bool half_open = false, with_sum = false, check_brute = false;
  std::optional<std::size_t> limit;
  std::uint64_t k = 0;
  BudgetFlags budget;
  std::function<void()> action;

  auto positional = [&](CLI::App* cmd, const char* name, std::string& into, bool required) {
    auto* o = cmd->add_option(name, into);
    if (required) o->required();
  };

  // ord
  auto* ord_cmd = app.add_subcommand("ord", "ordinal arithmetic in Cantor normal form");
  ord_cmd->require_subcommand(1);
  auto binary = [&](const char* name, const char* help, auto fn) {
    auto* c = ord_cmd->add_subcommand(name, help);
    c->add_option("a", args, "operands")->required()->expected(2);
    c->callback([&, fn] { action = [&, fn] { fn(ord(args[0]), ord(args[1])); }; });
  };
  auto unary = [&](const char* name, const char* help, auto fn) {
    auto* c = ord_cmd->add_subcommand(name, help);
    c->add_option("a", file, "operand")->required();
    c->callback([&, fn] { action = [&, fn] { fn(ord(file)); }; });
  };
  binary("add", "a+b", [](const Ord& a, const Ord& b) {
    Out<og_ordinal> r;
    check(og_ordinal_add(a.get(), b.get(), &r));
    print(str(r.take()));
  });
  binary("cmp", "-1, 0 or 1", [](const Ord& a, const Ord& b) {
    int r = 0;
    check(og_ordinal_cmp(a.get(), b.get(), &r));
    print(std::to_string(r));
  });
  binary("mul", "a*n for finite n", [](const Ord& a, const Ord& n) {
    Out<og_ordinal> r;
    check(og_ordinal_mul(a.get(), n.get(), &r));
    print(str(r.take()));
  });
  binary("sub", "the d with b+d = a", [](const Ord& a, const Ord& b) {
    Out<og_ordinal> r;
    check(og_ordinal_sub(a.get(), b.get(), &r));
    print(str(r.take()));
  });
  unary("pow", "w^a", [](const Ord& a) {
    Out<og_ordinal> r;
    check(og_ordinal_omega_pow(a.get(), &r));
    print(str(r.take()));
  });
  unary("wmul", "w*a", [](const Ord& a) {
    Out<og_ordinal> r;
    check(og_ordinal_omega_times(a.get(), &r));
    print(str(r.take()));
  });
  unary("pred", "predecessor of a successor", [](const Ord& a) {
    Out<og_ordinal> r;
    check(og_ordinal_pred(a.get(), &r));
    print(str(r.take()));
  });
  unary("succ", "a+1", [](const Ord& a) {
    Out<og_ordinal> r;
    check(og_ordinal_succ(a.get(), &r));
    print(str(r.take()));
  });
  {
    auto* c = ord_cmd->add_subcommand("quotrem", "a = w^g*q + r; prints q and r");
    c->add_option("a", args, "a g")->required()->expected(2);
    c->add_flag("--half-open", half_open, "take the remainder in (0, w^g]");
    c->callback([&] {
      action = [&] {
        Out<og_ordinal> q, r;
        check(og_ordinal_quotrem(ord(args[0]).get(), ord(args[1]).get(), half_open ? 1 : 0, &q, &r));
        print(str(q.take()) + '\t' + str(r.take()));
      };
    });
  }
  {
    auto* c = ord_cmd->add_subcommand("limit", "k-th term of the fundamental sequence");
    positional(c, "lambda", file, true);
    c->add_option("k", k)->required();
    c->callback([&] {
      action = [&] {
        Out<og_ordinal> r;
        check(og_ordinal_fundamental(ord(file).get(), k, &r));
        print(str(r.take()));
      };
    });
  }

  // tree
  auto* tree_cmd = app.add_subcommand("tree", "finite B-trees given as JSON (file or stdin)");
  tree_cmd->require_subcommand(1);
  {
    auto* c = tree_cmd->add_subcommand("validate", "check closure under initial segments");
    positional(c, "file", file, false);
    c->callback([&] {
      action = [&] {
        int ok = 0;
        check(og_tree_is_valid(load_tree(file).get(), &ok));
        print(ok ? "valid" : "invalid");
        if (!ok) throw Failure{1, ""};
      };
    });
  }
  {
    auto* c = tree_cmd->add_subcommand("order", "order o(T)");
    positional(c, "file", file, false);
    c->callback([&] {
      action = [&] {
        std::size_t n = 0;
        check(og_tree_order(load_tree(file).get(), &n));
        print(std::to_string(n));
      };
    });
  }
  {
    auto* c = tree_cmd->add_subcommand("rank", "rank of a node");
    positional(c, "path", file2, true);
    positional(c, "file", file, false);
    c->callback([&] {
      action = [&] {
        std::size_t n = 0;
        check(og_tree_rank(load_tree(file).get(), file2.c_str(), &n));
        print(std::to_string(n));
      };
    });
  }
  {
    auto* c = tree_cmd->add_subcommand("derive", "remove the maximal nodes");
    positional(c, "file", file, false);
    c->callback([&] {
      action = [&] {
        Out<og_tree> d;
        check(og_tree_derive(load_tree(file).get(), &d));
        char* s = nullptr;
        check(og_tree_to_json(d.take().get(), &s));
        print(take(s));
      };
    });
  }

  // family
  auto* fam_cmd = app.add_subcommand("family", "the families T_xi and Gamma_xi; FAMILY is `KIND XI` or a JSON descriptor");
  fam_cmd->require_subcommand(1);
  auto family_verb = [&](const char* name, const char* help, auto fn) {
    auto* c = fam_cmd->add_subcommand(name, help);
    c->add_option("args", args, "FAMILY [PATH]")->required();
    budget.attach(c);
    c->callback([&, fn] { action = [&, fn] { fn(family_args(args)); }; });
    return c;
  };
  family_verb("member", "is PATH in the family", [](const FamilyArgs& f) {
    int b = 0;
    check(og_family_member(f.family.get(), one_path(f).c_str(), &b));
    print(yes_no(b));
  });
  family_verb("children", "child labels of PATH (roots if omitted), one per line", [&](const FamilyArgs& f) {
    if (f.rest.size() > 1) throw Failure{2, "expected at most one path argument"};
    const og_budget b = budget.get();
    char* s = nullptr;
    check(og_family_children(f.family.get(), f.rest.empty() ? "()" : f.rest[0].c_str(), &b, &s));
    // CNF strings contain no commas.
    std::stringstream list(flatten_list(take(s)));
    for (std::string label; std::getline(list, label, ',');) print(label);
  });
  family_verb("weight", "P_xi(PATH) on a Gamma family", [](const FamilyArgs& f) {
    char* s = nullptr;
    check(og_family_weight(f.family.get(), one_path(f).c_str(), &s));
    print(take(s));
  });
  family_verb("rank", "rank of PATH in the full family", [](const FamilyArgs& f) {
    Out<og_ordinal> r;
    check(og_family_rank(f.family.get(), one_path(f).c_str(), &r));
    print(str(r.take()));
  });
  family_verb("truncate", "the budget-bounded finite subtree, as tree JSON", [&](const FamilyArgs& f) {
    if (!f.rest.empty()) throw Failure{2, "truncate takes no path"};
    const og_budget b = budget.get();
    Out<og_tree> t;
    check(og_family_truncate(f.family.get(), &b, &t));
    char* s = nullptr;
    check(og_tree_to_json(t.take().get(), &s));
    print(take(s));
  });
  {
    auto* c = family_verb("branches", "maximal branches within the budget: path<TAB>weights[<TAB>sum]",
                          [&](const FamilyArgs& f) {
                            if (!f.rest.empty()) throw Failure{2, "branches takes no path"};
                            const og_budget b = budget.get();
                            Out<og_branch_cursor> cur;
                            check(og_branch_cursor_new(f.family.get(), &b, &cur));
                            auto cursor = cur.take();
                            og_family_kind kind;
                            check(og_family_get_kind(f.family.get(), &kind));
                            const bool gamma = kind == OG_FAMILY_GAMMA;
                            std::size_t emitted = 0;
                            for (;;) {
                              if (limit && emitted >= *limit) break;
                              char* p = nullptr;
                              check(og_branch_cursor_next(cursor.get(), &p));
                              if (!p) break;
                              const std::string path = take(p);
                              std::string line = path;
                              if (gamma) {
                                char* w = nullptr;
                                check(og_family_weights_along(f.family.get(), path.c_str(), &w));
                                line += '\t' + flatten_list(take(w));
                                if (with_sum) {
                                  char* sum = nullptr;
                                  check(og_family_branch_sum(f.family.get(), path.c_str(), &sum, nullptr));
                                  line += '\t' + take(sum);
                                }
                              }
                              print(line);
                              ++emitted;
                            }
                            std::size_t cut = 0;
                            check(og_branch_cursor_truncations(cursor.get(), &cut));
                            if (cut) std::cerr << "truncated branches: " << cut << '\n';
                          });
    c->add_flag("--sum", with_sum, "append the exact weight sum");
    c->add_option("--limit", limit, "stop after this many branches");
  }
  {
    auto* c = fam_cmd->add_subcommand("embed", "image of a path of T_xi in T_gamma");
    c->add_option("args", args, "XI GAMMA PATH")->required()->expected(3);
    c->callback([&] {
      action = [&] {
        char* s = nullptr;
        check(og_embed_t(ord(args[0]).get(), ord(args[1]).get(), args[2].c_str(), &s));
        print(take(s));
      };
    });
  }

  // cb, bound
  auto* cb_cmd = app.add_subcommand("cb", "Cantor-Bendixson derivatives of [1, alpha]");
  cb_cmd->require_subcommand(1);
  {
    auto* c = cb_cmd->add_subcommand("step", "one derivative");
    positional(c, "alpha", file, true);
    c->callback([&] {
      action = [&] {
        Out<og_ordinal> r;
        check(og_cb_step(ord(file).get(), &r));
        print(str(r.take()));
      };
    });
    c = cb_cmd->add_subcommand("stage", "gamma-th derivative");
    c->add_option("args", args, "ALPHA GAMMA")->required()->expected(2);
    c->callback([&] {
      action = [&] {
        Out<og_ordinal> r;
        check(og_cb_stage(ord(args[0]).get(), ord(args[1]).get(), &r));
        print(str(r.take()));
      };
    });
    c = cb_cmd->add_subcommand("index", "Cantor-Bendixson index");
    positional(c, "alpha", file, true);
    c->callback([&] {
      action = [&] {
        Out<og_ordinal> r;
        check(og_cb_index(ord(file).get(), &r));
        print(str(r.take()));
      };
    });
  }
  auto* bound_cmd = app.add_subcommand("bound", "index bounds");
  bound_cmd->require_subcommand(1);
  {
    auto* c = bound_cmd->add_subcommand("dz", "bound from a Szlenk index");
    positional(c, "sz", file, true);
    c->callback([&] {
      action = [&] {
        Out<og_ordinal> r;
        int ext = 0;
        check(og_dz_bound(ord(file).get(), &r, &ext));
        print(str(r.take()));
        if (ext) std::cerr << "note: input is not a power of w; general w*sz rule applied\n";
      };
    });
  }

  // game
  auto* game_cmd = app.add_subcommand("game", "games on finite B-trees");
  game_cmd->require_subcommand(1);
  {
    auto* c = game_cmd->add_subcommand("solve", "winner and a winning strategy as JSON");
    positional(c, "game", file, false);
    c->add_flag("--check", check_brute, "also verify the strategy and cross-check with brute force");
    c->callback([&] {
      action = [&] {
        auto g = load_game(file);
        og_player winner;
        Out<og_strategy> s;
        check(og_game_solve(g.get(), &winner, &s));
        auto strategy = s.take();
        if (check_brute) {
          int ok = 0;
          check(og_game_verify(g.get(), strategy.get(), &ok));
          og_player other;
          check(og_game_brute_force(g.get(), 1'000'000, &other));
          if (!ok || other != winner) throw Failure{1, "solver cross-check failed"};
        }
        char* out = nullptr;
        check(og_solution_to_json(winner, strategy.get(), &out));
        print(take(out));
      };
    });
  }
  {
    auto* c = game_cmd->add_subcommand("verify", "check that a strategy wins");
    positional(c, "game", file, true);
    positional(c, "strategy", file2, true);
    c->callback([&] {
      action = [&] {
        int ok = 0;
        check(og_game_verify(load_game(file).get(), load_strategy(file2).get(), &ok));
        print(ok ? "verified" : "not winning");
        if (!ok) throw Failure{1, ""};
      };
    });
  }
  {
    auto* c = game_cmd->add_subcommand("extract", "collections from a winning Player II strategy");
    positional(c, "game", file, true);
    positional(c, "strategy", file2, true);
    c->callback([&] {
      action = [&] {
        char* out = nullptr;
        check(og_game_extract(load_game(file).get(), load_strategy(file2).get(), &out));
        print(take(out));
      };
    });
  }
  {
    auto* c = game_cmd->add_subcommand("build", "Szlenk game on a truncated Gamma_xi");
    positional(c, "xi", file2, true);
    positional(c, "model", file, false);
    budget.attach(c);
    c->callback([&] {
      action = [&] {
        const og_budget b = budget.get();
        Out<og_game> g;
        check(og_game_build_szlenk(ord(file2).get(), &b, read_input(file).c_str(), &g));
        char* out = nullptr;
        check(og_game_to_json(g.take().get(), &out));
        print(take(out));
      };
    });
  }
  {
    auto* c = game_cmd->add_subcommand("payoff", "is a maximal history won by Player II");
    positional(c, "history", file2, true);
    positional(c, "game", file, false);
    c->callback([&] {
      action = [&] {
        int b = 0;
        check(og_game_eval_payoff(load_game(file).get(), file2.c_str(), &b));
        print(yes_no(b));
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    if (action) action();
  } catch (const Failure& f) {
    std::cout.flush();
    if (!f.message.empty()) std::cerr << "error: " << f.message << '\n';
    return f.code;
  }
  return 0;
}
