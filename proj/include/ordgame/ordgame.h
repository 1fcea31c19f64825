/* C interface to the ordgame library.
 *
 * Objects are opaque handles released with their *_free function. Every call
 * returns an og_status; on failure og_last_error() describes the problem
 * (thread-local, valid until the next failing call on the same thread).
 * Strings handed out through char** parameters are heap-allocated and must be
 * released with og_string_free. Paths and histories travel as text:
 * "(3,2,1)" and "(3,0,1)(2,1,0)". Ordinals print in Cantor normal form
 * ("w^2*3+w+1"); rationals print as "p/q".
 */
#ifndef ORDGAME_H
#define ORDGAME_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define OG_API __declspec(dllexport)
#else
#define OG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum og_status {
  OG_OK = 0,
  OG_ERR_PARSE = 1,    /* malformed text or JSON */
  OG_ERR_DOMAIN = 2,   /* precondition violated */
  OG_ERR_RESOURCE = 3, /* instance above a size cap */
  OG_ERR_ARGUMENT = 4, /* null pointer or bad enum value */
  OG_ERR_INTERNAL = 5
} og_status;

typedef enum og_family_kind { OG_FAMILY_T = 0, OG_FAMILY_GAMMA = 1 } og_family_kind;
typedef enum og_player { OG_PLAYER_I = 0, OG_PLAYER_II = 1 } og_player;

typedef struct og_budget {
  uint64_t max_n;
  uint64_t max_depth;
} og_budget;

typedef struct og_ordinal og_ordinal;
typedef struct og_tree og_tree;
typedef struct og_family og_family;
typedef struct og_branch_cursor og_branch_cursor;
typedef struct og_game og_game;
typedef struct og_strategy og_strategy;

OG_API const char* og_last_error(void);
OG_API void og_string_free(char* s);
OG_API const char* og_version(void);

/* max_n = 1, max_depth = 1024. A null budget argument means this default. */
OG_API og_budget og_budget_default(void);
/* {"max_n": N, "max_depth": D}; keys absent from the JSON keep *inout's values */
OG_API og_status og_budget_from_json(const char* json, og_budget* inout);

/* ordinals */
OG_API og_status og_ordinal_parse(const char* text, og_ordinal** out);
OG_API og_status og_ordinal_from_u64(uint64_t n, og_ordinal** out);
OG_API void og_ordinal_free(og_ordinal* a);
OG_API og_status og_ordinal_to_string(const og_ordinal* a, char** out);
/* *out is -1, 0 or 1 */
OG_API og_status og_ordinal_cmp(const og_ordinal* a, const og_ordinal* b, int* out);
OG_API og_status og_ordinal_is_limit(const og_ordinal* a, int* out);
OG_API og_status og_ordinal_add(const og_ordinal* a, const og_ordinal* b, og_ordinal** out);
/* a*n for finite n */
OG_API og_status og_ordinal_mul(const og_ordinal* a, const og_ordinal* n, og_ordinal** out);
/* w^a */
OG_API og_status og_ordinal_omega_pow(const og_ordinal* a, og_ordinal** out);
/* w*a */
OG_API og_status og_ordinal_omega_times(const og_ordinal* a, og_ordinal** out);
/* the d with b + d = a; requires b <= a */
OG_API og_status og_ordinal_sub(const og_ordinal* a, const og_ordinal* b, og_ordinal** out);
OG_API og_status og_ordinal_succ(const og_ordinal* a, og_ordinal** out);
OG_API og_status og_ordinal_pred(const og_ordinal* a, og_ordinal** out);
/* k-th term of the fundamental sequence of a limit */
OG_API og_status og_ordinal_fundamental(const og_ordinal* lambda, uint64_t k, og_ordinal** out);
/* a = w^g * q + r with r < w^g; with upper != 0, 0 < r <= w^g instead */
OG_API og_status og_ordinal_quotrem(const og_ordinal* a, const og_ordinal* g, int upper, og_ordinal** q,
                                    og_ordinal** r);

/* derivation indices */
OG_API og_status og_cb_stage(const og_ordinal* alpha, const og_ordinal* gamma, og_ordinal** out);
OG_API og_status og_cb_step(const og_ordinal* alpha, og_ordinal** out);
OG_API og_status og_cb_index(const og_ordinal* alpha, og_ordinal** out);
/* *extension is set to 1 when sz is not a pure power of w */
OG_API og_status og_dz_bound(const og_ordinal* sz, og_ordinal** out, int* extension);

/* finite B-trees, JSON {"nodes": [[ord, ...], ...]} */
OG_API og_status og_tree_from_json(const char* json, og_tree** out);
OG_API void og_tree_free(og_tree* t);
OG_API og_status og_tree_to_json(const og_tree* t, char** out);
OG_API og_status og_tree_is_valid(const og_tree* t, int* out);
OG_API og_status og_tree_size(const og_tree* t, size_t* out);
OG_API og_status og_tree_order(const og_tree* t, size_t* out);
OG_API og_status og_tree_order_by_derivation(const og_tree* t, size_t* out);
OG_API og_status og_tree_rank(const og_tree* t, const char* path, size_t* out);
OG_API og_status og_tree_derive(const og_tree* t, og_tree** out);
/* JSON array of the maximal path strings */
OG_API og_status og_tree_max_nodes(const og_tree* t, char** out);
/* map_json is an object {"<source path>": "<target path>"} */
OG_API og_status og_tree_verify_monotone(const og_tree* source, const og_tree* target, const char* map_json,
                                         int* out);

/* tree families */
OG_API og_status og_family_new(og_family_kind kind, const og_ordinal* xi, og_family** out);
OG_API og_status og_family_from_json(const char* json, og_family** out);
OG_API void og_family_free(og_family* f);
OG_API og_status og_family_get_kind(const og_family* f, og_family_kind* out);
OG_API og_status og_family_member(const og_family* f, const char* path, int* out);
/* JSON array of CNF strings; path "()" asks for the roots */
OG_API og_status og_family_children(const og_family* f, const char* path, const og_budget* budget, char** out);
OG_API og_status og_family_is_maximal(const og_family* f, const char* path, int* out);
/* weight functions exist on Gamma families only */
OG_API og_status og_family_weight(const og_family* f, const char* path, char** out);
/* JSON array of "p/q" strings, one per initial segment */
OG_API og_status og_family_weights_along(const og_family* f, const char* path, char** out);
OG_API og_status og_family_branch_sum(const og_family* f, const char* path, char** sum, int* maximal);
OG_API og_status og_family_rank(const og_family* f, const char* path, og_ordinal** out);
OG_API og_status og_family_truncate(const og_family* f, const og_budget* budget, og_tree** out);
/* image of a path of T_xi in T_gamma */
OG_API og_status og_embed_t(const og_ordinal* xi, const og_ordinal* gamma, const char* path, char** out);

OG_API og_status og_branch_cursor_new(const og_family* f, const og_budget* budget, og_branch_cursor** out);
OG_API void og_branch_cursor_free(og_branch_cursor* c);
/* *path is null once the stream is exhausted */
OG_API og_status og_branch_cursor_next(og_branch_cursor* c, char** path);
OG_API og_status og_branch_cursor_truncations(const og_branch_cursor* c, size_t* out);

/* games */
OG_API og_status og_game_from_json(const char* json, og_game** out);
OG_API og_status og_game_build_szlenk(const og_ordinal* xi, const og_budget* budget, const char* model_json,
                                      og_game** out);
OG_API void og_game_free(og_game* g);
OG_API og_status og_game_to_json(const og_game* g, char** out);
OG_API og_status og_game_position_count(const og_game* g, size_t* out);
OG_API og_status og_game_eval_payoff(const og_game* g, const char* history, int* out);
OG_API og_status og_game_solve(const og_game* g, og_player* winner, og_strategy** strategy);
OG_API og_status og_game_brute_force(const og_game* g, size_t position_cap, og_player* winner);
OG_API og_status og_game_verify(const og_game* g, const og_strategy* s, int* out);
OG_API og_status og_game_complete(const og_game* g, const og_strategy* sub, size_t fallback_subspace,
                                  og_strategy** out);
OG_API og_status og_game_extract(const og_game* g, const og_strategy* s, char** out);

OG_API og_status og_strategy_from_json(const char* json, og_strategy** out);
OG_API void og_strategy_free(og_strategy* s);
OG_API og_status og_strategy_to_json(const og_strategy* s, char** out);
/* {"winner": "I"|"II", "strategy": {...}} */
OG_API og_status og_solution_to_json(og_player winner, const og_strategy* s, char** out);
OG_API og_status og_strategy_player(const og_strategy* s, og_player* out);

#ifdef __cplusplus
}
#endif

#endif
