/*
 * linshap — exact Shapley values for weight-representable cooperative
 * games, computed by a pseudo-polynomial dynamic program over
 * integer-coefficient polynomials.
 *
 * Plain C surface over the C++ core: opaque handles, status codes, and
 * string outputs (values are arbitrary-precision rationals, so numeric
 * results are returned as "numerator/denominator" strings or rounded
 * decimal strings).
 *
 * All string-returning functions follow snprintf conventions: they
 * return the full length of the string (excluding the terminating NUL)
 * and write at most cap-1 characters plus a NUL when buf is non-NULL.
 * Call with (NULL, 0) to size a buffer.
 *
 * Handles are not thread-safe for concurrent mutation, but distinct
 * handles may be used from different threads freely.
 */

#ifndef LINSHAP_H
#define LINSHAP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum linshap_status {
    LINSHAP_OK = 0,
    /* A parameter violates a family invariant (negative or oversized
     * numbers, infeasible quota/assets, bad table length, bad player
     * index). linshap_last_error() names the offending field. */
    LINSHAP_ERROR_INVALID_ARGUMENT = 1,
    /* The family has no weight-sum representation (airport games);
     * route the call through the generalized engine instead. */
    LINSHAP_ERROR_NOT_LINEAR = 2,
    /* Row reversion was asked to remove a weight the row never
     * absorbed; indicates corrupted DP state. */
    LINSHAP_ERROR_NOT_DIVISIBLE = 3,
    /* The instance exceeds the configured work limit; see
     * linshap_game_set_cell_limit(). */
    LINSHAP_ERROR_CAPACITY = 4,
    /* Brute-force oracle requested beyond its player limit. */
    LINSHAP_ERROR_TOO_LARGE = 5,
    /* NULL handle or output pointer. */
    LINSHAP_ERROR_NULL_POINTER = 6,
    /* Unexpected internal failure. */
    LINSHAP_ERROR_INTERNAL = 7
} linshap_status;

/* Static name of a status code, e.g. "invalid argument". */
const char* linshap_status_name(linshap_status status);

/* Detail message of the most recent failure on the calling thread;
 * empty string when the last call succeeded. */
const char* linshap_last_error(void);

typedef struct linshap_game linshap_game;     /* a game instance + options */
typedef struct linshap_result linshap_result; /* a Shapley vector */
typedef struct linshap_row linshap_row;       /* one DP row of polynomials */

/* ---- game construction ------------------------------------------------ */
/* Inputs are int64 so that negative values are rejected with a message
 * instead of silently wrapping. Player indices are 0-based throughout
 * the C API. */

/* v(S) = 1 iff the members' total weight reaches the quota. */
linshap_status linshap_game_weighted_voting(const int64_t* weights, size_t n,
                                            int64_t quota, linshap_game** out);

/* v(S) = max(0, assets - claims outside S); requires assets <= total claims. */
linshap_status linshap_game_bankruptcy(const int64_t* liabilities, size_t n,
                                       int64_t assets, linshap_game** out);

/* Player 0 is the defaulting firm, players 1..n are the creditors;
 * requires assets < total claims. */
linshap_status linshap_game_liability(const int64_t* liabilities,
                                      size_t creditors, int64_t assets,
                                      linshap_game** out);

/* v(S) = max member cost; costs must be positive. */
linshap_status linshap_game_airport(const int64_t* costs, size_t n,
                                    linshap_game** out);

/* Weight form given directly: values[k] is the worth of any coalition
 * of total weight k, for k = 0..sum(weights); values[0] must be 0. */
linshap_status linshap_game_table(const int64_t* weights, size_t n,
                                  const int64_t* values, size_t value_count,
                                  linshap_game** out);

void linshap_game_free(linshap_game* game);

size_t linshap_game_player_count(const linshap_game* game);
/* 0 for airport games, 1 otherwise. */
int linshap_game_has_linear_form(const linshap_game* game);
int64_t linshap_game_grand_value(const linshap_game* game);

/* Work budget in polynomial-coefficient cells, roughly n^2 * K where K
 * is the total weight (default 2^31). Computations that would exceed it
 * fail with LINSHAP_ERROR_CAPACITY before allocating. */
void linshap_game_set_cell_limit(linshap_game* game, uint64_t cells);

/* Number of worker threads for the all-players computations (default 1).
 * Results are bit-identical regardless of the setting. */
void linshap_game_set_threads(linshap_game* game, unsigned threads);

/* ---- Shapley computation ---------------------------------------------- */

/* All players. Linearly representable families take the single-pass
 * route (one forward pass, one row reversion per player); airport games
 * are routed through the generalized engine automatically. */
linshap_status linshap_shapley_all(const linshap_game* game,
                                   linshap_result** out);

/* One player (0-based), via a forward pass over the other players. */
linshap_status linshap_shapley_single(const linshap_game* game, size_t player,
                                      linshap_result** out);

/* Force the generalized engine (one forward pass per player; works for
 * every family). For additive families this must agree exactly with
 * linshap_shapley_all. */
linshap_status linshap_shapley_all_generalized(const linshap_game* game,
                                               linshap_result** out);

/* Brute-force references (exact, independent of the DP engine):
 * subset form up to 20 players, permutation form up to 9. */
linshap_status linshap_oracle_subset_form(const linshap_game* game,
                                          linshap_result** out);
linshap_status linshap_oracle_permutation_form(const linshap_game* game,
                                               linshap_result** out);

/* ---- results ----------------------------------------------------------- */

size_t linshap_result_count(const linshap_result* result);
/* Exact value of one player as "num/den" (always reduced, den > 0). */
size_t linshap_result_fraction(const linshap_result* result, size_t player,
                               char* buf, size_t cap);
/* Decimal rendering with `digits` places, rounded half-to-even against
 * the exact value. */
size_t linshap_result_decimal(const linshap_result* result, size_t player,
                              unsigned digits, char* buf, size_t cap);
/* Sum of all values; equals the grand coalition value. */
size_t linshap_result_total_fraction(const linshap_result* result, char* buf,
                                     size_t cap);
/* 1 when both vectors have the same length and are exactly equal. */
int linshap_result_equal(const linshap_result* a, const linshap_result* b);
void linshap_result_free(linshap_result* result);

/* ---- base polynomials --------------------------------------------------*/

/* The full-game DP row over all players (linear families only). The row
 * depends only on the weights, not on the value table. */
linshap_status linshap_base_polynomials(const linshap_game* game,
                                        linshap_row** out);

size_t linshap_row_entry_count(const linshap_row* row);
/* Total weight (key) of the idx-th entry, in increasing order. */
uint64_t linshap_row_key(const linshap_row* row, size_t idx);
/* Number of coefficients of the idx-th polynomial (degree + 1). */
size_t linshap_row_coefficient_count(const linshap_row* row, size_t idx);
/* Decimal string of one integer coefficient (power ascending from 0). */
size_t linshap_row_coefficient(const linshap_row* row, size_t idx,
                               size_t power, char* buf, size_t cap);
void linshap_row_free(linshap_row* row);

#ifdef __cplusplus
}
#endif

#endif /* LINSHAP_H */
