#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "linshap/game.hpp"
#include "linshap/poly.hpp"
#include "linshap/rational.hpp"

namespace linshap {

// Work budget in polynomial-coefficient cells, roughly
// (players+1)^2 * (states+1). Checked before any row is built so an
// oversized instance fails fast instead of exhausting memory.
inline constexpr std::uint64_t kDefaultCellLimit = std::uint64_t{1} << 31;

struct EngineOptions {
    std::uint64_t cell_limit = kDefaultCellLimit;
    // Players may be processed concurrently in the all-players passes;
    // the result is bit-identical to sequential execution.
    unsigned threads = 1;
};

// Throws CapacityError when (players+1)^2 * (max_state+1) exceeds the limit.
void ensure_capacity(std::size_t players, std::uint64_t max_state,
                     std::uint64_t limit);

// One row of the coalition-weight table. For each reachable total k,
// entries[k] is the polynomial in the join probability x giving the
// chance that the players absorbed so far form a coalition of total
// weight k. Only nonzero polynomials are stored; iteration is ordered
// by key. Row invariants (the tests pin them down): entries sum to the
// constant 1, every polynomial has degree <= players, and every
// coefficient has magnitude <= 3^players.
struct DpRow {
    std::map<std::uint64_t, Poly> entries;
    unsigned players = 0;

    friend bool operator==(const DpRow&, const DpRow&) = default;
};

// {0 -> 1}: the empty coalition has total 0 with certainty.
DpRow initial_row();

// Absorb one player of the given weight:
//   next[k] = (1-x)*row[k] + x*row[k-a]
// A weight of zero collapses the two terms and leaves the row unchanged.
DpRow dp_forward_step(const DpRow& row, std::uint64_t weight);

// Inverse of dp_forward_step for a row that absorbed a player of this
// weight, solved left to right:
//   prev[k] = (row[k] - x*prev[k-a]) / (1-x)
// Throws NotDivisibleError when the row never absorbed such a player.
DpRow dp_revert_step(const DpRow& row, std::uint64_t weight);

// Fold dp_forward_step over all weights. The resulting row does not
// depend on their order.
DpRow dp_forward(std::span<const std::uint64_t> weights,
                 const EngineOptions& opts = {});

// The full-game row over all players. Depends only on the weights, so
// it can be reused across different value tables.
DpRow base_polynomials(const LinearGame& game, const EngineOptions& opts = {});

struct ShapleyResult {
    std::vector<Rational> values;
    Rational total;  // equals the grand coalition value (efficiency)
};

// One player's exact Shapley value: forward pass over the other
// players' weights, then the marginal-weighted row integrated over [0,1].
Rational shapley_single(const LinearGame& game, std::size_t player,
                        const EngineOptions& opts = {});

// All players from a single forward pass: the base row is reverted once
// per player (independently, never chained) to recover that player's
// exclusion row.
ShapleyResult shapley_all(const LinearGame& game, const EngineOptions& opts = {});

// Forward row for a generalized game, optionally excluding one player.
// States move through game.update and must stay within game.state_bound.
DpRow generalized_row(const GeneralizedGame& game,
                      std::optional<std::size_t> excluded = std::nullopt,
                      const EngineOptions& opts = {});

Rational shapley_single_generalized(const GeneralizedGame& game,
                                    std::size_t player,
                                    const EngineOptions& opts = {});

// No reversion is available for a general state update, so this runs one
// fresh forward pass per player.
ShapleyResult shapley_all_generalized(const GeneralizedGame& game,
                                      const EngineOptions& opts = {});

// The airport exclusion row straight from the closed form: the chance
// that the remaining players' maximum cost is exactly k equals
// (1 - (1-x)^{n_k}) * (1-x)^{n_k+}, with n_k players of cost k and n_k+
// players of strictly larger cost. Key 0 carries (1-x)^{remaining}.
DpRow airport_exclusion_row(std::span<const std::uint64_t> costs,
                            std::size_t excluded);

}  // namespace linshap
