#pragma once

#include <cstdint>
#include <vector>

#include "linshap/game.hpp"
#include "linshap/rational.hpp"

namespace linshap {

// Fully tabulated characteristic function: values[mask] is the worth of
// the coalition whose members are the set bits of mask. Ground truth
// for the engine at small player counts; deliberately naive.
struct ExplicitGame {
    unsigned player_count = 0;
    std::vector<std::int64_t> values;  // size 1 << player_count, values[0] == 0
};

ExplicitGame make_explicit_game(unsigned player_count,
                                std::vector<std::int64_t> values);

// Tabulates coalition_value over all 2^n coalitions. Throws
// TooLargeError beyond 20 players.
ExplicitGame materialize(const GameFamily& family);

// Shapley values as the subset sum with |S|!(n-|S|-1)!/n! weights.
// Exact rational arithmetic; at most 20 players.
std::vector<Rational> shapley_subset_form(const ExplicitGame& game);

// Shapley values as the average marginal contribution over all n!
// player orderings; at most 9 players. Agrees exactly with the subset
// form — the two are each other's cross-check.
std::vector<Rational> shapley_permutation_form(const ExplicitGame& game);

}  // namespace linshap
