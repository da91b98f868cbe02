#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace linshap {

// A game in weight form: nonnegative integer weight per player and the
// coalition-value function f materialized as a table on [0, sum of
// weights]. A coalition's worth is values[sum of member weights].
// values[0] == 0 always (the empty coalition is worth nothing).
struct LinearGame {
    std::vector<std::uint64_t> weights;
    std::vector<std::int64_t> values;

    std::size_t player_count() const { return weights.size(); }
    std::uint64_t total_weight() const { return values.size() - 1; }
    std::int64_t value_at(std::uint64_t k) const { return values[k]; }
    std::int64_t grand_value() const { return values.back(); }
};

// Validates the table shape (length = sum of weights + 1, values[0] == 0).
LinearGame make_linear_game(std::vector<std::uint64_t> weights,
                            std::vector<std::int64_t> values);

// Weight form with a custom coalition state: absorbing a player of
// weight w moves state s to update(s, w), and a coalition is worth
// state_value(state). Covers max-type games (airport) as well as the
// additive case update(s,w) = s+w. All reachable states must stay
// within state_bound.
struct GeneralizedGame {
    std::vector<std::uint64_t> weights;
    std::function<std::uint64_t(std::uint64_t state, std::uint64_t weight)> update;
    std::uint64_t empty_state = 0;
    std::function<std::int64_t(std::uint64_t state)> state_value;
    std::uint64_t state_bound = 0;

    std::size_t player_count() const { return weights.size(); }
};

// The built-in game families.

struct WeightedVoting {
    std::vector<std::uint64_t> weights;
    std::uint64_t quota = 1;
};

// v(S) = max{0, assets - claims outside S}.
struct Bankruptcy {
    std::vector<std::uint64_t> liabilities;
    std::uint64_t assets = 0;
};

// Player 0 is the defaulting firm; players 1..k are creditors with
// claims liabilities[0..k-1]. Requires assets < sum of liabilities.
struct Liability {
    std::vector<std::uint64_t> liabilities;
    std::uint64_t assets = 0;
};

// v(S) = max cost among members; costs are positive.
struct Airport {
    std::vector<std::uint64_t> costs;
};

// Raw weight form: f given directly as a nonnegative value table.
struct ExplicitTable {
    std::vector<std::uint64_t> weights;
    std::vector<std::int64_t> values;
};

using GameFamily =
    std::variant<WeightedVoting, Bankruptcy, Liability, Airport, ExplicitTable>;

// Throws InvalidParameterError naming the offending field.
void validate(const GameFamily& family);

std::size_t player_count(const GameFamily& family);
std::string family_name(const GameFamily& family);

// Whether to_linear is defined for this family.
bool has_linear_form(const GameFamily& family);

// Characteristic function, evaluated from the family's own formula
// (never routed through the weight tables; the tests rely on that
// independence). Coalitions are bitmasks over player indices, so this
// is limited to at most 63 players.
std::int64_t coalition_value(const GameFamily& family, std::uint64_t members);

std::int64_t grand_coalition_value(const GameFamily& family);

// Largest DP state the family can reach: total weight for the
// weight-sum families, maximum cost for airport. Cheap — no tables are
// materialized — so it is suitable for capacity checks up front.
std::uint64_t state_bound(const GameFamily& family);

// Throws NotLinearError for Airport.
LinearGame to_linear(const GameFamily& family);

// Additive state for the linearly representable families, running
// maximum for Airport.
GeneralizedGame to_generalized(const GameFamily& family);

}  // namespace linshap
