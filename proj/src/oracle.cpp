#include "linshap/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "linshap/errors.hpp"

namespace linshap {

namespace {

constexpr unsigned kMaxSubsetPlayers = 20;
constexpr unsigned kMaxPermutationPlayers = 9;

}  // namespace

ExplicitGame make_explicit_game(unsigned player_count,
                                std::vector<std::int64_t> values) {
    if (player_count > kMaxSubsetPlayers) {
        throw TooLargeError("explicit games are limited to 20 players");
    }
    if (values.size() != (std::size_t{1} << player_count)) {
        throw InvalidParameterError("values: need one entry per coalition");
    }
    if (values[0] != 0) {
        throw InvalidParameterError("values: the empty coalition must be worth 0");
    }
    return ExplicitGame{player_count, std::move(values)};
}

ExplicitGame materialize(const GameFamily& family) {
    validate(family);
    const std::size_t n = player_count(family);
    if (n > kMaxSubsetPlayers) {
        throw TooLargeError("materializing requires at most 20 players");
    }
    std::vector<std::int64_t> values(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < values.size(); ++mask) {
        values[mask] = coalition_value(family, mask);
    }
    return ExplicitGame{static_cast<unsigned>(n), std::move(values)};
}

std::vector<Rational> shapley_subset_form(const ExplicitGame& game) {
    const unsigned n = game.player_count;
    if (n > kMaxSubsetPlayers) {
        throw TooLargeError("subset-form oracle is limited to 20 players");
    }
    // |S|!(n-|S|-1)!/n! grouped over the common denominator n!.
    std::vector<BigInt> size_weight(n == 0 ? 0 : n);
    for (unsigned s = 0; s < size_weight.size(); ++s) {
        size_weight[s] = factorial(s) * factorial(n - s - 1);
    }
    const BigInt n_factorial = factorial(n);

    std::vector<Rational> shapley(n);
    const std::uint64_t coalitions = std::uint64_t{1} << n;
    for (unsigned i = 0; i < n; ++i) {
        BigInt numerator = 0;
        for (std::uint64_t mask = 0; mask < coalitions; ++mask) {
            if (mask >> i & 1) {
                continue;
            }
            const std::int64_t marginal =
                game.values[mask | (std::uint64_t{1} << i)] - game.values[mask];
            if (marginal != 0) {
                numerator += size_weight[std::popcount(mask)] *
                             static_cast<long>(marginal);
            }
        }
        shapley[i] = make_rational(numerator, n_factorial);
    }
    return shapley;
}

std::vector<Rational> shapley_permutation_form(const ExplicitGame& game) {
    const unsigned n = game.player_count;
    if (n > kMaxPermutationPlayers) {
        throw TooLargeError("permutation-form oracle is limited to 9 players");
    }
    std::vector<unsigned> order(n);
    std::iota(order.begin(), order.end(), 0u);

    std::vector<BigInt> contribution(n, BigInt(0));
    do {
        std::uint64_t mask = 0;
        std::int64_t previous = 0;
        for (unsigned player : order) {
            mask |= std::uint64_t{1} << player;
            const std::int64_t current = game.values[mask];
            contribution[player] += static_cast<long>(current - previous);
            previous = current;
        }
    } while (std::next_permutation(order.begin(), order.end()));

    const BigInt n_factorial = factorial(n);
    std::vector<Rational> shapley(n);
    for (unsigned i = 0; i < n; ++i) {
        shapley[i] = make_rational(contribution[i], n_factorial);
    }
    return shapley;
}

}  // namespace linshap
