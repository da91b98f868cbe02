#include "linshap/engine.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <deque>
#include <string>
#include <thread>
#include <utility>

#include "linshap/errors.hpp"

namespace linshap {

namespace {

void add_into(std::map<std::uint64_t, Poly>& entries, std::uint64_t key,
              Poly value) {
    if (value.is_zero()) {
        return;
    }
    auto [it, inserted] = entries.try_emplace(key, std::move(value));
    if (!inserted) {
        it->second = it->second + value;
    }
}

void prune_zeros(std::map<std::uint64_t, Poly>& entries) {
    for (auto it = entries.begin(); it != entries.end();) {
        it = it->second.is_zero() ? entries.erase(it) : std::next(it);
    }
}

std::uint64_t checked_state_sum(std::span<const std::uint64_t> weights) {
    unsigned __int128 total = 0;
    for (std::uint64_t w : weights) {
        total += w;
    }
    if (total > (std::uint64_t{1} << 61)) {
        throw CapacityError("total weight exceeds 2^61");
    }
    return static_cast<std::uint64_t>(total);
}

// Runs fn(i) for every player index, optionally across threads. Slots
// are preassigned (thread t takes i = t, t+T, ...) so the outcome never
// depends on scheduling.
template <typename Fn>
void for_each_player(std::size_t count, unsigned threads, Fn&& fn) {
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, threads), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::mutex failure_mutex;
    std::exception_ptr failure;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < count; i += workers) {
                    fn(i);
                }
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        });
    }
    for (std::thread& th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

// Sum of row polynomials scaled by the marginal contribution the player
// makes to a coalition in each state. Accumulates into one coefficient
// buffer; keeps the pass at a single allocation.
template <typename MarginalFn>
Poly marginal_weighted_sum(const DpRow& row, MarginalFn&& marginal_of) {
    std::size_t width = 0;
    for (const auto& [state, poly] : row.entries) {
        width = std::max(width, poly.coefficients().size());
    }
    std::vector<BigInt> acc(width);
    for (const auto& [state, poly] : row.entries) {
        const std::int64_t gain = marginal_of(state);
        if (gain == 0) {
            continue;
        }
        const BigInt factor(static_cast<long>(gain));
        const auto coeffs = poly.coefficients();
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            mpz_addmul(acc[i].get_mpz_t(), coeffs[i].get_mpz_t(),
                       factor.get_mpz_t());
        }
    }
    return Poly(std::move(acc));
}

std::vector<std::uint64_t> weights_without(
    std::span<const std::uint64_t> weights, std::size_t player) {
    std::vector<std::uint64_t> rest;
    rest.reserve(weights.size() - 1);
    for (std::size_t j = 0; j < weights.size(); ++j) {
        if (j != player) {
            rest.push_back(weights[j]);
        }
    }
    return rest;
}

void check_player_index(std::size_t player, std::size_t count) {
    if (player >= count) {
        throw InvalidParameterError("player index out of range");
    }
}

Rational sum_values(const std::vector<Rational>& values) {
    Rational total = 0;
    for (const Rational& v : values) {
        total += v;
    }
    return total;
}

}  // namespace

void ensure_capacity(std::size_t players, std::uint64_t max_state,
                     std::uint64_t limit) {
    const unsigned __int128 cells = (unsigned __int128)(players + 1) *
                                    (players + 1) * ((unsigned __int128)max_state + 1);
    if (cells > limit) {
        throw CapacityError(
            "capacity limit exceeded: n=" + std::to_string(players) +
            ", K=" + std::to_string(max_state) +
            ", n*K=" + std::to_string(players * (unsigned long long)max_state) +
            ", coefficient cells ~" +
            std::to_string((unsigned long long)std::min<unsigned __int128>(
                cells, ~0ull)) +
            " > limit " + std::to_string(limit));
    }
}

DpRow initial_row() {
    DpRow row;
    row.entries.emplace(0, Poly::constant(1));
    return row;
}

DpRow dp_forward_step(const DpRow& row, std::uint64_t weight) {
    DpRow next;
    next.players = row.players + 1;
    if (weight == 0) {
        // (1-x)*p + x*p = p
        next.entries = row.entries;
        return next;
    }
    for (const auto& [k, poly] : row.entries) {
        add_into(next.entries, k, poly.times_one_minus_x());
        add_into(next.entries, k + weight, poly.times_x());
    }
    prune_zeros(next.entries);
    return next;
}

DpRow dp_revert_step(const DpRow& row, std::uint64_t weight) {
    if (row.players == 0) {
        throw InvalidParameterError("cannot revert a row with no players");
    }
    DpRow prev;
    prev.players = row.players - 1;
    if (weight == 0) {
        prev.entries = row.entries;
        return prev;
    }
    // Solve prev[k] = (row[k] - x*prev[k-a]) / (1-x) in increasing key
    // order. Candidate keys are the row's own keys merged with k'+a for
    // every solved key k'; both streams arrive sorted, so an ordered
    // merge visits each candidate exactly once.
    auto row_it = row.entries.begin();
    std::deque<std::map<std::uint64_t, Poly>::const_iterator> solved;
    while (row_it != row.entries.end() || !solved.empty()) {
        const std::uint64_t row_key =
            row_it != row.entries.end() ? row_it->first : UINT64_MAX;
        const std::uint64_t chain_key =
            !solved.empty() ? solved.front()->first + weight : UINT64_MAX;
        const std::uint64_t k = std::min(row_key, chain_key);
        Poly numerator;
        if (row_key == k) {
            numerator = row_it->second;
            ++row_it;
        }
        if (chain_key == k) {
            numerator = numerator - solved.front()->second.times_x();
            solved.pop_front();
        }
        if (numerator.is_zero()) {
            continue;
        }
        const auto it = prev.entries.emplace_hint(
            prev.entries.end(), k, numerator.divided_by_one_minus_x());
        solved.push_back(it);
    }
    return prev;
}

DpRow dp_forward(std::span<const std::uint64_t> weights,
                 const EngineOptions& opts) {
    ensure_capacity(weights.size(), checked_state_sum(weights), opts.cell_limit);
    DpRow row = initial_row();
    for (std::uint64_t w : weights) {
        row = dp_forward_step(row, w);
    }
    return row;
}

DpRow base_polynomials(const LinearGame& game, const EngineOptions& opts) {
    return dp_forward(game.weights, opts);
}

Rational shapley_single(const LinearGame& game, std::size_t player,
                        const EngineOptions& opts) {
    check_player_index(player, game.player_count());
    const std::uint64_t a = game.weights[player];
    const DpRow row = dp_forward(weights_without(game.weights, player), opts);
    return marginal_weighted_sum(row, [&](std::uint64_t k) {
               return game.value_at(k + a) - game.value_at(k);
           })
        .integrate_unit_interval();
}

ShapleyResult shapley_all(const LinearGame& game, const EngineOptions& opts) {
    const std::size_t n = game.player_count();
    const DpRow base = base_polynomials(game, opts);
    std::vector<Rational> values(n);
    for_each_player(n, opts.threads, [&](std::size_t i) {
        const std::uint64_t a = game.weights[i];
        const DpRow exclusion = dp_revert_step(base, a);
        values[i] = marginal_weighted_sum(exclusion, [&](std::uint64_t k) {
                        return game.value_at(k + a) - game.value_at(k);
                    })
                        .integrate_unit_interval();
    });
    Rational total = sum_values(values);
    return ShapleyResult{std::move(values), std::move(total)};
}

namespace {

std::uint64_t checked_update(const GeneralizedGame& game, std::uint64_t state,
                             std::uint64_t weight) {
    const std::uint64_t next = game.update(state, weight);
    if (next > game.state_bound) {
        throw InvalidParameterError(
            "state update exceeded the declared state bound");
    }
    return next;
}

}  // namespace

DpRow generalized_row(const GeneralizedGame& game,
                      std::optional<std::size_t> excluded,
                      const EngineOptions& opts) {
    if (excluded) {
        check_player_index(*excluded, game.player_count());
    }
    if (game.empty_state > game.state_bound) {
        throw InvalidParameterError("empty-coalition state exceeds the bound");
    }
    const std::size_t n = game.player_count() - (excluded ? 1 : 0);
    ensure_capacity(n, game.state_bound, opts.cell_limit);

    DpRow row;
    row.entries.emplace(game.empty_state, Poly::constant(1));
    for (std::size_t j = 0; j < game.player_count(); ++j) {
        if (excluded && *excluded == j) {
            continue;
        }
        DpRow next;
        next.players = row.players + 1;
        for (const auto& [state, poly] : row.entries) {
            const std::uint64_t joined = checked_update(game, state, game.weights[j]);
            if (joined == state) {
                add_into(next.entries, state, poly);
            } else {
                add_into(next.entries, state, poly.times_one_minus_x());
                add_into(next.entries, joined, poly.times_x());
            }
        }
        prune_zeros(next.entries);
        row = std::move(next);
    }
    return row;
}

Rational shapley_single_generalized(const GeneralizedGame& game,
                                    std::size_t player,
                                    const EngineOptions& opts) {
    check_player_index(player, game.player_count());
    if (game.state_value(game.empty_state) != 0) {
        throw InvalidParameterError("the empty coalition must be worth 0");
    }
    const DpRow row = generalized_row(game, player, opts);
    const std::uint64_t w = game.weights[player];
    return marginal_weighted_sum(row, [&](std::uint64_t state) {
               return game.state_value(checked_update(game, state, w)) -
                      game.state_value(state);
           })
        .integrate_unit_interval();
}

ShapleyResult shapley_all_generalized(const GeneralizedGame& game,
                                      const EngineOptions& opts) {
    const std::size_t n = game.player_count();
    if (game.state_value(game.empty_state) != 0) {
        throw InvalidParameterError("the empty coalition must be worth 0");
    }
    std::vector<Rational> values(n);
    for_each_player(n, opts.threads, [&](std::size_t i) {
        values[i] = shapley_single_generalized(game, i, opts);
    });
    Rational total = sum_values(values);
    return ShapleyResult{std::move(values), std::move(total)};
}

DpRow airport_exclusion_row(std::span<const std::uint64_t> costs,
                            std::size_t excluded) {
    check_player_index(excluded, costs.size());
    const std::vector<std::uint64_t> rest = weights_without(costs, excluded);
    const std::size_t m = rest.size();

    std::vector<Poly> decline_power(m + 1);  // (1-x)^j
    decline_power[0] = Poly::constant(1);
    for (std::size_t j = 1; j <= m; ++j) {
        decline_power[j] = decline_power[j - 1].times_one_minus_x();
    }

    std::map<std::uint64_t, std::size_t> cost_counts;
    for (std::uint64_t c : rest) {
        ++cost_counts[c];
    }

    DpRow row;
    row.players = static_cast<unsigned>(m);
    row.entries.emplace(0, decline_power[m]);
    // Walking costs downward keeps a running count of strictly-larger
    // players; (1-(1-x)^{n_k})*(1-x)^{n_k+} telescopes into a difference
    // of two stored powers.
    std::size_t larger = 0;
    for (auto it = cost_counts.rbegin(); it != cost_counts.rend(); ++it) {
        const auto [cost, count] = *it;
        add_into(row.entries,
                 cost, decline_power[larger] - decline_power[larger + count]);
        larger += count;
    }
    return row;
}

}  // namespace linshap
