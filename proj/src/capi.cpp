#include "linshap.h"

#include <cstring>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "linshap/engine.hpp"
#include "linshap/errors.hpp"
#include "linshap/game.hpp"
#include "linshap/oracle.hpp"
#include "linshap/poly.hpp"
#include "linshap/rational.hpp"

struct linshap_game {
    linshap::GameFamily family;
    linshap::EngineOptions options;
};

struct linshap_result {
    std::vector<linshap::Rational> values;
    linshap::Rational total;
};

struct linshap_row {
    std::vector<std::pair<std::uint64_t, linshap::Poly>> entries;
};

namespace {

thread_local std::string t_last_error;

void clear_error() {
    t_last_error.clear();
}

linshap_status fail(linshap_status status, const char* message) {
    t_last_error = message;
    return status;
}

// Maps the core exception hierarchy onto status codes.
template <typename Fn>
linshap_status guarded(Fn&& fn) {
    clear_error();
    try {
        return fn();
    } catch (const linshap::InvalidParameterError& e) {
        return fail(LINSHAP_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const linshap::NotLinearError& e) {
        return fail(LINSHAP_ERROR_NOT_LINEAR, e.what());
    } catch (const linshap::NotDivisibleError& e) {
        return fail(LINSHAP_ERROR_NOT_DIVISIBLE, e.what());
    } catch (const linshap::CapacityError& e) {
        return fail(LINSHAP_ERROR_CAPACITY, e.what());
    } catch (const linshap::TooLargeError& e) {
        return fail(LINSHAP_ERROR_TOO_LARGE, e.what());
    } catch (const std::exception& e) {
        return fail(LINSHAP_ERROR_INTERNAL, e.what());
    } catch (...) {
        return fail(LINSHAP_ERROR_INTERNAL, "unknown internal error");
    }
}

std::vector<std::uint64_t> to_unsigned(const int64_t* data, size_t n,
                                       const char* field) {
    if (n > 0 && data == nullptr) {
        throw linshap::InvalidParameterError(std::string(field) +
                                             ": null array");
    }
    std::vector<std::uint64_t> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (data[i] < 0) {
            throw linshap::InvalidParameterError(std::string(field) +
                                                 ": must be nonnegative");
        }
        out.push_back(static_cast<std::uint64_t>(data[i]));
    }
    return out;
}

std::uint64_t to_unsigned_scalar(int64_t value, const char* field) {
    if (value < 0) {
        throw linshap::InvalidParameterError(std::string(field) +
                                             ": must be nonnegative");
    }
    return static_cast<std::uint64_t>(value);
}

linshap_status make_game(linshap::GameFamily family, linshap_game** out) {
    if (out == nullptr) {
        return fail(LINSHAP_ERROR_NULL_POINTER, "output pointer is null");
    }
    linshap::validate(family);
    *out = new linshap_game{std::move(family), {}};
    return LINSHAP_OK;
}

// snprintf-style copy-out used by every string getter.
size_t copy_string(const std::string& s, char* buf, size_t cap) {
    if (buf != nullptr && cap > 0) {
        const size_t n = std::min(cap - 1, s.size());
        std::memcpy(buf, s.data(), n);
        buf[n] = '\0';
    }
    return s.size();
}

linshap_result* new_result(linshap::ShapleyResult&& r) {
    return new linshap_result{std::move(r.values), std::move(r.total)};
}

linshap_result* new_result(std::vector<linshap::Rational>&& values) {
    linshap::Rational total = 0;
    for (const auto& v : values) {
        total += v;
    }
    return new linshap_result{std::move(values), std::move(total)};
}

}  // namespace

extern "C" {

const char* linshap_status_name(linshap_status status) {
    switch (status) {
        case LINSHAP_OK:
            return "ok";
        case LINSHAP_ERROR_INVALID_ARGUMENT:
            return "invalid argument";
        case LINSHAP_ERROR_NOT_LINEAR:
            return "not linearly representable";
        case LINSHAP_ERROR_NOT_DIVISIBLE:
            return "not divisible";
        case LINSHAP_ERROR_CAPACITY:
            return "capacity limit exceeded";
        case LINSHAP_ERROR_TOO_LARGE:
            return "too large for brute force";
        case LINSHAP_ERROR_NULL_POINTER:
            return "null pointer";
        case LINSHAP_ERROR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

const char* linshap_last_error(void) {
    return t_last_error.c_str();
}

linshap_status linshap_game_weighted_voting(const int64_t* weights, size_t n,
                                            int64_t quota, linshap_game** out) {
    return guarded([&]() {
        return make_game(
            linshap::WeightedVoting{to_unsigned(weights, n, "weights"),
                                    to_unsigned_scalar(quota, "quota")},
            out);
    });
}

linshap_status linshap_game_bankruptcy(const int64_t* liabilities, size_t n,
                                       int64_t assets, linshap_game** out) {
    return guarded([&]() {
        return make_game(
            linshap::Bankruptcy{to_unsigned(liabilities, n, "liabilities"),
                                to_unsigned_scalar(assets, "assets")},
            out);
    });
}

linshap_status linshap_game_liability(const int64_t* liabilities,
                                      size_t creditors, int64_t assets,
                                      linshap_game** out) {
    return guarded([&]() {
        return make_game(
            linshap::Liability{to_unsigned(liabilities, creditors, "liabilities"),
                               to_unsigned_scalar(assets, "assets")},
            out);
    });
}

linshap_status linshap_game_airport(const int64_t* costs, size_t n,
                                    linshap_game** out) {
    return guarded([&]() {
        return make_game(linshap::Airport{to_unsigned(costs, n, "costs")}, out);
    });
}

linshap_status linshap_game_table(const int64_t* weights, size_t n,
                                  const int64_t* values, size_t value_count,
                                  linshap_game** out) {
    return guarded([&]() {
        if (value_count > 0 && values == nullptr) {
            throw linshap::InvalidParameterError("values: null array");
        }
        return make_game(
            linshap::ExplicitTable{to_unsigned(weights, n, "weights"),
                                   std::vector<std::int64_t>(
                                       values, values + value_count)},
            out);
    });
}

void linshap_game_free(linshap_game* game) {
    delete game;
}

size_t linshap_game_player_count(const linshap_game* game) {
    return game == nullptr ? 0 : linshap::player_count(game->family);
}

int linshap_game_has_linear_form(const linshap_game* game) {
    return game != nullptr && linshap::has_linear_form(game->family) ? 1 : 0;
}

int64_t linshap_game_grand_value(const linshap_game* game) {
    return game == nullptr ? 0 : linshap::grand_coalition_value(game->family);
}

void linshap_game_set_cell_limit(linshap_game* game, uint64_t cells) {
    if (game != nullptr) {
        game->options.cell_limit = cells;
    }
}

void linshap_game_set_threads(linshap_game* game, unsigned threads) {
    if (game != nullptr) {
        game->options.threads = threads == 0 ? 1 : threads;
    }
}

linshap_status linshap_shapley_all(const linshap_game* game,
                                   linshap_result** out) {
    return guarded([&]() {
        if (game == nullptr || out == nullptr) {
            return fail(LINSHAP_ERROR_NULL_POINTER, "null handle");
        }
        // Check the budget before any value table is materialized.
        linshap::ensure_capacity(linshap::player_count(game->family),
                                 linshap::state_bound(game->family),
                                 game->options.cell_limit);
        if (linshap::has_linear_form(game->family)) {
            *out = new_result(
                linshap::shapley_all(linshap::to_linear(game->family),
                                     game->options));
        } else {
            *out = new_result(linshap::shapley_all_generalized(
                linshap::to_generalized(game->family), game->options));
        }
        return LINSHAP_OK;
    });
}

linshap_status linshap_shapley_single(const linshap_game* game, size_t player,
                                      linshap_result** out) {
    return guarded([&]() {
        if (game == nullptr || out == nullptr) {
            return fail(LINSHAP_ERROR_NULL_POINTER, "null handle");
        }
        if (player >= linshap::player_count(game->family)) {
            throw linshap::InvalidParameterError("player index out of range");
        }
        linshap::ensure_capacity(linshap::player_count(game->family),
                                 linshap::state_bound(game->family),
                                 game->options.cell_limit);
        linshap::Rational value;
        if (linshap::has_linear_form(game->family)) {
            value = linshap::shapley_single(linshap::to_linear(game->family),
                                            player, game->options);
        } else {
            value = linshap::shapley_single_generalized(
                linshap::to_generalized(game->family), player, game->options);
        }
        std::vector<linshap::Rational> values{value};
        *out = new linshap_result{std::move(values), std::move(value)};
        return LINSHAP_OK;
    });
}

linshap_status linshap_shapley_all_generalized(const linshap_game* game,
                                               linshap_result** out) {
    return guarded([&]() {
        if (game == nullptr || out == nullptr) {
            return fail(LINSHAP_ERROR_NULL_POINTER, "null handle");
        }
        linshap::ensure_capacity(linshap::player_count(game->family),
                                 linshap::state_bound(game->family),
                                 game->options.cell_limit);
        *out = new_result(linshap::shapley_all_generalized(
            linshap::to_generalized(game->family), game->options));
        return LINSHAP_OK;
    });
}

linshap_status linshap_oracle_subset_form(const linshap_game* game,
                                          linshap_result** out) {
    return guarded([&]() {
        if (game == nullptr || out == nullptr) {
            return fail(LINSHAP_ERROR_NULL_POINTER, "null handle");
        }
        *out = new_result(
            linshap::shapley_subset_form(linshap::materialize(game->family)));
        return LINSHAP_OK;
    });
}

linshap_status linshap_oracle_permutation_form(const linshap_game* game,
                                               linshap_result** out) {
    return guarded([&]() {
        if (game == nullptr || out == nullptr) {
            return fail(LINSHAP_ERROR_NULL_POINTER, "null handle");
        }
        *out = new_result(linshap::shapley_permutation_form(
            linshap::materialize(game->family)));
        return LINSHAP_OK;
    });
}

size_t linshap_result_count(const linshap_result* result) {
    return result == nullptr ? 0 : result->values.size();
}

size_t linshap_result_fraction(const linshap_result* result, size_t player,
                               char* buf, size_t cap) {
    if (result == nullptr || player >= result->values.size()) {
        return copy_string("", buf, cap);
    }
    return copy_string(linshap::fraction_string(result->values[player]), buf,
                       cap);
}

size_t linshap_result_decimal(const linshap_result* result, size_t player,
                              unsigned digits, char* buf, size_t cap) {
    if (result == nullptr || player >= result->values.size()) {
        return copy_string("", buf, cap);
    }
    return copy_string(linshap::decimal_string(result->values[player], digits),
                       buf, cap);
}

size_t linshap_result_total_fraction(const linshap_result* result, char* buf,
                                     size_t cap) {
    if (result == nullptr) {
        return copy_string("", buf, cap);
    }
    return copy_string(linshap::fraction_string(result->total), buf, cap);
}

int linshap_result_equal(const linshap_result* a, const linshap_result* b) {
    if (a == nullptr || b == nullptr) {
        return a == b;
    }
    return a->values == b->values ? 1 : 0;
}

void linshap_result_free(linshap_result* result) {
    delete result;
}

linshap_status linshap_base_polynomials(const linshap_game* game,
                                        linshap_row** out) {
    return guarded([&]() {
        if (game == nullptr || out == nullptr) {
            return fail(LINSHAP_ERROR_NULL_POINTER, "null handle");
        }
        linshap::ensure_capacity(linshap::player_count(game->family),
                                 linshap::state_bound(game->family),
                                 game->options.cell_limit);
        const linshap::DpRow row = linshap::base_polynomials(
            linshap::to_linear(game->family), game->options);
        auto* handle = new linshap_row{};
        handle->entries.assign(row.entries.begin(), row.entries.end());
        *out = handle;
        return LINSHAP_OK;
    });
}

size_t linshap_row_entry_count(const linshap_row* row) {
    return row == nullptr ? 0 : row->entries.size();
}

uint64_t linshap_row_key(const linshap_row* row, size_t idx) {
    if (row == nullptr || idx >= row->entries.size()) {
        return 0;
    }
    return row->entries[idx].first;
}

size_t linshap_row_coefficient_count(const linshap_row* row, size_t idx) {
    if (row == nullptr || idx >= row->entries.size()) {
        return 0;
    }
    return row->entries[idx].second.coefficients().size();
}

size_t linshap_row_coefficient(const linshap_row* row, size_t idx,
                               size_t power, char* buf, size_t cap) {
    if (row == nullptr || idx >= row->entries.size()) {
        return copy_string("", buf, cap);
    }
    return copy_string(row->entries[idx].second.coefficient(power).get_str(),
                       buf, cap);
}

void linshap_row_free(linshap_row* row) {
    delete row;
}

}  // extern "C"
