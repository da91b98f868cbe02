#include "linshap/game.hpp"

#include <algorithm>
#include <memory>
#include <type_traits>

#include "linshap/errors.hpp"

namespace linshap {

namespace {

// Keeps every weight sum (and the liability firm weight 2*sum+1) safely
// inside int64 range.
constexpr std::uint64_t kMaxTotalWeight = std::uint64_t{1} << 61;

std::uint64_t checked_total(const std::vector<std::uint64_t>& ws,
                            const char* field) {
    unsigned __int128 total = 0;
    for (std::uint64_t w : ws) {
        total += w;
    }
    if (total > kMaxTotalWeight) {
        throw InvalidParameterError(std::string(field) + ": total exceeds 2^61");
    }
    return static_cast<std::uint64_t>(total);
}

std::uint64_t masked_sum(const std::vector<std::uint64_t>& ws,
                         std::uint64_t members) {
    std::uint64_t sum = 0;
    for (std::size_t j = 0; j < ws.size(); ++j) {
        if (members >> j & 1) {
            sum += ws[j];
        }
    }
    return sum;
}

std::int64_t clamped_gain(std::uint64_t assets, std::uint64_t shortfall) {
    return assets > shortfall ? static_cast<std::int64_t>(assets - shortfall) : 0;
}

}  // namespace

LinearGame make_linear_game(std::vector<std::uint64_t> weights,
                            std::vector<std::int64_t> values) {
    const std::uint64_t total = checked_total(weights, "weights");
    if (values.size() != total + 1) {
        throw InvalidParameterError(
            "values: table must have one entry per weight sum 0..total");
    }
    if (values[0] != 0) {
        throw InvalidParameterError("values: the empty coalition must be worth 0");
    }
    return LinearGame{std::move(weights), std::move(values)};
}

void validate(const GameFamily& family) {
    std::visit(
        [](const auto& fam) {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, WeightedVoting>) {
                checked_total(fam.weights, "weights");
                if (fam.quota == 0) {
                    throw InvalidParameterError(
                        "quota: must be at least 1 so the empty coalition loses");
                }
            } else if constexpr (std::is_same_v<T, Bankruptcy>) {
                const std::uint64_t claims = checked_total(fam.liabilities, "liabilities");
                if (fam.assets > claims) {
                    throw InvalidParameterError(
                        "assets: must not exceed the total liabilities");
                }
            } else if constexpr (std::is_same_v<T, Liability>) {
                const std::uint64_t claims = checked_total(fam.liabilities, "liabilities");
                if (fam.assets >= claims) {
                    throw InvalidParameterError(
                        "assets: must be strictly below the total liabilities");
                }
            } else if constexpr (std::is_same_v<T, Airport>) {
                checked_total(fam.costs, "costs");
                if (std::any_of(fam.costs.begin(), fam.costs.end(),
                                [](std::uint64_t c) { return c == 0; })) {
                    throw InvalidParameterError("costs: must be positive");
                }
            } else {
                static_assert(std::is_same_v<T, ExplicitTable>);
                const std::uint64_t total = checked_total(fam.weights, "weights");
                if (fam.values.size() != total + 1) {
                    throw InvalidParameterError(
                        "values: table must have one entry per weight sum 0..total");
                }
                if (fam.values[0] != 0) {
                    throw InvalidParameterError(
                        "values: the empty coalition must be worth 0");
                }
                if (std::any_of(fam.values.begin(), fam.values.end(),
                                [](std::int64_t v) { return v < 0; })) {
                    throw InvalidParameterError("values: must be nonnegative");
                }
            }
        },
        family);
}

std::size_t player_count(const GameFamily& family) {
    return std::visit(
        [](const auto& fam) -> std::size_t {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, WeightedVoting>) {
                return fam.weights.size();
            } else if constexpr (std::is_same_v<T, Bankruptcy>) {
                return fam.liabilities.size();
            } else if constexpr (std::is_same_v<T, Liability>) {
                return fam.liabilities.size() + 1;  // creditors plus the firm
            } else if constexpr (std::is_same_v<T, Airport>) {
                return fam.costs.size();
            } else {
                return fam.weights.size();
            }
        },
        family);
}

std::string family_name(const GameFamily& family) {
    return std::visit(
        [](const auto& fam) -> std::string {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, WeightedVoting>) {
                return "weighted_voting";
            } else if constexpr (std::is_same_v<T, Bankruptcy>) {
                return "bankruptcy";
            } else if constexpr (std::is_same_v<T, Liability>) {
                return "liability";
            } else if constexpr (std::is_same_v<T, Airport>) {
                return "airport";
            } else {
                return "table";
            }
        },
        family);
}

bool has_linear_form(const GameFamily& family) {
    return !std::holds_alternative<Airport>(family);
}

std::int64_t coalition_value(const GameFamily& family, std::uint64_t members) {
    return std::visit(
        [members](const auto& fam) -> std::int64_t {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, WeightedVoting>) {
                return masked_sum(fam.weights, members) >= fam.quota ? 1 : 0;
            } else if constexpr (std::is_same_v<T, Bankruptcy>) {
                std::uint64_t outside = 0;
                for (std::size_t j = 0; j < fam.liabilities.size(); ++j) {
                    if (!(members >> j & 1)) {
                        outside += fam.liabilities[j];
                    }
                }
                return clamped_gain(fam.assets, outside);
            } else if constexpr (std::is_same_v<T, Liability>) {
                // Bit 0 is the firm; creditor j sits at bit j+1.
                std::uint64_t inside = 0;
                std::uint64_t outside = 0;
                for (std::size_t j = 0; j < fam.liabilities.size(); ++j) {
                    if (members >> (j + 1) & 1) {
                        inside += fam.liabilities[j];
                    } else {
                        outside += fam.liabilities[j];
                    }
                }
                if (members & 1) {
                    return static_cast<std::int64_t>(std::min(fam.assets, inside));
                }
                return clamped_gain(fam.assets, outside);
            } else if constexpr (std::is_same_v<T, Airport>) {
                std::uint64_t best = 0;
                for (std::size_t j = 0; j < fam.costs.size(); ++j) {
                    if (members >> j & 1) {
                        best = std::max(best, fam.costs[j]);
                    }
                }
                return static_cast<std::int64_t>(best);
            } else {
                return fam.values[masked_sum(fam.weights, members)];
            }
        },
        family);
}

std::int64_t grand_coalition_value(const GameFamily& family) {
    return std::visit(
        [](const auto& fam) -> std::int64_t {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, WeightedVoting>) {
                return checked_total(fam.weights, "weights") >= fam.quota ? 1 : 0;
            } else if constexpr (std::is_same_v<T, Bankruptcy>) {
                return static_cast<std::int64_t>(fam.assets);
            } else if constexpr (std::is_same_v<T, Liability>) {
                return static_cast<std::int64_t>(fam.assets);
            } else if constexpr (std::is_same_v<T, Airport>) {
                std::uint64_t best = 0;
                for (std::uint64_t c : fam.costs) {
                    best = std::max(best, c);
                }
                return static_cast<std::int64_t>(best);
            } else {
                return fam.values.back();
            }
        },
        family);
}

std::uint64_t state_bound(const GameFamily& family) {
    return std::visit(
        [](const auto& fam) -> std::uint64_t {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, WeightedVoting>) {
                return checked_total(fam.weights, "weights");
            } else if constexpr (std::is_same_v<T, Bankruptcy>) {
                return checked_total(fam.liabilities, "liabilities");
            } else if constexpr (std::is_same_v<T, Liability>) {
                // firm weight (claims + 1) plus the claims themselves
                return 2 * checked_total(fam.liabilities, "liabilities") + 1;
            } else if constexpr (std::is_same_v<T, Airport>) {
                std::uint64_t best = 0;
                for (std::uint64_t c : fam.costs) {
                    best = std::max(best, c);
                }
                return best;
            } else {
                return checked_total(fam.weights, "weights");
            }
        },
        family);
}

LinearGame to_linear(const GameFamily& family) {
    validate(family);
    return std::visit(
        [](const auto& fam) -> LinearGame {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, WeightedVoting>) {
                const std::uint64_t total = checked_total(fam.weights, "weights");
                std::vector<std::int64_t> values(total + 1);
                for (std::uint64_t k = 0; k <= total; ++k) {
                    values[k] = k >= fam.quota ? 1 : 0;
                }
                return LinearGame{fam.weights, std::move(values)};
            } else if constexpr (std::is_same_v<T, Bankruptcy>) {
                const std::uint64_t claims = checked_total(fam.liabilities, "liabilities");
                std::vector<std::int64_t> values(claims + 1);
                for (std::uint64_t k = 0; k <= claims; ++k) {
                    values[k] = clamped_gain(fam.assets, claims - k);
                }
                return LinearGame{fam.liabilities, std::move(values)};
            } else if constexpr (std::is_same_v<T, Liability>) {
                // The firm gets weight L = total claims + 1, so a weight sum
                // of L or more can only mean the firm is in the coalition.
                const std::uint64_t claims = checked_total(fam.liabilities, "liabilities");
                const std::uint64_t firm_weight = claims + 1;
                std::vector<std::uint64_t> weights;
                weights.reserve(fam.liabilities.size() + 1);
                weights.push_back(firm_weight);
                weights.insert(weights.end(), fam.liabilities.begin(),
                               fam.liabilities.end());
                std::vector<std::int64_t> values(firm_weight + claims + 1);
                for (std::uint64_t k = 0; k < values.size(); ++k) {
                    if (k >= firm_weight) {
                        values[k] = static_cast<std::int64_t>(
                            std::min<std::uint64_t>(fam.assets, k - firm_weight));
                    } else {
                        values[k] = clamped_gain(fam.assets, firm_weight - 1 - k);
                    }
                }
                return LinearGame{std::move(weights), std::move(values)};
            } else if constexpr (std::is_same_v<T, Airport>) {
                throw NotLinearError(
                    "airport games have no weight-sum representation; use the "
                    "generalized engine");
            } else {
                return make_linear_game(fam.weights, fam.values);
            }
        },
        family);
}

GeneralizedGame to_generalized(const GameFamily& family) {
    if (const auto* airport = std::get_if<Airport>(&family)) {
        validate(family);
        std::uint64_t bound = 0;
        for (std::uint64_t c : airport->costs) {
            bound = std::max(bound, c);
        }
        return GeneralizedGame{
            airport->costs,
            [](std::uint64_t s, std::uint64_t w) { return std::max(s, w); },
            0,
            [](std::uint64_t s) { return static_cast<std::int64_t>(s); },
            bound,
        };
    }
    LinearGame linear = to_linear(family);
    const std::uint64_t bound = linear.total_weight();
    auto table = std::make_shared<const std::vector<std::int64_t>>(
        std::move(linear.values));
    return GeneralizedGame{
        std::move(linear.weights),
        [](std::uint64_t s, std::uint64_t w) { return s + w; },
        0,
        [table](std::uint64_t s) { return (*table)[s]; },
        bound,
    };
}

}  // namespace linshap
