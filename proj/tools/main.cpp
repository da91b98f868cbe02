// linshap CLI: read a game description (JSON file, stdin, or the seeded
// random generator), compute exact Shapley values through the C API, and
// print them as reduced fractions plus rounded decimals.
//
// Exit codes: 0 success, 1 verification mismatch, 2 input error,
// 3 capacity limit, 4 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "linshap.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitInternal = 4;

struct CliError {
    int code;
    std::string message;
};

int exit_code_for(linshap_status status) {
    switch (status) {
        case LINSHAP_OK:
            return kExitOk;
        case LINSHAP_ERROR_CAPACITY:
            return kExitCapacity;
        case LINSHAP_ERROR_INVALID_ARGUMENT:
        case LINSHAP_ERROR_NOT_LINEAR:
        case LINSHAP_ERROR_TOO_LARGE:
            return kExitInput;
        default:
            return kExitInternal;
    }
}

void check(linshap_status status) {
    if (status != LINSHAP_OK) {
        throw CliError{exit_code_for(status),
                       std::string(linshap_status_name(status)) + ": " +
                           linshap_last_error()};
    }
}

using GamePtr = std::unique_ptr<linshap_game, decltype(&linshap_game_free)>;
using ResultPtr =
    std::unique_ptr<linshap_result, decltype(&linshap_result_free)>;
using RowPtr = std::unique_ptr<linshap_row, decltype(&linshap_row_free)>;

template <typename Fn>
std::string fetch_string(Fn&& fn) {
    const size_t len = fn(nullptr, 0);
    std::vector<char> buf(len + 1);
    fn(buf.data(), buf.size());
    return std::string(buf.data(), len);
}

std::string result_fraction(const linshap_result* r, size_t i) {
    return fetch_string([&](char* b, size_t c) {
        return linshap_result_fraction(r, i, b, c);
    });
}

std::string result_decimal(const linshap_result* r, size_t i, unsigned digits) {
    return fetch_string([&](char* b, size_t c) {
        return linshap_result_decimal(r, i, digits, b, c);
    });
}

std::string result_total(const linshap_result* r) {
    return fetch_string([&](char* b, size_t c) {
        return linshap_result_total_fraction(r, b, c);
    });
}

// ---- game description ---------------------------------------------------

struct GameSpec {
    std::string family;
    std::vector<std::int64_t> list;     // weights / liabilities / costs
    std::int64_t scalar = 0;            // quota / assets
    std::vector<std::int64_t> values;   // table family only
};

std::int64_t to_int(const json& node, const std::string& field) {
    if (!node.is_number_integer() ||
        (node.is_number_unsigned() &&
         node.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))) {
        throw CliError{kExitInput, field + ": expected a 64-bit integer"};
    }
    return node.get<std::int64_t>();
}

std::int64_t require_int(const json& doc, const std::string& field) {
    if (!doc.contains(field)) {
        throw CliError{kExitInput, field + ": missing required field"};
    }
    return to_int(doc.at(field), field);
}

std::vector<std::int64_t> require_int_list(const json& doc,
                                           const std::string& field) {
    if (!doc.contains(field)) {
        throw CliError{kExitInput, field + ": missing required field"};
    }
    const json& node = doc.at(field);
    if (!node.is_array()) {
        throw CliError{kExitInput, field + ": expected an array of integers"};
    }
    std::vector<std::int64_t> out;
    out.reserve(node.size());
    for (const json& item : node) {
        out.push_back(to_int(item, field));
    }
    return out;
}

GameSpec parse_spec(const json& doc) {
    if (!doc.is_object()) {
        throw CliError{kExitInput, "input: expected a JSON object"};
    }
    if (!doc.contains("family") || !doc.at("family").is_string()) {
        throw CliError{kExitInput, "family: missing or not a string"};
    }
    GameSpec spec;
    spec.family = doc.at("family").get<std::string>();
    if (spec.family == "weighted_voting") {
        spec.list = require_int_list(doc, "weights");
        spec.scalar = require_int(doc, "quota");
    } else if (spec.family == "bankruptcy" || spec.family == "liability") {
        spec.list = require_int_list(doc, "liabilities");
        spec.scalar = require_int(doc, "assets");
    } else if (spec.family == "airport") {
        spec.list = require_int_list(doc, "costs");
    } else if (spec.family == "table") {
        spec.list = require_int_list(doc, "weights");
        spec.values = require_int_list(doc, "values");
    } else {
        throw CliError{kExitInput,
                       "family: unknown value \"" + spec.family + "\""};
    }
    return spec;
}

json spec_to_json(const GameSpec& spec) {
    json doc;
    doc["family"] = spec.family;
    if (spec.family == "weighted_voting") {
        doc["weights"] = spec.list;
        doc["quota"] = spec.scalar;
    } else if (spec.family == "bankruptcy" || spec.family == "liability") {
        doc["liabilities"] = spec.list;
        doc["assets"] = spec.scalar;
    } else if (spec.family == "airport") {
        doc["costs"] = spec.list;
    } else {
        doc["weights"] = spec.list;
        doc["values"] = spec.values;
    }
    return doc;
}

GamePtr build_game(const GameSpec& spec) {
    linshap_game* game = nullptr;
    linshap_status status = LINSHAP_OK;
    if (spec.family == "weighted_voting") {
        status = linshap_game_weighted_voting(spec.list.data(), spec.list.size(),
                                              spec.scalar, &game);
    } else if (spec.family == "bankruptcy") {
        status = linshap_game_bankruptcy(spec.list.data(), spec.list.size(),
                                         spec.scalar, &game);
    } else if (spec.family == "liability") {
        status = linshap_game_liability(spec.list.data(), spec.list.size(),
                                        spec.scalar, &game);
    } else if (spec.family == "airport") {
        status = linshap_game_airport(spec.list.data(), spec.list.size(), &game);
    } else {
        status = linshap_game_table(spec.list.data(), spec.list.size(),
                                    spec.values.data(), spec.values.size(),
                                    &game);
    }
    check(status);
    return GamePtr(game, &linshap_game_free);
}

// ---- seeded random instances ---------------------------------------------

struct RandomRequest {
    std::string family;
    std::size_t players = 0;
    std::uint64_t max_weight = 0;
    std::uint64_t seed = 0;
};

RandomRequest parse_random(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        parts.push_back(item);
    }
    if (parts.size() != 4) {
        throw CliError{kExitInput,
                       "random: expected \"family,n,maxweight,seed\""};
    }
    RandomRequest req;
    req.family = parts[0];
    try {
        req.players = std::stoull(parts[1]);
        req.max_weight = std::stoull(parts[2]);
        req.seed = std::stoull(parts[3]);
    } catch (const std::exception&) {
        throw CliError{kExitInput, "random: n, maxweight, seed must be integers"};
    }
    return req;
}

// lo + rng() % span instead of uniform_int_distribution so the same seed
// generates the same instance on every platform.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
}

GameSpec random_spec(const RandomRequest& req) {
    std::mt19937_64 rng(req.seed);
    GameSpec spec;
    spec.family = req.family;
    auto draw_list = [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::int64_t> out(req.players);
        for (auto& v : out) {
            v = static_cast<std::int64_t>(draw(rng, lo, hi));
        }
        return out;
    };
    if (req.family == "weighted_voting") {
        spec.list = draw_list(0, req.max_weight);
        std::uint64_t total = 0;
        for (auto w : spec.list) {
            total += static_cast<std::uint64_t>(w);
        }
        spec.scalar = static_cast<std::int64_t>(draw(rng, 1, std::max<std::uint64_t>(total, 1)));
    } else if (req.family == "bankruptcy" || req.family == "liability") {
        spec.list = draw_list(0, req.max_weight);
        std::uint64_t total = 0;
        for (auto& l : spec.list) {
            total += static_cast<std::uint64_t>(l);
        }
        if (req.family == "liability") {
            if (req.players == 0 || req.max_weight == 0) {
                throw CliError{kExitInput,
                               "random: liability needs n >= 1 and maxweight >= 1"};
            }
            if (total == 0) {
                spec.list.back() = 1;  // assets must stay below total claims
                total = 1;
            }
            spec.scalar = static_cast<std::int64_t>(draw(rng, 0, total - 1));
        } else {
            spec.scalar = static_cast<std::int64_t>(draw(rng, 0, total));
        }
    } else if (req.family == "airport") {
        spec.list = draw_list(1, std::max<std::uint64_t>(req.max_weight, 1));
    } else if (req.family == "table") {
        spec.list = draw_list(0, req.max_weight);
        std::uint64_t total = 0;
        for (auto w : spec.list) {
            total += static_cast<std::uint64_t>(w);
        }
        spec.values.assign(total + 1, 0);
        for (std::uint64_t k = 1; k <= total; ++k) {
            spec.values[k] =
                static_cast<std::int64_t>(draw(rng, 0, 3 * req.max_weight + 1));
        }
    } else {
        throw CliError{kExitInput,
                       "random: unknown family \"" + req.family + "\""};
    }
    return spec;
}

// ---- reports --------------------------------------------------------------

// The liability family numbers the firm as player 0; every other family
// is reported 1-based.
std::size_t player_label(const GameSpec& spec, std::size_t index) {
    return spec.family == "liability" ? index : index + 1;
}

void print_vector_lines(std::ostream& os, const GameSpec& spec,
                        const linshap_result* result, unsigned digits,
                        std::size_t first_label_index) {
    for (std::size_t i = 0; i < linshap_result_count(result); ++i) {
        os << player_label(spec, first_label_index + i) << ' '
           << result_fraction(result, i) << ' '
           << result_decimal(result, i, digits) << '\n';
    }
}

json vector_json(const GameSpec& spec, const linshap_result* result,
                 unsigned digits, std::size_t first_label_index) {
    json players = json::array();
    for (std::size_t i = 0; i < linshap_result_count(result); ++i) {
        const std::string frac = result_fraction(result, i);
        const auto slash = frac.find('/');
        json entry;
        entry["player"] = player_label(spec, first_label_index + i);
        entry["num"] = frac.substr(0, slash);
        entry["den"] = frac.substr(slash + 1);
        entry["decimal"] = result_decimal(result, i, digits);
        players.push_back(entry);
    }
    return players;
}

json total_json(const linshap_result* result) {
    const std::string frac = result_total(result);
    const auto slash = frac.find('/');
    json total;
    total["num"] = frac.substr(0, slash);
    total["den"] = frac.substr(slash + 1);
    return total;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact Shapley values for weight-representable cooperative games"};
    app.get_formatter()->column_width(30);

    std::string input_path;
    app.add_option("input", input_path,
                   "JSON game file, or \"-\" for standard input");
    int player = 0;
    auto* player_opt =
        app.add_option("--player", player, "Single player to evaluate (1-based)");
    bool verify = false;
    app.add_flag("--verify", verify,
                 "Cross-check the engine against the brute-force oracle");
    bool base_polys = false;
    app.add_flag("--base-polys", base_polys,
                 "Dump the full-game base polynomials instead of values");
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable JSON output");
    unsigned precision = 6;
    app.add_option("--precision", precision, "Decimal digits (default 6)");
    unsigned threads = 1;
    app.add_option("--threads", threads, "Worker threads for the engine");
    std::string random_desc;
    app.add_option("--random", random_desc,
                   "Generate an instance: \"family,n,maxweight,seed\"");
    std::uint64_t cell_limit = 0;
    auto* limit_opt = app.add_option("--limit", cell_limit,
                                     "Work budget in coefficient cells");

    CLI11_PARSE(app, argc, argv);

    try {
        if ((verify && base_polys) || (verify && *player_opt) ||
            (base_polys && *player_opt)) {
            throw CliError{kExitInput,
                           "flags --verify, --base-polys and --player are "
                           "mutually exclusive"};
        }

        GameSpec spec;
        std::uint64_t seed = 0;
        const bool randomized = !random_desc.empty();
        if (randomized) {
            const RandomRequest req = parse_random(random_desc);
            seed = req.seed;
            spec = random_spec(req);
        } else {
            if (input_path.empty()) {
                throw CliError{kExitInput,
                               "input: provide a JSON file, \"-\", or --random"};
            }
            json doc;
            try {
                if (input_path == "-") {
                    doc = json::parse(std::cin);
                } else {
                    std::ifstream file(input_path);
                    if (!file) {
                        throw CliError{kExitInput,
                                       "input: cannot open " + input_path};
                    }
                    doc = json::parse(file);
                }
            } catch (const json::parse_error& e) {
                throw CliError{kExitInput, std::string("input: ") + e.what()};
            }
            spec = parse_spec(doc);
        }

        GamePtr game = build_game(spec);
        if (*limit_opt) {
            linshap_game_set_cell_limit(game.get(), cell_limit);
        }
        linshap_game_set_threads(game.get(), threads);

        json out;  // filled only in --json mode
        if (randomized) {
            out["seed"] = seed;
            out["game"] = spec_to_json(spec);
            if (!as_json) {
                std::cout << "# seed " << seed << '\n'
                          << "# game " << spec_to_json(spec).dump() << '\n';
            }
        }

        if (base_polys) {
            linshap_row* raw = nullptr;
            check(linshap_base_polynomials(game.get(), &raw));
            RowPtr row(raw, &linshap_row_free);
            json dump = json::array();
            for (std::size_t e = 0; e < linshap_row_entry_count(row.get()); ++e) {
                const std::uint64_t key = linshap_row_key(row.get(), e);
                const std::size_t coeffs =
                    linshap_row_coefficient_count(row.get(), e);
                if (as_json) {
                    json entry;
                    entry["k"] = key;
                    json list = json::array();
                    for (std::size_t p = 0; p < coeffs; ++p) {
                        list.push_back(fetch_string([&](char* b, size_t c) {
                            return linshap_row_coefficient(row.get(), e, p, b, c);
                        }));
                    }
                    entry["coefficients"] = list;
                    dump.push_back(entry);
                } else {
                    std::cout << "k=" << key << ": [";
                    for (std::size_t p = 0; p < coeffs; ++p) {
                        if (p > 0) {
                            std::cout << ',';
                        }
                        std::cout << fetch_string([&](char* b, size_t c) {
                            return linshap_row_coefficient(row.get(), e, p, b, c);
                        });
                    }
                    std::cout << "]\n";
                }
            }
            if (as_json) {
                out["base_polynomials"] = dump;
                std::cout << out.dump(2) << '\n';
            }
            return kExitOk;
        }

        if (verify) {
            linshap_result* raw_engine = nullptr;
            check(linshap_shapley_all(game.get(), &raw_engine));
            ResultPtr engine(raw_engine, &linshap_result_free);
            linshap_result* raw_oracle = nullptr;
            const linshap_status oracle_status =
                linshap_oracle_subset_form(game.get(), &raw_oracle);
            if (oracle_status == LINSHAP_ERROR_TOO_LARGE) {
                throw CliError{kExitInput, std::string("oracle infeasible: ") +
                                               linshap_last_error()};
            }
            check(oracle_status);
            ResultPtr oracle(raw_oracle, &linshap_result_free);

            const bool match =
                linshap_result_equal(engine.get(), oracle.get()) == 1;
            if (as_json) {
                out["match"] = match;
                out["engine"] = vector_json(spec, engine.get(), precision, 0);
                out["oracle"] = vector_json(spec, oracle.get(), precision, 0);
                std::cout << out.dump(2) << '\n';
            } else if (match) {
                std::cout << "OK\n";
                print_vector_lines(std::cout, spec, engine.get(), precision, 0);
            } else {
                std::cout << "MISMATCH\nengine:\n";
                print_vector_lines(std::cout, spec, engine.get(), precision, 0);
                std::cout << "oracle:\n";
                print_vector_lines(std::cout, spec, oracle.get(), precision, 0);
            }
            return match ? kExitOk : kExitMismatch;
        }

        if (*player_opt) {
            const std::size_t n = linshap_game_player_count(game.get());
            if (player < 1 || static_cast<std::size_t>(player) > n) {
                throw CliError{kExitInput,
                               "player: must be between 1 and " +
                                   std::to_string(n)};
            }
            const std::size_t index = static_cast<std::size_t>(player) - 1;
            linshap_result* raw = nullptr;
            check(linshap_shapley_single(game.get(), index, &raw));
            ResultPtr result(raw, &linshap_result_free);
            if (as_json) {
                out["players"] = vector_json(spec, result.get(), precision, index);
                std::cout << out.dump(2) << '\n';
            } else {
                print_vector_lines(std::cout, spec, result.get(), precision,
                                   index);
            }
            return kExitOk;
        }

        linshap_result* raw = nullptr;
        check(linshap_shapley_all(game.get(), &raw));
        ResultPtr result(raw, &linshap_result_free);
        const std::int64_t grand = linshap_game_grand_value(game.get());
        if (as_json) {
            out["family"] = spec.family;
            out["players"] = vector_json(spec, result.get(), precision, 0);
            out["total"] = total_json(result.get());
            out["grand_value"] = std::to_string(grand);
            std::cout << out.dump(2) << '\n';
        } else {
            print_vector_lines(std::cout, spec, result.get(), precision, 0);
            std::cout << "total " << result_total(result.get()) << " v(N)="
                      << grand << '\n';
        }
        return kExitOk;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
}
