#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "linshap/errors.hpp"
#include "linshap/game.hpp"
#include "testgen.hpp"

using namespace linshap;

namespace {

const GameFamily kWorkedBankruptcy = Bankruptcy{{2, 3, 5, 7}, 9};

}  // namespace

TEST_CASE("bankruptcy example maps to weights and clamped table") {
    const LinearGame g = to_linear(kWorkedBankruptcy);
    CHECK(g.weights == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(g.total_weight() == 17);
    // f(k) = max(0, 9 - (17 - k))
    CHECK(g.value_at(0) == 0);
    CHECK(g.value_at(8) == 0);
    CHECK(g.value_at(9) == 1);
    CHECK(g.value_at(12) == 4);
    CHECK(g.value_at(17) == 9);
    CHECK(g.grand_value() == 9);
}

TEST_CASE("weighted voting maps to a step function") {
    const LinearGame g = to_linear(WeightedVoting{{5, 1, 1}, 5});
    CHECK(g.weights == std::vector<std::uint64_t>{5, 1, 1});
    for (std::uint64_t k = 0; k <= 7; ++k) {
        CHECK(g.value_at(k) == (k >= 5 ? 1 : 0));
    }
}

TEST_CASE("liability encoding reproduces the two-branch formula") {
    const GameFamily fam = Liability{{2, 3}, 4};
    const LinearGame g = to_linear(fam);
    // firm weight is total claims + 1
    CHECK(g.weights == std::vector<std::uint64_t>{6, 2, 3});
    for (std::uint64_t mask = 0; mask < 8; ++mask) {
        CAPTURE(mask);
        CHECK(testgen::linear_value(g, mask) == coalition_value(fam, mask));
    }
}

TEST_CASE("liability branch selection equals firm membership") {
    std::mt19937_64 rng(301);
    for (int trial = 0; trial < 40; ++trial) {
        const auto fam = testgen::random_family(
            rng, testgen::Kind::Liability, testgen::draw(rng, 2, 8), 9);
        const LinearGame g = to_linear(fam);
        const std::uint64_t firm_weight = g.weights[0];
        const std::size_t n = g.player_count();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            std::uint64_t total = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (mask >> j & 1) {
                    total += g.weights[j];
                }
            }
            CHECK((total >= firm_weight) == ((mask & 1) != 0));
        }
    }
}

TEST_CASE("airport has no weight-sum form") {
    CHECK_THROWS_AS(to_linear(Airport{{1, 5}}), NotLinearError);
    CHECK(!has_linear_form(Airport{{1, 5}}));
    CHECK(has_linear_form(kWorkedBankruptcy));
}

TEST_CASE("coalition values from the family formulas") {
    CHECK(coalition_value(kWorkedBankruptcy, 0b1111) == 9);
    CHECK(coalition_value(kWorkedBankruptcy, 0b1000) == 0);  // only player 4
    CHECK(coalition_value(kWorkedBankruptcy, 0) == 0);
    const GameFamily airport = Airport{{1, 5, 5, 7, 7, 10}};
    CHECK(coalition_value(airport, 0b000011) == 5);  // players 1,2
    CHECK(coalition_value(airport, 0) == 0);
    CHECK(grand_coalition_value(airport) == 10);
}

TEST_CASE("generalized form of the built-ins") {
    SUBCASE("airport uses a running maximum") {
        const GeneralizedGame g = to_generalized(Airport{{1, 5}});
        CHECK(g.update(0, 1) == 1);
        CHECK(g.update(1, 5) == 5);
        CHECK(g.update(5, 1) == 5);
        CHECK(g.state_bound == 5);
        CHECK(g.state_value(5) == 5);
        CHECK(g.state_value(g.empty_state) == 0);
    }
    SUBCASE("weight-sum families accumulate") {
        const GeneralizedGame g = to_generalized(kWorkedBankruptcy);
        CHECK(g.update(0, 2) == 2);
        CHECK(g.update(2, 3) == 5);
        CHECK(g.state_bound == 17);
        CHECK(g.state_value(17) == 9);
        CHECK(g.state_value(8) == 0);
    }
    SUBCASE("two voters") {
        const GeneralizedGame g = to_generalized(WeightedVoting{{1, 1}, 2});
        CHECK(g.state_bound == 2);
        CHECK(g.state_value(2) == 1);
        CHECK(g.state_value(1) == 0);
    }
}

TEST_CASE("both representations reproduce every coalition value") {
    std::mt19937_64 rng(302);
    for (const auto kind : testgen::kAllKinds) {
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t players = testgen::draw(rng, 1, 10);
            const auto fam = testgen::random_family(rng, kind, players, 7);
            const std::size_t n = player_count(fam);
            const GeneralizedGame gen = to_generalized(fam);
            const bool linear = has_linear_form(fam);
            const LinearGame lin = linear ? to_linear(fam) : LinearGame{{}, {0}};
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                const std::int64_t expected = coalition_value(fam, mask);
                CHECK(testgen::generalized_value(gen, mask) == expected);
                if (linear) {
                    CHECK(testgen::linear_value(lin, mask) == expected);
                }
            }
        }
    }
}

TEST_CASE("built-in families are monotone") {
    std::mt19937_64 rng(303);
    const testgen::Kind monotone[] = {testgen::Kind::Voting,
                                      testgen::Kind::Bankruptcy,
                                      testgen::Kind::Liability,
                                      testgen::Kind::Airport};
    for (const auto kind : monotone) {
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t players = testgen::draw(rng, 1, 8);
            const auto fam = testgen::random_family(rng, kind, players, 9);
            const std::size_t n = player_count(fam);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (!(mask >> j & 1)) {
                        CHECK(coalition_value(fam, mask) <=
                              coalition_value(fam, mask | std::uint64_t{1} << j));
                    }
                }
            }
        }
    }
}

TEST_CASE("the empty coalition is always worth zero") {
    std::mt19937_64 rng(304);
    for (const auto kind : testgen::kAllKinds) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto fam =
                testgen::random_family(rng, kind, testgen::draw(rng, 1, 8), 9);
            CHECK(coalition_value(fam, 0) == 0);
            if (has_linear_form(fam)) {
                CHECK(to_linear(fam).value_at(0) == 0);
            }
            const GeneralizedGame gen = to_generalized(fam);
            CHECK(gen.state_value(gen.empty_state) == 0);
        }
    }
}

TEST_CASE("family invariants are enforced") {
    CHECK_THROWS_WITH_AS(validate(Bankruptcy{{2, 3}, 6}),
                         "assets: must not exceed the total liabilities",
                         InvalidParameterError);
    CHECK_NOTHROW(validate(Bankruptcy{{2, 3}, 5}));
    CHECK_THROWS_WITH_AS(validate(Liability{{2, 3}, 5}),
                         "assets: must be strictly below the total liabilities",
                         InvalidParameterError);
    CHECK_THROWS_WITH_AS(validate(WeightedVoting{{1, 2}, 0}),
                         "quota: must be at least 1 so the empty coalition loses",
                         InvalidParameterError);
    CHECK_THROWS_WITH_AS(validate(Airport{{3, 0}}), "costs: must be positive",
                         InvalidParameterError);
    CHECK_THROWS_AS(validate(ExplicitTable{{1, 1}, {0, 1}}),
                    InvalidParameterError);
    CHECK_THROWS_AS(validate(ExplicitTable{{1, 1}, {1, 0, 0}}),
                    InvalidParameterError);
    CHECK_THROWS_AS(validate(ExplicitTable{{1, 1}, {0, -1, 0}}),
                    InvalidParameterError);
    CHECK_NOTHROW(validate(ExplicitTable{{1, 1}, {0, 1, 2}}));
}

TEST_CASE("zero weights are allowed") {
    CHECK_NOTHROW(validate(WeightedVoting{{0, 3, 0}, 2}));
    const LinearGame g = to_linear(WeightedVoting{{0, 3, 0}, 2});
    CHECK(g.total_weight() == 3);
    CHECK(coalition_value(WeightedVoting{{0, 3, 0}, 2}, 0b101) == 0);
    CHECK(coalition_value(WeightedVoting{{0, 3, 0}, 2}, 0b010) == 1);
}

TEST_CASE("make_linear_game checks the table shape") {
    CHECK_THROWS_AS(make_linear_game({1, 2}, {0, 1, 2}), InvalidParameterError);
    CHECK_THROWS_AS(make_linear_game({1, 2}, {5, 0, 0, 0}),
                    InvalidParameterError);
    // negative values are fine at the engine level (only the file-facing
    // table family restricts them)
    CHECK_NOTHROW(make_linear_game({1, 2}, {0, -3, 1, 2}));
}

TEST_CASE("grand coalition value matches the full-mask evaluation") {
    std::mt19937_64 rng(305);
    for (const auto kind : testgen::kAllKinds) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto fam =
                testgen::random_family(rng, kind, testgen::draw(rng, 1, 8), 9);
            const std::uint64_t full =
                (std::uint64_t{1} << player_count(fam)) - 1;
            CHECK(grand_coalition_value(fam) == coalition_value(fam, full));
        }
    }
}
