#pragma once

// Frozen DP rows for the worked four-player bankruptcy instance
// (claims 2,3,5,7 against assets 9) and the six-player airport instance
// (costs 1,5,5,7,7,10). Coefficients are listed lowest power first.

#include <cstdint>
#include <utility>
#include <vector>

#include "linshap/engine.hpp"
#include "linshap/poly.hpp"

namespace fixtures {

using RowSpec = std::vector<std::pair<std::uint64_t, std::vector<long>>>;

inline linshap::DpRow make_row(const RowSpec& spec, unsigned players) {
    linshap::DpRow row;
    row.players = players;
    for (const auto& [key, coeffs] : spec) {
        std::vector<linshap::BigInt> c(coeffs.begin(), coeffs.end());
        row.entries.emplace(key, linshap::Poly(std::move(c)));
    }
    return row;
}

// Forward rows over the claim weights 2, then 3, then 5 (the matrix used
// for the fourth player's value).
inline const RowSpec kBankruptcyRow0 = {{0, {1}}};
inline const RowSpec kBankruptcyRow1 = {{0, {1, -1}}, {2, {0, 1}}};
inline const RowSpec kBankruptcyRow2 = {
    {0, {1, -2, 1}}, {2, {0, 1, -1}}, {3, {0, 1, -1}}, {5, {0, 0, 1}}};
inline const RowSpec kBankruptcyRow3 = {
    {0, {1, -3, 3, -1}}, {2, {0, 1, -2, 1}}, {3, {0, 1, -2, 1}},
    {5, {0, 1, -1}},     {7, {0, 0, 1, -1}}, {8, {0, 0, 1, -1}},
    {10, {0, 0, 0, 1}}};

// The base row over all four claims.
inline const RowSpec kBankruptcyBaseRow = {
    {0, {1, -4, 6, -4, 1}},  {2, {0, 1, -3, 3, -1}}, {3, {0, 1, -3, 3, -1}},
    {5, {0, 1, -2, 1}},      {7, {0, 1, -2, 1}},     {8, {0, 0, 1, -2, 1}},
    {9, {0, 0, 1, -2, 1}},   {10, {0, 0, 1, -1}},    {12, {0, 0, 1, -1}},
    {14, {0, 0, 0, 1, -1}},  {15, {0, 0, 0, 1, -1}}, {17, {0, 0, 0, 0, 1}}};

// The four exclusion rows recovered from the base row.
inline const RowSpec kBankruptcyExclude2 = {
    {0, {1, -3, 3, -1}}, {3, {0, 1, -2, 1}},  {5, {0, 1, -2, 1}},
    {7, {0, 1, -2, 1}},  {8, {0, 0, 1, -1}},  {10, {0, 0, 1, -1}},
    {12, {0, 0, 1, -1}}, {15, {0, 0, 0, 1}}};
inline const RowSpec kBankruptcyExclude3 = {
    {0, {1, -3, 3, -1}}, {2, {0, 1, -2, 1}},  {5, {0, 1, -2, 1}},
    {7, {0, 1, -1}},     {9, {0, 0, 1, -1}},  {12, {0, 0, 1, -1}},
    {14, {0, 0, 0, 1}}};
inline const RowSpec kBankruptcyExclude5 = {
    {0, {1, -3, 3, -1}}, {2, {0, 1, -2, 1}},  {3, {0, 1, -2, 1}},
    {5, {0, 0, 1, -1}},  {7, {0, 1, -2, 1}},  {9, {0, 0, 1, -1}},
    {10, {0, 0, 1, -1}}, {12, {0, 0, 0, 1}}};
inline const RowSpec kBankruptcyExclude7 = kBankruptcyRow3;

// Airport instance: costs 1,5,5,7,7,10; player 5 (0-based index 4)
// excluded; remaining costs 1,5,5,7,10 in ascending order.
inline const RowSpec kAirportSteps[] = {
    {{0, {1}}},
    {{0, {1, -1}}, {1, {0, 1}}},
    {{0, {1, -2, 1}}, {1, {0, 1, -1}}, {5, {0, 1}}},
    {{0, {1, -3, 3, -1}}, {1, {0, 1, -2, 1}}, {5, {0, 2, -1}}},
    {{0, {1, -4, 6, -4, 1}},
     {1, {0, 1, -3, 3, -1}},
     {5, {0, 2, -3, 1}},
     {7, {0, 1}}},
    {{0, {1, -5, 10, -10, 5, -1}},
     {1, {0, 1, -4, 6, -4, 1}},
     {5, {0, 2, -5, 4, -1}},
     {7, {0, 1, -1}},
     {10, {0, 1}}},
};
inline const RowSpec& kAirportExclusionRow = kAirportSteps[5];

}  // namespace fixtures
