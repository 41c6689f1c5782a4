#pragma once

// Serialized coefficient tables. JSON layout:
//   {"form":..., "route":..., "denominators":[24,4,24],
//    "truncation":{"tq":...,"ts":...},
//    "terms":[{"e":[a,b,c],"coeff":"p/q"}, ...]}
// Terms are in canonical series order ((a, c, b) for three variables).
// Coefficients are strings so no value ever passes through floating point.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "paramodular/jacobi.hpp"
#include "paramodular/series.hpp"

namespace paramodular {

struct TableRow {
    std::vector<std::int64_t> e;
    Coeff coeff;
    friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct CoefficientTable {
    std::string form;
    std::string route;
    std::vector<std::int64_t> denominators;
    std::vector<std::pair<std::string, std::int64_t>> truncation;
    std::vector<TableRow> rows;
    friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;
};

CoefficientTable make_table(const SiegelSeries& x, std::string form, std::string route);
CoefficientTable make_table(const JacobiSeries& x, std::string form, std::string route);
/// f-table rows are natural (n, l) pairs with denominators [1, 1].
CoefficientTable make_table(const FTable& table);

std::string to_json(const CoefficientTable& table);
std::string to_csv(const CoefficientTable& table);

/// Throws std::invalid_argument on malformed input.
CoefficientTable parse_json(std::string_view text);

/// Rebuilds a three-variable series; requires denominators [24, 4, 24].
SiegelSeries to_siegel_series(const CoefficientTable& table);

}  // namespace paramodular
