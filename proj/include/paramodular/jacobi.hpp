#pragma once

// Index-1/2 Jacobi forms built from eta and theta, and the exponent table
// f(n, l) of the infinite product for the weight-1 form.

#include <cstdint>
#include <utility>
#include <vector>

#include "paramodular/series.hpp"

namespace paramodular {

/// eta * theta, weight 1. Leading term +1 at (4, 2). Requires tq >= 4.
JacobiSeries phi2(Truncation trunc);

/// eta^3 * theta, weight 2. Leading term +1 at (6, 2). Requires tq >= 6.
JacobiSeries phi1(Truncation trunc);

/// Integer table f(n, l), stored as a JacobiSeries on the integral lattice
/// (a = 24 n, b = 4 l), exact for 0 <= n <= max_n.
class FTable {
public:
    FTable(JacobiSeries series, std::int64_t max_n);

    std::int64_t max_n() const { return max_n_; }
    const JacobiSeries& series() const { return series_; }

    /// f(n, l); throws std::out_of_range when n is outside [0, max_n].
    std::int64_t value(std::int64_t n, std::int64_t l) const;

    /// Nonzero (l, f(n, l)) pairs, ascending in l.
    std::vector<std::pair<std::int64_t, std::int64_t>> row(std::int64_t n) const;

    /// Copy with one entry overwritten.
    FTable with_entry(std::int64_t n, std::int64_t l, std::int64_t value) const;

private:
    JacobiSeries series_;
    std::int64_t max_n_ = 0;
};

/// f(n, l) from
///   r^-1 (prod_{n>=1} (1 + q^(n-1) r)(1 + q^n r^-1)(1 - q^(2n-1) r^2)(1 - q^(2n-1) r^-2))^2.
/// Throws std::logic_error if the result is not even in l.
FTable f_table(std::int64_t max_n);

/// Checks table * theta(tau, z)^2 == theta(tau, 2z)^2 inside the q-window
/// trunc.tq. Throws std::invalid_argument if the table is not exact that far.
bool f_verify_quotient(const FTable& table, Truncation trunc);

}  // namespace paramodular
