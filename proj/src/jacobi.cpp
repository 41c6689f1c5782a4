#include "paramodular/jacobi.hpp"

#include <stdexcept>
#include <string>

namespace paramodular {

JacobiSeries phi2(Truncation trunc) {
    if (trunc.tq < 4) throw std::invalid_argument("phi2: requires tq >= 4");
    return eta(trunc) * theta_sum(trunc);
}

JacobiSeries phi1(Truncation trunc) {
    if (trunc.tq < 6) throw std::invalid_argument("phi1: requires tq >= 6");
    const auto e = eta(trunc);
    return e * e * e * theta_sum(trunc);
}

FTable::FTable(JacobiSeries series, std::int64_t max_n) : series_(std::move(series)), max_n_(max_n) {
    if (max_n < 0) throw std::invalid_argument("FTable: max_n must be >= 0");
    if (series_.truncation().tq < kQDenominator * max_n) {
        throw std::invalid_argument("FTable: series truncation shorter than max_n");
    }
    for (const auto& [e, c] : series_.terms()) {
        if (e.a % kQDenominator != 0 || e.b % kRDenominator != 0) {
            throw std::invalid_argument("FTable: term off the integral lattice " + to_string(e));
        }
        if (!is_integral(c) || !c.get_num().fits_slong_p()) {
            throw std::invalid_argument("FTable: non-integral or oversized entry at " + to_string(e));
        }
    }
}

std::int64_t FTable::value(std::int64_t n, std::int64_t l) const {
    if (n < 0 || n > max_n_) {
        throw std::out_of_range("FTable: n = " + std::to_string(n) + " outside [0, " +
                                std::to_string(max_n_) + "]");
    }
    const auto& terms = series_.terms();
    auto it = terms.find({kQDenominator * n, kRDenominator * l});
    return it == terms.end() ? 0 : it->second.get_num().get_si();
}

std::vector<std::pair<std::int64_t, std::int64_t>> FTable::row(std::int64_t n) const {
    if (n < 0 || n > max_n_) throw std::out_of_range("FTable::row: n outside table");
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    const auto& terms = series_.terms();
    const std::int64_t a = kQDenominator * n;
    for (auto it = terms.lower_bound({a, INT64_MIN}); it != terms.end() && it->first.a == a; ++it) {
        out.emplace_back(it->first.b / kRDenominator, it->second.get_num().get_si());
    }
    return out;
}

FTable FTable::with_entry(std::int64_t n, std::int64_t l, std::int64_t v) const {
    if (n < 0 || n > max_n_) throw std::out_of_range("FTable::with_entry: n outside table");
    JacobiSeries s = series_;
    const JacobiExponent e{kQDenominator * n, kRDenominator * l};
    s.add_term(e, Coeff(static_cast<long>(v)) - s.coefficient(e));
    return FTable(std::move(s), max_n_);
}

FTable f_table(std::int64_t max_n) {
    if (max_n < 0) throw std::invalid_argument("f_table: max_n must be >= 0");
    const Truncation t{kQDenominator * max_n, 0};
    const std::int64_t q = kQDenominator;
    const std::int64_t r = kRDenominator;

    // each factor is a binomial in r at fixed q-order, so every q-slice of
    // the product is a Laurent polynomial in r
    auto plus = [&](JacobiExponent e) {
        auto s = JacobiSeries::one(t);
        s.add_term(e, Coeff(1));
        return s;
    };
    auto prod = JacobiSeries::one(t);
    for (std::int64_t n = 1; q * (n - 1) <= t.tq; ++n) {
        prod *= plus({q * (n - 1), r});
        prod *= plus({q * n, -r});
        prod *= pow_binomial(JacobiExponent{q * (2 * n - 1), 2 * r}, 1, t);
        prod *= pow_binomial(JacobiExponent{q * (2 * n - 1), -2 * r}, 1, t);
    }
    prod *= prod;

    JacobiSeries series(t);
    for (const auto& [e, c] : prod.terms()) series.add_term({e.a, e.b - r}, c);
    for (const auto& [e, c] : series.terms()) {
        auto it = series.terms().find({e.a, -e.b});
        if (it == series.terms().end() || it->second != c) {
            throw std::logic_error("f_table: f(n, l) != f(n, -l) at " + to_string(e));
        }
    }
    return FTable(std::move(series), max_n);
}

bool f_verify_quotient(const FTable& table, Truncation trunc) {
    if (trunc.tq < 0) throw std::invalid_argument("f_verify_quotient: negative truncation");
    if (kQDenominator * table.max_n() < trunc.tq) {
        throw std::invalid_argument("f_verify_quotient: table exact only to q^" +
                                    std::to_string(table.max_n()) + ", need tq = " +
                                    std::to_string(trunc.tq));
    }
    const Truncation t{trunc.tq, 0};
    const auto theta = theta_terms(Truncation{std::max<std::int64_t>(trunc.tq, 3), 0}).truncated(t);
    const auto theta2z = substitute_z_multiple(theta, 2);
    const auto lhs = table.series().truncated(t) * theta * theta;
    const auto rhs = theta2z * theta2z;
    return lhs == rhs;
}

}  // namespace paramodular
