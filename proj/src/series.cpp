#include "paramodular/series.hpp"

#include "paramodular/arith.hpp"

namespace paramodular {

std::string to_string(const JacobiExponent& e) {
    return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
}

std::string to_string(const ExponentTriple& e) {
    return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + "," + std::to_string(e.c) + ")";
}

JacobiSeries eta(Truncation trunc) {
    if (trunc.tq < 1) throw std::invalid_argument("eta: requires tq >= 1");
    const Truncation inner{trunc.tq - 1, 0};
    auto prod = JacobiSeries::one(inner);
    for (std::int64_t n = 1; kQDenominator * n <= inner.tq; ++n) {
        prod *= pow_binomial(JacobiExponent{kQDenominator * n, 0}, 1, inner);
    }
    JacobiSeries out(Truncation{trunc.tq, 0});
    for (const auto& [e, c] : prod.terms()) out.add_term({e.a + 1, e.b}, c);
    return out;
}

JacobiSeries theta_terms(Truncation trunc) {
    JacobiSeries out(Truncation{trunc.tq, 0});
    for (std::int64_t n = 1; 3 * n * n <= trunc.tq; n += 2) {
        out.add_term({3 * n * n, 2 * n}, Coeff(arith::kronecker(-4, n)));
        out.add_term({3 * n * n, -2 * n}, Coeff(arith::kronecker(-4, -n)));
    }
    return out;
}

JacobiSeries theta_sum(Truncation trunc) {
    if (trunc.tq < 3) throw std::invalid_argument("theta_sum: requires tq >= 3");
    return theta_terms(trunc);
}

JacobiSeries theta_product(Truncation trunc) {
    if (trunc.tq < 3) throw std::invalid_argument("theta_product: requires tq >= 3");
    const Truncation inner{trunc.tq - 3, 0};
    auto prod = JacobiSeries::one(inner);
    for (std::int64_t n = 1; kQDenominator * n <= inner.tq; ++n) {
        const std::int64_t a = kQDenominator * n;
        prod *= pow_binomial(JacobiExponent{a, 0}, 1, inner);
        prod *= pow_binomial(JacobiExponent{a, kRDenominator}, 1, inner);
        prod *= pow_binomial(JacobiExponent{a, -kRDenominator}, 1, inner);
    }
    JacobiSeries out(Truncation{trunc.tq, 0});
    for (const auto& [e, c] : prod.terms()) {
        out.add_term({e.a + 3, e.b + 2}, c);
        out.add_term({e.a + 3, e.b - 2}, -c);
    }
    return out;
}

JacobiSeries substitute_z_multiple(const JacobiSeries& x, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("substitute_z_multiple: k must be >= 1");
    JacobiSeries out(x.truncation());
    for (const auto& [e, c] : x.terms()) out.add_term({e.a, k * e.b}, c);
    return out;
}

SiegelSeries promote(const JacobiSeries& x, std::int64_t c0, Truncation trunc) {
    SiegelSeries out(Truncation{std::min(trunc.tq, x.truncation().tq), trunc.ts});
    for (const auto& [e, c] : x.terms()) out.add_term({e.a, e.b, c0}, c);
    return out;
}

}  // namespace paramodular
