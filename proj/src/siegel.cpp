#include "paramodular/siegel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "paramodular/arith.hpp"
#include "paramodular/parallel.hpp"

namespace paramodular {

namespace {

void require_window(Truncation t, std::int64_t tq, std::int64_t ts, const char* what) {
    if (t.tq < tq || t.ts < ts) {
        throw std::invalid_argument(std::string(what) + ": requires tq >= " + std::to_string(tq) +
                                    " and ts >= " + std::to_string(ts));
    }
}

std::int64_t isqrt(std::int64_t v) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

template <class Body>
SiegelSeries collect_rows(Truncation trunc, const std::vector<std::int64_t>& rows, Body body) {
    std::vector<SiegelSeries> parts(rows.size(), SiegelSeries(trunc));
    parallel_for(rows.size(), [&](std::size_t i) { body(rows[i], parts[i]); });
    SiegelSeries out(trunc);
    for (const auto& p : parts) out += p;
    return out;
}

std::vector<std::int64_t> residues_upto(std::int64_t residue, std::int64_t modulus, std::int64_t bound) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = residue; n <= bound; n += modulus) out.push_back(n);
    return out;
}

}  // namespace

const std::array<FormDescriptor, 4>& form_table() {
    static const std::array<FormDescriptor, 4> table{{
        {FormName::Delta5, 1, 5, 1, 2, true},
        {FormName::Delta2, 2, 2, 1, 4, true},
        {FormName::Delta1, 3, 1, 1, 6, true},
        {FormName::DeltaHalf, 4, 1, 2, 8, false},
    }};
    return table;
}

const FormDescriptor& descriptor(FormName name) {
    for (const auto& d : form_table()) {
        if (d.name == name) return d;
    }
    throw std::invalid_argument("descriptor: unknown form");
}

std::string to_string(FormName name) {
    switch (name) {
        case FormName::Delta5: return "delta5";
        case FormName::Delta2: return "delta2";
        case FormName::Delta1: return "delta1";
        case FormName::DeltaHalf: return "delta-half";
    }
    return "?";
}

SiegelSeries delta1_lift(Truncation trunc) {
    require_window(trunc, 4, 12, "delta1_lift");
    const auto ms = residues_upto(1, 6, trunc.ts / 12);
    return collect_rows(trunc, residues_upto(1, 6, trunc.tq / 4), [&](std::int64_t n, SiegelSeries& part) {
        for (std::int64_t m : ms) {
            const std::int64_t bound = isqrt(4 * n * m / 3) + 1;
            for (std::int64_t l = -bound; l <= bound; ++l) {
                const std::int64_t disc = 4 * n * m - 3 * l * l;
                if (disc <= 0) continue;
                const std::int64_t M = isqrt(disc);
                if (M * M != disc) continue;
                // sum over a | (n, l, m) of the first Fourier-Jacobi coefficient at (l/a, M/a)
                std::int64_t coeff = 0;
                for (std::int64_t a : arith::divisors(arith::gcd_triple(n, l, m))) {
                    coeff += arith::kronecker(-4, l / a) * arith::kronecker(12, M / a);
                }
                if (coeff == 0) continue;
                part.add_term({4 * n, 2 * l, 12 * m}, Coeff(static_cast<long>(coeff)));
            }
        }
    });
}

std::int64_t delta1_product_table_size(Truncation trunc) {
    require_window(trunc, 4, 12, "delta1_product");
    return ((trunc.tq - 4) / kQDenominator) * ((trunc.ts - 12) / (3 * kSDenominator));
}

SiegelSeries delta1_product(Truncation trunc) {
    return delta1_product(trunc, f_table(delta1_product_table_size(trunc)));
}

SiegelSeries delta1_product(Truncation trunc, const FTable& table) {
    const std::int64_t need = delta1_product_table_size(trunc);
    if (table.max_n() < need) {
        throw std::invalid_argument("delta1_product: f-table exact to n = " + std::to_string(table.max_n()) +
                                    ", need " + std::to_string(need));
    }
    // product part lives below the prefactor q^(1/6) r^(1/2) s^(1/2) = (4, 2, 12)
    const Truncation inner{trunc.tq - 4, trunc.ts - 12};
    auto prod = SiegelSeries::one(inner);
    for (std::int64_t n = 0; kQDenominator * n <= inner.tq; ++n) {
        for (std::int64_t m = 0; 3 * kSDenominator * m <= inner.ts; ++m) {
            for (const auto& [l, f] : table.row(n * m)) {
                if (n == 0 && m == 0 && l >= 0) continue;
                const ExponentTriple base{kQDenominator * n, kRDenominator * l, 3 * kSDenominator * m};
                prod *= pow_binomial(base, f, inner);
            }
        }
    }
    SiegelSeries out(trunc);
    for (const auto& [e, c] : prod.terms()) out.add_term({e.a + 4, e.b + 2, e.c + 12}, c);
    return out;
}

SiegelSeries delta2_lift(Truncation trunc) {
    require_window(trunc, 6, 12, "delta2_lift");
    const auto ms = residues_upto(1, 4, trunc.ts / 12);
    return collect_rows(trunc, residues_upto(1, 4, trunc.tq / 6), [&](std::int64_t n, SiegelSeries& part) {
        for (std::int64_t m : ms) {
            const std::int64_t bound = isqrt(2 * n * m) + 1;
            for (std::int64_t l = -bound; l <= bound; ++l) {
                const std::int64_t disc = 2 * n * m - l * l;
                if (disc <= 0) continue;
                const std::int64_t N = isqrt(disc);
                if (N * N != disc) continue;
                const int outer = arith::kronecker(-4, N * l);
                if (outer == 0) continue;
                std::int64_t inner = 0;
                for (std::int64_t a : arith::divisors(arith::gcd_triple(n, l, m))) {
                    inner += arith::kronecker(-4, a);
                }
                part.add_term({6 * n, 2 * l, 12 * m}, Coeff(static_cast<long>(N * outer * inner)));
            }
        }
    });
}

SiegelSeries delta_half_sum(Truncation trunc) {
    require_window(trunc, 3, 12, "delta_half_sum");
    SiegelSeries out(trunc);
    const Coeff half(1, 2);
    for (std::int64_t n = -isqrt(trunc.tq / 3); 3 * n * n <= trunc.tq; ++n) {
        const int kn = arith::kronecker(-4, n);
        if (kn == 0) continue;
        for (std::int64_t m = -isqrt(trunc.ts / 12); 12 * m * m <= trunc.ts; ++m) {
            const int km = arith::kronecker(-4, m);
            if (km == 0) continue;
            out.add_term({3 * n * n, 2 * n * m, 12 * m * m}, half * (kn * km));
        }
    }
    if (!has_integral_coefficients(out)) {
        throw std::logic_error("delta_half_sum: half-integral coefficient survived");
    }
    return out;
}

namespace {

SiegelSeries theta_decomposition(Truncation trunc, bool signed_terms) {
    require_window(trunc, 3, 12, "delta_half_theta_decomp");
    const auto theta = theta_sum(Truncation{trunc.tq, 0});
    SiegelSeries out(trunc);
    for (std::int64_t m = 1; 12 * m * m <= trunc.ts; m += 2) {
        const Coeff sign = signed_terms ? arith::kronecker(-4, m) : 1;
        out += promote(substitute_z_multiple(theta, m), 12 * m * m, trunc) * sign;
    }
    return out;
}

}  // namespace

SiegelSeries delta_half_theta_decomp(Truncation trunc) { return theta_decomposition(trunc, true); }

SiegelSeries delta_half_theta_decomp_unsigned(Truncation trunc) {
    return theta_decomposition(trunc, false);
}

std::vector<ThetaCharacteristic> even_characteristics() {
    std::vector<ThetaCharacteristic> out;
    for (int mask = 0; mask < 16; ++mask) {
        ThetaCharacteristic ch{{mask >> 3 & 1, mask >> 2 & 1}, {mask >> 1 & 1, mask & 1}};
        if (ch.even()) out.push_back(ch);
    }
    return out;
}

SiegelSeries genus2_theta_constant(const ThetaCharacteristic& ch, Truncation trunc) {
    // u = x + alpha written as U / 2; term exp(pi i (u^t tau u + 2 u^t beta))
    // sits at (3 U1^2, U1 U2, 3 U2^2) with phase i^(U1 B1 + U2 B2)
    std::map<ExponentTriple, std::pair<std::int64_t, std::int64_t>> acc;
    auto range = [](std::int64_t bound, int parity) {
        std::vector<std::int64_t> us;
        const std::int64_t lim = isqrt(bound / 3) + 1;
        for (std::int64_t U = -lim; U <= lim; ++U) {
            if (((U % 2) + 2) % 2 == parity && 3 * U * U <= bound) us.push_back(U);
        }
        return us;
    };
    for (std::int64_t U1 : range(trunc.tq, ch.A[0])) {
        for (std::int64_t U2 : range(trunc.ts, ch.A[1])) {
            auto& [re, im] = acc[{3 * U1 * U1, U1 * U2, 3 * U2 * U2}];
            switch ((((U1 * ch.B[0] + U2 * ch.B[1]) % 4) + 4) % 4) {
                case 0: ++re; break;
                case 1: ++im; break;
                case 2: --re; break;
                case 3: --im; break;
            }
        }
    }
    SiegelSeries out(trunc);
    for (const auto& [e, z] : acc) {
        if (z.second != 0) {
            throw std::logic_error("genus2_theta_constant: imaginary coefficient at " + to_string(e));
        }
        out.add_term(e, Coeff(static_cast<long>(z.first)));
    }
    return out;
}

SiegelSeries delta5_theta_product(Truncation trunc) {
    require_window(trunc, 24, 24, "delta5_theta_product");
    const auto chars = even_characteristics();
    std::vector<SiegelSeries> thetas(chars.size());
    parallel_for(chars.size(), [&](std::size_t i) { thetas[i] = genus2_theta_constant(chars[i], trunc); });
    // factors with larger leading q-order first
    std::stable_sort(thetas.begin(), thetas.end(), [](const SiegelSeries& x, const SiegelSeries& y) {
        return x.terms().begin()->first.a > y.terms().begin()->first.a;
    });
    auto prod = SiegelSeries::one(trunc);
    for (const auto& th : thetas) prod *= th;
    return prod;
}

SiegelSeries delta1_cubed(Truncation trunc) {
    const auto d = delta1_lift(trunc);
    return d * d * d;
}

DiagonalMap restrict_diagonal(const SiegelSeries& x) {
    DiagonalMap out;
    for (const auto& [e, c] : x.terms()) out[{e.a, e.c}] += c;
    return out;
}

DiagonalMap diagonal_first_moment(const SiegelSeries& x) {
    DiagonalMap out;
    for (const auto& [e, c] : x.terms()) out[{e.a, e.c}] += c * e.b;
    return out;
}

Coeff hyperbolic_norm(const ExponentTriple& e) {
    // 4 (a/24)(c/24) - (b/4)^2 = (a c - 9 b^2) / 144
    Coeff n(mpz_class(e.a) * e.c - mpz_class(9) * e.b * e.b, 144);
    n.canonicalize();
    return n;
}

NormClass norm_classify(const SiegelSeries& x) {
    if (x.empty()) throw std::invalid_argument("norm_classify: zero series");
    NormClass out;
    bool first = true;
    for (const auto& [e, c] : x.terms()) {
        const Coeff n = hyperbolic_norm(e);
        if (first || n < out.min_norm) {
            out.min_norm = n;
            out.minimizers.clear();
        }
        if (first || n > out.max_norm) out.max_norm = n;
        if (n == out.min_norm) out.minimizers.push_back(e);
        first = false;
    }
    return out;
}

bool check_swap_symmetry(const SiegelSeries& x, std::int64_t lambda) {
    if (lambda < 1) throw std::invalid_argument("check_swap_symmetry: lambda must be >= 1");
    const Truncation w = x.truncation();
    for (const auto& [e, c] : x.terms()) {
        if (e.c % lambda != 0) {
            throw std::invalid_argument("check_swap_symmetry: c not divisible by lambda at " + to_string(e));
        }
        const ExponentTriple image{e.c / lambda, e.b, lambda * e.a};
        if (!image.within(w)) continue;
        if (x.coefficient(image) != c) return false;
    }
    return true;
}

bool check_r_antisymmetry(const SiegelSeries& x) {
    for (const auto& [e, c] : x.terms()) {
        if (x.coefficient({e.a, -e.b, e.c}) != -c) return false;
    }
    return true;
}

bool has_integral_coefficients(const SiegelSeries& x) {
    return std::all_of(x.terms().begin(), x.terms().end(),
                       [](const auto& kv) { return is_integral(kv.second); });
}

SiegelSeries build_form(FormName name, Truncation trunc) {
    switch (name) {
        case FormName::Delta5: return delta5_theta_product(trunc);
        case FormName::Delta2: return delta2_lift(trunc);
        case FormName::Delta1: return delta1_lift(trunc);
        case FormName::DeltaHalf: return delta_half_sum(trunc);
    }
    throw std::invalid_argument("build_form: unknown form");
}

}  // namespace paramodular
