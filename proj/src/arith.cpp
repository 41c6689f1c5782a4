#include "paramodular/arith.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace paramodular::arith {

namespace {

using u128 = unsigned __int128;

std::uint64_t checked_narrow(u128 v) {
    if (v > std::numeric_limits<std::uint64_t>::max()) {
        throw std::overflow_error("arith: result exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(v);
}

std::uint64_t radical(const FactoredInteger& f) {
    std::uint64_t r = 1;
    for (const auto& pp : f.factors) r *= pp.prime;
    return r;
}

void require_bruteforce_range(std::uint64_t t, const char* what) {
    if (t == 0) throw std::invalid_argument(std::string(what) + ": t must be >= 1");
    if (t > kBruteforceLimit) {
        throw std::out_of_range(std::string(what) + ": t exceeds enumeration guard " +
                                std::to_string(kBruteforceLimit));
    }
}

}  // namespace

FactoredInteger factor(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factor: n must be positive");
    FactoredInteger out;
    out.value = n;
    for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        PrimePower pp{p, 0};
        while (n % p == 0) {
            n /= p;
            ++pp.multiplicity;
        }
        out.factors.push_back(pp);
    }
    if (n > 1) out.factors.push_back({n, 1});
    return out;
}

int kronecker(std::int64_t a, std::int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;

    int result = 1;
    std::uint64_t odd = 0;
    if (n < 0) {
        odd = static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(n);
        if (a < 0) result = -1;
    } else {
        odd = static_cast<std::uint64_t>(n);
    }

    unsigned twos = 0;
    while (odd % 2 == 0) {
        odd /= 2;
        ++twos;
    }
    if (twos > 0) {
        if (a % 2 == 0) return 0;
        const std::int64_t a8 = ((a % 8) + 8) % 8;
        if ((twos & 1U) && (a8 == 3 || a8 == 5)) result = -result;
    }
    if (odd == 1) return result;

    // Jacobi symbol for odd positive modulus
    const auto mod = static_cast<std::int64_t>(odd);
    std::int64_t r = a % mod;
    if (r < 0) r += mod;
    auto x = static_cast<std::uint64_t>(r);
    std::uint64_t y = odd;
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            if (y % 8 == 3 || y % 8 == 5) result = -result;
        }
        std::swap(x, y);
        if (x % 4 == 3 && y % 4 == 3) result = -result;
        x %= y;
    }
    return y == 1 ? result : 0;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("divisors: n must be positive");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d <= n / d; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::int64_t gcd_triple(std::int64_t n, std::int64_t l, std::int64_t m) {
    return std::gcd(std::gcd(n, l), m);
}

std::uint64_t euler_phi(std::uint64_t n) {
    const auto f = factor(n);
    std::uint64_t phi = n;
    for (const auto& pp : f.factors) phi = phi / pp.prime * (pp.prime - 1);
    return phi;
}

std::uint64_t coset_index(std::uint64_t t) {
    const auto f = factor(t);
    const u128 scale = t / radical(f);
    u128 v = scale * scale * scale;
    for (const auto& pp : f.factors) {
        const u128 p = pp.prime;
        v *= (p + 1) * (p * p + 1);
    }
    return checked_narrow(v);
}

std::uint64_t coset_index_bruteforce(std::uint64_t t) {
    require_bruteforce_range(t, "coset_index_bruteforce");
    std::uint64_t primitive = 0;
    for (std::uint64_t a = 0; a < t; ++a) {
        const std::uint64_t ga = std::gcd(a, t);
        for (std::uint64_t b = 0; b < t; ++b) {
            const std::uint64_t gb = std::gcd(ga, b);
            for (std::uint64_t c = 0; c < t; ++c) {
                const std::uint64_t gc = std::gcd(gb, c);
                if (gc == 1) {
                    primitive += t;
                    continue;
                }
                for (std::uint64_t d = 0; d < t; ++d) {
                    if (std::gcd(gc, d) == 1) ++primitive;
                }
            }
        }
    }
    const std::uint64_t phi = euler_phi(t);
    if (primitive % phi != 0) {
        throw std::logic_error("coset_index_bruteforce: unit action is not free");
    }
    return primitive / phi;
}

std::uint64_t diagonal_coset_count(std::uint64_t t) {
    const auto f = factor(t);
    u128 v = 2 * static_cast<u128>(t / radical(f));
    for (const auto& pp : f.factors) v *= pp.prime + 1;
    return checked_narrow(v);
}

std::uint64_t diagonal_coset_count_bruteforce(std::uint64_t t) {
    require_bruteforce_range(t, "diagonal_coset_count_bruteforce");
    // tuples (0,x,0,y) and (x,0,y,0) are counted by the same pair (x, y)
    std::uint64_t per_shape = 0;
    for (std::uint64_t x = 0; x < t; ++x) {
        const std::uint64_t gx = std::gcd(x, t);
        for (std::uint64_t y = 0; y < t; ++y) {
            if (std::gcd(gx, y) == 1) ++per_shape;
        }
    }
    const std::uint64_t phi = euler_phi(t);
    if (per_shape % phi != 0) {
        throw std::logic_error("diagonal_coset_count_bruteforce: unit action is not free");
    }
    return 2 * (per_shape / phi);
}

std::string WeightSolution::weight_string() const {
    if (weight_den == 1) return std::to_string(weight_num);
    return std::to_string(weight_num) + "/" + std::to_string(weight_den);
}

std::vector<WeightSolution> weight_equation_solutions(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("weight_equation_solutions: m must be >= 1");
    std::vector<WeightSolution> out;
    // k >= 1/2 and prod(1 + p^-2) >= 1 force t^2 <= 20m
    for (std::uint64_t t = 1; t * t <= 20 * m; ++t) {
        const std::uint64_t diagonal = (t == 1) ? 1 : diagonal_coset_count(t);
        const u128 num = static_cast<u128>(10) * m * diagonal;  // 2k * index
        const u128 index = coset_index(t);
        if (num % index != 0) continue;
        const auto twice_k = static_cast<std::int64_t>(num / index);
        WeightSolution s{t, twice_k, 2};
        if (twice_k % 2 == 0) s = {t, twice_k / 2, 1};
        out.push_back(s);
    }
    return out;
}

}  // namespace paramodular::arith
