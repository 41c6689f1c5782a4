#pragma once

// Elementary exact number theory used by the coefficient formulas and by the
// coset counting for paramodular groups.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace paramodular::arith {

struct PrimePower {
    std::uint64_t prime = 0;
    unsigned multiplicity = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = prod prime^multiplicity, primes strictly increasing.
struct FactoredInteger {
    std::uint64_t value = 1;
    std::vector<PrimePower> factors;
};

/// Trial-division factorization. Throws std::invalid_argument for n == 0.
FactoredInteger factor(std::uint64_t n);

/// Generalized Kronecker symbol (a/n), defined for every integer pair.
/// (a/-1) is -1 for a < 0 and +1 otherwise; (a/0) is 1 iff |a| == 1.
int kronecker(std::int64_t a, std::int64_t n);

/// Positive divisors of n in ascending order. Throws std::invalid_argument for n <= 0.
std::vector<std::int64_t> divisors(std::int64_t n);

/// gcd of absolute values; gcd_triple(0, 0, 0) == 0.
std::int64_t gcd_triple(std::int64_t n, std::int64_t l, std::int64_t m);

std::uint64_t euler_phi(std::uint64_t n);

/// Index of Gamma_1 intersected with the conjugated paramodular group in
/// Gamma_1: t^3 prod_{p|t} (1 + 1/p)(1 + 1/p^2).
std::uint64_t coset_index(std::uint64_t t);

/// Number of unit classes of primitive 4-tuples mod t, by enumeration.
/// Throws std::out_of_range for t > kBruteforceLimit.
std::uint64_t coset_index_bruteforce(std::uint64_t t);

/// 2t prod_{p|t} (1 + 1/p): cosets whose last line is (0,*,0,*) or (*,0,*,0) mod t.
std::uint64_t diagonal_coset_count(std::uint64_t t);

/// Unit classes of primitive tuples of shape (0,*,0,*) plus those of shape
/// (*,0,*,0), each shape counted on its own (at t = 1 both shapes are the
/// zero tuple and it is counted twice, matching the closed formula).
std::uint64_t diagonal_coset_count_bruteforce(std::uint64_t t);

inline constexpr std::uint64_t kBruteforceLimit = 64;

/// Solution (t, k) of the weight equation with k = weight_num / weight_den in
/// lowest terms; weight_den is 1 or 2.
struct WeightSolution {
    std::uint64_t t = 0;
    std::int64_t weight_num = 0;
    std::int64_t weight_den = 1;
    std::string weight_string() const;
    friend bool operator==(const WeightSolution&, const WeightSolution&) = default;
};

/// All (t, k), k a positive multiple of 1/2, with
///   k * coset_index(t) = 5 * m * (number of distinct diagonal cosets),
/// i.e. the symmetrised form is the (m * cosets)-th power of the weight 5 form.
/// For t >= 2 this is k t^2 prod_{p|t}(1 + 1/p^2) = 10m; for t = 1 the two
/// diagonal patterns describe the same single coset, giving k = 5m.
/// Ascending in t.
std::vector<WeightSolution> weight_equation_solutions(std::uint64_t m);

}  // namespace paramodular::arith
