#pragma once

// Truncated Fourier expansions of the four paramodular forms vanishing
// exactly to order one along the diagonal tau2 = 0, and the coefficient-level
// checks run on them.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paramodular/jacobi.hpp"
#include "paramodular/series.hpp"

namespace paramodular {

enum class FormName { Delta5, Delta2, Delta1, DeltaHalf };

struct FormDescriptor {
    FormName name;
    std::int64_t polarization;  // t
    std::int64_t weight_num;
    std::int64_t weight_den;
    std::int64_t character_order;
    bool is_cusp;
};

/// The four forms, in the order Delta5, Delta2, Delta1, DeltaHalf.
const std::array<FormDescriptor, 4>& form_table();
const FormDescriptor& descriptor(FormName name);
std::string to_string(FormName name);

/// Weight 1 form for the (1,3) paramodular group as the lift of eta * theta:
/// the coefficient at (4n, 2l, 12m), n, m = 1 mod 6, is
///   sum_{a | (n,l,m)} (-4/(l/a)) (12/(M/a)) = (-4/l) (12/M) sum_{a | (n,l,m)} (-3/a)
/// where 4nm - 3l^2 = M^2, M >= 1. The character (6/a) in place of (-3/a)
/// disagrees with the product expansion as soon as (n, l, m) share a factor
/// like 7 or 13. Requires tq >= 4, ts >= 12.
SiegelSeries delta1_lift(Truncation trunc);

/// Same form as q^(1/6) r^(1/2) s^(1/2) prod (1 - q^n r^l s^(3m))^f(nm, l)
/// over n, m >= 0 and l, with l < 0 when n = m = 0.
SiegelSeries delta1_product(Truncation trunc);
/// As above with a caller-supplied exponent table (must reach the needed n).
SiegelSeries delta1_product(Truncation trunc, const FTable& table);
/// Largest f(n, .) row delta1_product consumes at this truncation.
std::int64_t delta1_product_table_size(Truncation trunc);

/// Weight 2 form for the (1,2) paramodular group: coefficient at
/// (6n, 2l, 12m), n, m = 1 mod 4, is N (-4/(N l)) sum_{a | (n,l,m)} (-4/a)
/// where 2nm - l^2 = N^2. Requires tq >= 6, ts >= 12.
SiegelSeries delta2_lift(Truncation trunc);

/// Weight 1/2 theta constant as the double sum
/// (1/2) sum_{n,m} (-4/n)(-4/m) at (3n^2, 2nm, 12m^2). Requires tq >= 3, ts >= 12.
SiegelSeries delta_half_sum(Truncation trunc);
/// sum_{m>0} (-4/m) theta(tau1, m tau2) s^(m^2/2), same form.
SiegelSeries delta_half_theta_decomp(Truncation trunc);
/// Test hook: the decomposition with the (-4/m) sign dropped.
SiegelSeries delta_half_theta_decomp_unsigned(Truncation trunc);

struct ThetaCharacteristic {
    // twice the characteristic: alpha = A / 2, beta = B / 2
    std::array<int, 2> A;
    std::array<int, 2> B;
    bool even() const { return (A[0] * B[0] + A[1] * B[1]) % 2 == 0; }
};

/// The ten even characteristics in {0, 1/2}^4.
std::vector<ThetaCharacteristic> even_characteristics();

/// Genus-2 theta constant with characteristic, accumulated over the Gaussian
/// integers. Throws std::logic_error if an imaginary part survives.
SiegelSeries genus2_theta_constant(const ThetaCharacteristic& ch, Truncation trunc);

/// Product of the ten even genus-2 theta constants (weight 5 form, up to an
/// unfixed scalar). Requires tq >= 24, ts >= 24.
SiegelSeries delta5_theta_product(Truncation trunc);

/// delta1_lift cubed inside the same window.
SiegelSeries delta1_cubed(Truncation trunc);

using DiagonalMap = std::map<std::pair<std::int64_t, std::int64_t>, Coeff>;

/// Restriction to tau2 = 0: sum_b coeff(a, b, c) for every (a, c) slice present.
DiagonalMap restrict_diagonal(const SiegelSeries& x);

/// sum_b b coeff(a, b, c) per (a, c) slice: proportional to the first tau2-derivative on the diagonal.
DiagonalMap diagonal_first_moment(const SiegelSeries& x);

/// Hyperbolic norm 4 (a/24)(c/24) - (b/4)^2.
Coeff hyperbolic_norm(const ExponentTriple& e);

struct NormClass {
    Coeff min_norm;
    Coeff max_norm;
    std::vector<ExponentTriple> minimizers;
};

/// Throws std::invalid_argument for the zero series.
NormClass norm_classify(const SiegelSeries& x);

/// coeff(a, b, c) == coeff(c / lambda, b, lambda a) on every term whose image
/// lies in the window. Throws std::invalid_argument if some term has c not
/// divisible by lambda.
bool check_swap_symmetry(const SiegelSeries& x, std::int64_t lambda);

/// coeff(a, b, c) == -coeff(a, -b, c) for every term.
bool check_r_antisymmetry(const SiegelSeries& x);

/// True iff every coefficient is an integer.
bool has_integral_coefficients(const SiegelSeries& x);

/// Default construction route for each form.
SiegelSeries build_form(FormName name, Truncation trunc);

}  // namespace paramodular
