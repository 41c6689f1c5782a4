#pragma once

// Exact sparse truncated Laurent series over the fixed exponent lattice
// (1/24, 1/4, 1/24) for (tau1, tau2, tau3). A term with scaled exponent
// (a, b, c) stands for exp(2 pi i (a tau1 / 24 + b tau2 / 4 + c tau3 / 24)),
// so q = (24, 0, 0), r = (0, 4, 0) and s = (0, 0, 24).
//
// Series are truncated in the q direction (a <= tq) and, for three-variable
// series, in the s direction (c <= ts). The r direction is never truncated.
// Stored a and c are never negative, which is what makes every truncated
// product exact inside the truncation window.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "paramodular/parallel.hpp"

namespace paramodular {

using Coeff = mpq_class;

inline constexpr std::int64_t kQDenominator = 24;
inline constexpr std::int64_t kRDenominator = 4;
inline constexpr std::int64_t kSDenominator = 24;

inline bool is_integral(const Coeff& c) { return c.get_den() == 1; }

/// Canonical text form: decimal integer or "p/q" in lowest terms.
inline std::string coeff_to_string(const Coeff& c) { return c.get_str(); }

struct Truncation {
    std::int64_t tq = 0;  // bound on scaled q-exponent a
    std::int64_t ts = 0;  // bound on scaled s-exponent c (three-variable series only)
    friend bool operator==(const Truncation&, const Truncation&) = default;
};

struct JacobiExponent {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend auto operator<=>(const JacobiExponent&, const JacobiExponent&) = default;
    friend JacobiExponent operator+(const JacobiExponent& x, const JacobiExponent& y) {
        return {x.a + y.a, x.b + y.b};
    }
    JacobiExponent scaled(std::int64_t k) const { return {a * k, b * k}; }
    bool within(const Truncation& t) const { return a <= t.tq; }
    bool admissible() const { return a >= 0; }
    bool zero_order() const { return a == 0; }
    bool exceeds_q(const Truncation& t) const { return a > t.tq; }
    static Truncation meet(const Truncation& x, const Truncation& y) {
        return {std::min(x.tq, y.tq), std::min(x.ts, y.ts)};
    }
};

/// Scaled Fourier exponent of a genus-2 form; ordered lexicographically by (a, c, b).
struct ExponentTriple {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    friend bool operator==(const ExponentTriple&, const ExponentTriple&) = default;
    friend std::strong_ordering operator<=>(const ExponentTriple& x, const ExponentTriple& y) {
        if (auto o = x.a <=> y.a; o != 0) return o;
        if (auto o = x.c <=> y.c; o != 0) return o;
        return x.b <=> y.b;
    }
    friend ExponentTriple operator+(const ExponentTriple& x, const ExponentTriple& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c};
    }
    ExponentTriple scaled(std::int64_t k) const { return {a * k, b * k, c * k}; }
    bool within(const Truncation& t) const { return a <= t.tq && c <= t.ts; }
    bool admissible() const { return a >= 0 && c >= 0; }
    bool zero_order() const { return a == 0 && c == 0; }
    bool exceeds_q(const Truncation& t) const { return a > t.tq; }
    static Truncation meet(const Truncation& x, const Truncation& y) {
        return {std::min(x.tq, y.tq), std::min(x.ts, y.ts)};
    }
};

std::string to_string(const JacobiExponent& e);
std::string to_string(const ExponentTriple& e);

template <class Exponent>
class TruncatedSeries {
public:
    using exponent_type = Exponent;
    using Terms = std::map<Exponent, Coeff>;

    TruncatedSeries() = default;

    explicit TruncatedSeries(Truncation trunc) : trunc_(trunc) {
        if (trunc.tq < 0 || trunc.ts < 0) {
            throw std::invalid_argument("TruncatedSeries: negative truncation bound");
        }
    }

    static TruncatedSeries one(Truncation trunc) { return monomial(trunc, Exponent{}, Coeff(1)); }

    static TruncatedSeries monomial(Truncation trunc, const Exponent& e, const Coeff& c) {
        TruncatedSeries s(trunc);
        s.add_term(e, c);
        return s;
    }

    const Truncation& truncation() const { return trunc_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// Stored coefficient or zero. Throws std::out_of_range outside the window,
    /// where the series carries no information.
    Coeff coefficient(const Exponent& e) const {
        if (!e.within(trunc_) || !e.admissible()) {
            throw std::out_of_range("coefficient query outside truncation window: " + to_string(e));
        }
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    std::vector<std::pair<Exponent, Coeff>> support() const {
        return {terms_.begin(), terms_.end()};
    }

    /// Accumulates c at e. Terms outside the window are dropped. `c` need not
    /// be in lowest terms.
    void add_term(const Exponent& e, const Coeff& c) {
        if (!e.admissible()) {
            throw std::domain_error("negative q- or s-exponent " + to_string(e));
        }
        if (!e.within(trunc_) || c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (inserted) {
            it->second.canonicalize();
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Restriction to a window no larger than the current one.
    TruncatedSeries truncated(Truncation t) const {
        if (t.tq > trunc_.tq || t.ts > trunc_.ts) {
            throw std::invalid_argument("truncated: cannot widen a truncation window");
        }
        TruncatedSeries out(t);
        for (auto it = terms_.begin(); it != terms_.end() && !it->first.exceeds_q(t); ++it) {
            if (it->first.within(t)) out.terms_.emplace_hint(out.terms_.end(), *it);
        }
        return out;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& y) {
        const Truncation t = Exponent::meet(trunc_, y.trunc_);
        if (t != trunc_) *this = truncated(t);
        for (const auto& [e, c] : y.terms_) add_term(e, c);
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& y) {
        const Truncation t = Exponent::meet(trunc_, y.trunc_);
        if (t != trunc_) *this = truncated(t);
        for (const auto& [e, c] : y.terms_) add_term(e, -c);
        return *this;
    }

    TruncatedSeries& operator*=(const Coeff& k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= k;
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries x, const TruncatedSeries& y) { return x += y; }
    friend TruncatedSeries operator-(TruncatedSeries x, const TruncatedSeries& y) { return x -= y; }
    friend TruncatedSeries operator-(TruncatedSeries x) { return x *= Coeff(-1); }
    friend TruncatedSeries operator*(TruncatedSeries x, const Coeff& k) { return x *= k; }
    friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
        return multiply(x, y);
    }
    TruncatedSeries& operator*=(const TruncatedSeries& y) { return *this = multiply(*this, y); }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    static TruncatedSeries multiply(const TruncatedSeries& x, const TruncatedSeries& y);

    Truncation trunc_{};
    Terms terms_;
};

/// Cauchy product truncated to the meet of both windows. Work is split over
/// chunks of x's terms; partial sums are exact, so the result does not depend
/// on the worker count.
template <class Exponent>
TruncatedSeries<Exponent> TruncatedSeries<Exponent>::multiply(const TruncatedSeries& x,
                                                              const TruncatedSeries& y) {
    const Truncation t = Exponent::meet(x.trunc_, y.trunc_);
    TruncatedSeries out(t);
    if (x.empty() || y.empty()) return out;

    std::vector<typename Terms::const_iterator> xs;
    xs.reserve(x.size());
    for (auto it = x.terms_.begin(); it != x.terms_.end() && !it->first.exceeds_q(t); ++it) {
        xs.push_back(it);
    }

    auto accumulate = [&](std::size_t lo, std::size_t hi, Terms& acc) {
        Coeff prod;
        for (std::size_t i = lo; i < hi; ++i) {
            const auto& [ex, cx] = *xs[i];
            for (const auto& [ey, cy] : y.terms_) {
                const Exponent e = ex + ey;
                if (e.exceeds_q(t)) break;
                if (!e.within(t)) continue;
                prod = cx * cy;
                auto [it, inserted] = acc.try_emplace(e, prod);
                if (!inserted) it->second += prod;
            }
        }
    };

    const std::size_t workers = std::min<std::size_t>(thread_count(), xs.size());
    if (workers <= 1 || xs.size() * y.size() < 4096) {
        accumulate(0, xs.size(), out.terms_);
    } else {
        const std::size_t chunks = workers * 4;
        std::vector<Terms> partial(chunks);
        parallel_for(chunks, [&](std::size_t k) {
            accumulate(xs.size() * k / chunks, xs.size() * (k + 1) / chunks, partial[k]);
        });
        for (auto& part : partial) {
            for (auto& [e, c] : part) {
                auto [it, inserted] = out.terms_.try_emplace(e, std::move(c));
                if (!inserted) it->second += c;
            }
        }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

using JacobiSeries = TruncatedSeries<JacobiExponent>;
using SiegelSeries = TruncatedSeries<ExponentTriple>;

/// Truncated expansion of (1 - X)^exponent with X the monomial at `base`.
/// A negative exponent needs X of positive q- or s-order so the geometric
/// series terminates in the window; otherwise std::domain_error.
template <class Exponent>
TruncatedSeries<Exponent> pow_binomial(const Exponent& base, std::int64_t exponent,
                                       Truncation trunc) {
    if (!base.admissible()) {
        throw std::domain_error("pow_binomial: base exponent must have nonnegative q/s order");
    }
    if (base.zero_order() && exponent < 0) {
        throw std::domain_error("pow_binomial: negative exponent on a base of zero q/s order " +
                                to_string(base));
    }
    TruncatedSeries<Exponent> out(trunc);
    if (base == Exponent{}) {
        // (1 - 1)^e
        if (exponent == 0) out.add_term(Exponent{}, Coeff(1));
        return out;
    }
    mpz_class binom = 1;  // C(exponent, k) (-1)^k, generalized binomial
    for (std::int64_t k = 0;; ++k) {
        if (exponent >= 0 && k > exponent) break;
        const Exponent e = base.scaled(k);
        if (!e.within(trunc)) break;
        out.add_term(e, Coeff(binom));
        binom *= -(mpz_class(static_cast<long>(exponent)) - k);
        binom /= k + 1;
    }
    return out;
}

/// True iff x and y have the same coefficients on every exponent inside `window`.
template <class Exponent>
bool agree_within(const TruncatedSeries<Exponent>& x, const TruncatedSeries<Exponent>& y,
                  Truncation window) {
    return x.truncated(window).terms() == y.truncated(window).terms();
}

/// eta(tau) = q^(1/24) prod_{n>=1} (1 - q^n). Requires tq >= 1.
JacobiSeries eta(Truncation trunc);

/// Odd Jacobi theta function with characteristic (1/2, 1/2):
/// sum over n of (-4/n) q^(n^2/8) r^(n/2), i.e. terms at (3n^2, 2n). Requires tq >= 3.
JacobiSeries theta_sum(Truncation trunc);

/// The same function from the Jacobi triple product
/// q^(1/8) (r^(1/2) - r^(-1/2)) prod_{n>=1} (1 - q^n)(1 - q^n r)(1 - q^n r^-1).
JacobiSeries theta_product(Truncation trunc);

/// theta_sum without the tq >= 3 precondition; empty below tq = 3.
JacobiSeries theta_terms(Truncation trunc);

/// (a, b) -> (a, k b): the substitution z -> k z. Requires k >= 1.
JacobiSeries substitute_z_multiple(const JacobiSeries& x, std::int64_t k);

/// Tensor with the pure s-power at scaled exponent c0: (a, b) -> (a, b, c0).
SiegelSeries promote(const JacobiSeries& x, std::int64_t c0, Truncation trunc);

}  // namespace paramodular
