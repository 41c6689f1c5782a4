#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "paramodular/series.hpp"

using namespace paramodular;

namespace {

// Naive Cauchy product over plain term lists, no ordering assumptions.
template <class S>
S naive_product(const S& x, const S& y) {
    using E = typename S::exponent_type;
    const Truncation t = E::meet(x.truncation(), y.truncation());
    S out(t);
    const auto xs = x.support();
    const auto ys = y.support();
    for (const auto& [ex, cx] : xs) {
        for (const auto& [ey, cy] : ys) {
            const E e = ex + ey;
            if (e.within(t)) out.add_term(e, cx * cy);
        }
    }
    return out;
}

SiegelSeries random_siegel(std::mt19937_64& rng, Truncation t, int terms) {
    std::uniform_int_distribution<std::int64_t> da(0, t.tq), dc(0, t.ts), db(-12, 12), dn(-5, 5), dd(1, 3);
    SiegelSeries s(t);
    for (int i = 0; i < terms; ++i) s.add_term({da(rng), db(rng), dc(rng)}, Coeff(dn(rng), dd(rng)));
    return s;
}

JacobiSeries random_jacobi(std::mt19937_64& rng, Truncation t, int terms) {
    std::uniform_int_distribution<std::int64_t> da(0, t.tq), db(-12, 12), dn(-5, 5), dd(1, 3);
    JacobiSeries s(t);
    for (int i = 0; i < terms; ++i) s.add_term({da(rng), db(rng)}, Coeff(dn(rng), dd(rng)));
    return s;
}

}  // namespace

TEST_CASE("identity and zero") {
    std::mt19937_64 rng(7);
    const Truncation t{240, 240};
    const auto x = random_siegel(rng, t, 40);
    CHECK(x * SiegelSeries::one(t) == x);
    CHECK((x * SiegelSeries(t)).empty());
    CHECK((x - x).empty());
}

TEST_CASE("multiplication matches the naive convolution oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        const Truncation t{120 + 24 * trial, 200};
        const auto x = random_siegel(rng, t, 60);
        const auto y = random_siegel(rng, t, 60);
        CHECK(x * y == naive_product(x, y));
        CHECK(x * x == naive_product(x, x));
    }
    const auto th = theta_sum(Truncation{600, 0});
    CHECK(th * th == naive_product(th, th));
    for (int trial = 0; trial < 5; ++trial) {
        const auto x = random_jacobi(rng, Truncation{240, 0}, 50);
        const auto y = random_jacobi(rng, Truncation{200, 0}, 50);
        const auto p = x * y;
        CHECK(p.truncation().tq == 200);
        CHECK(p == naive_product(x, y));
    }
}

TEST_CASE("multiplication is independent of the worker count") {
    std::mt19937_64 rng(5);
    const Truncation t{240, 240};
    const auto x = random_siegel(rng, t, 300);
    const auto y = random_siegel(rng, t, 300);
    set_thread_count(1);
    const auto serial = x * y;
    set_thread_count(4);
    const auto threaded = x * y;
    set_thread_count(1);
    CHECK(serial == threaded);
}

TEST_CASE("ring axioms on random truncated series") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 8; ++trial) {
        const Truncation t{240, 240};
        const auto x = random_siegel(rng, t, 25);
        const auto y = random_siegel(rng, t, 25);
        const auto z = random_siegel(rng, t, 25);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("pow_binomial") {
    const Truncation t{72, 0};
    const auto geo = pow_binomial(JacobiExponent{24, 0}, -2, t);
    JacobiSeries expected(t);
    for (std::int64_t k = 0; k <= 3; ++k) expected.add_term({24 * k, 0}, Coeff(k + 1));
    CHECK(geo == expected);

    CHECK(pow_binomial(ExponentTriple{24, 4, 72}, 0, Truncation{100, 100}) ==
          SiegelSeries::one(Truncation{100, 100}));

    auto lin = JacobiSeries::one(t);
    lin.add_term({0, -4}, Coeff(-1));
    CHECK(pow_binomial(JacobiExponent{0, -4}, 1, t) == lin);
    CHECK_THROWS_AS(pow_binomial(JacobiExponent{0, -4}, -1, t), std::domain_error);
    CHECK_THROWS_AS(pow_binomial(ExponentTriple{0, 4, 0}, -3, Truncation{10, 10}), std::domain_error);

    // (1 - X)^e (1 - X)^f == (1 - X)^(e + f), including negative and large exponents
    const Truncation w{480, 480};
    for (const ExponentTriple base : {ExponentTriple{24, 4, 0}, ExponentTriple{0, -8, 72}, ExponentTriple{48, 0, 24}}) {
        for (std::int64_t e : {-7, -1, 2, 5, 1000003}) {
            for (std::int64_t f : {-3, 0, 4, -1000000}) {
                CHECK(pow_binomial(base, e, w) * pow_binomial(base, f, w) == pow_binomial(base, e + f, w));
            }
        }
    }
    // naive repeated multiplication
    auto rep = SiegelSeries::one(w);
    const auto factor = pow_binomial(ExponentTriple{24, -4, 72}, 1, w);
    for (int i = 0; i < 6; ++i) rep *= factor;
    CHECK(rep == pow_binomial(ExponentTriple{24, -4, 72}, 6, w));
}

TEST_CASE("eta") {
    const auto e = eta(Truncation{2400, 0});
    CHECK(e.coefficient({1, 0}) == 1);
    CHECK(e.coefficient({25, 0}) == -1);
    // pentagonal number theorem: eta = sum_k (-1)^k q^(1/24 + k(3k-1)/2)
    JacobiSeries pent(Truncation{2400, 0});
    for (std::int64_t k = -50; k <= 50; ++k) {
        pent.add_term({1 + 12 * k * (3 * k - 1), 0}, Coeff(k % 2 == 0 ? 1 : -1));
    }
    CHECK(e == pent);
    for (const auto& [ex, c] : e.terms()) {
        CHECK(ex.b == 0);
        CHECK(is_integral(c));
    }
    CHECK_THROWS_AS(eta(Truncation{0, 0}), std::invalid_argument);
}

TEST_CASE("eta^24 against a dense product oracle") {
    const int N = 12;
    // prod_{n>=1} (1 - q^n)^24 as a dense int64 polynomial
    std::vector<std::int64_t> dense(N + 1, 0);
    dense[0] = 1;
    for (int n = 1; n <= N; ++n) {
        for (int rep = 0; rep < 24; ++rep) {
            for (int k = N; k >= n; --k) dense[k] -= dense[k - n];
        }
    }
    const Truncation t{24 * (N + 1), 0};
    const auto e = eta(t);
    auto e24 = JacobiSeries::one(t);
    for (int i = 0; i < 24; ++i) e24 *= e;
    CHECK(e24.coefficient({24, 0}) == 1);
    CHECK(e24.coefficient({48, 0}) == -24);
    for (int k = 0; k <= N; ++k) CHECK(e24.coefficient({24 * (k + 1), 0}) == Coeff(static_cast<long>(dense[k])));
}

TEST_CASE("theta sum coefficients") {
    const auto th = theta_sum(Truncation{1200, 0});
    CHECK(th.coefficient({3, 2}) == 1);
    CHECK(th.coefficient({3, -2}) == -1);
    CHECK(th.coefficient({27, 6}) == -1);
    CHECK(th.coefficient({12, 4}) == 0);
    CHECK_THROWS_AS(theta_sum(Truncation{2, 0}), std::invalid_argument);
}

TEST_CASE("Jacobi triple product") {
    const Truncation t{1200, 0};
    const auto sum = theta_sum(t);
    const auto prod = theta_product(t);
    CHECK(prod.coefficient({3, 2}) == 1);
    CHECK(prod.coefficient({27, 6}) == -1);
    CHECK(sum == prod);
}

TEST_CASE("theta structure") {
    const auto th = theta_product(Truncation{1200, 0});
    std::map<std::int64_t, Coeff> marginal;
    for (const auto& [e, c] : th.terms()) {
        CHECK((c == 1 || c == -1));
        CHECK(th.coefficient({e.a, -e.b}) == -c);
        marginal[e.a] += c;
    }
    for (const auto& [a, m] : marginal) CHECK(m == 0);
}

TEST_CASE("substitute_z_multiple") {
    const auto th = theta_sum(Truncation{300, 0});
    CHECK(substitute_z_multiple(th, 1) == th);
    const auto th2 = substitute_z_multiple(th, 2);
    CHECK(th2.coefficient({3, 4}) == 1);
    CHECK(th2.coefficient({3, 2}) == 0);
    CHECK(th2.size() == th.size());
    CHECK_THROWS_AS(substitute_z_multiple(th, 0), std::invalid_argument);
}

TEST_CASE("coefficient queries and support order") {
    SiegelSeries zero(Truncation{48, 48});
    CHECK(zero.coefficient({24, 3, 48}) == 0);
    CHECK_THROWS_AS(zero.coefficient({49, 0, 0}), std::out_of_range);
    CHECK_THROWS_AS(zero.coefficient({0, 0, 49}), std::out_of_range);
    CHECK(theta_sum(Truncation{3, 0}).coefficient({3, 2}) == 1);
    CHECK_THROWS_AS(theta_sum(Truncation{3, 0}).coefficient({4, 0}), std::out_of_range);

    std::mt19937_64 rng(99);
    const auto x = random_siegel(rng, Truncation{200, 200}, 80);
    const auto sup = x.support();
    for (std::size_t i = 1; i < sup.size(); ++i) {
        const auto& p = sup[i - 1].first;
        const auto& q = sup[i].first;
        CHECK(std::tie(p.a, p.c, p.b) < std::tie(q.a, q.c, q.b));
    }
    CHECK_THROWS_AS(zero.add_term({-1, 0, 0}, Coeff(1)), std::domain_error);
}

TEST_CASE("truncation monotonicity") {
    const Truncation small{240, 0}, large{720, 0};
    CHECK(theta_product(large).truncated(small) == theta_product(small));
    CHECK(eta(large).truncated(small) == eta(small));
    const auto e = eta(large), th = theta_sum(large);
    CHECK((e * th).truncated(small) == eta(small) * theta_sum(small));
    CHECK_THROWS_AS(eta(small).truncated(large), std::invalid_argument);
}
