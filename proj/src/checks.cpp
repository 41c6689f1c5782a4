#include "paramodular/checks.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "paramodular/arith.hpp"
#include "paramodular/jacobi.hpp"
#include "paramodular/jobs.hpp"

namespace paramodular {

namespace {

std::string window_string(Truncation t) {
    return "(" + std::to_string(t.tq) + "," + std::to_string(t.ts) + ")";
}

bool all_zero(const DiagonalMap& m) {
    for (const auto& [k, v] : m) {
        if (v != 0) return false;
    }
    return true;
}

std::int64_t default_q_order(FormName name) { return name == FormName::DeltaHalf ? 4 : 3; }

CheckResult triple_product(const CheckOptions& o) {
    const Truncation t{kQDenominator * o.q_order.value_or(50), 0};
    const auto sum = theta_sum(t);
    const bool ok = sum == theta_product(t);
    return {"triple-product", ok, "tq=" + std::to_string(t.tq) + " terms=" + std::to_string(sum.size())};
}

CheckResult delta1_routes(const CheckOptions& o) {
    const Truncation t{kQDenominator * o.q_order.value_or(6), kSDenominator * o.s_order.value_or(18)};
    const auto lift = delta1_lift(t);
    const auto prod = delta1_product(t);
    std::size_t mismatches = 0;
    for (const auto& [e, c] : lift.terms()) mismatches += prod.coefficient(e) != c;
    for (const auto& [e, c] : prod.terms()) mismatches += lift.coefficient(e) == 0;
    return {"delta1-lift-vs-product", mismatches == 0 && lift == prod,
            "window=" + window_string(t) + " terms=" + std::to_string(lift.size()) +
                " mismatches=" + std::to_string(mismatches)};
}

CheckResult delta_half_routes(const CheckOptions& o) {
    const Truncation t{kQDenominator * o.q_order.value_or(13), kSDenominator * o.s_order.value_or(13)};
    const auto sum = delta_half_sum(t);
    const bool ok = sum == delta_half_theta_decomp(t);
    return {"delta-half-routes", ok, "window=" + window_string(t) + " terms=" + std::to_string(sum.size())};
}

CheckResult f_table_check(const CheckOptions& o) {
    const std::int64_t max_n = o.max_n.value_or(10);
    const auto table = f_table(max_n);
    bool ok = f_verify_quotient(table, Truncation{kQDenominator * max_n, 0});
    const std::vector<std::pair<std::int64_t, std::int64_t>> row0{{-1, 1}, {0, 2}, {1, 1}};
    ok = ok && table.row(0) == row0;
    if (max_n >= 1) {
        const std::vector<std::pair<std::int64_t, std::int64_t>> row1{{-3, -2}, {-2, -2}, {-1, 2}, {0, 4},
                                                                      {1, 2},   {2, -2},  {3, -2}};
        ok = ok && table.row(1) == row1;
    }
    return {"f-table", ok, "max_n=" + std::to_string(max_n)};
}

CheckResult per_form(const std::string& name, const CheckOptions& o,
                     const std::function<bool(FormName, const SiegelSeries&, std::string&)>& body) {
    bool ok = true;
    std::string detail;
    for (const auto& d : form_table()) {
        const Truncation t = form_window(d.name, o);
        const auto x = build_form(d.name, t);
        std::string note;
        const bool pass = body(d.name, x, note);
        ok = ok && pass;
        if (!detail.empty()) detail += ' ';
        detail += to_string(d.name) + (pass ? ":ok" : ":bad") + (note.empty() ? "" : "[" + note + "]");
    }
    return {name, ok, detail};
}

CheckResult diagonal_order(const CheckOptions& o) {
    return per_form("diagonal-order", o, [](FormName, const SiegelSeries& x, std::string& note) {
        const bool vanishes = all_zero(restrict_diagonal(x));
        const bool order_one = !all_zero(diagonal_first_moment(x));
        note = std::string(vanishes ? "" : "restriction-nonzero ") + (order_one ? "" : "moment-zero");
        return vanishes && order_one;
    });
}

CheckResult cusp_classification(const CheckOptions& o) {
    return per_form("cusp-classification", o, [](FormName name, const SiegelSeries& x, std::string& note) {
        const auto nc = norm_classify(x);
        note = "min=" + coeff_to_string(nc.min_norm);
        const bool positive = nc.min_norm > 0;
        if (positive != descriptor(name).is_cusp) return false;
        switch (name) {
            case FormName::Delta1: return nc.min_norm == Coeff(1, 12);  // (4nm - 3l^2)/12 at M = 1
            case FormName::Delta2: return nc.min_norm == Coeff(1, 4);   // (2nm - l^2)/4 at N = 1
            case FormName::Delta5: return positive;
            case FormName::DeltaHalf: return nc.min_norm == 0 && nc.max_norm == 0;
        }
        return false;
    });
}

CheckResult symmetry(const CheckOptions& o) {
    return per_form("symmetry", o, [](FormName name, const SiegelSeries& x, std::string& note) {
        const bool swap = check_swap_symmetry(x, descriptor(name).polarization);
        const bool anti = check_r_antisymmetry(x);
        note = std::string(swap ? "" : "swap ") + (anti ? "" : "antisymmetry");
        return swap && anti;
    });
}

CheckResult integrality(const CheckOptions& o) {
    return per_form("integrality", o, [](FormName, const SiegelSeries& x, std::string& note) {
        note = "terms=" + std::to_string(x.size());
        return has_integral_coefficients(x);
    });
}

CheckResult coset_index(const CheckOptions&) {
    std::uint64_t bad = 0;
    for (std::uint64_t t = 1; t <= 30; ++t) {
        bad += arith::coset_index(t) != arith::coset_index_bruteforce(t);
        bad += arith::diagonal_coset_count(t) != arith::diagonal_coset_count_bruteforce(t);
    }
    return {"coset-index", bad == 0, "t<=30 mismatches=" + std::to_string(bad)};
}

CheckResult weight_equation(const CheckOptions&) {
    const auto sols = arith::weight_equation_solutions(1);
    const std::vector<arith::WeightSolution> expected{{1, 5, 1}, {2, 2, 1}, {3, 1, 1}, {4, 1, 2}};
    std::string detail;
    for (const auto& s : sols) detail += "(" + std::to_string(s.t) + "," + s.weight_string() + ")";
    return {"weight-equation", sols == expected, detail};
}

CheckResult delta1_cubed_check(const CheckOptions& o) {
    const std::int64_t q = o.q_order.value_or(3);
    const Truncation t{kQDenominator * q, kSDenominator * o.s_order.value_or(3 * q)};
    const auto cube = delta1_cubed(t);
    bool lattice = true;
    for (const auto& [e, c] : cube.terms()) {
        lattice = lattice && e.a % 12 == 0 && e.b % 2 == 0 && e.c % 12 == 0;
    }
    const bool cusp = !cube.empty() && norm_classify(cube).min_norm > 0;
    const bool marginals = all_zero(restrict_diagonal(cube)) && all_zero(diagonal_first_moment(cube));
    return {"delta1-cubed", lattice && cusp && marginals,
            "window=" + window_string(t) + " terms=" + std::to_string(cube.size())};
}

const std::map<std::string, std::function<CheckResult(const CheckOptions&)>>& registry() {
    static const std::map<std::string, std::function<CheckResult(const CheckOptions&)>> r{
        {"triple-product", triple_product},
        {"delta1-lift-vs-product", delta1_routes},
        {"delta-half-routes", delta_half_routes},
        {"f-table", f_table_check},
        {"diagonal-order", diagonal_order},
        {"cusp-classification", cusp_classification},
        {"symmetry", symmetry},
        {"integrality", integrality},
        {"coset-index", coset_index},
        {"weight-equation", weight_equation},
        {"delta1-cubed", delta1_cubed_check},
    };
    return r;
}

}  // namespace

Truncation form_window(FormName name, const CheckOptions& o) {
    const std::int64_t q = o.q_order.value_or(default_q_order(name));
    const std::int64_t lambda = descriptor(name).polarization;
    return {kQDenominator * q, kSDenominator * o.s_order.value_or(lambda * q)};
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{
        "triple-product", "delta1-lift-vs-product", "delta-half-routes", "f-table",
        "diagonal-order", "cusp-classification",    "symmetry",          "integrality",
        "coset-index",    "weight-equation",        "delta1-cubed",
    };
    return names;
}

std::vector<CheckResult> run_checks(const std::string& selector, const CheckOptions& options) {
    std::vector<CheckResult> out;
    if (selector == "all") {
        for (const auto& n : check_names()) out.push_back(registry().at(n)(options));
        return out;
    }
    auto it = registry().find(selector);
    if (it == registry().end()) throw UsageError("unknown check '" + selector + "'");
    out.push_back(it->second(options));
    return out;
}

std::string format_result(const CheckResult& r) {
    return "CHECK " + r.name + (r.passed ? " PASS " : " FAIL ") + r.detail;
}

}  // namespace paramodular
