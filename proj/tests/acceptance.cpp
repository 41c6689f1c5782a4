// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic
// throughout. Runtime limits are part of the criteria where they are stated.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "paramodular/arith.hpp"
#include "paramodular/jacobi.hpp"
#include "paramodular/jobs.hpp"
#include "paramodular/parallel.hpp"
#include "paramodular/siegel.hpp"

using namespace paramodular;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

std::string window_string(Truncation t) {
    return "(" + std::to_string(t.tq) + "," + std::to_string(t.ts) + ")";
}

bool all_zero(const DiagonalMap& m) {
    for (const auto& [k, v] : m) {
        if (v != 0) return false;
    }
    return true;
}

// windows for the per-form criteria: (24 q, 24 t q) so the swap maps them onto themselves
Truncation form_window(FormName f) {
    const std::int64_t q = 4;
    return {24 * q, 24 * descriptor(f).polarization * q};
}

Outcome c1_delta1_routes() {
    const Truncation t{144, 432};
    const auto lift = delta1_lift(t);
    const auto prod = delta1_product(t);
    std::size_t mismatches = 0;
    for (const auto& [e, c] : lift.terms()) mismatches += prod.coefficient(e) != c;
    for (const auto& [e, c] : prod.terms()) mismatches += lift.coefficient(e) == 0;
    return {mismatches == 0 && lift == prod, "window=" + window_string(t) + " terms=" + std::to_string(lift.size()) +
                                                 " mismatches=" + std::to_string(mismatches)};
}

Outcome c2_delta_half_routes() {
    const Truncation t{300, 300};
    const auto sum = delta_half_sum(t);
    const auto dec = delta_half_theta_decomp(t);
    return {sum == dec, "window=" + window_string(t) + " terms=" + std::to_string(sum.size())};
}

Outcome c3_triple_product() {
    const Truncation t{1200, 0};
    const auto sum = theta_sum(t);
    return {sum == theta_product(t), "tq=1200 terms=" + std::to_string(sum.size())};
}

Outcome c4_f_table() {
    const auto f = f_table(10);
    const bool quotient = f_verify_quotient(f, Truncation{240, 0});
    bool rows = true;
    const std::int64_t row0[] = {1, 2, 1};
    for (std::int64_t l = -1; l <= 1; ++l) rows = rows && f.value(0, l) == row0[l + 1];
    const std::int64_t row1[] = {-2, -2, 2, 4, 2, -2, -2};
    for (std::int64_t l = -3; l <= 3; ++l) rows = rows && f.value(1, l) == row1[l + 3];
    rows = rows && f.row(0).size() == 3 && f.row(1).size() == 7;
    return {quotient && rows, std::string("max_n=10 quotient=") + (quotient ? "ok" : "bad") +
                                  " rows=" + (rows ? "ok" : "bad")};
}

Outcome c5_diagonal_order() {
    bool ok = true;
    std::string detail;
    for (const auto& d : form_table()) {
        const Truncation t = form_window(d.name);
        const auto x = build_form(d.name, t);
        const bool vanishes = all_zero(restrict_diagonal(x));
        const bool moment = !all_zero(diagonal_first_moment(x));
        ok = ok && vanishes && moment;
        if (!detail.empty()) detail += ' ';
        detail += to_string(d.name) + window_string(t) + ":" + (vanishes ? "zero" : "NONZERO") + "/" +
                  (moment ? "moment" : "NO-MOMENT");
    }
    return {ok, detail};
}

// Minima exactly as stated: 1/12 (Delta1), 1/8 (Delta2), > 0 (Delta5), all 0 (Delta1/2).
Outcome c6_cusp_classification() {
    bool ok = true;
    std::string detail;
    for (const auto& d : form_table()) {
        const auto nc = norm_classify(build_form(d.name, form_window(d.name)));
        bool pass = false;
        std::string want;
        switch (d.name) {
            case FormName::Delta1: pass = nc.min_norm == Coeff(1, 12); want = "1/12"; break;
            case FormName::Delta2: pass = nc.min_norm == Coeff(1, 8); want = "1/8"; break;
            case FormName::Delta5: pass = nc.min_norm > 0; want = ">0"; break;
            case FormName::DeltaHalf: pass = nc.min_norm == 0 && nc.max_norm == 0; want = "all 0"; break;
        }
        ok = ok && pass;
        if (!detail.empty()) detail += ' ';
        detail += to_string(d.name) + ":min=" + coeff_to_string(nc.min_norm) + (pass ? "" : "(expected " + want + ")");
    }
    return {ok, detail};
}

Outcome c7_arithmetic() {
    std::size_t bad = 0;
    for (std::uint64_t t = 1; t <= 30; ++t) {
        bad += arith::coset_index(t) != arith::coset_index_bruteforce(t);
        bad += arith::diagonal_coset_count(t) != arith::diagonal_coset_count_bruteforce(t);
    }
    const auto sols = arith::weight_equation_solutions(1);
    const std::vector<arith::WeightSolution> expected{{1, 5, 1}, {2, 2, 1}, {3, 1, 1}, {4, 1, 2}};
    std::string pairs;
    for (const auto& s : sols) pairs += "(" + std::to_string(s.t) + "," + s.weight_string() + ")";
    return {bad == 0 && sols == expected, "t<=30 mismatches=" + std::to_string(bad) + " weights=" + pairs};
}

Outcome c8_symmetry() {
    bool ok = true;
    std::string detail;
    for (const auto& d : form_table()) {
        const Truncation t = form_window(d.name);
        const auto x = build_form(d.name, t);
        const bool swap = check_swap_symmetry(x, d.polarization);
        const bool anti = check_r_antisymmetry(x);
        ok = ok && swap && anti;
        if (!detail.empty()) detail += ' ';
        detail += to_string(d.name) + "[lambda=" + std::to_string(d.polarization) + "]:" + (swap ? "swap" : "NO-SWAP") +
                  "/" + (anti ? "anti" : "NO-ANTI");
    }
    return {ok, detail};
}

Outcome c9_delta1_cubed() {
    const Truncation t{144, 432};
    const auto cube = delta1_cubed(t);
    bool lattice = true;
    for (const auto& [e, c] : cube.terms()) lattice = lattice && e.a % 12 == 0 && e.b % 2 == 0 && e.c % 12 == 0;
    const bool cusp = !cube.empty() && norm_classify(cube).min_norm > 0;
    const bool restriction = all_zero(restrict_diagonal(cube));
    const bool moment = all_zero(diagonal_first_moment(cube));
    return {lattice && cusp && restriction && moment,
            "window=" + window_string(t) + " terms=" + std::to_string(cube.size()) + " lattice=" +
                (lattice ? "ok" : "bad") + " norms>0=" + (cusp ? "ok" : "bad") + " marginals=" +
                (restriction && moment ? "zero" : "NONZERO")};
}

Outcome c10_determinism() {
    std::vector<JobSpec> jobs;
    auto add = [&](ObjectKind k, std::optional<Route> r, std::int64_t q, std::int64_t s) {
        JobSpec j;
        j.object = k;
        j.route = r;
        j.q_order = q;
        j.s_order = s;
        jobs.push_back(j);
    };
    add(ObjectKind::Delta1, Route::Lift, 6, 18);
    add(ObjectKind::Delta1, Route::Product, 6, 18);
    add(ObjectKind::DeltaHalf, Route::ThetaSum, 13, 13);
    add(ObjectKind::DeltaHalf, Route::ThetaDecomp, 13, 13);
    add(ObjectKind::Theta, Route::ThetaSum, 50, 1);
    add(ObjectKind::Theta, Route::Product, 50, 1);
    JobSpec f;
    f.object = ObjectKind::FTable;
    f.max_n = 10;
    jobs.push_back(f);
    const std::size_t n_single = jobs.size();
    for (std::size_t i = 0; i < n_single; ++i) {
        JobSpec csv = jobs[i];
        csv.format = OutputFormat::Csv;
        jobs.push_back(csv);
    }

    const unsigned wide = 4;
    std::size_t differ = 0;
    for (const auto& j : jobs) {
        set_thread_count(1);
        const std::string a = render(j);
        const std::string b = render(j);
        set_thread_count(wide);
        const std::string c = render(j);
        set_thread_count(1);
        differ += (a != b) + (a != c);
    }
    return {differ == 0, "jobs=" + std::to_string(jobs.size()) + " threads=1,1," + std::to_string(wide) +
                             " differing=" + std::to_string(differ)};
}

struct Criterion {
    int id;
    double limit_seconds;  // 0: no runtime bound
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, 60, c1_delta1_routes}, {2, 10, c2_delta_half_routes}, {3, 10, c3_triple_product},
        {4, 0, c4_f_table},        {5, 0, c5_diagonal_order},     {6, 0, c6_cusp_classification},
        {7, 30, c7_arithmetic},    {8, 0, c8_symmetry},           {9, 0, c9_delta1_cubed},
        {10, 0, c10_determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::string detail = o.detail + " time=" + timing;
        if (c.limit_seconds > 0) {
            char limit[64];
            std::snprintf(limit, sizeof limit, "%.0fs", c.limit_seconds);
            detail += std::string("/") + limit;
            if (secs > c.limit_seconds) {
                o.passed = false;
                detail += "(over limit)";
            }
        }
        failed += !o.passed;
        std::cout << "CRITERION " << c.id << ' ' << (o.passed ? "PASS" : "FAIL") << ' ' << detail << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
