// paramodular: exact Fourier expansions of the paramodular forms
// Delta5, Delta2, Delta1, Delta1/2 and their cross-checks.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "paramodular/arith.hpp"
#include "paramodular/cache.hpp"
#include "paramodular/checks.hpp"
#include "paramodular/jobs.hpp"
#include "paramodular/parallel.hpp"

namespace pm = paramodular;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string default_cache_dir() {
    const char* env = std::getenv("PARAMODULAR_CACHE_DIR");
    return env ? env : "";
}

int run_arith(const std::string& what, long long value) {
    if (value < 1) throw pm::UsageError("arith: argument must be >= 1");
    const auto v = static_cast<std::uint64_t>(value);
    if (what == "index" || what == "diagonal-count") {
        const bool index = what == "index";
        std::cout << "formula=" << (index ? pm::arith::coset_index(v) : pm::arith::diagonal_coset_count(v));
        if (v <= pm::arith::kBruteforceLimit) {
            std::cout << " bruteforce="
                      << (index ? pm::arith::coset_index_bruteforce(v)
                                : pm::arith::diagonal_coset_count_bruteforce(v));
        }
        std::cout << '\n';
        return 0;
    }
    if (what == "weights") {
        for (const auto& s : pm::arith::weight_equation_solutions(v)) {
            std::cout << "t=" << s.t << " k=" << s.weight_string() << '\n';
        }
        return 0;
    }
    throw pm::UsageError("arith: unknown subcommand '" + what + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Fourier expansions of the paramodular forms Delta5, Delta2, Delta1, Delta1/2"};
    app.require_subcommand(1);
    app.fallthrough();

    unsigned threads = 1;
    app.add_option("--threads", threads, "Worker threads for series arithmetic")->check(CLI::PositiveNumber);

    // compute
    auto* compute = app.add_subcommand("compute", "Print a truncated coefficient table");
    std::string object, route, format = "json", out_path, cache_dir = default_cache_dir();
    long long q_order = 1, s_order = 1, max_n = 10;
    bool no_cache = false;
    compute->add_option("object", object, "delta5 | delta2 | delta1 | delta-half | delta1-cubed | eta | theta | "
                                          "phi1 | phi2 | f-table")
        ->required();
    compute->add_option("--route", route,
                        "lift | product | theta-sum | theta-decomp | theta-product-genus2 (default per object)");
    compute->add_option("--q-order", q_order,
                        "Natural q-order; terms with exponent of q up to this are exact (scaled by 24 internally)");
    compute->add_option("--s-order", s_order, "Natural s-order for three-variable forms (scaled by 24 internally)");
    compute->add_option("--max-n", max_n, "Largest n of the f-table");
    compute->add_option("--format", format, "json | csv");
    compute->add_option("--out", out_path, "Write to PATH instead of standard output");
    compute->add_option("--cache-dir", cache_dir, "Cache directory (default: $PARAMODULAR_CACHE_DIR)");
    compute->add_flag("--no-cache", no_cache, "Ignore the cache");

    // verify
    auto* verify = app.add_subcommand("verify", "Run verification checks");
    std::string check = "all";
    long long vq = 0, vs = 0, vn = -1;
    verify->add_option("check", check, "Check name or 'all'");
    verify->add_option("--q-order", vq, "Override the natural q-order of the selected checks");
    verify->add_option("--s-order", vs, "Override the natural s-order of the selected checks");
    verify->add_option("--max-n", vn, "Override the f-table size");
    verify->add_flag_callback("--list", [&] {
        for (const auto& n : pm::check_names()) std::cout << n << '\n';
        std::exit(0);
    }, "List check names");

    // arith
    auto* arith = app.add_subcommand("arith", "Coset-index arithmetic");
    std::string arith_cmd;
    long long arith_arg = 0;
    arith->add_option("what", arith_cmd, "index | diagonal-count | weights")->required();
    arith->add_option("n", arith_arg, "t for index/diagonal-count, m for weights")->required();

    // cache
    auto* cache = app.add_subcommand("cache", "Inspect or clean the cache");
    std::string cache_cmd;
    std::string cache_path = default_cache_dir();
    cache->add_option("action", cache_cmd, "gc | stats")->required();
    cache->add_option("--cache-dir", cache_path, "Cache directory (default: $PARAMODULAR_CACHE_DIR)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        pm::set_thread_count(threads);

        if (*compute) {
            pm::JobSpec spec;
            spec.object = pm::parse_object(object);
            if (!route.empty()) spec.route = pm::parse_route(route);
            spec.q_order = q_order;
            spec.s_order = s_order;
            spec.max_n = max_n;
            spec.format = pm::parse_format(format);
            if (!cache_dir.empty() && !no_cache) spec.cache_dir = cache_dir;
            const std::string text = pm::render_cached(spec, std::cerr);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw pm::UsageError("cannot open output file " + out_path);
                out << text;
            }
            return 0;
        }

        if (*verify) {
            pm::CheckOptions opts;
            if (vq > 0) opts.q_order = vq;
            if (vs > 0) opts.s_order = vs;
            if (vn >= 0) opts.max_n = vn;
            bool ok = true;
            for (const auto& r : pm::run_checks(check, opts)) {
                std::cout << pm::format_result(r) << std::endl;
                ok = ok && r.passed;
            }
            return ok ? 0 : kExitFailure;
        }

        if (*arith) return run_arith(arith_cmd, arith_arg);

        if (*cache) {
            if (cache_path.empty()) throw pm::UsageError("cache: no --cache-dir and PARAMODULAR_CACHE_DIR unset");
            const pm::TableCache c(cache_path);
            if (cache_cmd == "stats") {
                const auto s = c.stats();
                std::cout << "entries=" << s.entries << " bytes=" << s.bytes << " stale=" << s.stale
                          << " corrupt=" << s.corrupt << " temp=" << s.temp_files << '\n';
                return 0;
            }
            if (cache_cmd == "gc") {
                std::cout << "removed=" << c.gc() << '\n';
                return 0;
            }
            throw pm::UsageError("cache: unknown action '" + cache_cmd + "'");
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return 0;
}
