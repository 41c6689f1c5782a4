#include "paramodular/jobs.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <utility>

#include "paramodular/jacobi.hpp"
#include "paramodular/siegel.hpp"

namespace paramodular {

namespace {

constexpr std::array<std::pair<ObjectKind, const char*>, 10> kObjects{{
    {ObjectKind::Delta5, "delta5"},
    {ObjectKind::Delta2, "delta2"},
    {ObjectKind::Delta1, "delta1"},
    {ObjectKind::DeltaHalf, "delta-half"},
    {ObjectKind::Delta1Cubed, "delta1-cubed"},
    {ObjectKind::Eta, "eta"},
    {ObjectKind::Theta, "theta"},
    {ObjectKind::Phi1, "phi1"},
    {ObjectKind::Phi2, "phi2"},
    {ObjectKind::FTable, "f-table"},
}};

constexpr std::array<std::pair<Route, const char*>, 5> kRoutes{{
    {Route::Lift, "lift"},
    {Route::Product, "product"},
    {Route::ThetaSum, "theta-sum"},
    {Route::ThetaDecomp, "theta-decomp"},
    {Route::ThetaProductGenus2, "theta-product-genus2"},
}};

bool is_siegel(ObjectKind k) {
    return k == ObjectKind::Delta5 || k == ObjectKind::Delta2 || k == ObjectKind::Delta1 ||
           k == ObjectKind::DeltaHalf || k == ObjectKind::Delta1Cubed;
}

}  // namespace

ObjectKind parse_object(const std::string& name) {
    for (const auto& [k, n] : kObjects) {
        if (name == n) return k;
    }
    throw UsageError("unknown object '" + name + "'");
}

Route parse_route(const std::string& name) {
    for (const auto& [r, n] : kRoutes) {
        if (name == n) return r;
    }
    throw UsageError("unknown route '" + name + "'");
}

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw UsageError("unknown format '" + name + "'");
}

std::string to_string(ObjectKind kind) {
    for (const auto& [k, n] : kObjects) {
        if (k == kind) return n;
    }
    return "?";
}

std::string to_string(Route route) {
    for (const auto& [r, n] : kRoutes) {
        if (r == route) return n;
    }
    return "?";
}

std::string to_string(OutputFormat format) { return format == OutputFormat::Json ? "json" : "csv"; }

std::vector<std::string> object_names() {
    std::vector<std::string> out;
    for (const auto& [k, n] : kObjects) out.emplace_back(n);
    return out;
}

std::vector<Route> valid_routes(ObjectKind kind) {
    switch (kind) {
        case ObjectKind::Delta5: return {Route::ThetaProductGenus2};
        case ObjectKind::Delta2: return {Route::Lift};
        case ObjectKind::Delta1: return {Route::Lift, Route::Product};
        case ObjectKind::DeltaHalf: return {Route::ThetaSum, Route::ThetaDecomp};
        case ObjectKind::Delta1Cubed: return {Route::Lift};
        case ObjectKind::Eta: return {Route::Product};
        case ObjectKind::Theta: return {Route::ThetaSum, Route::Product};
        case ObjectKind::Phi1: return {Route::Product};
        case ObjectKind::Phi2: return {Route::Product};
        case ObjectKind::FTable: return {Route::Product};
    }
    return {};
}

Route effective_route(const JobSpec& spec) { return spec.route.value_or(valid_routes(spec.object).front()); }

void validate(const JobSpec& spec) {
    const auto routes = valid_routes(spec.object);
    const Route r = effective_route(spec);
    if (std::find(routes.begin(), routes.end(), r) == routes.end()) {
        throw UsageError("route '" + to_string(r) + "' is not available for '" + to_string(spec.object) + "'");
    }
    if (spec.object == ObjectKind::FTable) {
        if (spec.max_n < 0) throw UsageError("--max-n must be >= 0");
        return;
    }
    if (spec.q_order < 1 || spec.s_order < 1) throw UsageError("--q-order and --s-order must be >= 1");
    if (spec.q_order > 1000000 || spec.s_order > 1000000) throw UsageError("truncation order too large");
}

Truncation scaled_truncation(const JobSpec& spec) {
    if (spec.object == ObjectKind::FTable) return {spec.max_n, 0};
    const std::int64_t ts = is_siegel(spec.object) ? kSDenominator * spec.s_order : 0;
    return {kQDenominator * spec.q_order, ts};
}

CacheKey cache_key(const JobSpec& spec) {
    const Truncation t = scaled_truncation(spec);
    return {to_string(spec.object), to_string(effective_route(spec)), t.tq, t.ts, to_string(spec.format)};
}

CoefficientTable compute_table(const JobSpec& spec) {
    validate(spec);
    const Truncation t = scaled_truncation(spec);
    const Route route = effective_route(spec);
    const std::string form = to_string(spec.object);
    const std::string rname = to_string(route);
    switch (spec.object) {
        case ObjectKind::Delta5: return make_table(delta5_theta_product(t), form, rname);
        case ObjectKind::Delta2: return make_table(delta2_lift(t), form, rname);
        case ObjectKind::Delta1:
            return make_table(route == Route::Lift ? delta1_lift(t) : delta1_product(t), form, rname);
        case ObjectKind::DeltaHalf:
            return make_table(route == Route::ThetaSum ? delta_half_sum(t) : delta_half_theta_decomp(t), form,
                              rname);
        case ObjectKind::Delta1Cubed: return make_table(delta1_cubed(t), form, rname);
        case ObjectKind::Eta: return make_table(eta(t), form, rname);
        case ObjectKind::Theta:
            return make_table(route == Route::ThetaSum ? theta_sum(t) : theta_product(t), form, rname);
        case ObjectKind::Phi1: return make_table(phi1(t), form, rname);
        case ObjectKind::Phi2: return make_table(phi2(t), form, rname);
        case ObjectKind::FTable: return make_table(f_table(spec.max_n));
    }
    throw UsageError("unknown object");
}

std::string render(const JobSpec& spec) {
    const auto table = compute_table(spec);
    return spec.format == OutputFormat::Json ? to_json(table) : to_csv(table);
}

std::string render_cached(const JobSpec& spec, std::ostream& warn) {
    validate(spec);
    if (!spec.cache_dir) return render(spec);
    const TableCache cache(*spec.cache_dir);
    const CacheKey key = cache_key(spec);
    if (auto hit = cache.lookup(key, warn)) return *std::move(hit);
    std::string out = render(spec);
    cache.store(key, out);
    return out;
}

}  // namespace paramodular
