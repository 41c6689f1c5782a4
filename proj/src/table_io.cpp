#include "paramodular/table_io.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace paramodular {

using ordered_json = nlohmann::ordered_json;

CoefficientTable make_table(const SiegelSeries& x, std::string form, std::string route) {
    CoefficientTable t{std::move(form), std::move(route), {kQDenominator, kRDenominator, kSDenominator},
                       {{"tq", x.truncation().tq}, {"ts", x.truncation().ts}}, {}};
    t.rows.reserve(x.size());
    for (const auto& [e, c] : x.terms()) t.rows.push_back({{e.a, e.b, e.c}, c});
    return t;
}

CoefficientTable make_table(const JacobiSeries& x, std::string form, std::string route) {
    CoefficientTable t{std::move(form), std::move(route), {kQDenominator, kRDenominator},
                       {{"tq", x.truncation().tq}}, {}};
    t.rows.reserve(x.size());
    for (const auto& [e, c] : x.terms()) t.rows.push_back({{e.a, e.b}, c});
    return t;
}

CoefficientTable make_table(const FTable& table) {
    CoefficientTable t{"f-table", "product", {1, 1}, {{"max_n", table.max_n()}}, {}};
    for (const auto& [e, c] : table.series().terms()) {
        t.rows.push_back({{e.a / kQDenominator, e.b / kRDenominator}, c});
    }
    return t;
}

std::string to_json(const CoefficientTable& table) {
    ordered_json j;
    j["form"] = table.form;
    j["route"] = table.route;
    j["denominators"] = table.denominators;
    ordered_json trunc = ordered_json::object();
    for (const auto& [k, v] : table.truncation) trunc[k] = v;
    j["truncation"] = trunc;
    ordered_json terms = ordered_json::array();
    for (const auto& row : table.rows) {
        ordered_json t;
        t["e"] = row.e;
        t["coeff"] = coeff_to_string(row.coeff);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j.dump() + "\n";
}

std::string to_csv(const CoefficientTable& table) {
    std::ostringstream out;
    const bool natural = table.denominators == std::vector<std::int64_t>{1, 1};
    if (natural) {
        out << "n,l,coeff\n";
    } else if (table.denominators.size() == 3) {
        out << "a,b,c,coeff\n";
    } else {
        out << "a,b,coeff\n";
    }
    for (const auto& row : table.rows) {
        for (auto v : row.e) out << v << ',';
        out << coeff_to_string(row.coeff) << '\n';
    }
    return out.str();
}

CoefficientTable parse_json(std::string_view text) {
    CoefficientTable t;
    try {
        const auto j = ordered_json::parse(text);
        t.form = j.at("form").get<std::string>();
        t.route = j.at("route").get<std::string>();
        t.denominators = j.at("denominators").get<std::vector<std::int64_t>>();
        for (const auto& [k, v] : j.at("truncation").items()) t.truncation.emplace_back(k, v.get<std::int64_t>());
        for (const auto& term : j.at("terms")) {
            TableRow row{term.at("e").get<std::vector<std::int64_t>>(), Coeff()};
            if (row.e.size() != t.denominators.size()) {
                throw std::invalid_argument("exponent arity does not match denominators");
            }
            if (row.coeff.set_str(term.at("coeff").get<std::string>(), 10) != 0 || row.coeff.get_den() == 0) {
                throw std::invalid_argument("malformed coefficient");
            }
            row.coeff.canonicalize();
            t.rows.push_back(std::move(row));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("parse_json: ") + e.what());
    }
    return t;
}

SiegelSeries to_siegel_series(const CoefficientTable& table) {
    if (table.denominators != std::vector<std::int64_t>{kQDenominator, kRDenominator, kSDenominator}) {
        throw std::invalid_argument("to_siegel_series: table is not on the (24, 4, 24) lattice");
    }
    Truncation trunc;
    for (const auto& [k, v] : table.truncation) {
        if (k == "tq") trunc.tq = v;
        if (k == "ts") trunc.ts = v;
    }
    SiegelSeries x(trunc);
    for (const auto& row : table.rows) x.add_term({row.e[0], row.e[1], row.e[2]}, row.coeff);
    return x;
}

}  // namespace paramodular
