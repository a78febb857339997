#pragma once

// JSON documents for series, kernels and reports, plus the CSV sample dump.
// Field names are stable; identical inputs produce byte-identical output.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "convharm/hypergeom.hpp"
#include "convharm/kernels.hpp"
#include "convharm/membership.hpp"
#include "convharm/oracle.hpp"
#include "convharm/series.hpp"

namespace convharm::io {

using nlohmann::json;

inline json complex_to_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

inline json series_to_json(const HarmonicSeries& f) {
    json doc;
    doc["order"] = f.order();
    const bool th = f.convention() == Convention::TH;
    doc["convention"] = th ? "TH" : "general";
    json a = json::array();
    for (int n = 2; n <= f.order(); ++n)
        a.push_back(th ? json(f.analytic_coeff(n).real()) : complex_to_json(f.analytic_coeff(n)));
    json b = json::array();
    for (int n = 1; n <= f.order(); ++n)
        b.push_back(th ? json(f.coanalytic_coeff(n).real())
                       : complex_to_json(f.coanalytic_coeff(n)));
    doc["analytic"] = std::move(a);
    doc["coanalytic"] = std::move(b);
    return doc;
}

inline Complex complex_from_json(const json& v, const char* what) {
    if (v.is_number()) return Complex(v.get<double>(), 0.0);
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return Complex(v[0].get<double>(), v[1].get<double>());
    throw std::invalid_argument(std::string(what) + ": coefficients must be numbers or [re, im]");
}

inline HarmonicSeries series_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("order") || !doc.contains("convention"))
        throw std::invalid_argument("series document: requires order and convention");
    const int order = doc.at("order").get<int>();
    const std::string conv = doc.at("convention").get<std::string>();
    const bool th = conv == "TH" || conv == "th";
    if (!th && conv != "general")
        throw std::invalid_argument("series document: convention must be \"TH\" or \"general\"");
    std::vector<Complex> a, b;
    for (const json& v : doc.value("analytic", json::array()))
        a.push_back(complex_from_json(v, "analytic"));
    for (const json& v : doc.value("coanalytic", json::array()))
        b.push_back(complex_from_json(v, "coanalytic"));
    a.resize(static_cast<std::size_t>(std::max(order - 1, 0)));
    b.resize(static_cast<std::size_t>(std::max(order, 0)));
    return HarmonicSeries(th ? Convention::TH : Convention::General, order, std::move(a),
                          std::move(b));
}

// Generator documents: {"kind":"poly","coeffs":[c0,c1,..]} evaluates
// c0 + c1 n + c2 n^2 + ...; {"kind":"table","values":[..]} indexes from the
// generator's first n and extends by its last value only when "extend": true.
inline CoeffGenerator generator_from_json(const json& doc, int first_n, const std::string& slot) {
    if (!doc.is_object() || !doc.contains("kind"))
        throw std::invalid_argument("kernel generator " + slot + ": requires a kind");
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "poly") {
        std::vector<double> coeffs = doc.at("coeffs").get<std::vector<double>>();
        return [coeffs](int n) {
            double acc = 0.0, power = 1.0;
            for (double c : coeffs) {
                acc += c * power;
                power *= n;
            }
            return acc;
        };
    }
    if (kind == "table") {
        std::vector<double> values = doc.at("values").get<std::vector<double>>();
        if (values.empty())
            throw std::invalid_argument("kernel generator " + slot + ": empty table");
        const bool extend = doc.value("extend", false);
        return [values, extend, first_n, slot](int n) {
            const long idx = n - first_n;
            if (idx < 0) throw std::out_of_range("kernel generator " + slot + ": n below range");
            if (idx < static_cast<long>(values.size()))
                return values[static_cast<std::size_t>(idx)];
            if (extend) return values.back();
            throw std::out_of_range("kernel generator " + slot +
                                    ": n beyond table (set \"extend\": true to allow)");
        };
    }
    throw std::invalid_argument("kernel generator " + slot + ": kind must be poly or table");
}

inline KernelPair kernel_from_json(const json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("kernel document: object expected");
    const double alpha = doc.at("alpha").get<double>();
    if (doc.contains("name")) {
        const std::string name = doc.at("name").get<std::string>();
        if (name == "starlike") return named_kernel(NamedKernel::Starlike, alpha);
        if (name == "convex") return named_kernel(NamedKernel::Convex, alpha);
        if (name == "u") return named_kernel(NamedKernel::U, alpha);
        throw std::invalid_argument("kernel document: unknown name \"" + name + "\"");
    }
    return KernelPair(generator_from_json(doc.at("p"), 2, "p"),
                      generator_from_json(doc.at("q"), 1, "q"),
                      generator_from_json(doc.at("u"), 2, "u"),
                      generator_from_json(doc.at("v"), 1, "v"), doc.at("i").get<int>(),
                      doc.at("j").get<int>(), alpha);
}

inline json membership_to_json(const MembershipReport& r) {
    json terms = json::array();
    for (const MembershipTerm& t : r.terms)
        terms.push_back({{"n", t.n},
                         {"part", t.coanalytic ? "coanalytic" : "analytic"},
                         {"weight", t.weight},
                         {"coefficient", t.coefficient},
                         {"product", t.product}});
    return {{"lhs", r.lhs}, {"margin", r.margin}, {"verdict", r.verdict}, {"terms", terms}};
}

inline json growth_to_json(const GrowthBounds& g) {
    return {{"eta", g.eta},
            {"upper_coeffs", {g.upper_c1, g.upper_c2}},
            {"lower_coeffs", {g.lower_d1, g.lower_d2}},
            {"covering_radius", g.covering_radius}};
}

inline json criterion_to_json(const CriterionReport& r) {
    return {{"lhs", r.lhs},
            {"tail_bound", r.tail_bound},
            {"threshold", r.threshold},
            {"verdict", r.verdict},
            {"terms_used", r.terms_used}};
}

inline json product_condition_to_json(const ProductCondition& p) {
    return {{"sum", p.sum}, {"threshold", p.threshold}, {"verdict", p.verdict}};
}

inline json point_to_json(const DiskPoint& z) { return {{"r", z.r}, {"theta", z.theta}}; }

inline json grid_to_json(const GridSpec& g) {
    json doc{{"radii", g.radii},
             {"r_max", g.r_max},
             {"angles", g.angles},
             {"refine_rounds", g.refine_rounds}};
    if (g.focus)
        doc["focus"] = {{"r_lo", g.focus->r_lo},
                        {"r_hi", g.focus->r_hi},
                        {"theta_lo", g.focus->theta_lo},
                        {"theta_hi", g.focus->theta_hi}};
    return doc;
}

inline GridSpec grid_from_json(const json& doc) {
    GridSpec g;
    g.radii = doc.value("radii", g.radii);
    g.r_max = doc.value("r_max", g.r_max);
    g.angles = doc.value("angles", g.angles);
    g.refine_rounds = doc.value("refine_rounds", g.refine_rounds);
    if (doc.contains("focus")) {
        const json& f = doc.at("focus");
        g.focus = FocusRegion{f.at("r_lo").get<double>(), f.at("r_hi").get<double>(),
                              f.at("theta_lo").get<double>(), f.at("theta_hi").get<double>()};
    }
    g.require_valid();
    return g;
}

inline json oracle_report_to_json(const OracleReport& r) {
    return {{"min_re_ratio", r.re_ratio.value},
            {"worst_re_ratio", point_to_json(r.re_ratio.at)},
            {"min_jacobian", r.jacobian.value},
            {"worst_jacobian", point_to_json(r.jacobian.at)},
            {"min_starlike_derivative", r.starlike.value},
            {"worst_starlike", point_to_json(r.starlike.at)},
            {"min_convex_derivative", r.convex.value},
            {"worst_convex", point_to_json(r.convex.at)},
            {"skipped_ratio_points", r.skipped_ratio},
            {"skipped_angular_points", r.skipped_angular},
            {"points", r.points},
            {"grid", grid_to_json(r.grid)}};
}

inline json decomposition_to_json(const ExtremeDecomposition& d) {
    return {{"x", d.x}, {"y", d.y}};
}

inline json violation_to_json(const ViolationSearch& v) {
    return {{"found", v.found},
            {"value", v.value},
            {"at", point_to_json(v.at)},
            {"on_real_axis", v.on_real_axis}};
}

// CSV dump, columns r,theta,re,im,stat.
template <typename Samples>
void write_samples_csv(std::ostream& os, const Samples& samples) {
    os << "r,theta,re,im,stat\n";
    char line[160];
    for (const auto& s : samples) {
        std::snprintf(line, sizeof line, "%.12g,%.12g,%.12g,%.12g,%.12g\n", s.r, s.theta,
                      s.value.real(), s.value.imag(), s.stat);
        os << line;
    }
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return doc;
}

}  // namespace convharm::io
