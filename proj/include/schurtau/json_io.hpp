#pragma once

#include <json.hpp>

#include <string>

#include "schurtau/curve.hpp"
#include "schurtau/gap_sequence.hpp"
#include "schurtau/tau.hpp"
#include "schurtau/theorems.hpp"

namespace schurtau {

using json = nlohmann::json;

inline json to_json(const CheckResult& r) {
    json j;
    j["theorem"] = r.theorem;
    j["inputs"] = r.inputs;
    j["equal"] = r.ok;
    if (r.flagged) j["flagged"] = true;
    if (r.constant_found) j["constant_found"] = *r.constant_found;
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

/// Constants table: gap data, partition, per-k sequences and constants, and
/// the addition-formula coefficients.
inline json constants_table(const GapSequence& G) {
    Partition lambda = G.partition_of();
    int g = G.genus();
    json j;
    j["gaps"] = G.str();
    j["genus"] = g;
    j["partition"] = lambda.str();
    j["n_prime"] = lambda.n_prime();
    j["c_lambda"] = c_lambda(lambda).str();
    json rows = json::array();
    for (int k = 0; k <= g; ++k) {
        json row;
        row["k"] = k;
        ASequence a = G.a_sequence(k);
        row["m"] = a.m();
        row["a"] = json::array();
        for (int v : a.entries) row["a"].push_back(v);
        row["N"] = lambda.n_tail(k);
        row["c_k"] = G.c_k_sign(k);
        row["c_prime"] = c_prime(lambda, std::min(k, lambda.length())).str();
        rows.push_back(row);
    }
    j["k_table"] = rows;
    json bs = json::array();
    for (int n = 1; n <= g; ++n) {
        json row;
        row["n"] = n;
        row["b"] = b_coeff(G, n, false).str();
        if (n < g) row["b_prime"] = b_coeff(G, n, true).str();
        bs.push_back(row);
    }
    j["b_table"] = bs;
    return j;
}

inline json to_json(const TauSeries& tau) {
    json j;
    j["base"] = tau.base().str();
    j["cutoff"] = tau.cutoff();
    json terms = json::array();
    for (const auto& [mu, xi] : tau.coefficients()) {
        json t;
        t["partition"] = mu.str();
        t["xi"] = xi.str();
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

inline TauSeries tau_from_json(const json& j) {
    TauSeries tau(Partition::parse(j.at("base").get<std::string>()), j.at("cutoff").get<int>());
    for (const auto& t : j.at("terms")) {
        tau.set_coefficient(Partition::parse(t.at("partition").get<std::string>()),
                            Rational::parse(t.at("xi").get<std::string>()));
    }
    return tau;
}

inline json to_json(const CurveModel& c) {
    json j;
    j["n"] = c.n();
    j["s"] = c.s();
    json coeffs = json::object();
    for (const auto& [idx, v] : c.coeffs())
        coeffs[std::to_string(idx.first) + "," + std::to_string(idx.second)] = v.str();
    j["coeffs"] = coeffs;
    return j;
}

inline CurveModel curve_from_json(const json& j) {
    std::map<CurveModel::Index, Rational> coeffs;
    if (j.contains("coeffs")) {
        for (const auto& [key, val] : j.at("coeffs").items()) {
            auto comma = key.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("curve json: coefficient key must be \"i,j\"");
            int i = std::stoi(key.substr(0, comma));
            int jj = std::stoi(key.substr(comma + 1));
            coeffs[{i, jj}] = Rational::parse(val.get<std::string>());
        }
    }
    return CurveModel(j.at("n").get<int>(), j.at("s").get<int>(), std::move(coeffs));
}

/// Differential report: one entry per gap with the leading data and the
/// rendered series.
inline json differentials_report(const CurveModel& c, const PuiseuxData& p) {
    GapSequence G = c.gap_sequence_of();
    auto dus = c.differentials(p);
    json out = json::array();
    for (int i = 1; i <= c.genus(); ++i) {
        json row;
        row["gap"] = G.gap(i);
        row["valuation"] = dus[i - 1].valuation() ? json(*dus[i - 1].valuation()) : json();
        row["leading"] = dus[i - 1].is_zero_so_far() ? "0" : dus[i - 1].leading_coefficient().str();
        row["series"] = dus[i - 1].str();
        out.push_back(row);
    }
    return out;
}

}  // namespace schurtau
