#pragma once

#include "riesz/circle.hpp"
#include "riesz/constants.hpp"
#include "riesz/report.hpp"
#include "riesz/search.hpp"

#include <json.hpp>

namespace riesz {

using ordered_json = nlohmann::ordered_json;

/// Field names and order are part of the external interface.  NaN fields
/// (R, r_bar, beta at p = 2) serialize as null.
inline ordered_json to_json(const ConstantSet& cs) {
    ordered_json j;
    j["p"] = cs.p;
    j["b"] = cs.b;
    j["S_b"] = cs.S_b;
    j["A"] = cs.A;
    j["D"] = cs.D;
    j["E"] = cs.E;
    j["R"] = cs.R;
    j["r_bar"] = cs.r_bar;
    j["beta"] = cs.beta;
    j["degenerate_p2"] = cs.degenerate_p2;
    return j;
}

inline ordered_json to_json(const VerificationReport& r) {
    ordered_json j;
    j["name"] = r.name;
    j["domain_description"] = r.domain_description;
    j["num_points"] = r.num_points;
    j["worst_value"] = r.worst_value;
    j["worst_point"] = r.worst_point;
    j["tolerance"] = r.tolerance;
    j["passed"] = r.passed;
    return j;
}

inline ordered_json to_json(const HarmonicPair& gh) {
    auto coeffs = [](const std::vector<Complex>& v) {
        ordered_json arr = ordered_json::array();
        for (const Complex& c : v) arr.push_back({c.real(), c.imag()});
        return arr;
    };
    ordered_json j;
    j["g"] = coeffs(gh.g);
    j["h"] = coeffs(gh.h);
    return j;
}

/// Coefficient vector of a circle function as [[re, im], ...], bins in DFT
/// order (coefficient k at bin k mod N).
inline ordered_json coeffs_to_json(const CircleFunction& f) {
    ordered_json arr = ordered_json::array();
    for (const Complex& c : f.coeffs()) arr.push_back({c.real(), c.imag()});
    return arr;
}

} // namespace riesz
