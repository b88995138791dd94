#pragma once

// JSON reports. Conventions:
//  - exact rationals and GMP integers are strings, "p" or "p/q" (no 64-bit limit)
//  - weight vectors, exponent vectors and counts that fit in 64 bits are JSON numbers
//  - "m" is always a string so integer and rational degrees look alike
//  - key order is fixed; no timings or other run-dependent data, so output is byte-stable

#include "hstab/groebner.hpp"
#include "hstab/moduli.hpp"
#include "hstab/one_param_subgroup.hpp"
#include "hstab/rational.hpp"
#include "hstab/stability.hpp"
#include "hstab/state_polytope.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hstab {

using Json = nlohmann::ordered_json;

inline Json json_of(const Rational& q) { return to_string(q); }
inline Json json_of(const Integer& z) { return to_string(z); }

inline Json json_of(const OneParamSubgroup& rho) { return Json(rho.weights()); }

inline Json json_of_monomials(const std::vector<Monomial>& ms, const Ring& ring) {
    Json a = Json::array();
    for (const auto& m : ms) a.push_back(to_string(Polynomial(m, 1), ring));
    return a;
}

inline Json json_of(const HilbertMumfordReport& r) {
    Json j;
    j["kind"] = "hm-index";
    j["m"] = json_of(r.m);
    j["rho"] = json_of(r.rho);
    j["order"] = r.order;
    j["index"] = json_of(r.index);
    j["verdict"] = to_string(r.verdict);
    j["standard_weight_sum"] = json_of(r.standard_weight_sum);
    j["average_term"] = json_of(r.average_term);
    j["hilbert_function"] = json_of(r.hilbert_function);
    j["hilbert_polynomial_value"] = json_of(r.hilbert_polynomial_value);
    j["below_regularity"] = r.below_regularity;
    return j;
}

inline Json json_of(const StatePolytope& p, const Ring& ring) {
    Json j;
    j["kind"] = "state-polytope";
    j["m"] = std::to_string(p.m);
    j["nvars"] = p.nvars;
    j["vertices"] = p.vertices;
    j["coordinate_sum"] = p.coordinate_sum;
    Json cones = Json::array();
    for (const auto& c : p.cones) {
        Json cj;
        cj["vertex"] = c.vertex;
        cj["representative"] = json_of(c.representative);
        cj["facets"] = c.facets;
        cj["initial_monomials"] = json_of_monomials(c.initial_monomials, ring);
        cones.push_back(std::move(cj));
    }
    j["certificate"] = {{"complete", p.certified}, {"cones", std::move(cones)}};
    return j;
}

inline Json json_of(const TorusSemistability& t, const Ring& ring) {
    Json j;
    j["kind"] = "is-semistable";
    j["m"] = std::to_string(t.m);
    j["verdict"] = to_string(t.verdict);
    Json bary = Json::array();
    for (const auto& x : t.barycenter) bary.push_back(json_of(x));
    j["barycenter"] = std::move(bary);
    j["vertices"] = t.polytope.vertices;
    Json cert;
    if (t.verdict == TorusVerdict::Semistable) {
        cert["type"] = "convex-combination";
        Json w = Json::array();
        for (const auto& cw : t.combination) w.push_back({{"vertex", cw.vertex}, {"weight", json_of(cw.weight)}});
        cert["weights"] = std::move(w);
    } else {
        cert["type"] = "destabilizing-1ps";
        cert["report"] = json_of(*t.destabilizing);
    }
    j["certificate"] = std::move(cert);
    if (t.kempf) {
        j["kempf"] = {{"applicable", t.kempf->applicable},
                      {"reason", t.kempf->reason},
                      {"stabilizer_fixes_ideal", t.stabilizer_fixes_ideal},
                      {"full_semistability", t.full_semistability}};
    }
    j["polytope"] = json_of(t.polytope, ring);
    return j;
}

inline Json json_of(const DivisorClass& c) {
    auto n = c.normalized();
    Json j;
    j["lambda"] = json_of(n.lambda);
    j["delta"] = json_of(n.delta);
    auto s = c.slope();
    j["slope"] = s ? Json(json_of(*s)) : Json(nullptr);
    auto a = c.alpha();
    j["alpha"] = a ? Json(json_of(*a)) : Json(nullptr);
    return j;
}

inline Json json_of(const CharacterTable& t) {
    return {{"lambda", json_of(t.lambda())},
            {"lambda2", json_of(t.lambda2())},
            {"delta", json_of(t.delta())},
            {"K", json_of(t.canonical())}};
}

inline Json json_of(const ChamberDecomposition& c) {
    return {{"negative_complement", c.negative_complement},
            {"positive_complement", c.positive_complement},
            {"attracted", c.attracted},
            {"fixed_tangent", c.fixed_tangent}};
}

}  // namespace hstab
