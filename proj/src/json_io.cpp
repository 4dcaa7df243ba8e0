/*
   Copyright 2026 The avc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "avc/json_io.hpp"

namespace avc {

namespace {

std::vector<std::vector<int>> sets_from_json(const ordered_json& j, const Field& f) {
    std::vector<std::vector<int>> sets;
    for (const auto& s : j) {
        if (s.is_string() && s.get<std::string>() == "full") {
            std::vector<int> full(f.q());
            for (int v = 0; v < f.q(); ++v) full[v] = v;
            sets.push_back(std::move(full));
        } else {
            sets.push_back(s.get<std::vector<int>>());
        }
    }
    return sets;
}

}  // namespace

MonomialFamily family_from_json(const ordered_json& j, const GridShape& shape) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "total") return MonomialFamily::total_degree(j.at("u").get<int>(), shape);
    if (type == "weighted")
        return MonomialFamily::weighted(j.at("weights").get<std::vector<int>>(),
                                        j.at("u").get<int>(), shape);
    if (type == "box") return MonomialFamily::box(j.at("bounds").get<std::vector<int>>(), shape);
    if (type == "explicit") {
        std::vector<Monomial> monos;
        for (const auto& e : j.at("monomials")) monos.push_back(Monomial(e.get<std::vector<int>>()));
        return MonomialFamily::explicit_list(std::move(monos), shape);
    }
    throw std::invalid_argument("unknown family type \"" + type + "\"");
}

ordered_json family_to_json(const MonomialFamily& fam) {
    ordered_json out;
    out["type"] = "explicit";
    ordered_json monos = ordered_json::array();
    for (const auto& m : fam.monomials()) monos.push_back(m.exps);
    out["monomials"] = std::move(monos);
    return out;
}

Code code_from_json(const ordered_json& j) {
    Field f = Field::parse(j.at("field").get<std::string>());
    PointEnsemble ens(f, sets_from_json(j.at("sets"), f));
    MonomialFamily fam = family_from_json(j.at("family"), ens.shape());
    return Code(std::move(ens), std::move(fam));
}

ordered_json code_to_json(const Code& code) {
    ordered_json out;
    out["field"] = code.field().spec();
    ordered_json sets = ordered_json::array();
    for (const auto& s : code.ensemble().sets()) sets.push_back(s);
    out["sets"] = std::move(sets);
    out["family"] = family_to_json(code.family());
    return out;
}

ordered_json plan_to_json(const DecoderPlan& plan) {
    ordered_json out;
    out["r"] = plan.r;
    out["E"] = plan.E;
    out["t"] = plan.t;
    out["method"] = bound_method_name(plan.method);
    out["shape"] = plan.shape.sizes;
    ordered_json fam = ordered_json::array();
    for (const auto& m : plan.family_monomials) fam.push_back(m.exps);
    out["family"] = std::move(fam);
    ordered_json sup = ordered_json::array();
    for (const auto& s : plan.supports) {
        ordered_json level = ordered_json::array();
        for (const auto& m : s) level.push_back(m.exps);
        sup.push_back(std::move(level));
    }
    out["supports"] = std::move(sup);
    return out;
}

DecoderPlan plan_from_json(const ordered_json& j) {
    DecoderPlan plan;
    plan.r = j.at("r").get<int>();
    plan.E = j.at("E").get<long long>();
    plan.t = j.at("t").get<int>();
    const std::string meth = j.at("method").get<std::string>();
    bool found = false;
    for (BoundMethod m : {BoundMethod::RecursiveD, BoundMethod::ClosedFormC,
                          BoundMethod::SchwartzZippel, BoundMethod::Footprint})
        if (meth == bound_method_name(m)) { plan.method = m; found = true; }
    if (!found) throw std::invalid_argument("unknown bound method \"" + meth + "\"");
    plan.shape = GridShape(j.at("shape").get<std::vector<int>>());
    for (const auto& e : j.at("family")) plan.family_monomials.push_back(Monomial(e.get<std::vector<int>>()));
    for (const auto& level : j.at("supports")) {
        std::vector<Monomial> s;
        for (const auto& e : level) s.push_back(Monomial(e.get<std::vector<int>>()));
        plan.supports.push_back(std::move(s));
    }
    return plan;
}

ordered_json mpoly_to_json(const MPoly& p) {
    ordered_json out = ordered_json::array();
    for (const auto& [m, c] : p.terms()) out.push_back(ordered_json::array({m.exps, c}));
    return out;
}

MPoly mpoly_from_json(const ordered_json& j, const Field& f, int arity) {
    MPoly out(f, arity);
    for (const auto& term : j)
        out.add_term(Monomial(term.at(0).get<std::vector<int>>()), term.at(1).get<int>());
    return out;
}

std::vector<int> word_from_json(const ordered_json& j) { return j.get<std::vector<int>>(); }

}  // namespace avc
