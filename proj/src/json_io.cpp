#include "sl2pairs/json_io.hpp"

#include "sl2pairs/numth.hpp"

#include <json.hpp>

#include <stdexcept>

namespace sl2pairs::json_io {

using cyclo::CycNum;
using nlohmann::json;

namespace {

json cyc_json(const CycNum& x) {
    json j;
    j["conductor"] = x.conductor();
    json coeffs = json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(cyclo::rational_to_frac_string(c));
    j["coeffs"] = coeffs;
    return j;
}

CycNum cyc_parse(const json& j) {
    long n = j.at("conductor").get<long>();
    std::vector<cyclo::Rational> coeffs;
    for (const auto& s : j.at("coeffs")) coeffs.push_back(cyclo::parse_rational(s.get<std::string>()));
    return cyclo::make_cyc_raw(n, std::move(coeffs));
}

json verdict_json(const gelfand::PairVerdict& v) {
    json j;
    j["p"] = v.p;
    j["subgroup"] = {{"label", v.label}, {"order", v.order}, {"generators", v.generators}};
    j["verdict"] = v.strong ? "strong-gelfand" : "not-strong-gelfand";
    j["method"] = v.method;
    if (v.witness) {
        json w;
        w["kind"] = v.witness->kind;
        if (v.witness->kind == "multiplicity") {
            w["chi"] = v.witness->chi;
            w["psi"] = v.witness->psi;
            w["multiplicity"] = v.witness->multiplicity;
        } else if (v.witness->kind == "schur") {
            w["class1"] = v.witness->class1;
            w["class2"] = v.witness->class2;
        } else {
            w["via"] = v.witness->via;
        }
        j["witness"] = w;
    }
    return j;
}

} // namespace

std::string cyc_to_json(const CycNum& x) { return cyc_json(x).dump(); }

CycNum cyc_from_json(const std::string& s) { return cyc_parse(json::parse(s)); }

std::string table_to_json(const chartab::Table& t, int indent) {
    json j;
    j["group"] = t.kind;
    j["p"] = t.p;
    j["order"] = t.order;
    json classes = json::array();
    for (long c = 0; c < t.num_cols(); ++c)
        classes.push_back({{"label", t.col_labels[c]},
                           {"rep", t.col_reps[c].to_string()},
                           {"size", t.col_sizes[c]}});
    j["classes"] = classes;
    json chars = json::array();
    for (const auto& ch : t.chars) {
        json cj;
        cj["name"] = ch.name;
        cj["degree"] = ch.degree;
        cj["provenance"] = chartab::provenance_name(ch.provenance);
        json vals = json::array();
        for (const auto& v : ch.values) vals.push_back(cyc_json(v));
        cj["values"] = vals;
        chars.push_back(cj);
    }
    j["characters"] = chars;
    return j.dump(indent);
}

ParsedTable table_from_json(const std::string& s) {
    json j = json::parse(s);
    ParsedTable t;
    t.group = j.at("group").get<std::string>();
    t.p = j.at("p").get<long>();
    t.order = j.at("order").get<long>();
    for (const auto& cj : j.at("characters")) {
        t.names.push_back(cj.at("name").get<std::string>());
        t.degrees.push_back(cj.at("degree").get<long>());
        std::vector<CycNum> row;
        for (const auto& vj : cj.at("values")) row.push_back(cyc_parse(vj));
        t.values.push_back(std::move(row));
    }
    return t;
}

std::string verdict_to_json(const gelfand::PairVerdict& v, int indent) {
    return verdict_json(v).dump(indent);
}

std::string lattice_to_json(const std::vector<subgrp::SubgroupRecord>& recs, int indent) {
    json arr = json::array();
    for (const auto& r : recs) {
        json j;
        j["label"] = r.label;
        j["order"] = r.group.order();
        j["conjugacy_class_id"] = r.conjugacy_class_id;
        std::vector<std::string> gens;
        for (const auto& m : r.group.gens) gens.push_back(m.to_string());
        j["generators"] = gens;
        arr.push_back(j);
    }
    return arr.dump(indent);
}

std::string classify_to_json(const classify::ClassifyReport& rep, int indent) {
    json j;
    j["p"] = rep.p;
    j["mode"] = rep.mode;
    if (!rep.kind_rejections.empty()) j["maximal_kind_analysis"] = rep.kind_rejections;
    json cands = json::array();
    for (const auto& c : rep.candidates) {
        json cj;
        cj["labels"] = c.aliases;
        cj["order"] = c.order;
        cj["strong_gelfand"] = c.strong;
        cj["method"] = c.method;
        cj["reason"] = c.reason;
        cands.push_back(cj);
    }
    j["candidates"] = cands;
    j["strong_gelfand_pairs"] = rep.strong_pairs;
    return j.dump(indent);
}

std::string gauss_to_json(long p, int indent) {
    auto gs = cyclo::gauss_sums(p);
    CycNum sum = gs.z + gs.zt;
    CycNum diff = gs.z - gs.zt;
    CycNum sq = diff * diff;
    json j;
    j["p"] = p;
    j["t"] = numth::smallest_non_residue(p);
    j["lambda"] = numth::primitive_root(p);
    j["Z"] = cyc_json(gs.z);
    j["Zt"] = cyc_json(gs.zt);
    j["Z_display"] = gs.z.to_string();
    j["Zt_display"] = gs.zt.to_string();
    j["Z_plus_Zt"] = (sum.to_rational() ? cyclo::rational_to_string(*sum.to_rational()) : sum.to_string());
    j["Z_minus_Zt_squared"] =
        (sq.to_rational() ? cyclo::rational_to_string(*sq.to_rational()) : sq.to_string());
    j["identities_hold"] =
        (sum == CycNum(-1)) && (sq == CycNum(p % 4 == 1 ? p : -p));
    return j.dump(indent);
}

} // namespace sl2pairs::json_io
