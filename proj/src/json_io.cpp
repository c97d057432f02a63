#include "cfc/json_io.hpp"

#include <limits>

namespace cfc {

Json big_to_json(const BigInt& v) {
    if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max()))
        return v.convert_to<std::uint64_t>();
    if (v < 0 && v >= BigInt(std::numeric_limits<std::int64_t>::min()))
        return v.convert_to<std::int64_t>();
    return v.str();
}

Json to_json(const Rational& r) {
    return Json{{"num", big_to_json(r.num)}, {"den", big_to_json(r.den)},
                {"float", r.to_double()}};
}

Json to_json(const IndexSet& s) { return Json(s.to_one_based()); }

Json to_json(const Superset& p) {
    Json arr = Json::array();
    for (const auto& part : p.parts) arr.push_back(to_json(part));
    return arr;
}

Json to_json(const CoverAnalysisReport& r) {
    Json j;
    j["s"] = r.s;
    j["l"] = r.l;
    j["mode"] = r.mode == AnalysisMode::exact ? "exact" : "sampled";
    j["total"] = big_to_json(r.total);
    j["n_bad"] = big_to_json(r.n_bad);
    j["n_good"] = big_to_json(r.n_good);
    j["epsilon"] = to_json(r.epsilon);
    if (r.mode == AnalysisMode::exact) {
        Json bad = Json::array();
        for (const auto& b : r.bad_sets) bad.push_back(to_json(b));
        j["bad_sets"] = std::move(bad);
        j["bad_sets_overflow"] = r.bad_sets_overflow;
    }
    if (r.sample_info) {
        j["sample_info"] = Json{{"trials", r.sample_info->trials},
                                {"seed", r.sample_info->seed},
                                {"std_error", r.sample_info->std_error}};
    }
    return j;
}

Json to_json(const DesignAnalysisReport& r) {
    Json j;
    j["s"] = r.s;
    j["l"] = r.l;
    j["model"] = r.model == SupersetModel::strict ? "strict" : "relaxed";
    j["total"] = big_to_json(r.total);
    j["n_bad"] = big_to_json(r.n_bad);
    j["n_good"] = big_to_json(r.n_good);
    j["epsilon"] = to_json(r.epsilon);
    Json bad = Json::array();
    for (const auto& p : r.bad_supersets) bad.push_back(to_json(p));
    j["bad_supersets"] = std::move(bad);
    j["bad_supersets_overflow"] = r.bad_overflow;
    return j;
}

Json to_json(const Prop4Report& r) {
    Json j;
    j["code_cf"] = r.code_cf;
    j["design_cf"] = r.design_cf;
    if (r.s_minus_1_checked) j["code_s_minus_1_cf"] = r.code_s_minus_1_cf;
    if (r.l_minus_1_checked) j["code_l_minus_1_cf"] = r.code_l_minus_1_cf;
    j["claim1_applicable"] = r.claim1_applicable;
    j["claim1_holds"] = r.claim1_holds;
    j["claim2_applicable"] = r.claim2_applicable;
    j["claim2_holds"] = r.claim2_holds;
    j["violation"] = r.violation();
    return j;
}

Json to_json(const ProjectionBoundReport& r) {
    Json j;
    j["eps_code"] = r.eps_code;
    j["factor"] = r.factor;
    j["bound"] = r.bound;
    if (r.eps_design) j["eps_design"] = *r.eps_design;
    j["holds"] = r.holds;
    return j;
}

Json to_json(const DecodeResult& r) {
    Json j;
    j["decoded"] = to_json(r.decoded);
    j["acceptable_checked"] = r.acceptable_checked;
    j["status"] = r.status == DecodeStatus::unique ? "unique" : "not_cf_ambiguous";
    return j;
}

Json to_json(const McEstimate& e) {
    return Json{{"trials", e.trials},
                {"successes", e.successes},
                {"p_hat", e.p_hat},
                {"std_error", e.std_error},
                {"seed", e.seed}};
}

Json to_json(const UnionWeightDistribution& d) {
    Json j;
    j["k_min"] = d.k_min;
    j["k_max"] = d.k_max;
    j["p"] = d.p;
    return j;
}

Json to_json(const bounds::BoundResult& r) {
    Json j;
    j["value"] = r.value;
    j["argmax_Q"] = r.argmax_q_cap;
    if (r.argmin_q == r.argmin_q) j["argmin_q"] = r.argmin_q;  // skip NaN
    j["q_hat"] = r.q_hat;
    j["z"] = r.z;
    if (r.y != 0.0) j["y"] = r.y;
    j["solver"] = Json{{"iterations", r.iterations}, {"residual", r.residual}};
    return j;
}

Json to_json(const bounds::AsymptoticRates& r) {
    return Json{{"rate_upper", r.rate_upper},
                {"rate_lower", r.rate_lower},
                {"capacity_lower_asym", r.capacity_lower_asym}};
}

}  // namespace cfc
