#include "cyclo/report.hpp"

namespace cyclo {

std::string big_str(const BigInt& v) { return v.get_str(); }

Json to_json(const FFElem& e) {
    Json coeffs = Json::array();
    for (i64 c : e.c) coeffs.push_back(c);
    return coeffs;
}

Json to_json(const SplitContext& ctx) {
    Json j;
    j["p"] = ctx.p;
    j["q"] = ctx.q;
    if (ctx.uv) {
        j["u"] = big_str(ctx.uv->first);
        j["v"] = big_str(ctx.uv->second);
    }
    j["n"] = ctx.n;
    j["d"] = ctx.d;
    j["r"] = ctx.r;
    j["f"] = ctx.f;
    j["kappa"] = big_str(ctx.kappa_value);
    j["xi_bar"] = ctx.xi_bar;
    Json modulus = Json::array();
    for (i64 c : ctx.field->modulus) modulus.push_back(c);
    j["field"] = Json{{"q", ctx.field->q}, {"f", ctx.field->f}, {"modulus", modulus}};
    Json qs = Json::array();
    for (const auto& zb : ctx.q_list) qs.push_back(to_json(zb));
    j["q_list"] = qs;
    if (ctx.zeta_pin) j["zeta_pin"] = *ctx.zeta_pin;
    return j;
}

Json to_json(const SplitReport& rep) {
    Json j;
    j["p"] = rep.p;
    j["q"] = rep.q;
    j["n"] = rep.n;
    j["family"] = family_label_name(rep.label);
    if (rep.m) j["m"] = *rep.m;
    j["generators"] = rep.generator_names;
    Json matrix = Json::array();
    for (const auto& row : rep.mu) {
        Json r = Json::array();
        for (const auto& mu : row) {
            if (mu)
                r.push_back(*mu);
            else
                r.push_back(nullptr);
        }
        matrix.push_back(r);
    }
    j["mu"] = matrix;
    j["totally_split"] = rep.totally_split;
    Json skips = Json::array();
    for (const auto& s : rep.skipped)
        skips.push_back(Json{{"q_index", s.q_index}, {"generator", s.generator}, {"reason", s.reason}});
    j["skipped"] = skips;
    return j;
}

Json to_json(const VerifyReport& rep) {
    Json j;
    j["case"] = rep.label;
    Json conds = Json::array();
    for (const auto& c : rep.conditions)
        conds.push_back(Json{{"condition", c.description},
                             {"expected", c.expected},
                             {"observed", c.observed},
                             {"pass", c.pass}});
    j["conditions"] = conds;
    j["overall"] = rep.overall;
    j["probative"] = rep.probative;
    j["notes"] = rep.notes;
    return j;
}

Json to_json(const WitnessResult& res) {
    Json j;
    j["found"] = res.found;
    if (res.q)
        j["q"] = *res.q;
    else
        j["q"] = nullptr;
    j["primes_scanned"] = res.primes_scanned;
    Json skips = Json::array();
    for (const auto& s : res.skipped) skips.push_back(Json{{"q", s.q}, {"reason", s.reason}});
    j["primes_skipped"] = skips;
    if (res.detail_split) j["detail"] = to_json(*res.detail_split);
    if (!res.sub_reports.empty()) {
        Json subs = Json::array();
        for (const auto& s : res.sub_reports)
            subs.push_back(
                Json{{"n", s.n}, {"xi_index", s.xi_index}, {"totally_split", s.totally_split}});
        j["sub_reports"] = subs;
    }
    if (!res.crit_findings.empty() || res.marker || res.criterion_satisfied) {
        Json finds = Json::array();
        for (const auto& f : res.crit_findings)
            finds.push_back(Json{{"q", f.q}, {"n", f.n}, {"xi_index", f.xi_index}, {"m", f.m}});
        j["total_splits"] = finds;
        j["criterion_satisfied"] = res.criterion_satisfied;
    }
    if (res.marker) j["marker"] = *res.marker;
    return j;
}

Json to_json(const RegularityReport& rep) {
    Json j;
    j["p"] = rep.p;
    j["regular"] = rep.regular;
    j["irregular_indices"] = rep.irregular_indices;
    return j;
}

Json to_json(const P3ScanResult& res) {
    Json j;
    Json pairs = Json::array();
    for (const auto& r : res.pairs) {
        Json e;
        e["s"] = r.s;
        e["t"] = r.t;
        e["u"] = big_str(r.u);
        e["v"] = big_str(r.v);
        e["all_split"] = r.all_split;
        e["primes_checked"] = r.primes_checked;
        if (r.failing_q) e["failing_q"] = *r.failing_q;
        pairs.push_back(e);
    }
    j["pairs"] = pairs;
    j["pairs_rejected"] = res.pairs_rejected;
    j["all_split"] = res.all_split;
    return j;
}

Json to_json(const RankResult& res) {
    Json j;
    j["rank"] = res.rank;
    j["progression"] = res.progression;
    j["rows_used"] = res.rows_used;
    j["rows_dropped"] = res.rows_dropped;
    return j;
}

Json make_envelope(const std::string& command, Json inputs, Json results,
                   std::optional<double> timing_seconds) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["results"] = std::move(results);
    if (timing_seconds)
        j["timing"] = Json{{"seconds", *timing_seconds}};
    else
        j["timing"] = nullptr;
    j["library_version"] = kLibraryVersion;
    return j;
}

}  // namespace cyclo
