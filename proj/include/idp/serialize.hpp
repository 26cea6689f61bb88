#pragma once

// JSON and plain-text encodings of the reports. Every number written is an exact integer.

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "idp/pipeline.hpp"

namespace idp {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline std::int64_t to_int64(const BigInt& v) {
    if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN)) throw OverflowError("value " + v.str() + " exceeds int64");
    return static_cast<std::int64_t>(v);
}

inline json params_json(const QVector& q) {
    return {{"r1", q.r1()}, {"x1", q.x1()}, {"d", q.d()}, {"N", q.volume()}};
}

inline json to_json(const PointConfiguration& cfg) {
    json cols = json::array();
    for (std::size_t i = 0; i < cfg.size(); ++i) cols.push_back({{"label", cfg.label(i)}, {"coords", cfg.column(i)}});
    return {{"schema", kSchemaVersion}, {"r1", cfg.q().r1()}, {"x1", cfg.q().x1()}, {"d", cfg.q().d()}, {"columns", cols}};
}

/// Inverse of to_json(PointConfiguration); validates the parameters and column count.
inline PointConfiguration point_configuration_from_json(const json& j) {
    const QVector q = build_q(j.at("r1").get<std::int64_t>(), j.at("x1").get<std::int64_t>());
    if (j.at("d").get<std::int64_t>() != q.d()) throw DimensionMismatch("d does not match r1 + x1 - 1");
    std::vector<IntVector> cols;
    for (const auto& c : j.at("columns")) {
        auto v = c.at("coords").get<IntVector>();
        if (v.size() != static_cast<std::size_t>(q.d())) throw DimensionMismatch("column of wrong dimension");
        cols.push_back(std::move(v));
    }
    return PointConfiguration(q, std::move(cols));
}

inline json to_json(const PointsReport& rep) {
    json j = to_json(rep.config);
    if (rep.bruteforce_count) {
        j["verified"] = rep.match;
        j["bruteforce_count"] = *rep.bruteforce_count;
    }
    return j;
}

inline json to_json(const HStarReport& rep) {
    json j = {{"schema", kSchemaVersion}, {"params", params_json(rep.q)}, {"hstar", rep.h.coeffs}};
    if (rep.verified) {
        json dil = json::array();
        for (const auto& c : rep.dilations) {
            json e = {{"t", c.t}, {"ehrhart", c.formula}};
            e["bruteforce"] = c.bruteforce ? json(*c.bruteforce) : json(nullptr);
            dil.push_back(e);
        }
        j["checks"] = {{"sum_is_volume", rep.sum_ok},
                       {"h0_is_one", rep.h0_ok},
                       {"h1_is_r1_plus_2", rep.h1_ok},
                       {"unimodal", rep.unimodal},
                       {"dilations", dil}};
        j["pass"] = rep.pass();
    }
    return j;
}

inline json monomial_json(const Monomial& m) { return m.exponents(); }

inline json to_json(const GroebnerFamily& G) {
    const VariableNames names = ToricRing(G.q).names();
    json gens = json::array();
    for (const auto& g : G.generators) {
        gens.push_back({{"tag", std::string(to_string(g.origin))},
                        {"param", g.param},
                        {"text", to_text(g.binomial, names)},
                        {"lead", monomial_json(g.binomial.lead())},
                        {"tail", monomial_json(g.binomial.tail())}});
    }
    json pairs = json::array();
    for (const auto& p : G.pairs) pairs.push_back({{"pair", {p.i, p.j}}, {"companion", {p.k, p.l}}});
    json vars = json::array();
    for (std::size_t i = 0; i < names.size(); ++i) vars.push_back(names(i));
    return {{"schema", kSchemaVersion},
            {"params", params_json(G.q)},
            {"variables", vars},
            {"num_generators", G.generators.size()},
            {"B", pairs},
            {"generators", gens}};
}

inline json to_json(const GbVerifyReport& rep) {
    json j = {{"schema", kSchemaVersion},
              {"params", params_json(rep.q)},
              {"num_generators", rep.num_generators},
              {"spairs_total", rep.buchberger ? rep.buchberger->spairs_total : 0},
              {"spairs_reduced_to_zero", rep.buchberger ? rep.buchberger->reduced_to_zero : 0},
              {"squarefree", rep.squarefree},
              {"injectivity_max_degree", rep.injectivity_max_degree},
              {"pass", rep.pass()}};
    if (rep.injectivity) {
        json deg = json::array();
        for (const auto& s : rep.injectivity->degrees)
            deg.push_back({{"degree", s.degree}, {"standard", s.standard}, {"distinct_images", s.distinct}, {"ehrhart", s.ehrhart}});
        j["injectivity"] = deg;
    }
    if (!rep.pass()) j["failure"] = {{"stage", rep.failure_stage}, {"detail", rep.failure_detail}};
    return j;
}

inline json to_json(const TriangulationReport& rep) {
    const VariableNames names = ToricRing(rep.q).names();
    const auto& T = rep.triangulation;
    json facets = json::array(), labels = json::array(), vols = json::array();
    for (std::size_t f = 0; f < T.facets.size(); ++f) {
        facets.push_back(T.facets[f]);
        json l = json::array();
        for (auto idx : T.facets[f]) l.push_back(names(idx));
        labels.push_back(l);
    }
    for (const auto& v : T.volumes) vols.push_back(to_int64(v));
    json j = {{"schema", kSchemaVersion},
              {"params", params_json(rep.q)},
              {"num_facets", T.facets.size()},
              {"all_unimodular", rep.all_unimodular},
              {"volume_sum", to_int64(T.volume_sum())},
              {"regular_certified", rep.regular_certified},
              {"pass", rep.pass()},
              {"facets", facets},
              {"facet_labels", labels},
              {"volumes", vols}};
    if (rep.certificate) j["weight_base"] = to_int64(rep.certificate->base);
    if (!rep.pass()) j["failure"] = {{"stage", rep.failure_stage}, {"detail", rep.failure_detail}};
    return j;
}

/// Geomview-style nOFF listing: the points of A' followed by one line per facet.
inline std::string to_off(const TriangulationReport& rep) {
    const auto cfg = lattice_points_formula(rep.q);
    const auto& T = rep.triangulation;
    std::ostringstream os;
    os << "nOFF\n" << cfg.dim() << "\n" << cfg.size() << ' ' << T.facets.size() << " 0\n";
    for (const auto& c : cfg.columns()) {
        for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
        os << '\n';
    }
    for (const auto& f : T.facets) {
        os << f.size();
        for (auto idx : f) os << ' ' << idx;
        os << '\n';
    }
    return os.str();
}

inline json to_json(const SweepPoint& p, bool with_timings = true) {
    json j = {{"r1", p.r1},
              {"x1", p.x1},
              {"latticePointsOK", p.latticePointsOK},
              {"hstarOK", p.hstarOK},
              {"gbConstructed", p.gbConstructed},
              {"buchbergerPass", p.buchbergerPass},
              {"squarefree", p.squarefree},
              {"injectivityPass", p.injectivityPass},
              {"supportShapeOK", p.supportShapeOK},
              {"triangulationUnimodular", p.triangulationUnimodular},
              {"regularCertified", p.regularCertified},
              {"pass", p.pass()}};
    if (!p.error.empty()) j["error"] = p.error;
    if (with_timings) {
        j["timings_ms"] = {{"points", p.timings.points_ms},
                           {"hstar", p.timings.hstar_ms},
                           {"gb", p.timings.gb_ms},
                           {"triangulation", p.timings.triangulation_ms}};
    }
    return j;
}

inline json to_json(const SweepReport& rep, bool with_timings = true) {
    json grid = json::array(), pts = json::array();
    for (const auto& [r1, x1] : rep.grid) grid.push_back({r1, x1});
    for (const auto& p : rep.points) pts.push_back(to_json(p, with_timings));
    return {{"schema", kSchemaVersion}, {"grid", grid}, {"perPoint", pts}, {"overallPass", rep.overallPass()}};
}

}  // namespace idp
