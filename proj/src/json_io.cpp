#include "girthpath/json_io.hpp"

#include <cstdlib>
#include <ctime>

#include "girthpath/errors.hpp"
#include "girthpath/io.hpp"

namespace girthpath {

namespace {

std::string iso8601_utc_now() {
    std::time_t now = std::time(nullptr);
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        char* end = nullptr;
        long long v = std::strtoll(epoch, &end, 10);
        if (end && *end == '\0') now = static_cast<std::time_t>(v);
    }
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

nlohmann::json vertices_json(const std::vector<Vertex>& vs) { return nlohmann::json(vs); }

}  // namespace

RunManifest make_manifest(const std::string& command,
                          std::map<std::string, std::string> parameters, std::uint64_t seed,
                          const std::string& instance_digest) {
    RunManifest m;
    m.command = command;
    m.parameters = std::move(parameters);
    m.seed = seed;
    m.instance_digest = instance_digest;
    m.timestamp = iso8601_utc_now();
    return m;
}

nlohmann::json to_json(const RunManifest& m) {
    return {{"command", m.command},       {"parameters", m.parameters},
            {"seed", m.seed},             {"tool_version", m.tool_version},
            {"instance_digest", m.instance_digest}, {"timestamp", m.timestamp}};
}

nlohmann::json graph_to_json(const Digraph& d) {
    nlohmann::json arcs = nlohmann::json::array();
    for (const auto& [u, v] : d.arcs()) arcs.push_back({u, v});
    return {{"format", "girthpath-graph"}, {"n", d.vertex_count()}, {"arcs", std::move(arcs)}};
}

Digraph graph_from_json(const nlohmann::json& j) {
    try {
        int n = j.at("n").get<int>();
        std::vector<Arc> arcs;
        for (const auto& arc : j.at("arcs"))
            arcs.emplace_back(arc.at(0).get<int>(), arc.at(1).get<int>());
        return Digraph(n, arcs);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("malformed graph JSON: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw parse_error(std::string("malformed graph JSON: ") + e.what());
    }
}

nlohmann::json to_json(const PathWitness& p) {
    return {{"vertices", vertices_json(p.vertices)}, {"length", p.length()}};
}

nlohmann::json to_json(const ClaimOutcome& c) {
    nlohmann::json j{{"id", c.id}, {"holds", c.holds}};
    if (!c.counterwitness.empty()) j["counterwitness"] = c.counterwitness;
    return j;
}

namespace {

const char* status_name(BoundStatus s) {
    switch (s) {
        case BoundStatus::satisfied: return "satisfied";
        case BoundStatus::violated: return "violated";
        default: return "not_applicable";
    }
}

}  // namespace

nlohmann::json to_json(const BoundCheck& b) {
    nlohmann::json j{{"name", b.name}, {"status", status_name(b.status)}, {"asserted", b.asserted}};
    if (b.threshold) {
        j["threshold"] = b.threshold->str();
        j["threshold_value"] = b.threshold->to_double();
    }
    return j;
}

nlohmann::json to_json(const PathBoundsReport& r) {
    nlohmann::json bounds = nlohmann::json::object();
    for (const auto& check : r.checks) bounds[check.name] = to_json(check);
    nlohmann::json probes{{"conjecture1_path_2delta", r.conjecture1_met}};
    if (r.conjecture7_ratio) probes["conjecture7_ratio"] = *r.conjecture7_ratio;
    else probes["conjecture7_ratio"] = nullptr;
    return {{"n", r.n},
            {"m", r.m},
            {"delta", r.delta},
            {"ell", r.ell},
            {"girth", r.girth_value ? nlohmann::json(*r.girth_value) : nlohmann::json(nullptr)},
            {"oriented", r.oriented},
            {"witness", to_json(r.witness)},
            {"bounds", std::move(bounds)},
            {"conjecture_probes", std::move(probes)},
            {"all_asserted_hold", r.all_asserted_hold()}};
}

nlohmann::json to_json(const KeyLemmaReport& r) {
    nlohmann::json j{{"delta", r.delta},
                     {"ell", r.ell},
                     {"outcome", r.outcome == KeyLemmaOutcome::LongPath ? "LongPath" : "SmallSubgraph"},
                     {"best_path", to_json(r.best_path)},
                     {"core_vertices", vertices_json(r.core_vertices)},
                     {"core_out_degree", r.core_out_degree}};
    nlohmann::json claims = nlohmann::json::array();
    for (const auto& claim : r.claims_checked) claims.push_back(to_json(claim));
    j["claims"] = std::move(claims);
    j["claims_are_probe"] = r.claims_are_probe;
    if (r.outcome == KeyLemmaOutcome::SmallSubgraph) {
        j["S_vertices"] = vertices_json(r.s_vertices);
        j["S_min_outdeg"] = r.s_min_outdeg;
        j["S_min_outdeg_core"] = r.s_min_outdeg_core;
        j["a_index"] = r.a_index;
        j["A_set"] = vertices_json(r.a_set);
        j["B_set"] = vertices_json(r.b_set);
        j["B_minus_set"] = vertices_json(r.b_minus_set);
        j["floor_stated"] = 2 * r.delta - r.ell;
        j["floor_sharp"] = 2 * r.delta + 1 - r.ell;
        j["floor_sharp_holds"] = r.s_min_outdeg >= 2 * r.delta + 1 - r.ell;
    }
    return j;
}

nlohmann::json to_json(const PartitionCertificate& c) {
    return {{"t", c.t},
            {"parts", c.parts},
            {"sizes", c.sizes},
            {"degree_floor", c.degree_floor},
            {"min_cross_degree", c.min_cross_degree},
            {"resample_rounds_used", c.resample_rounds_used},
            {"fake_vertex_count", c.fake_vertex_count}};
}

nlohmann::json to_json(const StitchResult& s) {
    nlohmann::json j{{"path", to_json(s.path)},
                     {"segment_lengths", s.segment_lengths},
                     {"connectors_used", s.connectors_used},
                     {"guaranteed_floor", s.guaranteed_floor}};
    if (s.asymptotic_target) j["asymptotic_target"] = *s.asymptotic_target;
    return j;
}

nlohmann::json to_json(const Theorem4Result& r) {
    nlohmann::json j{{"stitch", to_json(r.stitch)},
                     {"t", r.t},
                     {"d", r.d},
                     {"C", r.C.str()},
                     {"c_prime", r.c_prime},
                     {"c", r.c},
                     {"fallback", r.fallback},
                     {"girth", r.girth_value ? nlohmann::json(*r.girth_value) : nlohmann::json(nullptr)},
                     {"achieved_length", r.stitch.path.length()}};
    if (r.certificate) j["certificate"] = to_json(*r.certificate);
    if (r.target) j["target"] = *r.target;
    return j;
}

nlohmann::json analysis_report_json(const Digraph& d, const PathBoundsReport& bounds,
                                    const std::optional<KeyLemmaReport>& lemma) {
    nlohmann::json j = to_json(bounds);
    j["instance_id"] = digest(d);
    if (lemma) {
        j["outcome"] = lemma->outcome == KeyLemmaOutcome::LongPath ? "LongPath" : "SmallSubgraph";
        j["key_lemma"] = to_json(*lemma);
        nlohmann::json claims = nlohmann::json::array();
        for (const auto& claim : lemma->claims_checked) claims.push_back(to_json(claim));
        j["claims"] = std::move(claims);
    } else {
        j["outcome"] = nullptr;
        j["key_lemma"] = nullptr;
        j["claims"] = nlohmann::json::array();
    }
    return j;
}

}  // namespace girthpath
