#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "girthpath/digraph.hpp"
#include "girthpath/key_lemma.hpp"
#include "girthpath/lll.hpp"

namespace girthpath {

inline constexpr const char* kToolVersion = "girthpath 0.1.0";

// Reproducibility header embedded in every JSON artifact. The timestamp
// honours SOURCE_DATE_EPOCH when set, so artifacts can be rebuilt
// byte-for-byte.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::uint64_t seed = 0;
    std::string tool_version = kToolVersion;
    std::string instance_digest;
    std::string timestamp;  // UTC ISO-8601
};

RunManifest make_manifest(const std::string& command,
                          std::map<std::string, std::string> parameters, std::uint64_t seed,
                          const std::string& instance_digest);

nlohmann::json to_json(const RunManifest& m);
nlohmann::json graph_to_json(const Digraph& d);
Digraph graph_from_json(const nlohmann::json& j);  // throws parse_error

nlohmann::json to_json(const PathWitness& p);
nlohmann::json to_json(const ClaimOutcome& c);
nlohmann::json to_json(const BoundCheck& b);
nlohmann::json to_json(const PathBoundsReport& r);
nlohmann::json to_json(const KeyLemmaReport& r);
nlohmann::json to_json(const PartitionCertificate& c);
nlohmann::json to_json(const StitchResult& s);
nlohmann::json to_json(const Theorem4Result& r);

// The analyze-command schema: instance identification, exact statistics,
// bound checks, claims and conjecture probes in one object.
nlohmann::json analysis_report_json(const Digraph& d, const PathBoundsReport& bounds,
                                    const std::optional<KeyLemmaReport>& lemma);

}  // namespace girthpath
