#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "girthpath/exact.hpp"
#include "girthpath/rational.hpp"

namespace girthpath::suites {

// Suites runnable from the CLI (`verify <name>`) and the acceptance binary.
// Instance corpora are deterministic functions of `seed`.
struct SuiteOptions {
    std::uint64_t seed = 1;
    int count = 0;    // 0: suite default (e.g. 300 sweeps, 500 oracle pairs)
    int d = 0;        // lll/stitch: restrict to a single d (0: default set)
    int n = 0;        // lll/stitch: instance size override
    Rat C{2, 1};
    double c_prime = 0.0;  // 0: grid choice
    long long max_resample_rounds = 1'000'000;
    std::optional<SolverLimits> limits;
};

struct SuiteResult {
    std::string suite;
    bool pass = true;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> failures;
    std::string summary;
    // Serialized JSON artifacts (certificates, stitch results) for suites
    // that produce them; one string per instance.
    std::vector<std::string> artifacts;
};

const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace girthpath::suites
