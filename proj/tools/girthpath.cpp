#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "girthpath/construct.hpp"
#include "girthpath/errors.hpp"
#include "girthpath/girth.hpp"
#include "girthpath/io.hpp"
#include "girthpath/json_io.hpp"
#include "girthpath/key_lemma.hpp"
#include "girthpath/lll.hpp"
#include "girthpath/scc.hpp"
#include "girthpath/suites.hpp"

namespace gp = girthpath;

namespace {

// Exit contract: 0 success, 1 assertion failure, 2 usage/parse error,
// 3 resource/scale limit.
enum ExitCode { kOk = 0, kAssertionFailure = 1, kUsageError = 2, kResourceLimit = 3 };

std::optional<gp::SolverLimits> limits_from_env() {
    gp::SolverLimits limits;
    const char* env = std::getenv("GIRTHPATH_LIMITS");
    if (!env) return std::nullopt;
    std::istringstream stream(env);
    std::string item;
    while (std::getline(stream, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = item.substr(0, eq);
        try {
            const long long value = std::stoll(item.substr(eq + 1));
            if (key == "dp") limits.max_dp_vertices = static_cast<int>(value);
            else if (key == "bb") limits.max_bb_vertices = static_cast<int>(value);
            else if (key == "budget") limits.node_budget = value;
        } catch (const std::exception&) {
            throw gp::parse_error("bad GIRTHPATH_LIMITS entry: " + item);
        }
    }
    return limits;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gp::parse_error("cannot open output file: " + path);
    out << content;
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty()) std::cout << content;
    else write_file(path, content);
}

struct GenerateCounterexampleArgs {
    int delta = 1;
    int g = 0;
    int a = 0;
    int b = 0;
    std::string output, dot_output, json_output;
};

int cmd_generate_counterexample(const GenerateCounterexampleArgs& args) {
    gp::CounterexampleParams params;
    if (args.g > 0) {
        if (args.a > 0 || args.b > 0)
            throw CLI::ValidationError("use either --g or --a/--b, not both");
        params = gp::proposition2_params(args.g, args.delta).params;
    } else {
        if (args.a <= 0 || args.b <= 0)
            throw CLI::ValidationError("need --g, or both --a and --b");
        params = {args.delta, args.a, args.b};
    }
    gp::Digraph d = gp::build_counterexample(params);
    std::cout << "girth=" << params.a + params.b
              << " ell=" << params.delta * params.b + params.a - 1 << '\n';
    emit(args.output, gp::canonical_edge_list(d));
    if (!args.dot_output.empty()) {
        std::ostringstream dot;
        gp::write_dot(d, dot);
        write_file(args.dot_output, dot.str());
    }
    if (!args.json_output.empty()) {
        nlohmann::json j = gp::graph_to_json(d);
        j["manifest"] = gp::to_json(gp::make_manifest(
            "generate counterexample",
            {{"delta", std::to_string(params.delta)},
             {"a", std::to_string(params.a)},
             {"b", std::to_string(params.b)}},
            0, gp::digest(d)));
        write_file(args.json_output, j.dump(2) + "\n");
    }
    return kOk;
}

struct GenerateRandomArgs {
    std::string kind;
    int n = 0;
    int d = 0;
    std::string c_text = "1";
    std::uint64_t seed = 0;
    std::string output;
};

int cmd_generate_random(const GenerateRandomArgs& args) {
    gp::GenSpec spec;
    if (args.kind == "out_regular") spec.kind = gp::GenKind::out_regular;
    else if (args.kind == "oriented_min_outdeg") spec.kind = gp::GenKind::oriented_min_outdeg;
    else if (args.kind == "cd_regular") spec.kind = gp::GenKind::cd_regular;
    else throw CLI::ValidationError("unknown --kind: " + args.kind);
    spec.n = args.n;
    spec.d_or_delta = args.d;
    spec.C = gp::parse_rat(args.c_text);
    spec.seed = args.seed;
    gp::Digraph d = gp::generate(spec);
    if (!gp::validate(d).ok()) throw std::logic_error("generator produced an invalid digraph");
    std::cerr << "n=" << d.vertex_count() << " m=" << d.arc_count()
              << " digest=" << gp::digest(d) << '\n';
    emit(args.output, gp::canonical_edge_list(d));
    return kOk;
}

struct AnalyzeArgs {
    std::string input;
    int delta = 0;
    bool skip_exact = false;
    std::string json_output;
    std::uint64_t seed = 0;
};

int cmd_analyze(const AnalyzeArgs& args, const std::optional<gp::SolverLimits>& env_limits) {
    const gp::SolverLimits limits = env_limits.value_or(gp::SolverLimits{});
    gp::Digraph d = gp::parse_edge_list_file(args.input);

    gp::ValidationReport validation = gp::validate(d);
    if (!validation.ok()) {
        for (const auto& v : validation.violations)
            std::cerr << "invariant violation: "
                      << (v.kind == gp::Violation::Kind::SelfLoop ? "self-loop" : "duplicate arc")
                      << " at " << v.arc.first << "->" << v.arc.second << '\n';
        return kAssertionFailure;
    }

    nlohmann::json j;
    bool ok = true;
    if (args.skip_exact) {
        gp::GirthResult g = gp::girth(d);
        j["instance_id"] = gp::digest(d);
        j["n"] = d.vertex_count();
        j["m"] = d.arc_count();
        j["delta"] = gp::degree_profile(d).min_out;
        j["girth"] = g.girth ? nlohmann::json(*g.girth) : nlohmann::json(nullptr);
        j["ell"] = nullptr;
        j["outcome"] = nullptr;
        j["bounds"] = nlohmann::json::object();
        j["claims"] = nlohmann::json::array();
        j["conjecture_probes"] = nlohmann::json::object();
    } else {
        gp::PathBoundsReport bounds = gp::verify_path_bounds(d, limits);
        std::optional<gp::KeyLemmaReport> lemma;
        if (bounds.oriented && bounds.delta >= 1) {
            const int delta = args.delta > 0 ? args.delta : bounds.delta;
            lemma = gp::analyze_key_lemma(d, delta, limits, /*probe_claims=*/true);
        }
        j = gp::analysis_report_json(d, bounds, lemma);
        ok = bounds.all_asserted_hold();
        if (lemma) {
            if ((lemma->outcome == gp::KeyLemmaOutcome::LongPath) != (lemma->ell >= 2 * lemma->delta))
                ok = false;
            if (lemma->outcome == gp::KeyLemmaOutcome::SmallSubgraph) {
                if (static_cast<int>(lemma->s_vertices.size()) > lemma->delta) ok = false;
                if (lemma->s_min_outdeg < 2 * lemma->delta - lemma->ell) ok = false;
                for (const auto& claim : lemma->claims_checked)
                    if (!claim.holds) ok = false;
            }
        }
    }
    j["manifest"] = gp::to_json(gp::make_manifest(
        "analyze", {{"input", args.input}, {"skip_exact", args.skip_exact ? "1" : "0"}},
        args.seed, gp::digest(d)));
    emit(args.json_output, j.dump(2) + "\n");
    if (args.json_output.empty()) std::cout << '\n';
    return ok ? kOk : kAssertionFailure;
}

struct VerifyArgs {
    std::string suite;
    std::uint64_t seed = 1;
    int count = 0;
    int d = 0;
    int n = 0;
    std::string c_text = "2";
    double c_prime = 0.0;
    std::string config_file;
    std::string csv_output;
    std::string json_output;
};

// Partition/stitch configuration file: a JSON object with any of the keys
// C, d, n, c_prime, seed, max_resample_rounds. Explicit flags win.
void apply_config_file(const std::string& path, gp::suites::SuiteOptions& opts) {
    std::ifstream in(path);
    if (!in) throw gp::parse_error("cannot open config file: " + path);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw gp::parse_error("malformed config file: " + path);
    try {
        if (j.contains("C")) {
            if (j["C"].is_string()) opts.C = gp::parse_rat(j["C"].get<std::string>());
            else opts.C = gp::parse_rat(j["C"].dump());
        }
        if (j.contains("d")) opts.d = j["d"].get<int>();
        if (j.contains("n")) opts.n = j["n"].get<int>();
        if (j.contains("c_prime")) opts.c_prime = j["c_prime"].get<double>();
        if (j.contains("seed")) opts.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("max_resample_rounds"))
            opts.max_resample_rounds = j["max_resample_rounds"].get<long long>();
    } catch (const nlohmann::json::exception& e) {
        throw gp::parse_error(std::string("bad config value: ") + e.what());
    }
}

int cmd_verify(const VerifyArgs& args, const std::optional<gp::SolverLimits>& limits) {
    gp::suites::SuiteOptions opts;
    if (!args.config_file.empty()) apply_config_file(args.config_file, opts);
    if (args.seed != 1) opts.seed = args.seed;
    if (args.count) opts.count = args.count;
    if (args.d) opts.d = args.d;
    if (args.n) opts.n = args.n;
    if (args.c_text != "2") opts.C = gp::parse_rat(args.c_text);
    if (args.c_prime > 0) opts.c_prime = args.c_prime;
    opts.limits = limits;  // env override only; suites pick their own defaults
    gp::suites::SuiteResult result = gp::suites::run_suite(args.suite, opts);

    std::cout << (result.pass ? "PASS" : "FAIL") << " " << result.suite << ": " << result.summary
              << '\n';
    for (const auto& failure : result.failures) std::cout << "  ! " << failure << '\n';

    if (!args.csv_output.empty()) {
        std::ostringstream csv;
        for (std::size_t i = 0; i < result.header.size(); ++i)
            csv << (i ? "," : "") << result.header[i];
        csv << '\n';
        for (const auto& row : result.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) csv << (i ? "," : "") << row[i];
            csv << '\n';
        }
        write_file(args.csv_output, csv.str());
    }
    if (!args.json_output.empty()) {
        nlohmann::json j;
        j["suite"] = result.suite;
        j["pass"] = result.pass;
        j["summary"] = result.summary;
        nlohmann::json artifacts = nlohmann::json::array();
        for (const auto& a : result.artifacts) artifacts.push_back(nlohmann::json::parse(a));
        j["artifacts"] = std::move(artifacts);
        j["manifest"] = gp::to_json(gp::make_manifest(
            "verify " + args.suite, {{"count", std::to_string(opts.count)}}, opts.seed, ""));
        write_file(args.json_output, j.dump(2) + "\n");
    }
    return result.pass ? kOk : kAssertionFailure;
}

struct ExportArgs {
    std::string input;
    std::string format;
    std::string output;
};

int cmd_export(const ExportArgs& args) {
    std::ifstream in(args.input, std::ios::binary);
    if (!in) throw gp::parse_error("cannot open file: " + args.input);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    gp::Digraph d = [&] {
        auto first = content.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && content[first] == '{') {
            nlohmann::json j = nlohmann::json::parse(content, nullptr, false);
            if (j.is_discarded()) throw gp::parse_error("malformed JSON input");
            return gp::graph_from_json(j);
        }
        std::istringstream stream(content);
        return gp::parse_edge_list(stream);
    }();

    if (args.format == "dot") {
        std::ostringstream out;
        gp::write_dot(d, out);
        emit(args.output, out.str());
    } else if (args.format == "json") {
        nlohmann::json j = gp::graph_to_json(d);
        j["manifest"] = gp::to_json(
            gp::make_manifest("export", {{"input", args.input}, {"format", "json"}}, 0,
                              gp::digest(d)));
        emit(args.output, j.dump(2) + "\n");
    } else if (args.format == "edgelist") {
        emit(args.output, gp::canonical_edge_list(d));
    } else {
        std::cerr << "unsupported conversion: " << args.format
                  << " (expected dot, json or edgelist; CSV is the sweep output format)\n";
        return kUsageError;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"girth and longest directed path toolkit"};
    app.set_version_flag("--version", std::string(gp::kToolVersion));
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "construct instances");
    gen->require_subcommand(1);

    GenerateCounterexampleArgs cx_args;
    auto* cx = gen->add_subcommand("counterexample", "build a D_{a,b} lift instance");
    cx->add_option("--delta", cx_args.delta, "minimum out-degree")->required();
    cx->add_option("--g", cx_args.g, "target girth (chooses a and b)");
    cx->add_option("--a", cx_args.a, "lift parameter a");
    cx->add_option("--b", cx_args.b, "lift parameter b");
    cx->add_option("-o,--output", cx_args.output, "edge-list output file (default stdout)");
    cx->add_option("--dot", cx_args.dot_output, "also write a DOT rendering");
    cx->add_option("--json", cx_args.json_output, "also write the graph as JSON");

    GenerateRandomArgs rnd_args;
    auto* rnd = gen->add_subcommand("random", "seeded random instance");
    rnd->add_option("--kind", rnd_args.kind,
                    "out_regular | oriented_min_outdeg | cd_regular")->required();
    rnd->add_option("--n", rnd_args.n, "vertex count")->required();
    rnd->add_option("--d", rnd_args.d, "degree parameter")->required();
    rnd->add_option("--C", rnd_args.c_text, "in-degree ratio C (cd_regular)");
    rnd->add_option("--seed", rnd_args.seed, "random seed")->required();
    rnd->add_option("-o,--output", rnd_args.output, "edge-list output file (default stdout)");

    AnalyzeArgs an_args;
    auto* an = app.add_subcommand("analyze", "exact analysis of an edge-list instance");
    an->add_option("file", an_args.input, "edge-list input")->required();
    an->add_option("--delta", an_args.delta, "delta for the key-lemma analysis (default: min out-degree)");
    an->add_flag("--skip-exact", an_args.skip_exact, "skip the exact longest-path analysis");
    an->add_option("--json", an_args.json_output, "report output file (default stdout)");

    VerifyArgs vf_args;
    auto* vf = app.add_subcommand("verify", "run a named verification suite");
    vf->add_option("suite", vf_args.suite, "one of: claim1 prop2 thm2-oriented thm1 keylemma eq1 lll stitch oracle")
        ->required();
    vf->add_option("--seed", vf_args.seed, "corpus seed");
    vf->add_option("--count", vf_args.count, "instance count override");
    vf->add_option("--d", vf_args.d, "lll/stitch: degree parameter");
    vf->add_option("--n", vf_args.n, "lll/stitch: vertex count");
    vf->add_option("--C", vf_args.c_text, "lll/stitch: in-degree ratio");
    vf->add_option("--c-prime", vf_args.c_prime, "lll/stitch: partition constant c'");
    vf->add_option("--config", vf_args.config_file,
                   "JSON config file (keys: C, d, n, c_prime, seed, max_resample_rounds)");
    vf->add_option("--csv", vf_args.csv_output, "per-instance CSV output file");
    vf->add_option("--json", vf_args.json_output,
                   "JSON output with per-instance artifacts (certificates, stitch results)");

    ExportArgs ex_args;
    auto* ex = app.add_subcommand("export", "convert between edge-list, JSON and DOT");
    ex->add_option("file", ex_args.input, "edge-list or JSON input")->required();
    ex->add_option("--format", ex_args.format, "dot | json | edgelist")->required();
    ex->add_option("-o,--output", ex_args.output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        const std::optional<gp::SolverLimits> limits = limits_from_env();
        if (cx->parsed()) return cmd_generate_counterexample(cx_args);
        if (rnd->parsed()) return cmd_generate_random(rnd_args);
        if (an->parsed()) return cmd_analyze(an_args, limits);
        if (vf->parsed()) {
            if (!gp::suites::is_suite_name(vf_args.suite)) {
                std::cerr << "unknown suite: " << vf_args.suite << '\n';
                return kUsageError;
            }
            return cmd_verify(vf_args, limits);
        }
        if (ex->parsed()) return cmd_export(ex_args);
        return kUsageError;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const gp::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsageError;
    } catch (const gp::scale_error& e) {
        std::cerr << "scale limit: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const gp::budget_error& e) {
        std::cerr << "budget limit: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const gp::generation_error& e) {
        std::cerr << "generation failed: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const gp::convergence_error& e) {
        std::cerr << "no convergence: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid arguments: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return kAssertionFailure;
    }
}
