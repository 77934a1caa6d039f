#include "girthpath/key_lemma.hpp"

#include <algorithm>
#include <stdexcept>

#include "girthpath/girth.hpp"
#include "girthpath/scc.hpp"

namespace girthpath {

BoundTable bound_table(int n, int delta, std::optional<int> girth_value) {
    BoundTable t;
    if (girth_value) {
        t.thomasse = static_cast<long long>(delta) * (*girth_value - 1);
        t.thm1 = Rat(2LL * delta * (*girth_value - 1), *girth_value);
        if (*girth_value >= 74)
            t.shen = Rat((2LL * (*girth_value - 73) - 1) * delta, *girth_value - 73);
    } else {
        t.thm1 = Rat(2LL * delta);
    }
    t.thm2_oriented = Rat(3LL * delta, 2);
    t.thm2_girth4 = Rat(16535LL * delta, 10000);
    t.ch_cycle = ceil_div(2LL * n, delta + 1);
    t.hkn_threshold = Rat(3465LL * n, 10000);
    return t;
}

ClaimOutcome check_claim_no_two_long_cycles(const Digraph& d, int delta,
                                            const SolverLimits& limits) {
    ClaimOutcome outcome{"claim2_no_two_disjoint_long_cycles", true, {}};
    if (auto pair = find_two_disjoint_cycles(d, delta + 1, limits)) {
        outcome.holds = false;
        outcome.counterwitness = {pair->first.vertices, pair->second.vertices};
    }
    return outcome;
}

ClaimOutcome check_claim_outneighbours_on_path(const Digraph& d, const PathWitness& p,
                                               int a_index) {
    if (!p.valid_in(d)) throw std::invalid_argument("claim check on an invalid path");
    if (a_index < 1 || a_index > p.length())
        throw std::invalid_argument("cycle-bound index out of range");
    ClaimOutcome outcome{"claim3_outneighbours_on_path", true, {}};
    std::vector<char> on_path(d.vertex_count(), 0);
    for (Vertex v : p.vertices) on_path[v] = 1;
    for (Vertex w : d.out(p.vertices[a_index - 1])) {
        if (!on_path[w]) {
            outcome.holds = false;
            outcome.counterwitness.push_back({w});
        }
    }
    return outcome;
}

ClaimOutcome check_claim_bminus_into_cycle(const Digraph& d, const PathWitness& p,
                                           int a_index) {
    if (!p.valid_in(d)) throw std::invalid_argument("claim check on an invalid path");
    if (a_index < 1 || a_index > p.length())
        throw std::invalid_argument("cycle-bound index out of range");
    ClaimOutcome outcome{"claim4_bminus_into_cycle", true, {}};

    const auto& seq = p.vertices;
    const int ell = p.length();
    std::vector<int> position(d.vertex_count(), -1);
    for (int i = 0; i <= ell; ++i) position[seq[i]] = i;

    std::vector<char> on_cycle(d.vertex_count(), 0);
    for (int i = a_index; i <= ell; ++i) on_cycle[seq[i]] = 1;

    // B: out-neighbours of v_{a-1} on the cycle. B^-: their predecessors
    // along the cycle (the predecessor of v_a is the path endpoint).
    for (Vertex w : d.out(seq[a_index - 1])) {
        if (position[w] < a_index) continue;
        Vertex pred = position[w] == a_index ? seq[ell] : seq[position[w] - 1];
        for (Vertex z : d.out(pred)) {
            if (!on_cycle[z]) {
                outcome.holds = false;
                outcome.counterwitness.push_back({pred, z});
            }
        }
    }
    return outcome;
}

namespace {

struct Core {
    Digraph graph;
    std::vector<Vertex> to_original;
};

// Alternates component restriction and arc pruning until the graph is both
// strongly connected and exactly delta-out-regular. Restriction keeps a
// component with internal min out-degree >= delta, which always exists while
// the whole graph has min out-degree >= delta.
Core normalize_core(const Digraph& d, int delta) {
    Core core;
    core.graph = d;
    core.to_original.resize(d.vertex_count());
    for (Vertex v = 0; v < d.vertex_count(); ++v) core.to_original[v] = v;

    while (true) {
        auto comp = min_outdeg_strong_subgraph(core.graph, delta);
        if (!comp)
            throw std::logic_error("no strong component with sufficient out-degree");
        std::vector<Vertex> mapped(comp->graph.vertex_count());
        for (int i = 0; i < comp->graph.vertex_count(); ++i)
            mapped[i] = core.to_original[comp->to_original[i]];
        core.graph = prune_to_exact_outdegree(comp->graph, delta);
        core.to_original = std::move(mapped);
        if (strong_components(core.graph).size() <= 1) return core;
    }
}

struct Derivation {
    CycleBound choice;  // maximum path with maximum cycle bound, lex-least
    bool valid = false;
};

// With require_positive_a (probe mode at ell == 2*delta) only paths whose
// earliest back-arc misses the path start are considered, so that the
// proof's index a and the sets around v_{a-1} stay well-defined.
Derivation derive_proof_path(const Digraph& core, const SolverLimits& limits,
                             bool require_positive_a = false) {
    Derivation result;
    for_each_maximum_path(core, limits, [&](const PathWitness& p) {
        CycleBound cb = cycle_bound(core, p);
        if (require_positive_a && cb.back_index < 1) return;
        if (!result.valid || cb.bound > result.choice.bound) {
            result.choice = cb;
            result.valid = true;
        }
    });
    return result;
}

std::vector<Vertex> map_ids(const std::vector<Vertex>& ids, const std::vector<Vertex>& table) {
    std::vector<Vertex> out;
    out.reserve(ids.size());
    for (Vertex v : ids) out.push_back(table[v]);
    return out;
}

ClaimOutcome map_claim(ClaimOutcome claim, const std::vector<Vertex>& table) {
    for (auto& seq : claim.counterwitness) seq = map_ids(seq, table);
    return claim;
}

int min_out_degree(const Digraph& d) {
    int best = d.vertex_count() == 0 ? 0 : d.out_degree(0);
    for (Vertex v = 1; v < d.vertex_count(); ++v) best = std::min(best, d.out_degree(v));
    return best;
}

}  // namespace

KeyLemmaReport analyze_key_lemma(const Digraph& d, int delta, const SolverLimits& limits,
                                 bool probe_claims) {
    if (!is_oriented(d)) throw std::invalid_argument("key-lemma analysis needs an oriented graph");
    DegreeProfile profile = degree_profile(d);
    if (profile.min_out < delta)
        throw std::invalid_argument("minimum out-degree below requested delta");

    KeyLemmaReport report;
    report.delta = delta;

    Core core = normalize_core(d, delta);
    report.core_vertices = core.to_original;
    report.core_out_degree = delta;

    LongestPathResult lp = longest_path_exact(core.graph, limits);
    report.ell = lp.length;
    report.best_path.vertices = map_ids(lp.witness.vertices, core.to_original);

    if (report.ell >= 2 * delta) {
        report.outcome = KeyLemmaOutcome::LongPath;
        if (probe_claims && delta >= 1 && report.ell == 2 * delta) {
            Derivation der = derive_proof_path(core.graph, limits, /*require_positive_a=*/true);
            if (der.valid && der.choice.back_index >= 1) {
                report.claims_are_probe = true;
                report.claims_checked = {
                    map_claim(check_claim_no_two_long_cycles(core.graph, delta, limits),
                              core.to_original),
                    map_claim(check_claim_outneighbours_on_path(core.graph, der.choice.path,
                                                                der.choice.back_index),
                              core.to_original),
                    map_claim(check_claim_bminus_into_cycle(core.graph, der.choice.path,
                                                            der.choice.back_index),
                              core.to_original)};
            }
        }
        return report;
    }

    report.outcome = KeyLemmaOutcome::SmallSubgraph;
    Derivation der = derive_proof_path(core.graph, limits);
    if (!der.valid) throw std::logic_error("no maximum path found");
    const PathWitness& path = der.choice.path;
    const int a = der.choice.back_index;
    // Under the hypotheses here (oriented, strongly connected, out-degrees
    // exactly delta, ell < 2*delta) the earliest back-arc cannot land on the
    // path start.
    if (a < 1) throw std::logic_error("cycle-bound index 0 inside the small-subgraph branch");

    report.best_path.vertices = map_ids(path.vertices, core.to_original);
    report.ell = path.length();
    report.a_index = a;

    const auto& seq = path.vertices;
    const int ellc = path.length();
    std::vector<int> position(core.graph.vertex_count(), -1);
    for (int i = 0; i <= ellc; ++i) position[seq[i]] = i;

    std::vector<Vertex> a_set, b_set, b_minus;
    for (Vertex w : core.graph.out(seq[a - 1])) {
        if (position[w] < 0) continue;  // claim 3 violation, recorded below
        if (position[w] < a) a_set.push_back(w);
        else b_set.push_back(w);
    }
    for (Vertex b : b_set) b_minus.push_back(position[b] == a ? seq[ellc] : seq[position[b] - 1]);
    std::sort(a_set.begin(), a_set.end());
    std::sort(b_set.begin(), b_set.end());
    std::sort(b_minus.begin(), b_minus.end());

    report.a_set = map_ids(a_set, core.to_original);
    report.b_set = map_ids(b_set, core.to_original);
    report.b_minus_set = map_ids(b_minus, core.to_original);

    InducedSubgraph s_core = induced_subgraph(core.graph, b_minus);
    report.s_min_outdeg_core = min_out_degree(s_core.graph);
    report.s_vertices = map_ids(b_minus, core.to_original);
    std::sort(report.s_vertices.begin(), report.s_vertices.end());
    InducedSubgraph s_host = induced_subgraph(d, report.s_vertices);
    report.s_min_outdeg = min_out_degree(s_host.graph);

    report.claims_checked = {
        map_claim(check_claim_no_two_long_cycles(core.graph, delta, limits), core.to_original),
        map_claim(check_claim_outneighbours_on_path(core.graph, path, a), core.to_original),
        map_claim(check_claim_bminus_into_cycle(core.graph, path, a), core.to_original)};
    return report;
}

bool PathBoundsReport::all_asserted_hold() const {
    for (const auto& check : checks)
        if (check.asserted && check.status == BoundStatus::violated) return false;
    return true;
}

PathBoundsReport verify_path_bounds(const Digraph& d, const SolverLimits& limits) {
    PathBoundsReport report;
    report.n = d.vertex_count();
    report.m = d.arc_count();
    DegreeProfile profile = degree_profile(d);
    report.delta = profile.min_out;
    report.oriented = is_oriented(d);

    GirthResult g = girth(d);
    report.girth_value = g.girth;

    LongestPathResult lp = longest_path_exact(d, limits);
    report.ell = lp.length;
    report.witness = lp.witness;

    BoundTable table = bound_table(report.n, report.delta, report.girth_value);
    const Rat ell_rat(report.ell);
    auto status_of = [&](const Rat& threshold) {
        return ell_rat >= threshold ? BoundStatus::satisfied : BoundStatus::violated;
    };

    // Thomasse's conjectured value is a probe, never a test assertion.
    BoundCheck thomasse{"thomasse", std::nullopt, BoundStatus::not_applicable, false};
    if (table.thomasse) {
        thomasse.threshold = Rat(*table.thomasse);
        thomasse.status = status_of(*thomasse.threshold);
    }
    report.checks.push_back(thomasse);

    BoundCheck thm1{"thm1", table.thm1, BoundStatus::not_applicable, true};
    if (!report.girth_value || *report.girth_value >= 3) thm1.status = status_of(table.thm1);
    report.checks.push_back(thm1);

    BoundCheck thm2{"thm2_oriented", table.thm2_oriented, BoundStatus::not_applicable, true};
    if (report.oriented) thm2.status = status_of(table.thm2_oriented);
    report.checks.push_back(thm2);

    BoundCheck thm2b{"thm2_girth4", table.thm2_girth4, BoundStatus::not_applicable, true};
    if (!report.girth_value || *report.girth_value >= 4) thm2b.status = status_of(table.thm2_girth4);
    report.checks.push_back(thm2b);

    BoundCheck shen{"shen", table.shen, BoundStatus::not_applicable, true};
    if (table.shen) shen.status = status_of(*table.shen);
    report.checks.push_back(shen);

    BoundCheck ch{"ch_cycle", Rat(table.ch_cycle), BoundStatus::not_applicable, true};
    if (report.delta >= 1)
        ch.status = report.girth_value && *report.girth_value <= table.ch_cycle
                        ? BoundStatus::satisfied
                        : BoundStatus::violated;
    report.checks.push_back(ch);

    BoundCheck hkn{"hkn_triangle", table.hkn_threshold, BoundStatus::not_applicable, true};
    if (report.oriented && Rat(report.delta) >= table.hkn_threshold)
        hkn.status = report.girth_value && *report.girth_value == 3 ? BoundStatus::satisfied
                                                                    : BoundStatus::violated;
    report.checks.push_back(hkn);

    report.conjecture1_met = report.oriented && report.ell >= 2 * report.delta;
    if (report.girth_value && report.delta >= 1)
        report.conjecture7_ratio = static_cast<double>(report.ell) /
                                   (static_cast<double>(*report.girth_value) * report.delta);
    return report;
}

}  // namespace girthpath
