// Acceptance harness: one criterion per invocation argument (all by default),
// one PASS/FAIL line per criterion, non-zero exit when anything failed.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "girthpath/suites.hpp"

namespace {

struct Criterion {
    int number;
    const char* suite;
    const char* what;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> table = {
        {1, "claim1", "lift family: girth = a+b and ell = delta*b+a-1, tolerance 0"},
        {2, "prop2", "girth-g family: ell matches the even/odd closed form, conjectured value beaten"},
        {3, "thm2-oriented", ">= 300 strongly-connected oriented sweeps: ell >= 1.5*delta"},
        {4, "thm1", ">= 300 finite-girth sweeps (g >= 3): ell >= 2*delta*(1-1/g)"},
        {5, "keylemma", "structurally valid lemma reports, claims checked on the sweep corpus"},
        {6, "eq1", "exhaustive n <= 5: ell >= girth-1; ell >= girth rate reported"},
        {7, "lll", "(2,d)-regular d in {64,128}: partition converges, degree floor recounted"},
        {8, "stitch", "stitched path valid and >= t*(g-1)+t-1; ratio vs c*d*g/ln d reported"},
        {9, "oracle", "500+500 seeded instances: solver vs naive oracle, tolerance 0"},
    };
    return table;
}

bool run(const Criterion& c) {
    girthpath::suites::SuiteOptions opts;  // suite defaults pin the criterion parameters
    girthpath::suites::SuiteResult result = girthpath::suites::run_suite(c.suite, opts);
    std::cout << (result.pass ? "PASS" : "FAIL") << " criterion " << c.number << " (" << c.suite
              << "): " << result.summary << '\n';
    if (!result.pass) {
        std::cout << "     " << c.what << '\n';
        for (const auto& failure : result.failures) std::cout << "     ! " << failure << '\n';
    }
    return result.pass;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& criterion : criteria()) {
        if (!wanted.empty() &&
            std::find(wanted.begin(), wanted.end(), criterion.number) == wanted.end())
            continue;
        try {
            if (!run(criterion)) ++failures;
        } catch (const std::exception& e) {
            std::cout << "FAIL criterion " << criterion.number << " (" << criterion.suite
                      << "): exception: " << e.what() << '\n';
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
