#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qecc {

struct CheckResult {
    std::string name;
    bool pass = false;
    double margin = 0.0;  // slack left before the bound is violated
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Scale knobs; 0 picks each suite's default (the defaults match the
// acceptance scales, smaller values make quick smoke runs).
struct VerifyOptions {
    std::uint64_t seed = 1;
    std::uint32_t graphs = 0;
    std::uint32_t trials = 0;
};

// Exact check, zero tolerance: for random graphs, the average over all n
// pivots of the number of edges removed in one round is at least
// C(dbar+1, 2) where dbar is the average degree. Evaluated in integer
// arithmetic.
SuiteReport verify_lemma1(const VerifyOptions& opts = {});

// Monte Carlo: after r pivot rounds the mean number of positive edges
// with both endpoints unclustered is below n^2/(2(r+1)), with a
// 3-standard-error allowance.
SuiteReport verify_lemma2(const VerifyOptions& opts = {});

// Monte Carlo: on a synthetic instance, the mean qecc cost at budget Q
// stays within 3*cost(ground truth) + n^3/(2Q) plus 3 standard errors
// (the planted clustering's cost upper-bounds OPT).
SuiteReport verify_thm1_bound(const VerifyOptions& opts = {});

// Exact: with identical (n, Q, seed), runs on two different graphs issue
// identical query-pair sequences, and the query count equals
// (2n-1-k)k/2 for k = max{t <= n : (2n-1-t)t <= 2Q}.
SuiteReport verify_thm2_nonadaptive(const VerifyOptions& opts = {});

// Monte Carlo against the exact brute-force optimum: full-budget qecc's
// mean cost is within 3*OPT plus 3 standard errors on every instance.
SuiteReport verify_approx3(const VerifyOptions& opts = {});

// Dispatch by suite name (lemma1, lemma2, thm1-bound, thm2-nonadaptive,
// approx3); throws ParameterError for unknown names.
SuiteReport run_verify_suite(const std::string& name, const VerifyOptions& opts = {});

void print_report(std::ostream& out, const SuiteReport& report);

}  // namespace qecc
