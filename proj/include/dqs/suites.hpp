#pragma once

// Named verification suites over the library: each suite runs a list of
// checks at a given level l and reports per-check pass/fail/skipped with a
// witness on failure.  Backs both the command-line verifier and the
// acceptance harness.

#include <string>
#include <vector>

namespace dqs {

struct CheckResult {
    std::string name;       // stable identifier, reports are sorted by it
    std::string paper_ref;  // statement label the check exercises
    std::string status;     // "pass" | "fail" | "skipped"
    std::string witness;    // nonempty iff status == "fail"
};

struct Report {
    std::string suite;
    int l = 0;
    std::vector<CheckResult> checks;
    long long elapsed_ms = 0;

    bool all_pass() const;  // no "fail" entries ("skipped" is not a failure)
};

// Known suite names: symfunc, frobenius, schur, iqmod, bimod, all.
bool suite_known(const std::string& name);
const std::vector<std::string>& suite_names();

// Run one suite (or "all") at level l.  Out-of-bounds l yields a single
// "skipped" check and an all-pass report.  seed drives the randomized
// property checks; reports are deterministic for a fixed seed.
Report run_suite(const std::string& suite, int l, unsigned long seed);

// Individual check lists, sorted by name.
std::vector<CheckResult> checks_symfunc(int l);
std::vector<CheckResult> checks_demazure(int l, unsigned long seed);
std::vector<CheckResult> checks_frobenius(int l, unsigned long seed);
std::vector<CheckResult> checks_schur(int l, unsigned long seed);
std::vector<CheckResult> checks_iqmod(int l);
std::vector<CheckResult> checks_bimod(int l);
std::vector<CheckResult> checks_idempotent(int l);

}  // namespace dqs
