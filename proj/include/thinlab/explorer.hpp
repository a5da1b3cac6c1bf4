#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "thinlab/pmf.hpp"
#include "thinlab/report.hpp"
#include "thinlab/ulc.hpp"
#include "thinlab/verifiers.hpp"

namespace thinlab {

enum class Command { verify, sweep, search, repro };
enum class SearchTarget { shepp_olkin, thinned_epi, rtepi };

// Tolerances applied by the report drivers. Theorem-tier checks assert at
// 1e-9; V-based probes at 1e-6 (they sit behind the bisection pipeline).
struct RunConfig {
    Command command = Command::verify;
    std::uint64_t seed = 1;
    int corpus_size = 100;
    int max_support = 8;
    int alpha_grid = 33;
    std::map<std::string, double> tolerance_overrides;
    std::string output_path;  // empty = stdout
    ReportFormat format = ReportFormat::csv;
    std::vector<std::string> fixtures;  // extra named fixtures for verify
    long budget = 10000;                // search evaluation budget
    bool timestamp = true;              // --no-timestamp clears this

    // Throws ConfigError (exit code 2) on out-of-range values.
    void validate() const;

    double tolerance(const std::string& check, double fallback) const;
};

// Named fixtures addressable from the command line:
//   counterexample | fair-coin | binomial:n,p | poisson:rate |
//   geometric:p,cutoff | bernoulli:a1,a2,...
// Throws ConfigError on a malformed spec.
Pmf parse_fixture(const std::string& spec);

SearchTarget parse_search_target(const std::string& name);

struct VerifyResult {
    std::vector<ReportRow> rows;
    bool all_theorems_pass = true;
};

// Theorem suites over the seeded random ULC corpus plus the built-in
// fixtures; one row per (check, instance). Deterministic in the config.
VerifyResult run_verify(const RunConfig& config);

struct SweepRow {
    double alpha = 0;
    double h_slack = 0;        // entropy-concavity slack at (alpha, 1-alpha)
    double v_slack = 0;        // thinned-EPI entropy-power slack
    double l_value = 0;        // two-pmf l(alpha)
    double fd_second = 0;      // central finite-difference l''
    double closed_second = 0;  // closed-form l''
};

// Alpha grid spans [1e-3, 1 - 1e-3] (the closed forms carry 1/alpha^2 and
// 1/beta^2 factors, so the exact endpoints are excluded).
std::vector<SweepRow> run_sweep(const RunConfig& config, const Pmf& f, const Pmf& g);

std::string emit_sweep(const std::vector<SweepRow>& rows, ReportFormat format,
                       const std::string& comment = "");

struct SearchResult {
    double min_slack = 0;
    std::string argmin;  // full instance serialization (JSON)
    long evaluations = 0;
    std::vector<ReportRow> rows;  // one row per restart plus the final best
    bool flagged = false;         // min_slack below -tolerance: inspect argmin
};

// Seeded random restarts + coordinate descent with shrinking step over the
// target's box domain, minimizing observed slack. Never claims disproof:
// a slack below -tolerance only flags the instance for inspection.
SearchResult run_search(const RunConfig& config, SearchTarget target);

struct ReproResult {
    std::string summary;  // human-readable
    std::vector<ReportRow> rows;
};

// Reproduces the named reference instances: the additive-V counterexample,
// the law-of-thin-numbers trace for f = [0.7, 0.3], and the
// disjoint-support Shepp-Olkin segment fixture.
ReproResult run_repro(const RunConfig& config);

}  // namespace thinlab
