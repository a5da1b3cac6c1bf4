// Command-line front end: verify the proved inequalities over seeded
// corpora, sweep l(alpha)/slack curves, search for conjecture
// near-violations, and reproduce the named fixture instances.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "thinlab/explorer.hpp"
#include "thinlab/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

void write_output(const thinlab::RunConfig& config, const std::string& payload) {
    if (config.output_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) throw thinlab::ConfigError("cannot open output file: " + config.output_path);
    out << payload;
}

std::string report_comment(const thinlab::RunConfig& config) {
    return config.timestamp ? "generated_at: " + utc_timestamp() : std::string();
}

void parse_tolerances(const std::vector<std::string>& entries, thinlab::RunConfig& config) {
    for (const auto& entry : entries) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos || eq == 0)
            throw thinlab::ConfigError("--tol wants name=value, got '" + entry + "'");
        char* end = nullptr;
        const double v = std::strtod(entry.c_str() + eq + 1, &end);
        if (end == entry.c_str() + eq + 1 || *end != '\0')
            throw thinlab::ConfigError("--tol: bad value in '" + entry + "'");
        config.tolerance_overrides[entry.substr(0, eq)] = v;
    }
}

void add_common_options(CLI::App* cmd, thinlab::RunConfig& config,
                        std::vector<std::string>& tol_entries) {
    cmd->add_option("--output", config.output_path, "report file (default: stdout)");
    cmd->add_option("--format", config.format, "report format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, thinlab::ReportFormat>{
                {"csv", thinlab::ReportFormat::csv}, {"json", thinlab::ReportFormat::json}},
            CLI::ignore_case));
    cmd->add_flag_callback(
        "--no-timestamp", [&config] { config.timestamp = false; },
        "omit the generated_at comment so outputs are byte-reproducible");
    cmd->add_option("--tol", tol_entries, "tolerance override, name=value (repeatable)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"thinning / entropy-power inequality explorer"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value config file (CLI flags take precedence)");

    thinlab::RunConfig config;
    std::vector<std::string> tol_entries;
    std::string f_spec;
    std::string g_spec;
    std::string target_name;

    auto* verify = app.add_subcommand("verify", "run the theorem suites on a seeded corpus");
    verify->add_option("--seed", config.seed, "corpus seed");
    verify->add_option("--corpus-size", config.corpus_size, "number of random ULC instances");
    verify->add_option("--max-support", config.max_support, "max Bernoulli-sum length");
    verify->add_option("--fixture", config.fixtures,
                       "extra named fixture (counterexample|fair-coin|binomial:n,p|poisson:rate"
                       "|geometric:p,cut|bernoulli:a1,a2,...), repeatable");
    add_common_options(verify, config, tol_entries);

    auto* sweep = app.add_subcommand("sweep", "tabulate slack and l(alpha) curves over an alpha grid");
    sweep->add_option("f_spec", f_spec, "pmf spec for X")->required();
    sweep->add_option("g_spec", g_spec, "pmf spec for Y")->required();
    sweep->add_option("--alpha-grid", config.alpha_grid, "grid points");
    add_common_options(sweep, config, tol_entries);

    auto* search = app.add_subcommand("search", "minimize conjecture slack by seeded restarts");
    search->add_option("target", target_name, "shepp_olkin|thinned_epi|rtepi")->required();
    search->add_option("--seed", config.seed, "search seed");
    search->add_option("--budget", config.budget, "objective evaluation budget");
    search->add_option("--max-support", config.max_support, "Bernoulli vector length");
    search->add_option("--alpha-grid", config.alpha_grid, "segment grid for shepp_olkin");
    add_common_options(search, config, tol_entries);

    auto* repro = app.add_subcommand("repro", "reproduce the named reference instances");
    repro->add_option("--alpha-grid", config.alpha_grid, "segment grid points");
    add_common_options(repro, config, tol_entries);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        parse_tolerances(tol_entries, config);
        if (verify->parsed()) {
            config.command = thinlab::Command::verify;
            const auto result = thinlab::run_verify(config);
            write_output(config,
                         thinlab::emit_report(result.rows, config.format, report_comment(config)));
            if (!config.output_path.empty()) {
                std::size_t theorem = 0;
                std::size_t passed = 0;
                for (const auto& row : result.rows) {
                    if (row.conjecture_flag) continue;
                    ++theorem;
                    if (row.pass) ++passed;
                }
                std::cout << "wrote " << result.rows.size() << " rows to " << config.output_path
                          << "; " << passed << "/" << theorem << " theorem checks passed\n";
            }
            return result.all_theorems_pass ? kExitOk : kExitCheckFailed;
        }
        if (sweep->parsed()) {
            config.command = thinlab::Command::sweep;
            const auto rows = thinlab::run_sweep(config, thinlab::parse_fixture(f_spec),
                                                 thinlab::parse_fixture(g_spec));
            write_output(config, thinlab::emit_sweep(rows, config.format, report_comment(config)));
            return kExitOk;
        }
        if (search->parsed()) {
            config.command = thinlab::Command::search;
            const auto target = thinlab::parse_search_target(target_name);
            const auto result = thinlab::run_search(config, target);
            write_output(config,
                         thinlab::emit_report(result.rows, config.format, report_comment(config)));
            std::cout << "min slack " << thinlab::format_double(result.min_slack) << " after "
                      << result.evaluations << " evaluations\n";
            if (result.flagged) {
                // Never treated as disproof; the witness goes out for inspection.
                const std::string witness_path = config.output_path.empty()
                                                     ? "search_witness.json"
                                                     : config.output_path + ".witness.json";
                std::ofstream witness(witness_path, std::ios::binary);
                witness << result.argmin << "\n";
                std::cout << "slack below -tolerance; witness written to " << witness_path
                          << " for manual inspection\n";
            }
            return kExitOk;
        }
        config.command = thinlab::Command::repro;
        const auto result = thinlab::run_repro(config);
        write_output(config,
                     thinlab::emit_report(result.rows, config.format, report_comment(config)));
        std::cout << result.summary;
        bool all_pass = true;
        for (const auto& row : result.rows) {
            if (!row.conjecture_flag && !row.pass) all_pass = false;
        }
        return all_pass ? kExitOk : kExitCheckFailed;
    } catch (const thinlab::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
