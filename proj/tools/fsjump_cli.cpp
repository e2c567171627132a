// fsjump: command-line front end for the reduction workbench.
//
//   fsjump verify <target>          property campaign; exit 1 on violations
//   fsjump count --n <k>            class counts for F and E
//   fsjump chain                    verify the reduction chain
//   fsjump echo [<code>]            parse and print canonical form
//
// Exit codes: 0 pass, 1 violation, 2 usage or configuration error.

#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>

#include "fsjump/campaigns.hpp"
#include "fsjump/errors.hpp"
#include "fsjump/serialize.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

}  // namespace

int main(int argc, char** argv) {
    using namespace fsjump;

    CLI::App app{"Executable workbench for Friedman-Stanley jump reductions"};
    app.require_subcommand(1);
    app.fallthrough();

    FuzzConfig cfg;
    std::string format_name = "text";
    app.add_option("--seed", cfg.seed, "RNG seed");
    app.add_option("--cases", cfg.cases, "Generated cases per campaign");
    app.add_option("--atom-universe", cfg.atom_universe, "Atoms available to generators");
    app.add_option("--max-period", cfg.max_period, "Largest generated period");
    app.add_option("--max-entries", cfg.max_entries, "Largest generated entry list");
    app.add_option("--n-cmp", cfg.n_cmp, "Search bound for word-vs-pullback comparisons");
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "machine"}));

    auto* verify = app.add_subcommand("verify", "Run a property campaign");
    std::string target_name;
    verify->add_option("target", target_name, "Campaign target")
        ->required()
        ->check(CLI::IsMember(target_names()));

    auto* count = app.add_subcommand("count", "Count F and E classes over a small atom universe");
    unsigned count_n = 0;
    count->add_option("--n", count_n, "Atom universe size")->required();

    auto* chain = app.add_subcommand("chain", "Verify the implemented links of the reduction chain");
    bool inject_fault = false;
    chain->add_flag("--inject-fault", inject_fault)->group("");

    auto* echo_cmd = app.add_subcommand("echo", "Parse a serialized code and print its canonical form");
    std::string input;
    echo_cmd->add_option("input", input, "Serialized code (read from stdin when absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    const Format format = *parse_format(format_name);
    try {
        cfg.validate();
        if (*verify) {
            const VerificationReport report = run_campaign(*parse_target(target_name), cfg);
            std::cout << format_report(report, format);
            return report.passed() ? kPass : kViolation;
        }
        if (*count) {
            std::vector<GrowthRow> rows;
            for (Level level : {Level::F, Level::E}) {
                const std::uint64_t c = count_classes(level, count_n, cfg.max_period);
                const std::uint64_t closed = closed_form_count(level, count_n);
                rows.push_back({level, count_n, c, closed, c == closed});
            }
            std::cout << format_growth(rows, format);
            return kPass;
        }
        if (*chain) {
            const ChainReport report = chain_report(cfg, ChainOptions{inject_fault});
            std::cout << format_chain(report, format);
            return report.ok() ? kPass : kViolation;
        }
        if (*echo_cmd) {
            if (echo_cmd->count("input") == 0)
                input.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
            std::cout << echo(input) << '\n';
            return kPass;
        }
    } catch (const Error& e) {
        std::cerr << "fsjump: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
