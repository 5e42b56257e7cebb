// harvest: sweeps, symmetry verification and the configuration reference.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "harvest/cli/config.hpp"
#include "harvest/cli/sweep.hpp"
#include "harvest/cli/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

int do_sweep(const std::string &config_path, int jobs, const std::string &out_override)
{
    using namespace harvest::cli;
    RunConfig cfg;
    try {
        cfg = load_config(config_path);
        (void)make_background(cfg); // surface table errors before any work
    } catch (const ConfigError &e) {
        std::cerr << config_path << ": " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument &e) {
        std::cerr << config_path << ": " << e.what() << "\n";
        return kExitConfig;
    }
    const std::string out_path = out_override.empty() ? cfg.output_path : out_override;
    const auto rows = run_sweep(cfg, jobs);
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot write '" << out_path << "'\n";
        return kExitConfig;
    }
    write_csv(out, rows);
    int failed = 0;
    for (const auto &r : rows) {
        if (!r.ok) {
            ++failed;
            std::cerr << "row " << r.point.index << ": " << r.status << "\n";
        }
    }
    std::cerr << "wrote " << rows.size() << " rows to " << out_path;
    if (failed > 0) {
        std::cerr << " (" << failed << " failed)";
    }
    std::cerr << "\n";
    return failed > 0 ? kExitNumerical : kExitOk;
}

int do_verify(const std::string &suite)
{
    using namespace harvest::cli;
    try {
        const VerifyReport rep = run_verify(suite);
        print_report(std::cout, rep);
        return rep.passed() ? kExitOk : kExitNumerical;
    } catch (const harvest::QuadratureError &e) {
        std::cerr << "verify " << suite << ": " << e.what() << "\n";
        return kExitNumerical;
    }
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Entanglement harvesting negativity and communication/harvesting interference"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    int jobs = 1;
    auto *sweep = app.add_subcommand("sweep", "run a parameter sweep and write CSV");
    sweep->add_option("--config", config_path, "configuration file")->required();
    sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--out", out_path, "CSV path (overrides output.path)");

    std::string suite;
    auto *verify = app.add_subcommand("verify", "run a symmetry or kernel verification suite");
    verify->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(harvest::cli::verify_suites()));

    auto *schema = app.add_subcommand("schema", "print the configuration key reference");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    if (sweep->parsed()) {
        return do_sweep(config_path, jobs, out_path);
    }
    if (verify->parsed()) {
        return do_verify(suite);
    }
    if (schema->parsed()) {
        std::cout << harvest::cli::schema_text();
    }
    return kExitOk;
}
