// sulsim: uplink link budget and SUL carrier-selection experiments.
//
// Exit codes: 0 success, 2 usage/parse error, 3 validation error, 4 domain error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sulsim/commands.hpp"
#include "sulsim/errors.hpp"
#include "sulsim/scenario_file.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitDomain = 4;

struct Options {
    std::string scenario_path;
    std::string out_path;
    bool csv = false;

    double elevation_deg = 0.0;

    double target_min = 0.0;
    double target_max = 10.0;
    double target_step = 1.0;

    bool pul_only = false;

    double dh_min = 0.0;
    double dh_max = 6.0;
    double dh_step = 0.5;
    std::size_t n_seeds = 100;
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--scenario", o.scenario_path, "Scenario JSON (defaults when omitted)");
    cmd->add_option("--out", o.out_path, "Write output to this file instead of stdout");
    cmd->add_flag("--csv", o.csv, "Machine-readable CSV output");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Elevation-aware supplementary uplink simulator"};
    app.require_subcommand(1);
    Options o;

    auto* lb = app.add_subcommand("link-budget", "Per-carrier link budget at one elevation");
    add_common(lb, o);
    lb->add_option("--elevation", o.elevation_deg, "Elevation angle, deg")->required();

    auto* sweep = app.add_subcommand("snr-sweep", "Minimum elevation versus target SNR");
    add_common(sweep, o);
    sweep->add_option("--target-min", o.target_min, "dB")->capture_default_str();
    sweep->add_option("--target-max", o.target_max, "dB")->capture_default_str();
    sweep->add_option("--target-step", o.target_step, "dB")->capture_default_str();

    auto* pass = app.add_subcommand("pass", "Simulate one satellite pass and emit its trace");
    add_common(pass, o);
    pass->add_flag("--pul-only", o.pul_only, "Disable the supplementary uplink");

    auto* hyst = app.add_subcommand("hysteresis-sweep", "Carrier switches versus hysteresis");
    add_common(hyst, o);
    hyst->add_option("--dh-min", o.dh_min, "dB")->capture_default_str();
    hyst->add_option("--dh-max", o.dh_max, "dB")->capture_default_str();
    hyst->add_option("--dh-step", o.dh_step, "dB")->capture_default_str();
    hyst->add_option("--seeds", o.n_seeds, "Passes per hysteresis value")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const sulsim::ScenarioConfig scenario = o.scenario_path.empty()
                                                    ? sulsim::default_scenario()
                                                    : sulsim::load_scenario(o.scenario_path);

        std::unique_ptr<std::ofstream> file;
        if (!o.out_path.empty()) {
            file = std::make_unique<std::ofstream>(o.out_path);
            if (!*file) {
                std::cerr << "error: cannot open " << o.out_path << " for writing\n";
                return kExitUsage;
            }
        }
        std::ostream& out = file ? static_cast<std::ostream&>(*file) : std::cout;

        if (lb->parsed()) {
            sulsim::cmd_link_budget(scenario, o.elevation_deg, o.csv, out);
        } else if (sweep->parsed()) {
            sulsim::cmd_snr_sweep(scenario, o.target_min, o.target_max, o.target_step, out);
        } else if (pass->parsed()) {
            const auto mode = o.pul_only ? sulsim::UplinkMode::PulOnly : sulsim::UplinkMode::SulEnabled;
            const auto result = sulsim::cmd_pass(scenario, mode, out);
            // Keep stdout a clean CSV when the trace goes there.
            (file ? std::cout : std::cerr) << sulsim::pass_summary(result, mode) << '\n';
        } else if (hyst->parsed()) {
            sulsim::cmd_hysteresis_sweep(scenario, o.dh_min, o.dh_max, o.dh_step, o.n_seeds, out);
        }
    } catch (const sulsim::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const sulsim::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const sulsim::VersionError& e) {
        std::cerr << "version error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const sulsim::ConfigError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const sulsim::DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitDomain;
    }
    return 0;
}
