// main.cpp — gaudin-forge command-line front end

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_override;
    std::string format_override;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "Path to the JSON run configuration")
        ->required();
    cmd->add_option("--out", args.out_override, "Override output.path");
    cmd->add_option("--format", args.format_override, "Override output.format (json|csv)")
        ->check(CLI::IsMember({"json", "csv"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lax-structure verification and spectra for generalized Dicke-type models"};
    app.require_subcommand(1);

    CommonArgs verify_args, charges_args, spectrum_args, sweep_args;
    CLI::App* verify = app.add_subcommand("verify", "Run the integrability identity checks");
    CLI::App* charges = app.add_subcommand("charges", "Compare fitted and closed-form charges");
    CLI::App* spectrum = app.add_subcommand("spectrum", "Write the full complex spectrum");
    CLI::App* sweep = app.add_subcommand("sweep", "Sweep a parameter grid");
    add_common(verify, verify_args);
    add_common(charges, charges_args);
    add_common(spectrum, spectrum_args);
    add_common(sweep, sweep_args);

    CLI11_PARSE(app, argc, argv);

    const auto run = [&](const CommonArgs& args, auto command) {
        gaudin::cli::RunConfig config = gaudin::cli::load_config(args.config_path);
        if (!args.out_override.empty())
            config.out_path = args.out_override;
        if (!args.format_override.empty())
            config.format = args.format_override;
        return command(config);
    };

    try {
        if (verify->parsed())
            return run(verify_args, gaudin::cli::cmd_verify);
        if (charges->parsed())
            return run(charges_args, gaudin::cli::cmd_charges);
        if (spectrum->parsed())
            return run(spectrum_args, gaudin::cli::cmd_spectrum);
        return run(sweep_args, gaudin::cli::cmd_sweep);
    } catch (const gaudin::DimensionCap& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const gaudin::NoConvergence& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    }
}
