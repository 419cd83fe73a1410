#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rdshock/commands.hpp"

namespace {

struct SubcommandArgs {
    std::string config_path;
    std::string out_dir = ".";
    std::string format = "csv";
};

void attach_common_options(CLI::App* sub, SubcommandArgs& args) {
    sub->add_option("--config", args.config_path, "key-value configuration file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--out", args.out_dir, "output directory (default: current directory)");
    sub->add_option("--format", args.format, "profile output format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rdshock: exact shock-fronted solutions of a reaction-diffusion equation "
                 "with a negative-diffusivity window"};
    app.require_subcommand(1);

    const std::vector<std::string> names = {"solve", "boundary", "shock-compare", "stability",
                                            "phase-plane"};
    const std::vector<std::string> descriptions = {
        "multi-valued and shocked solution profiles at requested times",
        "moving-boundary position, flux, speed and Stefan-condition residual",
        "continuity-rule vs equal-area shock endpoints and jump reports",
        "constant-state classification, essential spectrum, criterion trace, region scan",
        "direction field, analytic trajectory and nullclines of the wave system"};

    std::map<std::string, SubcommandArgs> args;
    for (std::size_t i = 0; i < names.size(); ++i)
        attach_common_options(app.add_subcommand(names[i], descriptions[i]), args[names[i]]);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    const SubcommandArgs& sub_args = args[name];

    try {
        rdshock::RunOptions options;
        options.out_dir = sub_args.out_dir;
        if (const char* env_out = std::getenv("RDSHOCK_OUT")) options.out_dir = env_out;
        options.format = rdshock::format_from_string(sub_args.format);
        std::filesystem::create_directories(options.out_dir);

        rdshock::RunConfig config = rdshock::load_run_config(sub_args.config_path);
        const std::vector<std::string> files = rdshock::run_subcommand(name, config, options);
        for (const std::string& f : files)
            std::cout << (options.out_dir / f).string() << "\n";
        return 0;
    } catch (const rdshock::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const rdshock::NumericError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    }
}
