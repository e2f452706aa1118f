#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "froglab/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"froglab: frog-model passage times, removal couplings and "
                 "percolation path bounds"};
    app.require_subcommand(1);

    std::string run_config;
    auto* run_cmd = app.add_subcommand("run", "execute an experiment config");
    run_cmd->add_option("config", run_config, "config file")->required();

    std::string verify_config;
    auto* verify_cmd =
        app.add_subcommand("verify", "run the invariant and oracle battery");
    verify_cmd->add_option("config", verify_config, "config file")->required();

    std::string show_dir;
    auto* show_cmd = app.add_subcommand("show", "print tables from a results directory");
    show_cmd->add_option("results", show_dir, "results directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            const froglab::ExperimentSpec spec = froglab::load_experiment(run_config);
            return static_cast<int>(froglab::run_experiment(spec));
        }
        if (verify_cmd->parsed()) {
            const froglab::VerifyOptions opts =
                froglab::load_verify_options(verify_config);
            return froglab::run_verify_to_stream(opts, std::cout);
        }
        if (show_cmd->parsed()) return froglab::show_results(show_dir, std::cout);
    } catch (const froglab::ConfigError& e) {
        std::cerr << "froglab: config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "froglab: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
