// Command-line driver: dataset generation, policy training, benchmark
// evaluation and plotting for the RIS blind beam-training simulator.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "risq/errors.hpp"
#include "risq/experiment.hpp"
#include "risq/textio.hpp"

namespace {

// Flags shared by every subcommand; file values are overridden by any flag
// that was actually given on the command line.
struct CommonFlags {
    std::string config;
    std::string out;
    std::string methods;
    std::uint64_t seed = 0;
    double snr = 0.0;
    double tau = 0.0;
    int budget = 0;

    CLI::Option* o_config = nullptr;
    CLI::Option* o_out = nullptr;
    CLI::Option* o_methods = nullptr;
    CLI::Option* o_seed = nullptr;
    CLI::Option* o_snr = nullptr;
    CLI::Option* o_tau = nullptr;
    CLI::Option* o_budget = nullptr;

    void add_to(CLI::App* cmd) {
        o_config = cmd->add_option("--config", config, "config file (key = value lines)");
        o_seed = cmd->add_option("--seed", seed, "master RNG seed");
        o_snr = cmd->add_option("--snr-db", snr, "SNR in dB (replaces the config list)");
        o_tau = cmd->add_option("--tau", tau, "confidence threshold in (0,1)");
        o_out = cmd->add_option("--out", out, "output directory");
        o_methods = cmd->add_option("--methods", methods,
                                    "comma list of exhaustive,hierarchical,random,qlearning");
        o_budget = cmd->add_option("--budget", budget, "largest pilot budget to sweep");
    }

    risq::ExperimentConfig build() const {
        risq::ExperimentConfig cfg;
        if (o_config->count()) cfg = risq::load_config(config);
        if (o_seed->count()) cfg.seed = seed;
        if (o_snr->count()) cfg.snr_db = {snr};
        if (o_tau->count()) {
            cfg.tau = tau;
            cfg.tau_sweep.clear();
        }
        if (o_out->count()) cfg.out_dir = out;
        if (o_budget->count()) cfg.budget = budget;
        if (o_methods->count()) {
            cfg.methods.clear();
            for (const std::string& tok : risq::split(methods, ',')) {
                std::string t = risq::trim(tok);
                if (!t.empty()) cfg.methods.push_back(t);
            }
        }
        return cfg;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"RIS blind beam-training simulator"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "sample channels and write the training dataset");
    auto* train = app.add_subcommand("train", "learn the acquisition policy from a dataset");
    auto* eval = app.add_subcommand("eval", "run benchmark episodes, write CSV and SVG");
    auto* plot = app.add_subcommand("plot", "render a training-curve or eval CSV as SVG");

    CommonFlags fg, ft, fe, fp;
    fg.add_to(gen);
    ft.add_to(train);
    fe.add_to(eval);
    fp.add_to(plot);

    std::string train_ds, eval_ds, eval_qt, plot_csv;
    train->add_option("dataset", train_ds, "dataset file (default <out>/dataset.txt)");
    eval->add_option("dataset", eval_ds, "dataset file (default <out>/dataset.txt)");
    eval->add_option("qtable", eval_qt, "Q-table file (default <out>/qtable.txt)");
    plot->add_option("csv", plot_csv, "CSV file to plot")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) risq::cmd_generate(fg.build());
        if (train->parsed()) risq::cmd_train(ft.build(), train_ds);
        if (eval->parsed()) risq::cmd_eval(fe.build(), eval_ds, eval_qt);
        if (plot->parsed()) risq::cmd_plot(fp.build(), plot_csv);
        return 0;
    } catch (const risq::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const risq::IncompatibleArtifact& e) {
        std::cerr << "incompatible artifacts: " << e.what() << "\n";
        return 3;
    } catch (const risq::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 4;
    } catch (const risq::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
