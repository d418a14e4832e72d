#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "risq/chansim.hpp"
#include "risq/qlearner.hpp"

namespace risq {

// Everything an experiment run needs, read from a flat key = value config
// file; command-line flags override file values.
struct ExperimentConfig {
    int m = 64;
    int n = 100;
    double p = 1.0;
    std::vector<double> snr_db = {20.0};  // generate uses the first entry,
                                          // eval sweeps all of them
    int layers = 3;
    std::uint64_t deact_seed = 7240;
    double tau = 0.9;
    std::vector<double> tau_sweep;        // empty = just tau
    std::vector<double> q_grid;           // default 0.1 .. 0.9
    double eps_floor = 0.0;               // 0 = auto (1e-9 * feedback variance)
    Hyper hyper;
    int n_dataset = 500;
    int n_eval_channels = 1000;
    std::string out_dir = "out";
    std::vector<std::string> methods = {"exhaustive", "hierarchical", "random",
                                        "qlearning"};
    int budget = 0;                       // pilot budgets swept 1..budget; 0 = Np
    bool eval_in_dataset = false;         // debug: evaluate on dataset channels
    bool noiseless_dataset = false;       // ablation: generate dataset without noise
    bool idealized_deact = false;         // test mode: zero-amplitude deactivation
    std::uint64_t seed = 1;

    SystemConfig system(double snr) const;
    std::vector<double> taus() const;     // tau_sweep or {tau}
    std::vector<double> grid() const;     // q_grid or the default
    void validate() const;                // throws ConfigError
};

ExperimentConfig load_config(const std::string& path);

struct EvalRow {
    std::string method;
    int k = 0;              // pilot budget
    double mean_rho = 0.0;
    double stderr_rho = 0.0;
    int n = 0;              // episodes behind the mean
};

// Each command returns the list of files it wrote.
std::vector<std::string> cmd_generate(const ExperimentConfig& cfg);
std::vector<std::string> cmd_train(const ExperimentConfig& cfg,
                                   const std::string& dataset_path);
std::vector<std::string> cmd_eval(const ExperimentConfig& cfg,
                                  const std::string& dataset_path,
                                  const std::string& qtable_path);
std::vector<std::string> cmd_plot(const ExperimentConfig& cfg,
                                  const std::string& csv_path);

// The evaluation sweep behind cmd_eval, exposed for tests: mean relative
// strength per (method, budget) over n_eval episodes.
std::vector<EvalRow> evaluate_methods(const ExperimentConfig& cfg,
                                      const SystemConfig& sys,
                                      const Codebook& cb,
                                      const TrainingDataset& ds,
                                      const StateSpace& ss, const Policy& policy,
                                      const std::vector<ChannelRealization>& channels);

std::string eval_csv(const std::vector<EvalRow>& rows);
std::string curve_csv(const TrainingCurve& curve);

}  // namespace risq
