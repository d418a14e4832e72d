#include "risq/experiment.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "risq/errors.hpp"
#include "risq/protocol.hpp"
#include "risq/svgplot.hpp"
#include "risq/textio.hpp"

namespace risq {

namespace {

// Purpose salts for deriving independent RNG streams from the master seed.
constexpr std::uint64_t kSaltTrain = 0x01;
constexpr std::uint64_t kSaltEvalChannels = 0x02;
constexpr std::uint64_t kSaltEvalEpisode = 0x03;

std::vector<double> parse_double_list(const std::string& v) {
    std::vector<double> out;
    for (const std::string& tok : split(v, ',')) {
        std::string t = trim(tok);
        if (t.empty()) continue;
        out.push_back(parse_double(t));
    }
    return out;
}

std::vector<std::string> parse_name_list(const std::string& v) {
    std::vector<std::string> out;
    for (const std::string& tok : split(v, ',')) {
        std::string t = trim(tok);
        if (!t.empty()) out.push_back(t);
    }
    return out;
}

bool parse_bool(const std::string& v) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw std::invalid_argument("bad boolean '" + v + "'");
}

std::string tau_tag(const ExperimentConfig& cfg, double tau) {
    return cfg.taus().size() > 1 ? "_tau" + fmt_short(tau) : "";
}

std::string snr_tag(const ExperimentConfig& cfg, double snr) {
    return cfg.snr_db.size() > 1 ? "_snr" + fmt_short(snr) : "";
}

void ensure_out_dir(const ExperimentConfig& cfg) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec) throw IoError("cannot create output directory '" + cfg.out_dir + "'");
}

}  // namespace

SystemConfig ExperimentConfig::system(double snr) const {
    return SystemConfig::from_snr(m, n, p, snr, seed);
}

std::vector<double> ExperimentConfig::taus() const {
    return tau_sweep.empty() ? std::vector<double>{tau} : tau_sweep;
}

std::vector<double> ExperimentConfig::grid() const {
    if (!q_grid.empty()) return q_grid;
    std::vector<double> g;
    for (int i = 1; i <= 9; ++i) g.push_back(i / 10.0);
    return g;
}

void ExperimentConfig::validate() const {
    try {
        system(snr_db.empty() ? 20.0 : snr_db[0]);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (snr_db.empty()) throw ConfigError("snr_db list must not be empty");
    if (layers < 1) throw ConfigError("layers must be >= 1");
    if (!(tau > 0.0 && tau < 1.0)) throw ConfigError("tau must be in (0, 1)");
    for (double t : taus())
        if (!(t > 0.0 && t < 1.0)) throw ConfigError("tau_sweep values must be in (0, 1)");
    for (double q : grid())
        if (!(q > 0.0 && q < 1.0)) throw ConfigError("q_grid values must be in (0, 1)");
    if (eps_floor < 0.0) throw ConfigError("eps_floor must be >= 0");
    if (!(hyper.alpha >= 0.0 && hyper.alpha <= 1.0))
        throw ConfigError("alpha must be in [0, 1]");
    if (!(hyper.epsilon >= 0.0 && hyper.epsilon <= 1.0))
        throw ConfigError("epsilon must be in [0, 1]");
    if (hyper.max_epoch < 1) throw ConfigError("max_epoch must be >= 1");
    if (hyper.max_channel < 0 || hyper.max_l < 0 || budget < 0)
        throw ConfigError("max_channel, max_l and budget must be >= 0");
    if (n_dataset < 1) throw ConfigError("n_dataset must be >= 1");
    if (n_eval_channels < 1) throw ConfigError("n_eval_channels must be >= 1");
    if (methods.empty()) throw ConfigError("methods list must not be empty");
    for (const std::string& name : methods) {
        try {
            parse_strategy_kind(name);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
}

ExperimentConfig load_config(const std::string& path) {
    ExperimentConfig cfg;
    std::string content;
    try {
        content = read_file(path);
    } catch (const IoError& e) {
        throw ConfigError(e.what());
    }
    std::vector<std::string> lines = split(content, '\n');
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string line = lines[i];
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(i + 1) +
                              ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        try {
            if (key == "m") cfg.m = static_cast<int>(parse_int(val));
            else if (key == "n") cfg.n = static_cast<int>(parse_int(val));
            else if (key == "p") cfg.p = parse_double(val);
            else if (key == "snr_db") cfg.snr_db = parse_double_list(val);
            else if (key == "layers") cfg.layers = static_cast<int>(parse_int(val));
            else if (key == "deact_seed") cfg.deact_seed = parse_u64(val);
            else if (key == "tau") cfg.tau = parse_double(val);
            else if (key == "tau_sweep") cfg.tau_sweep = parse_double_list(val);
            else if (key == "q_grid") cfg.q_grid = parse_double_list(val);
            else if (key == "eps_floor") cfg.eps_floor = parse_double(val);
            else if (key == "alpha") cfg.hyper.alpha = parse_double(val);
            else if (key == "epsilon") cfg.hyper.epsilon = parse_double(val);
            else if (key == "max_epoch") cfg.hyper.max_epoch = static_cast<int>(parse_int(val));
            else if (key == "max_channel") cfg.hyper.max_channel = static_cast<int>(parse_int(val));
            else if (key == "max_l") cfg.hyper.max_l = static_cast<int>(parse_int(val));
            else if (key == "n_dataset") cfg.n_dataset = static_cast<int>(parse_int(val));
            else if (key == "n_eval_channels") cfg.n_eval_channels = static_cast<int>(parse_int(val));
            else if (key == "out_dir") cfg.out_dir = val;
            else if (key == "methods") cfg.methods = parse_name_list(val);
            else if (key == "budget") cfg.budget = static_cast<int>(parse_int(val));
            else if (key == "eval_in_dataset") cfg.eval_in_dataset = parse_bool(val);
            else if (key == "noiseless_dataset") cfg.noiseless_dataset = parse_bool(val);
            else if (key == "idealized_deact") cfg.idealized_deact = parse_bool(val);
            else if (key == "seed") cfg.seed = parse_u64(val);
            else
                throw std::invalid_argument("unknown config key '" + key + "'");
        } catch (const std::invalid_argument& e) {
            throw ConfigError(path + ":" + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return cfg;
}

std::string eval_csv(const std::vector<EvalRow>& rows) {
    std::ostringstream out;
    out << "method,k,mean_rho,stderr\n";
    for (const EvalRow& r : rows)
        out << r.method << "," << r.k << "," << fmt17(r.mean_rho) << ","
            << fmt17(r.stderr_rho) << "\n";
    return out.str();
}

std::string curve_csv(const TrainingCurve& curve) {
    std::ostringstream out;
    out << "epoch,mean_length,terminal_fraction\n";
    for (std::size_t e = 0; e < curve.mean_length.size(); ++e)
        out << (e + 1) << "," << fmt17(curve.mean_length[e]) << ","
            << fmt17(curve.terminal_fraction[e]) << "\n";
    return out.str();
}

std::vector<std::string> cmd_generate(const ExperimentConfig& cfg) {
    cfg.validate();
    SystemConfig sys = cfg.system(cfg.snr_db[0]);
    Codebook cb = build_codebook(sys, cfg.layers, cfg.deact_seed, cfg.idealized_deact);
    Rng rng(cfg.seed);
    TrainingDataset ds = generate_dataset(sys, cb, cfg.n_dataset, rng, cfg.noiseless_dataset);

    ensure_out_dir(cfg);
    std::string path = cfg.out_dir + "/dataset.txt";
    save_dataset(ds, path);

    std::vector<int> counts(static_cast<std::size_t>(ds.nc), 0);
    for (int label : ds.labels) ++counts[static_cast<std::size_t>(label - 1)];
    std::cout << "wrote " << path << " (" << ds.n() << " channels, " << ds.np()
              << " probing feedbacks each)\n";
    for (int c = 1; c <= ds.nc; ++c)
        std::cout << "  class " << c << ": " << counts[static_cast<std::size_t>(c - 1)]
                  << " channels\n";
    return {path};
}

std::vector<std::string> cmd_train(const ExperimentConfig& cfg,
                                   const std::string& dataset_path) {
    cfg.validate();
    std::string ds_path =
        dataset_path.empty() ? cfg.out_dir + "/dataset.txt" : dataset_path;
    TrainingDataset ds = load_dataset(ds_path);
    SystemConfig sys = cfg.system(cfg.snr_db[0]);
    Codebook cb = build_codebook(sys, cfg.layers, cfg.deact_seed, cfg.idealized_deact);
    if (ds.meta.cbhash != codebook_hash(cb))
        throw IncompatibleArtifact("dataset " + ds_path +
                                   " was generated with a different codebook");

    double eps = cfg.eps_floor > 0.0 ? cfg.eps_floor : default_eps_floor(ds);
    ensure_out_dir(cfg);
    std::vector<std::string> written;
    for (double tau : cfg.taus()) {
        StateSpace ss = build_state_space(cb.nc(), cfg.grid(), tau);
        Hyper hyper = cfg.hyper;
        hyper.seed = mix_seed({cfg.seed, kSaltTrain});
        TrainResult res = train(ds, ss, cb, hyper, eps);

        std::string qpath = cfg.out_dir + "/qtable" + tau_tag(cfg, tau) + ".txt";
        std::string cpath = cfg.out_dir + "/training_curve" + tau_tag(cfg, tau) + ".csv";
        save_qtable(res.q, qpath);
        write_file(cpath, curve_csv(res.curve));
        std::cout << "tau=" << fmt_short(tau) << ": " << ss.size()
                  << " states, final mean length "
                  << fmt_short(res.curve.mean_length.back()) << ", wrote " << qpath
                  << " and " << cpath << "\n";
        written.push_back(qpath);
        written.push_back(cpath);
    }
    return written;
}

std::vector<EvalRow> evaluate_methods(const ExperimentConfig& cfg,
                                      const SystemConfig& sys, const Codebook& cb,
                                      const TrainingDataset& ds, const StateSpace& ss,
                                      const Policy& policy,
                                      const std::vector<ChannelRealization>& channels) {
    const int budget_max = cfg.budget > 0 ? cfg.budget : cb.np();
    const double eps = cfg.eps_floor > 0.0 ? cfg.eps_floor : default_eps_floor(ds);
    const std::uint64_t snr_bits = std::bit_cast<std::uint64_t>(sys.snr_db);

    std::vector<EvalRow> rows;
    for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
        StrategyKind kind = parse_strategy_kind(cfg.methods[mi]);
        AcquisitionStrategy strat{kind, kind == StrategyKind::qlearning ? &policy : nullptr};
        for (int k = 1; k <= budget_max; ++k) {
            double sum = 0.0, sum2 = 0.0;
            for (std::size_t i = 0; i < channels.size(); ++i) {
                Rng rng(mix_seed({cfg.seed, kSaltEvalEpisode, snr_bits, mi,
                                  static_cast<std::uint64_t>(k), i}));
                double rho =
                    run_episode(sys, channels[i], cb, ds, ss, strat, k, rng, eps).rho;
                sum += rho;
                sum2 += rho * rho;
            }
            const double n_ep = static_cast<double>(channels.size());
            double mean = sum / n_ep;
            double stderr_rho = 0.0;
            if (channels.size() > 1) {
                double var = std::max(0.0, (sum2 - n_ep * mean * mean) / (n_ep - 1.0));
                stderr_rho = std::sqrt(var / n_ep);
            }
            rows.push_back(EvalRow{cfg.methods[mi], k, mean, stderr_rho,
                                   static_cast<int>(channels.size())});
        }
    }
    return rows;
}

std::vector<std::string> cmd_eval(const ExperimentConfig& cfg,
                                  const std::string& dataset_path,
                                  const std::string& qtable_path) {
    cfg.validate();
    std::string ds_path =
        dataset_path.empty() ? cfg.out_dir + "/dataset.txt" : dataset_path;
    std::string qt_path =
        qtable_path.empty() ? cfg.out_dir + "/qtable.txt" : qtable_path;

    TrainingDataset ds = load_dataset(ds_path);
    SystemConfig sys0 = cfg.system(cfg.snr_db[0]);
    Codebook cb = build_codebook(sys0, cfg.layers, cfg.deact_seed, cfg.idealized_deact);
    if (ds.meta.cbhash != codebook_hash(cb))
        throw IncompatibleArtifact("dataset " + ds_path +
                                   " was generated with a different codebook");

    StateSpace ss = build_state_space(cb.nc(), cfg.grid(), cfg.tau);
    bool needs_policy = std::find(cfg.methods.begin(), cfg.methods.end(),
                                  "qlearning") != cfg.methods.end();
    QTable qt;
    Policy policy;
    if (needs_policy) {
        qt = load_qtable(qt_path);
        check_qtable_compatible(qt, ss, cb, ds);
        policy = extract_policy(qt, ss);
    } else {
        policy.action.assign(static_cast<std::size_t>(ss.size()), 0);
    }

    std::vector<ChannelRealization> channels;
    if (cfg.eval_in_dataset) {
        channels = ds.channels;
        if (static_cast<int>(channels.size()) > cfg.n_eval_channels)
            channels.resize(static_cast<std::size_t>(cfg.n_eval_channels));
    } else {
        Rng ch_rng(mix_seed({cfg.seed, kSaltEvalChannels}));
        for (int i = 0; i < cfg.n_eval_channels; ++i)
            channels.push_back(sample_channel(ch_rng));
    }

    ensure_out_dir(cfg);
    std::vector<std::string> written;
    for (double snr : cfg.snr_db) {
        SystemConfig sys = cfg.system(snr);
        std::vector<EvalRow> rows =
            evaluate_methods(cfg, sys, cb, ds, ss, policy, channels);

        std::string csv_path = cfg.out_dir + "/eval" + snr_tag(cfg, snr) + ".csv";
        write_file(csv_path, eval_csv(rows));
        written.push_back(csv_path);

        std::vector<Series> series;
        for (const EvalRow& r : rows) {
            if (series.empty() || series.back().name != r.method)
                series.push_back(Series{r.method, {}});
            series.back().points.emplace_back(r.k, r.mean_rho);
        }
        std::string svg_path = cfg.out_dir + "/eval" + snr_tag(cfg, snr) + ".svg";
        write_file(svg_path,
                   render_line_plot("Mean relative channel strength, SNR " +
                                        fmt_short(snr) + " dB",
                                    "pilot budget", "mean relative strength", series));
        written.push_back(svg_path);
        std::cout << "wrote " << csv_path << " and " << svg_path << " ("
                  << channels.size() << " channels per point)\n";
    }
    return written;
}

std::vector<std::string> cmd_plot(const ExperimentConfig& cfg,
                                  const std::string& csv_path) {
    (void)cfg;
    std::string content = read_file(csv_path);
    std::vector<std::string> lines = split(content, '\n');
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw ParseError(csv_path, 1, "empty CSV file");

    std::vector<std::string> header = split(lines[0], ',');
    if (lines.size() < 2) throw ParseError(csv_path, 1, "CSV has no data rows");

    std::vector<Series> series;
    std::string title, xlabel, ylabel;
    if (header == std::vector<std::string>{"method", "k", "mean_rho", "stderr"}) {
        title = "Mean relative channel strength per pilot budget";
        xlabel = "pilot budget";
        ylabel = "mean relative strength";
        for (std::size_t i = 1; i < lines.size(); ++i) {
            std::vector<std::string> tok = split(lines[i], ',');
            if (tok.size() != 4)
                throw ParseError(csv_path, static_cast<int>(i + 1), "expected 4 fields");
            try {
                double k = parse_double(tok[1]);
                double rho = parse_double(tok[2]);
                if (series.empty() || series.back().name != tok[0])
                    series.push_back(Series{tok[0], {}});
                series.back().points.emplace_back(k, rho);
            } catch (const std::invalid_argument& e) {
                throw ParseError(csv_path, static_cast<int>(i + 1), e.what());
            }
        }
    } else if (header ==
               std::vector<std::string>{"epoch", "mean_length", "terminal_fraction"}) {
        title = "Average episode length per training epoch";
        xlabel = "epoch";
        ylabel = "mean episode length";
        series.push_back(Series{"mean_length", {}});
        for (std::size_t i = 1; i < lines.size(); ++i) {
            std::vector<std::string> tok = split(lines[i], ',');
            if (tok.size() != 3)
                throw ParseError(csv_path, static_cast<int>(i + 1), "expected 3 fields");
            try {
                series.back().points.emplace_back(parse_double(tok[0]), parse_double(tok[1]));
            } catch (const std::invalid_argument& e) {
                throw ParseError(csv_path, static_cast<int>(i + 1), e.what());
            }
        }
    } else {
        throw ParseError(csv_path, 1, "unrecognized CSV header");
    }

    std::string out_path = csv_path;
    if (out_path.size() > 4 && out_path.substr(out_path.size() - 4) == ".csv")
        out_path = out_path.substr(0, out_path.size() - 4);
    out_path += ".svg";
    write_file(out_path, render_line_plot(title, xlabel, ylabel, series));
    std::cout << "wrote " << out_path << "\n";
    return {out_path};
}

}  // namespace risq
