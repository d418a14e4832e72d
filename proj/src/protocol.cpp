#include "risq/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "risq/errors.hpp"

namespace risq {

StrategyKind parse_strategy_kind(const std::string& name) {
    if (name == "random") return StrategyKind::random;
    if (name == "qlearning") return StrategyKind::qlearning;
    if (name == "exhaustive") return StrategyKind::exhaustive;
    if (name == "hierarchical") return StrategyKind::hierarchical;
    throw std::invalid_argument("unknown acquisition strategy '" + name + "'");
}

std::string strategy_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::random: return "random";
        case StrategyKind::qlearning: return "qlearning";
        case StrategyKind::exhaustive: return "exhaustive";
        case StrategyKind::hierarchical: return "hierarchical";
    }
    return "?";
}

double relative_strength(const SystemConfig& cfg, const ChannelRealization& ch,
                         int declared, const Codebook& cb) {
    if (declared < 1 || declared > cb.nc())
        throw std::invalid_argument("relative_strength: declared index out of range");
    double best = 0.0;
    for (const Codeword& cw : cb.narrow) best = std::max(best, channel_strength(cfg, ch, cw));
    double mine = channel_strength(cfg, ch, cb.narrow[static_cast<std::size_t>(declared - 1)]);
    if (mine == best) return 1.0;  // covers the all-zero corner as well
    return mine / best;
}

double achievable_rate(const SystemConfig& cfg, double strength) {
    if (strength < 0.0)
        throw std::invalid_argument("achievable_rate: strength must be >= 0");
    if (cfg.sigma_w2 == 0.0) return std::numeric_limits<double>::infinity();
    return std::log2(1.0 + cfg.p * strength / cfg.sigma_w2);
}

EpisodeResult run_episode(const SystemConfig& cfg, const ChannelRealization& ch,
                          const Codebook& cb, const TrainingDataset& ds,
                          const StateSpace& ss, const AcquisitionStrategy& strat,
                          int budget, Rng& rng, double eps_floor) {
    if (budget < 1) throw std::invalid_argument("run_episode: budget must be >= 1");
    if (strat.kind == StrategyKind::exhaustive)
        return exhaustive_search(cfg, ch, cb, rng, budget);
    if (strat.kind == StrategyKind::hierarchical)
        return hierarchical_search(cfg, ch, cb, rng, budget);
    if (strat.kind == StrategyKind::qlearning) {
        if (strat.policy == nullptr)
            throw std::invalid_argument("run_episode: qlearning strategy needs a policy");
        if (static_cast<int>(strat.policy->action.size()) != ss.size())
            throw IncompatibleArtifact(
                "run_episode: policy size does not match the state space");
    }

    EpisodeResult res;
    res.final_belief = uniform_prior(ds.nc);
    std::vector<int> order;  // random strategy: permutation of probing indices
    std::size_t order_pos = 0;

    for (int k = 1; k <= budget; ++k) {
        int state = project(res.final_belief, ss);
        if (ss.is_terminal(state)) break;  // already confident, nothing to ask

        int action;
        if (strat.kind == StrategyKind::qlearning) {
            action = strat.policy->at(state);
            if (action < 1 || action > cb.np())
                throw IncompatibleArtifact("run_episode: policy has no action for state " +
                                           std::to_string(state));
        } else {
            if (order_pos == order.size()) {  // fresh permutation, no replacement
                order.resize(static_cast<std::size_t>(cb.np()));
                std::iota(order.begin(), order.end(), 1);
                rng.shuffle(order);
                order_pos = 0;
            }
            action = order[order_pos++];
        }

        res.rewards.push_back(reward(state, ss));
        Feedback fb = simulate_feedback(cfg, ch, cb.probe(action), rng, action);
        res.history.push_back(fb);
        res.pilots_used = k;
        res.final_belief = posterior_update(res.final_belief, action, fb.value, ds, eps_floor);
        if (is_confident(res.final_belief, ss.tau)) break;
    }

    res.declared = declare(res.final_belief);
    res.rho = relative_strength(cfg, ch, res.declared, cb);
    return res;
}

EpisodeResult exhaustive_search(const SystemConfig& cfg,
                                const ChannelRealization& ch, const Codebook& cb,
                                Rng& rng, int budget) {
    if (budget == 0) throw std::invalid_argument("exhaustive_search: budget must be >= 1");
    int probes = budget < 0 ? cb.nc() : std::min(budget, cb.nc());

    EpisodeResult res;
    int best_c = 1;
    double best_y = -1.0;
    for (int c = 1; c <= probes; ++c) {
        Feedback fb = simulate_feedback(cfg, ch, cb.narrow[static_cast<std::size_t>(c - 1)],
                                        rng, probing_index(cb.layers, c));
        res.history.push_back(fb);
        res.rewards.push_back(-1);
        if (fb.value > best_y) {
            best_y = fb.value;
            best_c = c;
        }
    }
    res.pilots_used = probes;
    res.declared = best_c;
    res.rho = relative_strength(cfg, ch, res.declared, cb);
    res.final_belief.probs.assign(static_cast<std::size_t>(cb.nc()), 0.0);
    res.final_belief.probs[static_cast<std::size_t>(best_c - 1)] = 1.0;
    return res;
}

EpisodeResult hierarchical_search(const SystemConfig& cfg,
                                  const ChannelRealization& ch, const Codebook& cb,
                                  Rng& rng, int budget) {
    if (budget == 0) throw std::invalid_argument("hierarchical_search: budget must be >= 1");
    const int layers = cb.layers;
    int allowed = budget < 0 ? 2 * layers : std::min(budget, 2 * layers);

    EpisodeResult res;
    int m = 1;           // winning beam index at depth `reached`
    int reached = 0;     // deepest layer with a decided winner
    int pilots = 0;
    for (int k = 1; k <= layers && pilots < allowed; ++k) {
        int first = k == 1 ? 1 : 2 * m - 1;
        double y[2] = {0.0, 0.0};
        int probed = 0;
        for (int side = 0; side < 2 && pilots < allowed; ++side) {
            int beam = first + side;
            Feedback fb =
                simulate_feedback(cfg, ch, cb.probe(probing_index(k, beam)), rng,
                                  probing_index(k, beam));
            res.history.push_back(fb);
            res.rewards.push_back(-1);
            y[side] = fb.value;
            ++probed;
            ++pilots;
        }
        // With one probe left the measured child wins by default.
        m = (probed == 2 && y[1] > y[0]) ? first + 1 : first;
        reached = k;
    }
    res.pilots_used = pilots;
    if (reached == layers) {
        res.declared = m;
    } else {
        // Partial descent: fall back to the center narrow descendant.
        int span = 1 << (layers - reached);
        res.declared = (m - 1) * span + span / 2;
    }
    res.rho = relative_strength(cfg, ch, res.declared, cb);
    res.final_belief.probs.assign(static_cast<std::size_t>(cb.nc()), 0.0);
    res.final_belief.probs[static_cast<std::size_t>(res.declared - 1)] = 1.0;
    return res;
}

}  // namespace risq
