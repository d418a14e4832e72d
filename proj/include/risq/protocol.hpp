#pragma once

#include <vector>

#include "risq/belief.hpp"
#include "risq/codebook.hpp"
#include "risq/qlearner.hpp"
#include "risq/state_space.hpp"

namespace risq {

enum class StrategyKind { random, qlearning, exhaustive, hierarchical };

// How the next probing codeword is chosen during an online episode. The RNG
// stream accompanies the strategy at call time (run_episode's rng argument).
struct AcquisitionStrategy {
    StrategyKind kind = StrategyKind::random;
    const Policy* policy = nullptr;  // required for qlearning
};

StrategyKind parse_strategy_kind(const std::string& name);
std::string strategy_name(StrategyKind kind);

struct EpisodeResult {
    int declared = 0;               // 1-based narrow codeword index
    int pilots_used = 0;
    double rho = 0.0;               // declared strength / best narrow strength
    std::vector<Feedback> history;  // (action, Y) per pilot
    std::vector<int> rewards;       // MDP step reward per pilot (state departed from)
    Belief final_belief;
};

// One adaptive blind-beamforming episode: up to `budget` pilots, fresh noise
// per pilot, belief updated after each feedback, early stop once confident.
// Declares the argmax of the final belief.
EpisodeResult run_episode(const SystemConfig& cfg, const ChannelRealization& ch,
                          const Codebook& cb, const TrainingDataset& ds,
                          const StateSpace& ss, const AcquisitionStrategy& strat,
                          int budget, Rng& rng, double eps_floor);

// Probes every narrow codeword once (Nc pilots) and declares the largest
// measured energy. A budget below Nc truncates the sweep to the first
// `budget` codewords. budget < 0 means unlimited.
EpisodeResult exhaustive_search(const SystemConfig& cfg,
                                const ChannelRealization& ch, const Codebook& cb,
                                Rng& rng, int budget = -1);

// Dichotomic descent: probes the two candidate beams per layer and follows
// the stronger measurement, 2*L pilots total. A smaller budget stops the
// descent early and declares the center narrow descendant of the last
// winning node. budget < 0 means unlimited.
EpisodeResult hierarchical_search(const SystemConfig& cfg,
                                  const ChannelRealization& ch,
                                  const Codebook& cb, Rng& rng, int budget = -1);

// Strength of the declared narrow codeword relative to the best one, in [0, 1].
double relative_strength(const SystemConfig& cfg, const ChannelRealization& ch,
                         int declared, const Codebook& cb);

// log2(1 + P*strength/sigma_w2); +inf when sigma_w2 = 0 and strength > 0.
double achievable_rate(const SystemConfig& cfg, double strength);

}  // namespace risq
