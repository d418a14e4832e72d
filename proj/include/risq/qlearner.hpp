#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "risq/belief.hpp"
#include "risq/codebook.hpp"
#include "risq/state_space.hpp"

namespace risq {

struct Hyper {
    double alpha = 0.1;      // learning rate
    double epsilon = 0.1;    // exploration probability
    int max_epoch = 200;
    int max_channel = 0;     // episodes per epoch; 0 = full dataset
    int max_l = 0;           // episode step cap; 0 = Np
    std::uint64_t seed = 1;  // exploration stream seed
};

struct QTable {
    std::vector<std::vector<double>> values;  // |S| rows of Np action values
    Hyper hyper;
    double tau = 0.9;    // state-space confidence threshold it was trained with
    std::string dshash;  // hash of the training dataset

    int n_states() const { return static_cast<int>(values.size()); }
    int n_actions() const { return values.empty() ? 0 : static_cast<int>(values[0].size()); }
};

// Greedy action per state, 1-based; 0 for terminal states.
struct Policy {
    std::vector<int> action;

    int at(int state) const { return action[static_cast<std::size_t>(state)]; }
};

// Per-epoch averages over the episodes of that epoch. Episodes truncated at
// max_l count as length max_l.
struct TrainingCurve {
    std::vector<double> mean_length;
    std::vector<double> terminal_fraction;
};

struct TrainResult {
    QTable q;
    Policy policy;
    TrainingCurve curve;
};

// Undiscounted Bellman update (SSP, gamma = 1):
//   Q[s][a] <- (1 - alpha)*Q[s][a] + alpha*(r + max_a' Q[s_next][a'])
// s must be non-terminal; terminal rows are never written.
void q_update(QTable& q, int s, int a, int r, int s_next, double alpha);

// With probability 1 - epsilon the greedy action (lowest-index tie-break),
// otherwise a uniformly random action. 1-based.
int epsilon_greedy(const QTable& q, int s, double epsilon, Rng& rng);

// Tabular Q-learning over the dataset-driven MDP: per epoch, per dataset
// channel, an episode replays stored feedbacks (no fresh simulation), updates
// the belief, projects it, and applies q_update until terminal or max_l.
TrainResult train(const TrainingDataset& ds, const StateSpace& ss,
                  const Codebook& cb, const Hyper& hyper, double eps_floor);

Policy extract_policy(const QTable& q, const StateSpace& ss);

std::string serialize_qtable(const QTable& q);
void save_qtable(const QTable& q, const std::string& path);
QTable load_qtable(const std::string& path);

// Throws IncompatibleArtifact unless the Q-table's fingerprint (state count,
// action count, tau) matches the state space/codebook and its dataset hash
// matches ds.
void check_qtable_compatible(const QTable& q, const StateSpace& ss,
                             const Codebook& cb, const TrainingDataset& ds);

}  // namespace risq
