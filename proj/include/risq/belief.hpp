#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "risq/chansim.hpp"
#include "risq/codebook.hpp"

namespace risq {

// Posterior probability over the Nc narrow-beam classes.
struct Belief {
    std::vector<double> probs;

    int nc() const { return static_cast<int>(probs.size()); }
    void validate() const;  // entries >= 0, sum within 1e-9 of 1
};

struct DatasetMeta {
    SystemConfig cfg;        // generation-time snapshot (not fully persisted)
    double snr_db = 0.0;     // SNR the feedbacks were generated at
    std::uint64_t seed = 0;  // generation seed
    std::string cbhash;      // codebook content hash
};

// Feedback table X (one row per channel, one column per probing codeword)
// with the true narrow-beam class of every row.
struct TrainingDataset {
    std::vector<ChannelRealization> channels;
    std::vector<std::vector<double>> feedbacks;  // n rows of Np values
    std::vector<int> labels;                     // 1-based class per row
    int nc = 0;
    DatasetMeta meta;

    int n() const { return static_cast<int>(feedbacks.size()); }
    int np() const { return feedbacks.empty() ? 0 : static_cast<int>(feedbacks[0].size()); }
    std::vector<double> one_hot(int row) const;
};

Belief uniform_prior(int nc);

// Multiplies the prior by the inverse-squared-distance likelihood of the
// observed energy y under probing action a (1-based):
//   p'_k  propto  b_k * sum_{rows of class k} 1 / ((X[row][a] - y)^2 + eps_floor)
// then renormalizes. Classes with no dataset member get likelihood eps_floor.
Belief posterior_update(const Belief& b, int action, double y,
                        const TrainingDataset& ds, double eps_floor);

// Argmax class, 1-based; ties broken by lowest index.
int declare(const Belief& b);

// True iff max entry > tau (strict).
bool is_confident(const Belief& b, double tau);

// Samples n_channels channels, simulates one noisy feedback per probing
// codeword per channel, labels rows by true_class. Redraws channels until
// every class has at least one member (bounded retries).
TrainingDataset generate_dataset(const SystemConfig& cfg, const Codebook& cb,
                                 int n_channels, Rng& rng,
                                 bool noiseless = false);

// Default distance regularizer: 1e-9 times the feedback-table variance.
double default_eps_floor(const TrainingDataset& ds);

std::string serialize_dataset(const TrainingDataset& ds);
void save_dataset(const TrainingDataset& ds, const std::string& path);
TrainingDataset load_dataset(const std::string& path);
std::string dataset_hash(const TrainingDataset& ds);

}  // namespace risq
