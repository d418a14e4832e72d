#include "risq/chansim.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace risq {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

SystemConfig SystemConfig::from_snr(int m, int n, double p, double snr_db,
                                    std::uint64_t seed) {
    SystemConfig cfg;
    cfg.m = m;
    cfg.n = n;
    cfg.p = p;
    cfg.snr_db = snr_db;
    cfg.sigma_w2 = std::isinf(snr_db) ? 0.0 : p * std::pow(10.0, -snr_db / 10.0);
    cfg.seed = seed;
    cfg.validate();
    return cfg;
}

void SystemConfig::validate() const {
    if (m < 1) throw std::invalid_argument("SystemConfig: m must be >= 1");
    if (n < 1) throw std::invalid_argument("SystemConfig: n must be >= 1");
    if (!(p > 0.0)) throw std::invalid_argument("SystemConfig: p must be > 0");
    if (!(sigma_w2 >= 0.0))
        throw std::invalid_argument("SystemConfig: sigma_w2 must be >= 0");
}

double wrap_angle(double x) {
    x = std::fmod(x, kTwoPi);
    if (x < 0.0) x += kTwoPi;
    return x == 0.0 ? 0.0 : x;  // normalizes -0.0
}

double effective_mu(const ChannelRealization& ch) {
    double mu = std::sin(ch.phi4) - std::sin(ch.phi1);  // in [-2, 2]
    // exp(i*pi*n*mu) is 2-periodic in mu.
    if (mu >= 1.0) mu -= 2.0;
    if (mu < -1.0) mu += 2.0;
    return mu;
}

std::vector<std::complex<double>> steering_vector(int n_elems, double angle) {
    if (n_elems < 1) throw std::invalid_argument("steering_vector: n_elems must be >= 1");
    std::vector<std::complex<double>> a(static_cast<std::size_t>(n_elems));
    double s = std::sin(angle);
    for (int k = 0; k < n_elems; ++k) {
        double ph = std::numbers::pi * k * s;
        a[static_cast<std::size_t>(k)] = {std::cos(ph), std::sin(ph)};
    }
    return a;
}

std::complex<double> channel_gain(const SystemConfig& cfg,
                                  const ChannelRealization& ch,
                                  const Codeword& cw) {
    if (static_cast<int>(cw.phases.size()) != cfg.n)
        throw std::invalid_argument("channel_gain: codeword has " +
                                    std::to_string(cw.phases.size()) +
                                    " phases, config expects " + std::to_string(cfg.n));
    double mu = std::sin(ch.phi4) - std::sin(ch.phi1);
    std::complex<double> g{0.0, 0.0};
    int limit = cw.zero_deactivated ? cw.active_count : cfg.n;
    for (int n = 0; n < limit; ++n) {
        double ph = cw.phases[static_cast<std::size_t>(n)] + std::numbers::pi * n * mu;
        g += std::complex<double>{std::cos(ph), std::sin(ph)};
    }
    return g;
}

double channel_strength(const SystemConfig& cfg, const ChannelRealization& ch,
                        const Codeword& cw) {
    return cfg.m * std::norm(channel_gain(cfg, ch, cw));
}

Feedback simulate_feedback(const SystemConfig& cfg, const ChannelRealization& ch,
                           const Codeword& cw, Rng& rng, int action_index) {
    std::complex<double> g = channel_gain(cfg, ch, cw);
    double sqrt_p = std::sqrt(cfg.p);
    double s2 = std::sin(ch.phi2);
    double energy = 0.0;
    for (int m = 0; m < cfg.m; ++m) {
        double ph = std::numbers::pi * m * s2;
        std::complex<double> h_m = g * std::complex<double>{std::cos(ph), std::sin(ph)};
        std::complex<double> y_m = sqrt_p * h_m + rng.cnormal(cfg.sigma_w2);
        energy += std::norm(y_m);
    }
    return Feedback{energy, action_index};
}

ChannelRealization sample_channel(Rng& rng) {
    ChannelRealization ch;
    ch.phi1 = rng.angle();
    ch.phi2 = rng.angle();
    ch.phi3 = rng.angle();
    ch.phi4 = rng.angle();
    return ch;
}

int true_class(const SystemConfig& cfg, const ChannelRealization& ch,
               const std::vector<Codeword>& narrow) {
    if (narrow.empty()) throw std::invalid_argument("true_class: empty codebook");
    int best = 1;
    double best_s = channel_strength(cfg, ch, narrow[0]);
    for (int c = 2; c <= static_cast<int>(narrow.size()); ++c) {
        double s = channel_strength(cfg, ch, narrow[static_cast<std::size_t>(c - 1)]);
        if (s > best_s) {
            best_s = s;
            best = c;
        }
    }
    return best;
}

}  // namespace risq
