#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "risq/rng.hpp"

namespace risq {

struct SystemConfig {
    int m = 64;              // BS antenna count
    int n = 100;             // RIS element count
    double p = 1.0;          // transmit power (linear)
    double sigma_w2 = 0.01;  // noise variance per receive antenna (linear)
    double snr_db = 20.0;    // 10*log10(p / sigma_w2)
    std::uint64_t seed = 1;  // master RNG seed

    // Derives sigma_w2 from an SNR in dB (snr_db = +inf gives sigma_w2 = 0).
    static SystemConfig from_snr(int m, int n, double p, double snr_db,
                                 std::uint64_t seed);

    void validate() const;  // throws std::invalid_argument
};

// The four path angles (radians, [0, 2*pi)) that define the unknown cascaded
// channel: phi1/phi2 for the RIS-BS link, phi3/phi4 for the UE-RIS link.
struct ChannelRealization {
    double phi1 = 0.0;
    double phi2 = 0.0;
    double phi3 = 0.0;  // inert for a single-antenna UE; kept for fidelity
    double phi4 = 0.0;
};

// One RIS configuration: a full vector of per-element phase shifts plus the
// hierarchical-codebook metadata it was built from.
struct Codeword {
    std::vector<double> phases;     // exactly N entries, each in [0, 2*pi)
    int layer = 0;                  // 0 = narrow bottom layer, 1..L = probing layers
    int index_in_layer = 1;         // 1-based beam index within the layer
    double center_omega = 0.0;      // beam center in the sine domain, [-1, 1)
    int active_count = 0;           // elements carrying the beam ramp
    bool zero_deactivated = false;  // idealized test mode: deactivated elements
                                    // do not reflect at all
};

struct Feedback {
    double value = 0.0;    // received signal energy Y, >= 0
    int action_index = 0;  // 1-based index into the probing codebook
};

// Half-wave ULA steering vector: entry k = exp(i*pi*k*sin(angle)).
std::vector<std::complex<double>> steering_vector(int n_elems, double angle);

// Scalar cascade gain g = sum_n amp_n * exp(i*(theta_n + pi*n*(sin phi4 - sin phi1))).
// The effective BS-side channel is h = g * a_M(phi2), so ||h||^2 = M*|g|^2.
std::complex<double> channel_gain(const SystemConfig& cfg,
                                  const ChannelRealization& ch,
                                  const Codeword& cw);

// ||h||^2 = M * |channel_gain|^2.
double channel_strength(const SystemConfig& cfg, const ChannelRealization& ch,
                        const Codeword& cw);

// One pilot: y = sqrt(P)*h + w with w ~ CN(0, sigma_w2*I_M); returns Y = ||y||^2.
Feedback simulate_feedback(const SystemConfig& cfg, const ChannelRealization& ch,
                           const Codeword& cw, Rng& rng, int action_index = 0);

// Four independent uniform draws on [0, 2*pi).
ChannelRealization sample_channel(Rng& rng);

// 1-based index of the strongest narrow codeword (ties -> lowest index).
int true_class(const SystemConfig& cfg, const ChannelRealization& ch,
               const std::vector<Codeword>& narrow);

// sin(phi4) - sin(phi1), wrapped into [-1, 1). Beam membership lives here.
double effective_mu(const ChannelRealization& ch);

// Wraps an angle into [0, 2*pi).
double wrap_angle(double x);

}  // namespace risq
