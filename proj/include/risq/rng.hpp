#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace risq {

// Deterministic RNG. std::mt19937_64 supplies the bit stream (its output
// sequence is fixed by the standard); the floating-point conversions are done
// by hand because std::*_distribution results are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform angle in [0, 2*pi).
    double angle();

    // Standard normal via Box-Muller.
    double normal();

    // Circularly symmetric complex Gaussian with E|z|^2 = var.
    std::complex<double> cnormal(double var);

    // Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi);

    // In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
            std::swap(v[static_cast<std::size_t>(i)],
                      v[static_cast<std::size_t>(uniform_int(0, i))]);
        }
    }

private:
    std::mt19937_64 eng_;
};

// Collapses several values into one 64-bit seed (splitmix64 per word).
std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts);

// Stream seed for one realization: master seed XOR realization index.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
    return master ^ index;
}

}  // namespace risq
