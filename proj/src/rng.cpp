#include "risq/rng.hpp"

#include <cmath>
#include <numbers>

namespace risq {

double Rng::angle() { return uniform(0.0, 2.0 * std::numbers::pi); }

double Rng::normal() {
    // 1 - u1 keeps the log argument in (0, 1].
    double u1 = uniform01();
    double u2 = uniform01();
    return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::complex<double> Rng::cnormal(double var) {
    if (var <= 0.0) return {0.0, 0.0};
    double u1 = uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-var * std::log1p(-u1));
    double th = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(th), r * std::sin(th)};
}

int Rng::uniform_int(int lo, int hi) {
    // Modulo bias is ~span/2^64, far below anything observable here.
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
}

std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
    auto splitmix = [](std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    };
    std::uint64_t h = 0x8f1bbcdcbfa53e0bULL;
    for (std::uint64_t v : parts) h = splitmix(h ^ v);
    return h;
}

}  // namespace risq
