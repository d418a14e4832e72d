#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "risq/chansim.hpp"

namespace risq {

// Binary hierarchical probing codebook plus the narrow target codebook.
// narrow holds the Nc = 2^L bottom-layer beams (stored with layer = 0,
// fully active); probing holds layers 1..L breadth-first, Np = 2^(L+1) - 2.
struct Codebook {
    std::vector<Codeword> narrow;
    std::vector<Codeword> probing;
    int layers = 0;      // L
    int n_elements = 0;  // N
    std::uint64_t deact_seed = 0;

    int nc() const { return static_cast<int>(narrow.size()); }
    int np() const { return static_cast<int>(probing.size()); }

    // 1-based probing codeword access.
    const Codeword& probe(int action) const;
};

// Sine-domain center of beam m (1-based) in a layer with 2^layer_k sectors:
// omega = -1 + (2m - 1) / 2^layer_k.
double beam_center(int layer_k, int m);

// 1-based position of beam (layer_k, m) in the breadth-first probing list.
int probing_index(int layer_k, int m);

// Beam (layer_k, m): the first N*2^(layer_k - layers) elements carry the ramp
// theta_n = (-pi*n*omega) mod 2pi; the rest get fixed pseudo-random phases
// drawn from a generator seeded with (deact_seed, layer_k, m, n). With
// zero_deactivated set, deactivated elements do not reflect (test mode).
Codeword make_codeword(const SystemConfig& cfg, int layers, int layer_k, int m,
                       std::uint64_t deact_seed, bool zero_deactivated = false);

Codebook build_codebook(const SystemConfig& cfg, int layers,
                        std::uint64_t deact_seed, bool zero_deactivated = false);

// The two child beams whose sectors partition beam (layer_k, m)'s sector.
std::array<std::pair<int, int>, 2> children(int layer_k, int m, int layers);

std::string serialize_codebook(const Codebook& cb);
void save_codebook(const Codebook& cb, const std::string& path);
Codebook load_codebook(const std::string& path);

// Content hash (FNV-1a 64 over the serialized text), used to pin datasets and
// Q-tables to the codebook they were generated with.
std::string codebook_hash(const Codebook& cb);

}  // namespace risq
