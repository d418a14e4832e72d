#pragma once

#include <string>
#include <vector>

#include "risq/belief.hpp"

namespace risq {

// Finite discretization of the belief simplex: the uniform initial state, one
// absorbing one-hot state per class, and two-mass states [.., 1-q, .., q, ..]
// for every ordered pair of classes and every q in the grid (deduplicated).
struct StateSpace {
    std::vector<Belief> prototypes;
    int init_index = 0;
    std::vector<int> terminal_indices;  // entry c-1 = state index of class c's one-hot
    double tau = 0.9;                   // confidence threshold (strict)
    std::vector<double> q_grid;

    int size() const { return static_cast<int>(prototypes.size()); }
    int nc() const { return static_cast<int>(terminal_indices.size()); }
    bool is_terminal(int state) const;
};

StateSpace build_state_space(int nc, const std::vector<double>& q_grid, double tau);

// Nearest prototype in Euclidean distance (ties -> lowest state index).
// A belief with max entry > tau maps to the terminal state of its argmax
// class regardless of raw distance, so termination is authoritative.
int project(const Belief& b, const StateSpace& ss);

// 0 for terminal states, -1 otherwise.
int reward(int state, const StateSpace& ss);

// Debug dump: header plus one prototype per line, 17 significant digits.
std::string dump_state_space(const StateSpace& ss);

}  // namespace risq
