#include "risq/state_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "risq/textio.hpp"

namespace risq {

bool StateSpace::is_terminal(int state) const {
    return std::find(terminal_indices.begin(), terminal_indices.end(), state) !=
           terminal_indices.end();
}

namespace {

bool same_prototype(const Belief& a, const Belief& b) {
    for (std::size_t i = 0; i < a.probs.size(); ++i)
        if (std::abs(a.probs[i] - b.probs[i]) > 1e-12) return false;
    return true;
}

}  // namespace

StateSpace build_state_space(int nc, const std::vector<double>& q_grid, double tau) {
    if (nc < 1) throw std::invalid_argument("build_state_space: nc must be >= 1");
    if (!(tau > 0.0 && tau < 1.0))
        throw std::invalid_argument("build_state_space: tau must be in (0, 1)");
    for (double q : q_grid)
        if (!(q > 0.0 && q < 1.0))
            throw std::invalid_argument(
                "build_state_space: q values must lie strictly inside (0, 1)");

    StateSpace ss;
    ss.tau = tau;
    ss.q_grid = q_grid;
    ss.prototypes.push_back(uniform_prior(nc));
    ss.init_index = 0;
    for (int c = 1; c <= nc; ++c) {
        Belief onehot;
        onehot.probs.assign(static_cast<std::size_t>(nc), 0.0);
        onehot.probs[static_cast<std::size_t>(c - 1)] = 1.0;
        ss.terminal_indices.push_back(static_cast<int>(ss.prototypes.size()));
        ss.prototypes.push_back(std::move(onehot));
    }
    // Two-mass states: (i, j, q) and (j, i, 1-q) describe the same vector, so
    // candidates are deduplicated against everything built so far.
    for (int i = 0; i < nc; ++i) {
        for (int j = 0; j < nc; ++j) {
            if (i == j) continue;
            for (double q : q_grid) {
                Belief b;
                b.probs.assign(static_cast<std::size_t>(nc), 0.0);
                b.probs[static_cast<std::size_t>(i)] = 1.0 - q;
                b.probs[static_cast<std::size_t>(j)] = q;
                bool dup = false;
                for (const Belief& existing : ss.prototypes)
                    if (same_prototype(existing, b)) {
                        dup = true;
                        break;
                    }
                if (!dup) ss.prototypes.push_back(std::move(b));
            }
        }
    }
    return ss;
}

int project(const Belief& b, const StateSpace& ss) {
    if (is_confident(b, ss.tau))
        return ss.terminal_indices[static_cast<std::size_t>(declare(b) - 1)];
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (int s = 0; s < ss.size(); ++s) {
        const Belief& proto = ss.prototypes[static_cast<std::size_t>(s)];
        double d = 0.0;
        for (std::size_t i = 0; i < b.probs.size(); ++i) {
            double diff = b.probs[i] - proto.probs[i];
            d += diff * diff;
        }
        if (d < best_d) {
            best_d = d;
            best = s;
        }
    }
    return best;
}

int reward(int state, const StateSpace& ss) { return ss.is_terminal(state) ? 0 : -1; }

std::string dump_state_space(const StateSpace& ss) {
    std::ostringstream out;
    out << "RISSS v1 states=" << ss.size() << " nc=" << ss.nc()
        << " tau=" << fmt17(ss.tau) << "\n";
    for (int s = 0; s < ss.size(); ++s) {
        out << s << (s == ss.init_index ? " init" : ss.is_terminal(s) ? " terminal" : " mass");
        for (double p : ss.prototypes[static_cast<std::size_t>(s)].probs)
            out << " " << fmt17(p);
        out << "\n";
    }
    return out.str();
}

}  // namespace risq
