#include "risq/qlearner.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "risq/errors.hpp"
#include "risq/textio.hpp"

namespace risq {

namespace {

int greedy_action(const QTable& q, int s) {
    const auto& row = q.values[static_cast<std::size_t>(s)];
    int best = 1;
    double best_v = row[0];
    for (int a = 2; a <= static_cast<int>(row.size()); ++a) {
        if (row[static_cast<std::size_t>(a - 1)] > best_v) {
            best_v = row[static_cast<std::size_t>(a - 1)];
            best = a;
        }
    }
    return best;
}

}  // namespace

void q_update(QTable& q, int s, int a, int r, int s_next, double alpha) {
    const auto& next_row = q.values[static_cast<std::size_t>(s_next)];
    double next_max = *std::max_element(next_row.begin(), next_row.end());
    double& cell = q.values[static_cast<std::size_t>(s)][static_cast<std::size_t>(a - 1)];
    cell = (1.0 - alpha) * cell + alpha * (r + next_max);
}

int epsilon_greedy(const QTable& q, int s, double epsilon, Rng& rng) {
    double r = rng.uniform01();
    if (r > epsilon) return greedy_action(q, s);
    return rng.uniform_int(1, q.n_actions());
}

TrainResult train(const TrainingDataset& ds, const StateSpace& ss,
                  const Codebook& cb, const Hyper& hyper, double eps_floor) {
    if (ds.meta.cbhash != codebook_hash(cb))
        throw IncompatibleArtifact(
            "train: dataset was generated with a different codebook (hash mismatch)");
    if (ds.nc != cb.nc() || ds.np() != cb.np())
        throw IncompatibleArtifact("train: dataset/codebook dimensions disagree");
    if (ss.nc() != cb.nc())
        throw IncompatibleArtifact("train: state space/codebook class count disagree");
    if (!(hyper.alpha >= 0.0 && hyper.alpha <= 1.0))
        throw std::invalid_argument("train: alpha must be in [0, 1]");
    if (!(hyper.epsilon >= 0.0 && hyper.epsilon <= 1.0))
        throw std::invalid_argument("train: epsilon must be in [0, 1]");

    const int max_l = hyper.max_l > 0 ? hyper.max_l : cb.np();
    const int per_epoch =
        hyper.max_channel > 0 ? std::min(hyper.max_channel, ds.n()) : ds.n();

    TrainResult res;
    res.q.values.assign(static_cast<std::size_t>(ss.size()),
                        std::vector<double>(static_cast<std::size_t>(cb.np()), 0.0));
    res.q.hyper = hyper;
    res.q.hyper.max_l = max_l;
    res.q.hyper.max_channel = per_epoch;
    res.q.tau = ss.tau;
    res.q.dshash = dataset_hash(ds);

    Rng rng(hyper.seed);
    for (int epoch = 0; epoch < hyper.max_epoch; ++epoch) {
        long length_sum = 0;
        int terminals = 0;
        for (int k = 0; k < per_epoch; ++k) {
            Belief belief = uniform_prior(ds.nc);
            int state = ss.init_index;
            int steps = 0;
            for (int step = 0; step < max_l; ++step) {
                int a = epsilon_greedy(res.q, state, hyper.epsilon, rng);
                double y = ds.feedbacks[static_cast<std::size_t>(k)][static_cast<std::size_t>(a - 1)];
                belief = posterior_update(belief, a, y, ds, eps_floor);
                int next = project(belief, ss);
                q_update(res.q, state, a, reward(next, ss), next, hyper.alpha);
                state = next;
                ++steps;
                if (ss.is_terminal(state)) break;
            }
            length_sum += steps;
            if (ss.is_terminal(state)) ++terminals;
        }
        res.curve.mean_length.push_back(static_cast<double>(length_sum) / per_epoch);
        res.curve.terminal_fraction.push_back(static_cast<double>(terminals) / per_epoch);
    }
    res.policy = extract_policy(res.q, ss);
    return res;
}

Policy extract_policy(const QTable& q, const StateSpace& ss) {
    Policy pi;
    pi.action.assign(static_cast<std::size_t>(q.n_states()), 0);
    for (int s = 0; s < q.n_states(); ++s)
        if (!ss.is_terminal(s)) pi.action[static_cast<std::size_t>(s)] = greedy_action(q, s);
    return pi;
}

std::string serialize_qtable(const QTable& q) {
    std::ostringstream out;
    out << "RISQ v1 states=" << q.n_states() << " actions=" << q.n_actions()
        << " alpha=" << fmt17(q.hyper.alpha) << " epsilon=" << fmt17(q.hyper.epsilon)
        << " tau=" << fmt17(q.tau) << " dshash=" << q.dshash << "\n";
    for (const auto& row : q.values) {
        for (std::size_t a = 0; a < row.size(); ++a)
            out << (a ? " " : "") << fmt17(row[a]);
        out << "\n";
    }
    return out.str();
}

void save_qtable(const QTable& q, const std::string& path) {
    write_file(path, serialize_qtable(q));
}

QTable load_qtable(const std::string& path) {
    std::string content = read_file(path);
    std::vector<std::string> lines = split(content, '\n');
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw ParseError(path, 1, "empty Q-table file");

    std::vector<std::string> head = split_ws(lines[0]);
    if (head.size() != 8 || head[0] != "RISQ")
        throw ParseError(path, 1, "not a RISQ Q-table file");
    if (head[1] != "v1")
        throw ParseError(path, 1, "unsupported Q-table version '" + head[1] + "'");

    QTable q;
    int states = 0, actions = 0;
    try {
        states = static_cast<int>(parse_int(expect_kv(head[2], "states")));
        actions = static_cast<int>(parse_int(expect_kv(head[3], "actions")));
        q.hyper.alpha = parse_double(expect_kv(head[4], "alpha"));
        q.hyper.epsilon = parse_double(expect_kv(head[5], "epsilon"));
        q.tau = parse_double(expect_kv(head[6], "tau"));
        q.dshash = expect_kv(head[7], "dshash");
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, 1, e.what());
    }
    if (states < 1 || actions < 1)
        throw ParseError(path, 1, "implausible Q-table dimensions");
    if (static_cast<int>(lines.size()) != 1 + states)
        throw ParseError(path, static_cast<int>(lines.size()),
                         "truncated Q-table: expected " + std::to_string(1 + states) +
                             " lines, got " + std::to_string(lines.size()));

    for (int s = 0; s < states; ++s) {
        int line_no = 2 + s;
        std::vector<std::string> tok = split_ws(lines[static_cast<std::size_t>(line_no - 1)]);
        if (static_cast<int>(tok.size()) != actions)
            throw ParseError(path, line_no,
                             "expected " + std::to_string(actions) + " values, got " +
                                 std::to_string(tok.size()));
        std::vector<double> row(static_cast<std::size_t>(actions));
        try {
            for (int a = 0; a < actions; ++a)
                row[static_cast<std::size_t>(a)] = parse_double(tok[static_cast<std::size_t>(a)]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(path, line_no, e.what());
        }
        q.values.push_back(std::move(row));
    }
    return q;
}

void check_qtable_compatible(const QTable& q, const StateSpace& ss,
                             const Codebook& cb, const TrainingDataset& ds) {
    if (q.n_states() != ss.size() || q.tau != ss.tau)
        throw IncompatibleArtifact(
            "Q-table state-space fingerprint (states=" + std::to_string(q.n_states()) +
            ", tau=" + fmt17(q.tau) + ") does not match the session state space (states=" +
            std::to_string(ss.size()) + ", tau=" + fmt17(ss.tau) + ")");
    if (q.n_actions() != cb.np())
        throw IncompatibleArtifact("Q-table action count does not match the codebook");
    if (q.dshash != dataset_hash(ds))
        throw IncompatibleArtifact(
            "Q-table was trained on a different dataset (hash mismatch)");
}

}  // namespace risq
