#include "risq/belief.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "risq/errors.hpp"
#include "risq/textio.hpp"

namespace risq {

void Belief::validate() const {
    if (probs.empty()) throw std::invalid_argument("Belief: empty");
    double sum = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0)) throw std::invalid_argument("Belief: negative or NaN entry");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("Belief: entries sum to " + fmt17(sum));
}

std::vector<double> TrainingDataset::one_hot(int row) const {
    std::vector<double> v(static_cast<std::size_t>(nc), 0.0);
    v[static_cast<std::size_t>(labels[static_cast<std::size_t>(row)] - 1)] = 1.0;
    return v;
}

Belief uniform_prior(int nc) {
    if (nc < 1) throw std::invalid_argument("uniform_prior: nc must be >= 1");
    Belief b;
    b.probs.assign(static_cast<std::size_t>(nc), 1.0 / nc);
    return b;
}

Belief posterior_update(const Belief& b, int action, double y,
                        const TrainingDataset& ds, double eps_floor) {
    if (action < 1 || action > ds.np())
        throw std::invalid_argument("posterior_update: action " + std::to_string(action) +
                                    " out of range [1, " + std::to_string(ds.np()) + "]");
    if (!std::isfinite(y))
        throw std::invalid_argument("posterior_update: non-finite feedback value");
    if (!(eps_floor > 0.0))
        throw std::invalid_argument("posterior_update: eps_floor must be > 0");
    if (b.nc() != ds.nc)
        throw std::invalid_argument("posterior_update: belief/dataset class mismatch");

    std::vector<double> w(static_cast<std::size_t>(ds.nc), 0.0);
    std::vector<int> members(static_cast<std::size_t>(ds.nc), 0);
    const std::size_t col = static_cast<std::size_t>(action - 1);
    for (int l = 0; l < ds.n(); ++l) {
        const std::size_t k = static_cast<std::size_t>(ds.labels[static_cast<std::size_t>(l)] - 1);
        const double d = ds.feedbacks[static_cast<std::size_t>(l)][col] - y;
        w[k] += 1.0 / (d * d + eps_floor);
        ++members[k];
    }
    // Defined for safety; the dataset invariant makes empty classes impossible.
    for (std::size_t k = 0; k < w.size(); ++k)
        if (members[k] == 0) w[k] = eps_floor;

    Belief out;
    out.probs.resize(static_cast<std::size_t>(ds.nc));
    double sum = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        out.probs[k] = b.probs[k] * w[k];
        sum += out.probs[k];
    }
    if (!(sum > 0.0))
        throw std::invalid_argument("posterior_update: all posterior mass vanished");
    for (double& p : out.probs) p /= sum;
    return out;
}

int declare(const Belief& b) {
    int best = 1;
    double best_p = b.probs[0];
    for (int c = 2; c <= b.nc(); ++c) {
        if (b.probs[static_cast<std::size_t>(c - 1)] > best_p) {
            best_p = b.probs[static_cast<std::size_t>(c - 1)];
            best = c;
        }
    }
    return best;
}

bool is_confident(const Belief& b, double tau) {
    return b.probs[static_cast<std::size_t>(declare(b) - 1)] > tau;
}

TrainingDataset generate_dataset(const SystemConfig& cfg, const Codebook& cb,
                                 int n_channels, Rng& rng, bool noiseless) {
    if (n_channels < cb.nc())
        throw std::invalid_argument("generate_dataset: need at least one channel per class");

    TrainingDataset ds;
    ds.nc = cb.nc();
    ds.meta.cfg = cfg;
    ds.meta.snr_db = noiseless ? std::numeric_limits<double>::infinity() : cfg.snr_db;
    ds.meta.seed = cfg.seed;
    ds.meta.cbhash = codebook_hash(cb);

    // Phase 1: pick channels until every class is represented. When a class
    // is missing after the initial fill, fresh draws of a missing class
    // replace members of the currently largest class.
    std::vector<int> count(static_cast<std::size_t>(ds.nc), 0);
    for (int i = 0; i < n_channels; ++i) {
        ChannelRealization ch = sample_channel(rng);
        int c = true_class(cfg, ch, cb.narrow);
        ds.channels.push_back(ch);
        ds.labels.push_back(c);
        ++count[static_cast<std::size_t>(c - 1)];
    }
    const long retry_cap = 10000 + 100L * n_channels;
    long retries = 0;
    auto missing = [&]() {
        return std::find(count.begin(), count.end(), 0) != count.end();
    };
    while (missing()) {
        if (++retries > retry_cap)
            throw std::runtime_error(
                "generate_dataset: could not cover every class within " +
                std::to_string(retry_cap) + " redraws; some class may be unreachable");
        ChannelRealization ch = sample_channel(rng);
        int c = true_class(cfg, ch, cb.narrow);
        if (count[static_cast<std::size_t>(c - 1)] != 0) continue;
        int donor = static_cast<int>(std::max_element(count.begin(), count.end()) -
                                     count.begin());
        for (std::size_t i = 0; i < ds.labels.size(); ++i) {
            if (ds.labels[i] == donor + 1) {
                ds.channels[i] = ch;
                ds.labels[i] = c;
                --count[static_cast<std::size_t>(donor)];
                ++count[static_cast<std::size_t>(c - 1)];
                break;
            }
        }
    }

    // Phase 2: one noisy feedback per probing codeword per channel.
    SystemConfig sim_cfg = cfg;
    if (noiseless) sim_cfg.sigma_w2 = 0.0;
    ds.feedbacks.resize(ds.channels.size());
    for (std::size_t i = 0; i < ds.channels.size(); ++i) {
        ds.feedbacks[i].reserve(static_cast<std::size_t>(cb.np()));
        for (int a = 1; a <= cb.np(); ++a)
            ds.feedbacks[i].push_back(
                simulate_feedback(sim_cfg, ds.channels[i], cb.probe(a), rng, a).value);
    }
    return ds;
}

double default_eps_floor(const TrainingDataset& ds) {
    double mean = 0.0;
    long cnt = 0;
    for (const auto& row : ds.feedbacks)
        for (double x : row) {
            mean += x;
            ++cnt;
        }
    if (cnt == 0) return 1e-9;
    mean /= static_cast<double>(cnt);
    double var = 0.0;
    for (const auto& row : ds.feedbacks)
        for (double x : row) var += (x - mean) * (x - mean);
    var /= static_cast<double>(cnt);
    double eps = 1e-9 * var;
    return (std::isfinite(eps) && eps > 0.0) ? eps : 1e-9;
}

std::string serialize_dataset(const TrainingDataset& ds) {
    std::ostringstream out;
    out << "RISDS v1 n=" << ds.n() << " Np=" << ds.np() << " Nc=" << ds.nc
        << " snr_db=" << fmt17(ds.meta.snr_db) << " seed=" << ds.meta.seed
        << " cbhash=" << ds.meta.cbhash << "\n";
    for (int i = 0; i < ds.n(); ++i) {
        const auto& ch = ds.channels[static_cast<std::size_t>(i)];
        out << fmt17(ch.phi1) << " " << fmt17(ch.phi2) << " " << fmt17(ch.phi3)
            << " " << fmt17(ch.phi4);
        for (double x : ds.feedbacks[static_cast<std::size_t>(i)])
            out << " " << fmt17(x);
        out << " " << ds.labels[static_cast<std::size_t>(i)] << "\n";
    }
    return out.str();
}

void save_dataset(const TrainingDataset& ds, const std::string& path) {
    write_file(path, serialize_dataset(ds));
}

TrainingDataset load_dataset(const std::string& path) {
    std::string content = read_file(path);
    std::vector<std::string> lines = split(content, '\n');
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw ParseError(path, 1, "empty dataset file");

    std::vector<std::string> head = split_ws(lines[0]);
    if (head.size() != 8 || head[0] != "RISDS")
        throw ParseError(path, 1, "not a RISDS dataset file");
    if (head[1] != "v1")
        throw ParseError(path, 1, "unsupported dataset version '" + head[1] + "'");

    TrainingDataset ds;
    int n = 0, np = 0;
    try {
        n = static_cast<int>(parse_int(expect_kv(head[2], "n")));
        np = static_cast<int>(parse_int(expect_kv(head[3], "Np")));
        ds.nc = static_cast<int>(parse_int(expect_kv(head[4], "Nc")));
        ds.meta.snr_db = parse_double(expect_kv(head[5], "snr_db"));
        ds.meta.seed = parse_u64(expect_kv(head[6], "seed"));
        ds.meta.cbhash = expect_kv(head[7], "cbhash");
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, 1, e.what());
    }
    if (n < 1 || np < 1 || ds.nc < 1)
        throw ParseError(path, 1, "implausible dataset header values");
    if (static_cast<int>(lines.size()) != 1 + n)
        throw ParseError(path, static_cast<int>(lines.size()),
                         "truncated dataset: expected " + std::to_string(1 + n) +
                             " lines, got " + std::to_string(lines.size()));

    for (int i = 0; i < n; ++i) {
        int line_no = 2 + i;
        std::vector<std::string> tok = split_ws(lines[static_cast<std::size_t>(line_no - 1)]);
        if (static_cast<int>(tok.size()) != 4 + np + 1)
            throw ParseError(path, line_no,
                             "expected " + std::to_string(5 + np) + " fields, got " +
                                 std::to_string(tok.size()));
        try {
            ChannelRealization ch;
            ch.phi1 = parse_double(tok[0]);
            ch.phi2 = parse_double(tok[1]);
            ch.phi3 = parse_double(tok[2]);
            ch.phi4 = parse_double(tok[3]);
            ds.channels.push_back(ch);
            std::vector<double> row(static_cast<std::size_t>(np));
            for (int j = 0; j < np; ++j)
                row[static_cast<std::size_t>(j)] = parse_double(tok[static_cast<std::size_t>(4 + j)]);
            ds.feedbacks.push_back(std::move(row));
            int label = static_cast<int>(parse_int(tok.back()));
            if (label < 1 || label > ds.nc)
                throw std::invalid_argument("label " + std::to_string(label) +
                                            " out of range");
            ds.labels.push_back(label);
        } catch (const std::invalid_argument& e) {
            throw ParseError(path, line_no, e.what());
        }
    }
    return ds;
}

std::string dataset_hash(const TrainingDataset& ds) {
    return fnv1a_hex(serialize_dataset(ds));
}

}  // namespace risq
