#include "risq/codebook.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "risq/errors.hpp"
#include "risq/textio.hpp"

namespace risq {

const Codeword& Codebook::probe(int action) const {
    if (action < 1 || action > np())
        throw std::invalid_argument("probing action " + std::to_string(action) +
                                    " out of range [1, " + std::to_string(np()) + "]");
    return probing[static_cast<std::size_t>(action - 1)];
}

double beam_center(int layer_k, int m) {
    if (layer_k < 1) throw std::invalid_argument("beam_center: layer must be >= 1");
    int beams = 1 << layer_k;
    if (m < 1 || m > beams)
        throw std::invalid_argument("beam_center: m=" + std::to_string(m) +
                                    " out of range [1, " + std::to_string(beams) + "]");
    return -1.0 + static_cast<double>(2 * m - 1) / beams;
}

int probing_index(int layer_k, int m) {
    // Layers 1..k-1 contribute 2^k - 2 beams.
    return (1 << layer_k) - 2 + m;
}

Codeword make_codeword(const SystemConfig& cfg, int layers, int layer_k, int m,
                       std::uint64_t deact_seed, bool zero_deactivated) {
    if (layer_k < 1 || layer_k > layers)
        throw std::invalid_argument("make_codeword: layer " + std::to_string(layer_k) +
                                    " out of range [1, " + std::to_string(layers) + "]");
    int shift = layers - layer_k;
    if (cfg.n % (1 << shift) != 0)
        throw std::invalid_argument(
            "make_codeword: N=" + std::to_string(cfg.n) + " is not divisible by 2^" +
            std::to_string(shift) + ", cannot halve the active set for layer " +
            std::to_string(layer_k));

    Codeword cw;
    cw.layer = layer_k;
    cw.index_in_layer = m;
    cw.center_omega = beam_center(layer_k, m);
    cw.active_count = cfg.n >> shift;
    cw.zero_deactivated = zero_deactivated;
    cw.phases.resize(static_cast<std::size_t>(cfg.n));
    for (int n = 0; n < cw.active_count; ++n)
        cw.phases[static_cast<std::size_t>(n)] =
            wrap_angle(-std::numbers::pi * n * cw.center_omega);
    for (int n = cw.active_count; n < cfg.n; ++n) {
        // Fixed pseudo-random phase per deactivated element: a passive RIS
        // cannot switch elements off, so they scatter incoherently.
        Rng r(mix_seed({deact_seed, static_cast<std::uint64_t>(layer_k),
                        static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n)}));
        cw.phases[static_cast<std::size_t>(n)] = r.angle();
    }
    return cw;
}

Codebook build_codebook(const SystemConfig& cfg, int layers,
                        std::uint64_t deact_seed, bool zero_deactivated) {
    if (layers < 1) throw std::invalid_argument("build_codebook: layers must be >= 1");
    cfg.validate();
    if (cfg.n % (1 << (layers - 1)) != 0)
        throw std::invalid_argument("build_codebook: N=" + std::to_string(cfg.n) +
                                    " must be divisible by 2^" +
                                    std::to_string(layers - 1));

    Codebook cb;
    cb.layers = layers;
    cb.n_elements = cfg.n;
    cb.deact_seed = deact_seed;
    for (int k = 1; k <= layers; ++k)
        for (int m = 1; m <= (1 << k); ++m)
            cb.probing.push_back(
                make_codeword(cfg, layers, k, m, deact_seed, zero_deactivated));
    // Narrow target beams are the bottom probing layer, stored as layer 0.
    for (int m = 1; m <= (1 << layers); ++m) {
        Codeword cw = make_codeword(cfg, layers, layers, m, deact_seed, zero_deactivated);
        cw.layer = 0;
        cb.narrow.push_back(std::move(cw));
    }
    return cb;
}

std::array<std::pair<int, int>, 2> children(int layer_k, int m, int layers) {
    if (layer_k >= layers)
        throw std::invalid_argument("children: layer " + std::to_string(layer_k) +
                                    " is the leaf layer");
    if (m < 1 || m > (1 << layer_k))
        throw std::invalid_argument("children: beam index out of range");
    return {{{layer_k + 1, 2 * m - 1}, {layer_k + 1, 2 * m}}};
}

std::string serialize_codebook(const Codebook& cb) {
    std::ostringstream out;
    out << "RISCB v1 N=" << cb.n_elements << " L=" << cb.layers
        << " seed=" << cb.deact_seed << "\n";
    auto line = [&](const Codeword& cw) {
        out << cw.layer << " " << cw.index_in_layer << " " << fmt17(cw.center_omega)
            << " " << cw.active_count;
        for (double p : cw.phases) out << " " << fmt17(p);
        out << "\n";
    };
    for (const Codeword& cw : cb.narrow) line(cw);
    for (const Codeword& cw : cb.probing) line(cw);
    return out.str();
}

void save_codebook(const Codebook& cb, const std::string& path) {
    for (const Codeword& cw : cb.narrow)
        if (cw.zero_deactivated)
            throw std::invalid_argument(
                "save_codebook: idealized (zero-deactivated) codebooks are test-only "
                "and not persistable");
    write_file(path, serialize_codebook(cb));
}

namespace {

Codeword parse_codeword_line(const std::string& path, int line_no,
                             const std::string& line, int n_elements) {
    std::vector<std::string> tok = split_ws(line);
    if (static_cast<int>(tok.size()) != 4 + n_elements)
        throw ParseError(path, line_no,
                         "expected " + std::to_string(4 + n_elements) +
                             " fields, got " + std::to_string(tok.size()));
    Codeword cw;
    try {
        cw.layer = static_cast<int>(parse_int(tok[0]));
        cw.index_in_layer = static_cast<int>(parse_int(tok[1]));
        cw.center_omega = parse_double(tok[2]);
        cw.active_count = static_cast<int>(parse_int(tok[3]));
        cw.phases.resize(static_cast<std::size_t>(n_elements));
        for (int i = 0; i < n_elements; ++i)
            cw.phases[static_cast<std::size_t>(i)] = parse_double(tok[static_cast<std::size_t>(4 + i)]);
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, line_no, e.what());
    }
    return cw;
}

}  // namespace

Codebook load_codebook(const std::string& path) {
    std::string content = read_file(path);
    std::vector<std::string> lines = split(content, '\n');
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw ParseError(path, 1, "empty codebook file");

    std::vector<std::string> head = split_ws(lines[0]);
    if (head.size() != 5 || head[0] != "RISCB")
        throw ParseError(path, 1, "not a RISCB codebook file");
    if (head[1] != "v1")
        throw ParseError(path, 1, "unsupported codebook version '" + head[1] + "'");

    Codebook cb;
    try {
        cb.n_elements = static_cast<int>(parse_int(expect_kv(head[2], "N")));
        cb.layers = static_cast<int>(parse_int(expect_kv(head[3], "L")));
        cb.deact_seed = parse_u64(expect_kv(head[4], "seed"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, 1, e.what());
    }
    if (cb.layers < 1 || cb.layers > 30 || cb.n_elements < 1)
        throw ParseError(path, 1, "implausible N/L header values");

    int nc = 1 << cb.layers;
    int np = (1 << (cb.layers + 1)) - 2;
    if (static_cast<int>(lines.size()) != 1 + nc + np)
        throw ParseError(path, static_cast<int>(lines.size()),
                         "truncated codebook: expected " + std::to_string(1 + nc + np) +
                             " lines, got " + std::to_string(lines.size()));

    int line_no = 2;
    for (int m = 1; m <= nc; ++m, ++line_no) {
        Codeword cw = parse_codeword_line(path, line_no, lines[static_cast<std::size_t>(line_no - 1)],
                                          cb.n_elements);
        if (cw.layer != 0 || cw.index_in_layer != m)
            throw ParseError(path, line_no, "narrow codewords out of order");
        cb.narrow.push_back(std::move(cw));
    }
    for (int k = 1; k <= cb.layers; ++k) {
        for (int m = 1; m <= (1 << k); ++m, ++line_no) {
            Codeword cw = parse_codeword_line(path, line_no,
                                              lines[static_cast<std::size_t>(line_no - 1)],
                                              cb.n_elements);
            if (cw.layer != k || cw.index_in_layer != m)
                throw ParseError(path, line_no, "probing codewords out of order");
            cb.probing.push_back(std::move(cw));
        }
    }
    return cb;
}

std::string codebook_hash(const Codebook& cb) {
    return fnv1a_hex(serialize_codebook(cb));
}

}  // namespace risq
