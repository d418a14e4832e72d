#pragma once

#include <stdexcept>
#include <string>

namespace risq {

// File could not be opened, read, or written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File content does not match the expected format. Message carries path:line.
struct ParseError : std::runtime_error {
    ParseError(const std::string& path, int line, const std::string& what)
        : std::runtime_error(path + ":" + std::to_string(line) + ": " + what),
          line_no(line) {}
    int line_no;
};

// Bad configuration value or command-line usage.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Artifacts that were built from different configurations (hash, version or
// fingerprint mismatch between codebook, dataset, Q-table and state space).
struct IncompatibleArtifact : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace risq
