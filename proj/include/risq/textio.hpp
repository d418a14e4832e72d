#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace risq {

// Formats a double with 17 significant digits (lossless round-trip).
std::string fmt17(double v);

// Shortest representation that still round-trips; used for file name tags.
std::string fmt_short(double v);

// Strict parsers: the whole token must be consumed, otherwise they throw
// std::invalid_argument with the offending text.
double parse_double(const std::string& tok);
long long parse_int(const std::string& tok);
std::uint64_t parse_u64(const std::string& tok);

std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char delim);
// Splits on runs of whitespace, skipping empty tokens.
std::vector<std::string> split_ws(const std::string& s);

// For header tokens of the form "key=value"; throws std::invalid_argument if
// the token does not start with "key=".
std::string expect_kv(const std::string& tok, const std::string& key);

std::string read_file(const std::string& path);   // throws IoError
void write_file(const std::string& path, const std::string& content);  // throws IoError

// FNV-1a 64-bit over the bytes, as a 16-char lowercase hex string.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace risq
