#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

namespace cend::util {

// Shortest-roundtrip-ish fixed formatting; %.12g is stable for a given
// binary, which is all the byte-identical-output contract needs.
inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
std::vector<std::string> read_lines(const std::string& path);

// FNV-1a 64-bit, used for manifest content fingerprints.
inline std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v);

std::vector<std::string> split(const std::string& s, char sep);

} // namespace cend::util
