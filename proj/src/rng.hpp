#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

// Deterministic randomness helpers. std::mt19937_64 output is pinned by the
// standard, but the standard *distributions* are implementation-defined, so
// every draw here is built directly on raw engine output. Identical seeds
// give bit-identical streams on every platform and compiler.

namespace cend::rng {

using Engine = std::mt19937_64;

// splitmix64 finalizer; used to derive independent streams from (seed, tag).
inline std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline Engine make_engine(std::uint64_t seed) { return Engine(mix(seed)); }

inline Engine derive_engine(std::uint64_t seed, std::uint64_t stream) {
    return Engine(mix(mix(seed) ^ stream));
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Engine& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double uniform(Engine& g, double lo, double hi) {
    return lo + (hi - lo) * uniform01(g);
}

// Uniform integer in [0, n). Modulo bias is below 2^-40 for any n used here.
inline std::uint64_t uniform_index(Engine& g, std::uint64_t n) {
    return n <= 1 ? 0 : g() % n;
}

// Standard normal via Box-Muller (cosine branch only, one value per call).
inline double gaussian(Engine& g) {
    double u1 = uniform01(g);
    double u2 = uniform01(g);
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

// Fisher-Yates with explicit index draws; std::shuffle is not portable.
template <typename T>
void shuffle(std::vector<T>& v, Engine& g) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_index(g, i));
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace cend::rng
