#pragma once

#include <cstdint>

namespace brouwer {

// Stateless counter-based randomness. Every random decision in the project
// is hash64(stream, counter) for an explicit (stream, counter) pair, so
// parallel and serial runs produce identical draws: there is no sequential
// generator state to race on. The mixer is the SplitMix64 finalizer.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t hash64(uint64_t stream, uint64_t counter) {
    return mix64(stream ^ mix64(counter + 0x632be59bd9b4e019ULL));
}

// Fair coin: draw `counter` of stream `stream`.
inline bool coin(uint64_t stream, uint64_t counter) {
    return (hash64(stream, counter) & 1ULL) != 0;
}

// Derive the seed of substream `index` (trials, per-graph streams, ...).
inline uint64_t derive_seed(uint64_t master, uint64_t index) {
    return hash64(master ^ 0xd1b54a32d192ed03ULL, index);
}

// Uniform integer in [0, bound), bound >= 1. Fixed-point multiply keeps the
// bias below 2^-64, irrelevant at our scales.
inline uint64_t uniform_below(uint64_t stream, uint64_t counter, uint64_t bound) {
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(hash64(stream, counter)) * bound) >> 64);
}

// Uniform double in [0, 1).
inline double uniform01(uint64_t stream, uint64_t counter) {
    return static_cast<double>(hash64(stream, counter) >> 11) * 0x1.0p-53;
}

}  // namespace brouwer
