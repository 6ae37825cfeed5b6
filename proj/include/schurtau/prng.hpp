#pragma once

#include <cstdint>
#include <string>

namespace schurtau {

/// splitmix64 step; the single PRNG used everywhere so that any case can be
/// replayed from the top-level seed alone.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ull;
    return h;
}

/// Seed splitting: the stream for a named case is derived from the run seed
/// and the case name, independent of scheduling.
inline std::uint64_t derive_seed(std::uint64_t run_seed, const std::string& case_name) {
    std::uint64_t state = run_seed ^ fnv1a64(case_name);
    return splitmix64(state);
}

struct Prng {
    std::uint64_t state;

    explicit Prng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() { return splitmix64(state); }

    /// Uniform in [lo, hi].
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
};

}  // namespace schurtau
