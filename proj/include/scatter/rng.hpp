#pragma once

#include <cstdint>

namespace scatter {

// Counter-based generator: every draw is a stateless mix of (key, counter),
// so a stream can be reconstructed from (seed, stream_id) alone and samples
// can be fanned out across threads without shared state.
class CounterRng {
public:
    CounterRng() = default;
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(mix(seed ^ 0x9e3779b97f4a7c15ull) ^ mix(stream + 0x6a09e667f3bcc909ull)) {}

    std::uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ull * ++counter_); }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [0, n).
    std::uint32_t next_below(std::uint32_t n) {
        return static_cast<std::uint32_t>((next_u64() >> 32) * static_cast<std::uint64_t>(n) >> 32);
    }

private:
    // Stafford's variant 13 of the splitmix64 finalizer.
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

} // namespace scatter
