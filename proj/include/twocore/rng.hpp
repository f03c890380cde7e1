#pragma once

#include <cstdint>
#include <vector>

namespace twocore::rng {

// 64-bit finalizer from splitmix64. Bijective, so distinct inputs never
// collide before mixing.
inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// Random-access value i of the stream keyed by seed. Equals the i-th output
// of a splitmix64 engine seeded with `seed`, so sequential and random access
// agree. Evaluation order and thread count cannot affect results.
inline std::uint64_t at(std::uint64_t seed, std::uint64_t i) {
    return mix64(seed + (i + 1) * kGolden);
}

// Stable derivation of sub-seeds (coupling seed, per-sample seed, ...) from a
// master seed. Distinct tags give decorrelated streams.
inline std::uint64_t derive(std::uint64_t seed, std::uint64_t tag) {
    return at(seed ^ 0x5851f42d4c957f2dULL, tag);
}

// Uniform double in [0,1), 53 mantissa bits.
inline double unit(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Uniform integer in [0,n) by multiply-shift. Bias is n/2^64, far below any
// statistical band used in this project; the payoff is a fixed, portable
// mapping (std::uniform_int_distribution is implementation-defined).
inline std::uint64_t below(std::uint64_t bits, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(bits) * static_cast<unsigned __int128>(n)) >> 64);
}

// Sequential splitmix64 walker for generator code that consumes randomness in
// a fixed order.
class Engine {
public:
    explicit Engine(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += kGolden;
        return mix64(state_);
    }
    double unit() { return rng::unit(next()); }
    std::uint64_t below(std::uint64_t n) { return rng::below(next(), n); }

    // Fisher-Yates; identical permutation on every platform.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace twocore::rng
