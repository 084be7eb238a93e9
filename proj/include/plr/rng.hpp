#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace plr {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256** seeded through splitmix64. Hand-rolled so that streams are
// bit-identical across platforms; std:: distributions are not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& w : state_) w = splitmix64(s);
    }

    std::uint64_t next() {
        const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = std::rotl(state_[3], 45);
        return result;
    }

    // Unbiased uniform draw in [0, bound) via masked rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
        for (;;) {
            const std::uint64_t r = next() & mask;
            if (r < bound) return r;
        }
    }

    double unit_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Independent, reproducible seed for stream `stream` of a master seed.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t s = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
        const std::uint64_t a = splitmix64(s);
        return a ^ splitmix64(s);
    }

private:
    std::array<std::uint64_t, 4> state_;
};

}  // namespace plr
