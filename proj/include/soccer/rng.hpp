#ifndef SOCCER_RNG_HPP
#define SOCCER_RNG_HPP

#include <cstdint>

namespace soccer {

// splitmix64; platform-stable, used for seeding and substream derivation
inline std::uint64_t splitmix64(std::uint64_t &state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro-free single-state generator built on splitmix64. Every stochastic
// choice in the simulator draws from one of these; doubles are derived from
// the top 53 bits so results are bit-identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next() { return splitmix64(state_); }

    double next_double() { // [0, 1)
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // uniform in [lo, hi)
    double next_range(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    Rng substream(std::uint64_t tag) const {
        std::uint64_t s = state_ ^ (0x6a09e667f3bcc909ULL + tag * 0x9e3779b97f4a7c15ULL);
        splitmix64(s);
        return Rng(s);
    }

private:
    std::uint64_t state_;
};

} // namespace soccer

#endif
