#ifndef SWAY_RNG_HPP
#define SWAY_RNG_HPP

#include <cstdint>
#include <random>

namespace sway {

// splitmix64, used both as a seed mixer and for deriving child seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Child-seed contract: child i of a master seed is a pure hash of (master, i),
// so independent streams can be derived in any order.
inline std::uint64_t seed_split(std::uint64_t master, std::uint64_t index) {
    std::uint64_t s = master ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    splitmix64(s);
    return splitmix64(s);
}

// mt19937_64 output is pinned by the standard; the distributions below are
// hand-rolled because std::uniform_*_distribution is implementation-defined
// and experiment reruns must be byte-identical across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(mix(seed)) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [0,1)
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    // uniform integer in [0,n)
    std::uint64_t below(std::uint64_t n) {
        return n ? next_u64() % n : 0;
    }

    // uniform integer in [lo,hi] inclusive
    long long uniform_int(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin(double p = 0.5) { return uniform() < p; }

private:
    static std::uint64_t mix(std::uint64_t seed) {
        splitmix64(seed);
        return splitmix64(seed);
    }
    std::mt19937_64 eng_;
};

} // namespace sway

#endif
