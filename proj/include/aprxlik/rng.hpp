#ifndef APRXLIK_RNG_HPP
#define APRXLIK_RNG_HPP

#include <cstdint>

#include "aprxlik/special.hpp"

namespace aprx {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Counter-derived stream: the state is a hash of (seed, tag, index), so
// replicate and item streams are independent of evaluation order and of the
// thread count.
class Rng {
public:
    explicit Rng(std::uint64_t state) : state_(state) {}

    static Rng stream(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
        std::uint64_t s = seed;
        std::uint64_t a = splitmix64(s);
        s = a ^ (0xD1B54A32D192ED03ULL * (tag + 1));
        a = splitmix64(s);
        s = a ^ (0x9E3779B97F4A7C15ULL * (index + 1));
        splitmix64(s);
        return Rng(s);
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    // Uniform on (0, 1); never returns an exact endpoint.
    double next_unit() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

    double next_normal() { return inv_norm_cdf(next_unit()); }

    // Number of successes in m Bernoulli(p) trials.
    int next_binomial(int m, double p) {
        int y = 0;
        for (int t = 0; t < m; ++t)
            if (next_unit() < p) ++y;
        return y;
    }

private:
    std::uint64_t state_;
};

}  // namespace aprx

#endif
