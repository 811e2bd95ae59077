#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace evencycle {

// Derive a stream seed from a base seed; used wherever one user-facing seed
// has to fan out into independent deterministic streams.
inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
    return seed ^ (0x9e3779b97f4a7c15ULL * (stream + 0x2545f4914f6cdd1dULL));
}

// Seeded RNG wrapper. All randomness in the library flows through this so
// that runs are reproducible from a single 64-bit seed. Distribution helpers
// are hand-rolled because the std::*_distribution classes are
// implementation-defined and would break seed-stable results across
// toolchains (mt19937_64 itself is fully specified).
class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed), gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    // uniform integer in [0, bound), bound >= 1
    uint64_t below(uint64_t bound) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;  // rejection kills modulo bias
        uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % bound;
    }

    int below_int(int bound) { return static_cast<int>(below(static_cast<uint64_t>(bound))); }

    // uniform double in [0, 1)
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // standard normal via Box-Muller
    double gaussian() {
        double u1;
        do {
            u1 = uniform();
        } while (u1 == 0.0);
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    // derive an independent, order-insensitive stream (one per sample index)
    Rng split(uint64_t stream) const { return Rng(mix_seed(seed_, stream)); }

private:
    uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace evencycle
