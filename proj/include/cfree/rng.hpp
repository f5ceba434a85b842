#ifndef CFREE_RNG_HPP
#define CFREE_RNG_HPP

#include <cstdint>
#include <span>
#include <utility>

namespace cfree {

// SplitMix64 (Steele, Lea, Flood 2014). The whole stream is fixed by this
// definition so generated objects are reproducible across platforms and
// across ports to other languages:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// Bounded draws use rejection: with t = (2^64 - bound) mod bound, draw x
// until x >= t and return x mod bound. Shuffles are Fisher-Yates from the
// back, swapping slot i with uniform(i + 1).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t uniform(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t x = next();
            if (x >= threshold) {
                return x % bound;
            }
        }
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

/// Independent seed for the i-th sub-stream of a base seed (one SplitMix64
/// step applied to base ^ mix(i)); used for per-instance seeds in experiments.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    SplitMix64 mixer(index * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL);
    SplitMix64 out(base ^ mixer.next());
    return out.next();
}

} // namespace cfree

#endif // CFREE_RNG_HPP
