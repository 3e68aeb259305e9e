#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace richnet {

/// Seeded random source with a platform-independent integer mapping, so a
/// fixed seed gives the same draws everywhere (std::uniform_int_distribution
/// is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Independent stream for a numbered sub-experiment (e.g. attack trial).
    static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
        std::seed_seq seq{seed, stream_id};
        std::mt19937_64 engine(seq);
        Rng rng(0);
        rng.engine_ = engine;
        return rng;
    }

    std::uint64_t next() { return engine_(); }

    /// Uniform draw from [0, n) by rejection sampling; n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t draw;
        do {
            draw = engine_();
        } while (draw >= limit);
        return draw % n;
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace richnet
