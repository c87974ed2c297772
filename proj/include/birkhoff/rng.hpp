#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace birkhoff {

/**
 * Seeded generator with platform-independent derived draws.
 *
 * std::mt19937_64's raw output is fixed by the standard, but the standard
 * distributions and std::shuffle are not, so integer ranges and shuffles are
 * derived here by rejection sampling and Fisher-Yates.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be positive.
    std::size_t below(std::size_t bound) {
        const std::uint64_t b = bound;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return static_cast<std::size_t>(x % b);
    }

    /// Uniform double in (0, 1] with 53 random bits.
    double unit_open_closed() {
        return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    }

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[below(i)]);
        }
    }

    template <typename Container>
    void shuffle(Container& items) {
        shuffle(std::span(items.data(), items.size()));
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace birkhoff
