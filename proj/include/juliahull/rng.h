#pragma once

#include <cstdint>

namespace juliahull {

/// Counter-based generator: the i-th draw of a stream depends only on
/// (seed, stream, i), so results never depend on scheduling.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL))) {}

    std::uint64_t at(std::uint64_t counter) const
    {
        return mix(key_ + counter * 0x9e3779b97f4a7c15ULL);
    }

    std::uint64_t next() { return at(counter_++); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n)
    {
        return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
    }

    std::uint64_t counter() const { return counter_; }

private:
    // splitmix64 finalizer
    static std::uint64_t mix(std::uint64_t z)
    {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace juliahull
