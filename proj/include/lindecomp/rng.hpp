#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "lindecomp/field.hpp"

namespace lindecomp {

// Seeded PRNG threaded explicitly through all sampling. Bounded draws use
// rejection so sequences do not depend on the standard library's
// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform value in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0)
            throw std::invalid_argument("Rng::below called with bound 0");
        if (bound == 1)
            return 0;
        const std::uint64_t max = ~std::uint64_t{0};
        const std::uint64_t zone = max - max % bound; // multiple of bound
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= zone);
        return v % bound;
    }

    Fe field_element(Fe p) { return static_cast<Fe>(below(p)); }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

    // Derives an independent stream; used to split one user seed into
    // fixture and protocol-run streams.
    static std::uint64_t split(std::uint64_t seed, std::uint64_t stream) {
        // splitmix64 step
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace lindecomp
