#pragma once

#include <cstdint>

#include "lindecomp/errors.hpp"

namespace lindecomp {

// A field element value, always fully reduced into [0, p).
using Fe = std::uint32_t;

// Default modulus for desk-scale experiments: small enough to keep matrices
// readable, large enough that random square matrices are invertible with
// high probability.
inline constexpr Fe kDefaultModulus = 1009;

// Arithmetic context for GF(p), p an odd prime below 2^31 so that products
// fit in 64 bits. Construction validates primality.
class PrimeField {
public:
    explicit PrimeField(Fe p);

    Fe modulus() const noexcept { return p_; }

    Fe add(Fe a, Fe b) const noexcept {
        Fe s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Fe sub(Fe a, Fe b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Fe neg(Fe a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Fe mul(Fe a, Fe b) const noexcept {
        return static_cast<Fe>(static_cast<std::uint64_t>(a) * b % p_);
    }

    Fe pow(Fe base, std::uint64_t exp) const noexcept;

    // Multiplicative inverse by Fermat's little theorem; throws on zero.
    Fe inv(Fe a) const;

    // Reduce an arbitrary signed integer into [0, p).
    Fe reduce(std::int64_t x) const noexcept;

    static bool is_prime(Fe p) noexcept;

private:
    Fe p_;
};

} // namespace lindecomp
