#include "lindecomp/field.hpp"

namespace lindecomp {

PrimeField::PrimeField(Fe p) : p_(p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("modulus must be an odd prime, got " + std::to_string(p));
    if (p >= (Fe{1} << 31))
        throw std::invalid_argument("modulus must fit in 31 bits");
}

Fe PrimeField::pow(Fe base, std::uint64_t exp) const noexcept {
    Fe result = 1 % p_;
    Fe b = base % p_;
    while (exp > 0) {
        if (exp & 1)
            result = mul(result, b);
        b = mul(b, b);
        exp >>= 1;
    }
    return result;
}

Fe PrimeField::inv(Fe a) const {
    if (a % p_ == 0)
        throw std::domain_error("inverse of zero in GF(" + std::to_string(p_) + ")");
    return pow(a, p_ - 2);
}

Fe PrimeField::reduce(std::int64_t x) const noexcept {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0)
        r += p_;
    return static_cast<Fe>(r);
}

bool PrimeField::is_prime(Fe p) noexcept {
    if (p < 2)
        return false;
    if (p % 2 == 0)
        return p == 2;
    for (Fe d = 3; static_cast<std::uint64_t>(d) * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

} // namespace lindecomp
