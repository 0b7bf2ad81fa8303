#ifndef OCA_INT_FACTOR_HPP
#define OCA_INT_FACTOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace oca {

/// Prime factorization of a positive integer, bases ascending.
/// int_factor(1) yields an empty factor list.
struct IntFactorization {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> factors;

    std::uint64_t value() const {
        std::uint64_t v = 1;
        for (auto [p, e] : factors)
            for (std::uint32_t i = 0; i < e; ++i) v *= p;
        return v;
    }
};

/// Trial division below 10^6, Pollard rho beyond. Comfortable to ~2^63.
IntFactorization int_factor(std::uint64_t m);

/// Checked arithmetic helpers; throw std::overflow_error past 64 bits.
std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow_u64(std::uint64_t base, std::uint32_t e);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

} // namespace oca

#endif
