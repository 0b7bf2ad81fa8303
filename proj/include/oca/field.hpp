#ifndef OCA_FIELD_HPP
#define OCA_FIELD_HPP

#include <cstdint>
#include <stdexcept>

namespace oca {

/// One field element as stored in tables, polynomials and matrices.
/// Values are kept reduced mod q at all times.
using felt = std::uint8_t;

bool is_prime_u64(std::uint64_t n);

/// Arithmetic context for the prime field F_q. All operations reduce mod q.
/// Supported moduli: any prime that fits a byte (the workbench exercises 2 and 3).
class Fq {
public:
    explicit Fq(std::uint32_t q) : q_(q) {
        if (q < 2 || q > 251 || !is_prime_u64(q))
            throw std::invalid_argument("field modulus must be a prime <= 251");
    }

    std::uint32_t q() const { return q_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % q_; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + q_ - b % q_) % q_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((std::uint64_t)a * b % q_);
    }
    std::uint32_t neg(std::uint32_t a) const { return a % q_ == 0 ? 0 : q_ - a % q_; }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint64_t base = a % q_, r = 1;
        while (e) {
            if (e & 1) r = r * base % q_;
            base = base * base % q_;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(r);
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a % q_ == 0) throw std::domain_error("division by zero in F_q");
        return pow(a, q_ - 2);
    }

    bool operator==(const Fq& o) const { return q_ == o.q_; }

private:
    std::uint32_t q_;
};

} // namespace oca

#endif
