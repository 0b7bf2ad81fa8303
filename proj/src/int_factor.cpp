#include "oca/int_factor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "oca/field.hpp"

namespace oca {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((__uint128_t)a * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(std::uint64_t n, std::uint64_t a) {
    if (n % a == 0) return n == a;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Pollard rho, Brent variant.
std::uint64_t pollard_rho(std::uint64_t n) {
    if ((n & 1) == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        std::uint64_t saved = 2;
        int power = 1, lam = 1;
        while (d == 1) {
            if (lam == power) { saved = x; power <<= 1; lam = 0; }
            x = (mulmod(x, x, n) + c) % n;
            ++lam;
            std::uint64_t diff = x > saved ? x - saved : saved - x;
            if (diff == 0) break;
            d = std::gcd(diff, n);
            (void)y;
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) { out.push_back(n); return; }
    std::uint64_t d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // Deterministic Miller-Rabin base set for 64-bit inputs.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
        if (!miller_rabin(n, a)) return false;
    return true;
}

IntFactorization int_factor(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("int_factor: argument must be positive");
    IntFactorization fac;
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p < 1000000 && p * p <= m; p += (p == 2 ? 1 : 2)) {
        while (m % p == 0) { primes.push_back(p); m /= p; }
    }
    if (m > 1) {
        if (m < 1000000ULL * 1000000ULL && is_prime_u64(m)) {
            primes.push_back(m);
        } else {
            factor_rec(m, primes);
        }
    }
    std::sort(primes.begin(), primes.end());
    for (std::uint64_t p : primes) {
        if (!fac.factors.empty() && fac.factors.back().first == p)
            ++fac.factors.back().second;
        else
            fac.factors.push_back({p, 1});
    }
    return fac;
}

std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
    __uint128_t r = (__uint128_t)a * b;
    if (r > UINT64_MAX) throw std::overflow_error("64-bit overflow in integer product");
    return static_cast<std::uint64_t>(r);
}

std::uint64_t checked_pow_u64(std::uint64_t base, std::uint32_t e) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) r = checked_mul_u64(r, base);
    return r;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) throw std::invalid_argument("lcm of zero");
    return checked_mul_u64(a / std::gcd(a, b), b);
}

} // namespace oca
