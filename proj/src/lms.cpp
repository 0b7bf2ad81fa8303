#include "oca/lms.hpp"

#include <numeric>
#include <stdexcept>

#include "oca/int_factor.hpp"
#include "oca/matrix.hpp"

namespace oca {

std::uint64_t ord_power(const FqPolynomial& f, std::uint32_t h) {
    if (!is_irreducible(f)) throw std::invalid_argument("ord_power expects an irreducible polynomial");
    return order_of_irreducible_power(f, h);
}

CycleSum block_cycle_sum(const BlockSpec& b) {
    if (b.m < 1) throw std::invalid_argument("block multiplicity must be positive");
    if (!is_irreducible(b.f)) throw std::invalid_argument("block polynomial must be irreducible");
    if (b.f.constant_term() == 0) throw std::domain_error("block polynomial must have nonzero constant term");
    const std::uint32_t q = b.f.q();
    const std::uint32_t e = static_cast<std::uint32_t>(b.f.degree());
    CycleSum sum = CycleSum::single(1, 1);
    std::uint64_t prev = 1; // q^((h-1)e)
    for (std::uint32_t h = 1; h <= b.m; ++h) {
        std::uint64_t cur = checked_pow_u64(q, h * e);
        std::uint64_t t = ord_power(b.f, h);
        std::uint64_t states = cur - prev;
        if (states % t != 0)
            throw std::logic_error("block cycle count is not integral");
        sum.add_term(states / t, t);
        prev = cur;
    }
    sum.normalize();
    return sum;
}

CycleSum cycle_sum_product(const CycleSum& a, const CycleSum& b) {
    CycleSum out;
    for (auto& [n1, t1] : a.terms)
        for (auto& [n2, t2] : b.terms) {
            std::uint64_t g = std::gcd(t1, t2);
            out.add_term(checked_mul_u64(checked_mul_u64(n1, n2), g), t1 / g * t2);
        }
    out.normalize();
    return out;
}

CycleSum system_cycle_sum(const FqPolynomial& pf, const FqPolynomial& pg) {
    if (poly_gcd(pf, pg).degree() != 0)
        throw std::invalid_argument("pair is not coprime: the system is not a permutation");
    const std::uint32_t n = static_cast<std::uint32_t>(pf.degree());
    FqMatrix M = sylvester_matrix(pf, pg, n);
    NormalFormReport rep = min_char_poly(M);
    CycleSum sum = CycleSum::single(1, 1);
    for (auto& [f, m] : rep.elementary_divisors)
        sum = cycle_sum_product(sum, block_cycle_sum({f, m}));
    return sum;
}

bool is_maximal(const FqPolynomial& pf, const FqPolynomial& pg) {
    if (poly_gcd(pf, pg).degree() != 0)
        throw std::invalid_argument("pair is not coprime");
    const std::uint32_t n = static_cast<std::uint32_t>(pf.degree());
    FqMatrix M = sylvester_matrix(pf, pg, n);
    NormalFormReport rep = min_char_poly(M);
    return rep.min_poly.degree() == static_cast<int>(2 * n) && is_primitive(rep.min_poly);
}

} // namespace oca
