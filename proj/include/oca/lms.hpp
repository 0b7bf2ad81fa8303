#ifndef OCA_LMS_HPP
#define OCA_LMS_HPP

#include <cstdint>

#include "oca/cycle_sum.hpp"
#include "oca/normal_form.hpp"
#include "oca/poly.hpp"

namespace oca {

/// One companion block of the rational canonical form: the elementary
/// divisor f^m with f monic irreducible.
struct BlockSpec {
    FqPolynomial f;
    std::uint32_t m = 1;
};

/// ord(f^h) for irreducible f with f(0) != 0. Rejects reducible input.
std::uint64_t ord_power(const FqPolynomial& f, std::uint32_t h);

/// Cycle structure of the linear system whose transition matrix is the
/// companion block of f^m: the zero vector is a fixed point, and for each
/// h in 1..m the states annihilated by f^h but not f^(h-1) split into
/// cycles of length ord(f^h).
CycleSum block_cycle_sum(const BlockSpec& b);

/// Cycle structure of a direct sum of systems: distributive product with
/// (n1,t1)*(n2,t2) = (n1 n2 gcd(t1,t2), lcm(t1,t2)).
CycleSum cycle_sum_product(const CycleSum& a, const CycleSum& b);

/// Full cycle structure of the joint linear system of a coprime monic pair:
/// product over the elementary divisors of their 2n x 2n update matrix.
CycleSum system_cycle_sum(const FqPolynomial& pf, const FqPolynomial& pg);

/// Single maximal cycle test: the minimal polynomial of the update matrix is
/// primitive of full degree 2n, equivalently the order is q^(2n)-1.
bool is_maximal(const FqPolynomial& pf, const FqPolynomial& pg);

} // namespace oca

#endif
