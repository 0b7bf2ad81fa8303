#ifndef OCA_NORMAL_FORM_HPP
#define OCA_NORMAL_FORM_HPP

#include <utility>
#include <vector>

#include "oca/matrix.hpp"
#include "oca/poly.hpp"

namespace oca {

/// Similarity invariants of a square matrix, all derived from one Smith
/// normal form computation of XI - A over F_q[X]:
///  - char_poly = product of the invariant factors,
///  - min_poly  = largest invariant factor,
///  - invariant_factors in divisibility order (each divides the next),
///  - elementary_divisors: one (irreducible, multiplicity) entry per
///    companion block of the rational canonical form.
struct NormalFormReport {
    FqPolynomial char_poly;
    FqPolynomial min_poly;
    std::vector<FqPolynomial> invariant_factors;
    std::vector<std::pair<FqPolynomial, std::uint32_t>> elementary_divisors;
};

NormalFormReport min_char_poly(const FqMatrix& A);

/// Rational canonical form: block diagonal of companion blocks, one per
/// elementary divisor, in the report's order.
FqMatrix rcf(const FqMatrix& A);

/// Monic minimal polynomial of the vector v under A (the lowest-degree h with
/// h(A)v = 0), found from the Krylov sequence v, Av, A^2 v, ...
FqPolynomial cyclic_annihilator(const FqMatrix& A, std::span<const felt> v);

} // namespace oca

#endif
