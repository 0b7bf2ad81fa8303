#ifndef OCA_ENUMERATE_HPP
#define OCA_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "oca/poly.hpp"

namespace oca {

/// Which degree-n polynomials enter the pair enumeration. ConstantOne is the
/// published-count convention (identical to AnyNonzeroConstant when q = 2,
/// a strict subset for q >= 3).
enum class PolyUniverse { ConstantOne, AnyNonzeroConstant };

struct EnumOptions {
    std::uint32_t q = 2;
    std::uint32_t d = 3; // polynomial degree n = d - 1
    PolyUniverse universe = PolyUniverse::ConstantOne;
    bool collect_pairs = false;
    int threads = 0;
};

/// A coprime pair whose joint update matrix has a single maximal cycle;
/// min_poly is its (primitive, degree-2n) minimal polynomial.
struct MaximalPairRecord {
    FqPolynomial pf, pg, min_poly;
};

struct EnumReport {
    std::uint32_t q = 2, d = 0;
    std::uint64_t poly_count = 0;
    std::uint64_t pairs = 0;         // unordered pairs visited
    std::uint64_t coprime_pairs = 0;
    std::uint64_t maximal = 0;
    std::vector<MaximalPairRecord> records; // when collect_pairs, sorted
};

/// Monic degree-n polynomials of the universe, sorted.
std::vector<FqPolynomial> poly_universe(std::uint32_t q, std::uint32_t n, PolyUniverse u);

/// OpenMP kernel: unordered coprime pairs whose update matrix order is
/// q^(2n)-1, decided by a degree-2n primitivity check of the Krylov
/// annihilator of e1 (which then equals the minimal polynomial).
EnumReport enumerate_maximal_linear(const EnumOptions& opt);

/// Serial reference deciding each pair through the full normal-form path
/// (Smith form, minimal polynomial, primitivity). Kept for cross-checking.
EnumReport enumerate_maximal_linear_reference(const EnumOptions& opt);

} // namespace oca

#endif
