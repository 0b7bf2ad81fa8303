#ifndef OCA_LATIN_HPP
#define OCA_LATIN_HPP

#include <cstdint>
#include <vector>

#include "oca/rule.hpp"

namespace oca {

/// N x N grid of symbols 1..N, row-major.
struct LatinSquare {
    std::uint32_t n = 0;
    std::vector<std::uint32_t> grid;

    std::uint32_t at(std::uint32_t i, std::uint32_t j) const { return grid[i * n + j]; }
};

/// Index map between vectors of F_q^(d-1) and [N]: the first coordinate is
/// the least significant base-q digit, phi(x) = 1 + sum_i x_i q^(i-1).
std::uint64_t phi_index(std::span<const felt> v, std::uint32_t q);
std::vector<felt> psi_vector(std::uint64_t index, std::uint32_t q, std::uint32_t len);

/// Square of order N = q^(d-1) with entry (i,j) = phi(F(psi(i) || psi(j))).
/// Rejects non-bipermutive rules.
LatinSquare latin_square(const LocalRule& rule);

bool is_latin(const LatinSquare& s);

/// Superposition of the two squares hits every ordered pair exactly once.
/// Streams over all q^(2(d-1)) cells; the squares are never materialized.
bool are_orthogonal(const LocalRule& f, const LocalRule& g);

/// The joint map x -> (f(x), g(x)) takes each value of F_q^2 exactly
/// q^(d-2) times.
bool pairwise_balanced(const LocalRule& f, const LocalRule& g);

} // namespace oca

#endif
