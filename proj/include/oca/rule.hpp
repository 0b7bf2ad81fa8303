#ifndef OCA_RULE_HPP
#define OCA_RULE_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "oca/field.hpp"
#include "oca/poly.hpp"

namespace oca {

/// Local rule of diameter d over F_q, stored as the full lookup table of
/// q^d output cells. Neighborhood (x1,...,xd) indexes the table with x1 as
/// the most significant base-q digit, so for q = 2 the table is the truth
/// table in lexicographic order.
struct LocalRule {
    std::uint32_t q = 2;
    std::uint32_t d = 3;
    std::vector<felt> table;

    std::size_t size() const { return table.size(); }
    felt operator()(std::size_t neighborhood_index) const { return table[neighborhood_index]; }
};

LocalRule make_rule(std::uint32_t q, std::uint32_t d, std::vector<std::uint32_t> table);

/// Decimal encoding of a binary rule's truth table; x1 is the most
/// significant digit of the neighborhood index. q = 2, d <= 6 only.
std::uint64_t wolfram_code(const LocalRule& rule);
LocalRule rule_from_code(std::uint64_t code, std::uint32_t d);

/// True iff both the leftmost and rightmost coordinate restrictions are
/// permutations of F_q for every fixing of the other d-1 coordinates.
bool is_bipermutive(const LocalRule& rule);

/// Sliding-window application: m cells in, m-d+1 cells out.
std::vector<felt> nbca_apply(const LocalRule& rule, std::span<const felt> config);
/// Allocation-free variant for sweep loops; out must hold m-d+1 cells.
void nbca_into(const LocalRule& rule, std::span<const felt> config, felt* out);

/// Linear rule f(x) = a1 x1 + ... + ad xd with a1, ad != 0.
struct LinearRule {
    std::uint32_t q = 2;
    std::uint32_t d = 3;
    std::vector<felt> coeffs; // a1..ad
};

LinearRule make_linear_rule(std::uint32_t q, std::uint32_t d, std::vector<std::uint32_t> coeffs);
LocalRule expand(const LinearRule& rule);

/// P_f(X) = a1 + a2 X + ... + ad X^(d-1); the inverse rejects polynomials
/// with zero constant term (the rule would not be bipermutive).
FqPolynomial linear_rule_to_poly(const LinearRule& rule);
LinearRule poly_to_linear_rule(const FqPolynomial& p);

/// Algebraic normal form of a binary rule: coefficient a_I for every
/// monomial, indexed by the variable mask in table bit order (the mask bit
/// of x_i is bit d-i). q = 2 only.
struct Anf {
    std::uint32_t d = 3;
    std::vector<felt> a;
};

Anf anf(const LocalRule& rule);
LocalRule rule_from_anf(const Anf& a);
int algebraic_degree(const LocalRule& rule);
/// degree <= 1, constant term allowed (affine reading).
bool is_affine(const LocalRule& rule);
/// degree <= 1 and zero constant term.
bool is_strictly_linear(const LocalRule& rule);

/// For q = 2 a bipermutive rule is x1 xor g(x2..x_{d-1}) xor xd; `generator`
/// packs the truth table of g with x2 as its most significant digit.
LocalRule bipermutive_from_generator(std::uint64_t generator, std::uint32_t d);
std::uint64_t generator_of_bipermutive(const LocalRule& rule);

/// Uniform random bipermutive rule: one independent Latin square of order q
/// over (x1, xd) per central-cell value.
LocalRule random_bipermutive(std::uint32_t q, std::uint32_t d, std::mt19937_64& rng);

/// Rule symmetries: reflection evaluates on the reversed neighborhood;
/// complement negates the output (q = 2).
LocalRule reflect(const LocalRule& rule);
LocalRule complement(const LocalRule& rule);

} // namespace oca

#endif
