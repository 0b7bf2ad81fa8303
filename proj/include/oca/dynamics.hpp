#ifndef OCA_DYNAMICS_HPP
#define OCA_DYNAMICS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "oca/cycle_sum.hpp"
#include "oca/rule.hpp"

namespace oca {

/// Phase-space point of the paired system: 2(d-1) symbols, left half x,
/// right half y.
using SystemState = std::vector<felt>;

/// One update H(x||y) = F(x||y) || G(x||y): both rules sweep the whole state,
/// the outputs are concatenated. State length must be exactly 2(d-1).
SystemState step(const LocalRule& f, const LocalRule& g, std::span<const felt> s);

/// Exact cycle structure by sweeping all q^(2n) states with a visited bitmap.
/// Rejects pairs whose update map is not bijective (non-orthogonal pairs).
/// Practical limit: q^(2n) <= 2^30 states.
CycleSum cycle_decomposition(const LocalRule& f, const LocalRule& g);

std::uint64_t max_cycle_length(const LocalRule& f, const LocalRule& g);

/// Minimal period of one state under iteration.
std::uint64_t period_of_state(const LocalRule& f, const LocalRule& g, std::span<const felt> s);

/// Orbit prefix [H(s), H^2(s), ..., H^steps(s)].
std::vector<SystemState> keystream(const LocalRule& f, const LocalRule& g,
                                   std::span<const felt> seed, std::uint64_t steps);

/// Rank of a state in the visited bitmap: first symbol is the least
/// significant base-q digit.
std::uint64_t state_rank(std::span<const felt> s, std::uint32_t q);
SystemState state_from_rank(std::uint64_t rank, std::uint32_t q, std::uint32_t len);

} // namespace oca

#endif
