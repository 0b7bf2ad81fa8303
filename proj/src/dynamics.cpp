#include "oca/dynamics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "oca/int_factor.hpp"
#include "oca/latin.hpp"

namespace oca {

void CycleSum::add_term(std::uint64_t count, std::uint64_t length) {
    terms.push_back({count, length});
}

void CycleSum::normalize() {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    std::vector<std::pair<std::uint64_t, std::uint64_t>> merged;
    for (auto& [c, l] : terms) {
        if (c == 0) continue;
        if (!merged.empty() && merged.back().second == l)
            merged.back().first += c;
        else
            merged.push_back({c, l});
    }
    terms = std::move(merged);
}

std::uint64_t CycleSum::weight() const {
    std::uint64_t w = 0;
    for (auto& [c, l] : terms) w += checked_mul_u64(c, l);
    return w;
}

std::uint64_t CycleSum::max_length() const {
    std::uint64_t m = 0;
    for (auto& [c, l] : terms) m = std::max(m, l);
    return m;
}

std::uint64_t CycleSum::lcm_length() const {
    std::uint64_t m = 1;
    for (auto& [c, l] : terms) m = lcm_u64(m, l);
    return m;
}

std::string CycleSum::to_text() const {
    if (terms.empty()) return "(empty)";
    std::ostringstream os;
    bool first = true;
    for (auto& [c, l] : terms) {
        if (!first) os << " + ";
        first = false;
        os << c << "×" << l;
    }
    return os.str();
}

namespace {

void check_pair(const LocalRule& f, const LocalRule& g) {
    if (f.q != g.q || f.d != g.d)
        throw std::invalid_argument("rule pair must share q and d");
}

} // namespace

SystemState step(const LocalRule& f, const LocalRule& g, std::span<const felt> s) {
    check_pair(f, g);
    const std::uint32_t n = f.d - 1;
    if (s.size() != 2 * n)
        throw std::invalid_argument("state length must be 2(d-1)");
    SystemState out(2 * n);
    nbca_into(f, s, out.data());
    nbca_into(g, s, out.data() + n);
    return out;
}

std::uint64_t state_rank(std::span<const felt> s, std::uint32_t q) {
    std::uint64_t r = 0;
    for (std::size_t i = s.size(); i-- > 0;) r = r * q + s[i];
    return r;
}

SystemState state_from_rank(std::uint64_t rank, std::uint32_t q, std::uint32_t len) {
    SystemState s(len, 0);
    for (std::uint32_t i = 0; i < len; ++i) {
        s[i] = static_cast<felt>(rank % q);
        rank /= q;
    }
    return s;
}

CycleSum cycle_decomposition(const LocalRule& f, const LocalRule& g) {
    check_pair(f, g);
    if (!are_orthogonal(f, g))
        throw std::invalid_argument("cycle decomposition is defined for orthogonal pairs only");
    const std::uint32_t q = f.q, n = f.d - 1;
    const std::uint64_t total = checked_pow_u64(q, 2 * n);

    std::vector<bool> visited(static_cast<std::size_t>(total), false);
    std::vector<felt> cur(2 * n), nxt(2 * n);
    CycleSum sum;
    for (std::uint64_t start = 0; start < total; ++start) {
        if (visited[start]) continue;
        std::uint64_t len = 0, at = start;
        cur = state_from_rank(start, q, 2 * n);
        for (;;) {
            visited[at] = true;
            ++len;
            nbca_into(f, cur, nxt.data());
            nbca_into(g, cur, nxt.data() + n);
            at = state_rank(nxt, q);
            if (at == start) break;
            if (visited[at])
                throw std::logic_error("update map is not a permutation despite orthogonality");
            std::swap(cur, nxt);
        }
        sum.add_term(1, len);
    }
    sum.normalize();
    return sum;
}

std::uint64_t max_cycle_length(const LocalRule& f, const LocalRule& g) {
    return cycle_decomposition(f, g).max_length();
}

std::uint64_t period_of_state(const LocalRule& f, const LocalRule& g, std::span<const felt> s) {
    check_pair(f, g);
    const std::uint32_t q = f.q, n = f.d - 1;
    const std::uint64_t total = checked_pow_u64(q, 2 * n);
    SystemState cur = step(f, g, s);
    std::uint64_t p = 1;
    while (!std::equal(cur.begin(), cur.end(), s.begin(), s.end())) {
        cur = step(f, g, cur);
        if (++p > total)
            throw std::invalid_argument("state is not periodic: the pair is not orthogonal");
    }
    return p;
}

std::vector<SystemState> keystream(const LocalRule& f, const LocalRule& g,
                                   std::span<const felt> seed, std::uint64_t steps) {
    std::vector<SystemState> orbit;
    orbit.reserve(static_cast<std::size_t>(steps));
    SystemState cur(seed.begin(), seed.end());
    for (std::uint64_t i = 0; i < steps; ++i) {
        cur = step(f, g, cur);
        orbit.push_back(cur);
    }
    return orbit;
}

} // namespace oca
