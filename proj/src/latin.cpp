#include "oca/latin.hpp"

#include <stdexcept>

#include "oca/int_factor.hpp"

namespace oca {

std::uint64_t phi_index(std::span<const felt> v, std::uint32_t q) {
    std::uint64_t idx = 0;
    for (std::size_t i = v.size(); i-- > 0;) idx = idx * q + v[i];
    return idx + 1;
}

std::vector<felt> psi_vector(std::uint64_t index, std::uint32_t q, std::uint32_t len) {
    if (index == 0) throw std::invalid_argument("psi expects a 1-based index");
    std::uint64_t t = index - 1;
    std::vector<felt> v(len, 0);
    for (std::uint32_t i = 0; i < len; ++i) {
        v[i] = static_cast<felt>(t % q);
        t /= q;
    }
    if (t) throw std::invalid_argument("psi index out of range");
    return v;
}

LatinSquare latin_square(const LocalRule& rule) {
    if (!is_bipermutive(rule)) throw std::invalid_argument("rule is not bipermutive");
    const std::uint32_t q = rule.q, d = rule.d, n = d - 1;
    std::uint64_t N = checked_pow_u64(q, n);
    if (N * N > (1ULL << 28)) throw std::invalid_argument("Latin square too large to materialize");
    LatinSquare s{static_cast<std::uint32_t>(N), {}};
    s.grid.resize(static_cast<std::size_t>(N * N));
    std::vector<felt> config(2 * n), out(n);
    for (std::uint64_t i = 1; i <= N; ++i) {
        auto left = psi_vector(i, q, n);
        std::copy(left.begin(), left.end(), config.begin());
        for (std::uint64_t j = 1; j <= N; ++j) {
            auto right = psi_vector(j, q, n);
            std::copy(right.begin(), right.end(), config.begin() + n);
            nbca_into(rule, config, out.data());
            s.grid[(i - 1) * N + (j - 1)] = static_cast<std::uint32_t>(phi_index(out, q));
        }
    }
    return s;
}

bool is_latin(const LatinSquare& s) {
    const std::uint32_t n = s.n;
    if (s.grid.size() != static_cast<std::size_t>(n) * n) return false;
    std::vector<bool> seen(n + 1);
    for (std::uint32_t i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::uint32_t j = 0; j < n; ++j) {
            std::uint32_t v = s.at(i, j);
            if (v < 1 || v > n || seen[v]) return false;
            seen[v] = true;
        }
    }
    for (std::uint32_t j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::uint32_t i = 0; i < n; ++i) {
            std::uint32_t v = s.at(i, j);
            if (v < 1 || v > n || seen[v]) return false;
            seen[v] = true;
        }
    }
    return true;
}

bool are_orthogonal(const LocalRule& f, const LocalRule& g) {
    if (f.q != g.q || f.d != g.d)
        throw std::invalid_argument("orthogonality check needs rules with matching q and d");
    if (!is_bipermutive(f) || !is_bipermutive(g))
        throw std::invalid_argument("orthogonality is defined for bipermutive rules");
    const std::uint32_t q = f.q, d = f.d, n = d - 1;
    std::uint64_t total = checked_pow_u64(q, 2 * n); // = N^2 superposed cells
    if (total > (1ULL << 30)) throw std::invalid_argument("phase space too large for superposition sweep");
    std::vector<bool> seen(static_cast<std::size_t>(total), false);
    std::vector<felt> config(2 * n, 0), fo(n), go(n);
    for (std::uint64_t c = 0; c < total; ++c) {
        nbca_into(f, config, fo.data());
        nbca_into(g, config, go.data());
        std::uint64_t pair = (phi_index(fo, q) - 1) * checked_pow_u64(q, n) + (phi_index(go, q) - 1);
        if (seen[pair]) return false;
        seen[pair] = true;
        // next configuration, first cell is the fastest digit
        for (std::size_t i = 0; i < config.size(); ++i) {
            if (++config[i] < q) break;
            config[i] = 0;
        }
    }
    return true;
}

bool pairwise_balanced(const LocalRule& f, const LocalRule& g) {
    if (f.q != g.q || f.d != g.d)
        throw std::invalid_argument("pairwise balance needs rules with matching q and d");
    const std::uint32_t q = f.q;
    std::vector<std::uint64_t> count(q * q, 0);
    for (std::size_t x = 0; x < f.table.size(); ++x)
        ++count[f.table[x] * q + g.table[x]];
    std::uint64_t expect = f.table.size() / (q * q);
    for (std::uint64_t c : count)
        if (c != expect) return false;
    return true;
}

} // namespace oca
