#include "oca/rule.hpp"

#include <algorithm>
#include <stdexcept>

#include "oca/int_factor.hpp"

namespace oca {

namespace {

std::size_t table_size(std::uint32_t q, std::uint32_t d) {
    std::uint64_t s = checked_pow_u64(q, d);
    if (s > (1ULL << 28)) throw std::invalid_argument("rule table too large");
    return static_cast<std::size_t>(s);
}

} // namespace

LocalRule make_rule(std::uint32_t q, std::uint32_t d, std::vector<std::uint32_t> table) {
    (void)Fq(q);
    if (d < 2) throw std::invalid_argument("rule diameter must be at least 2");
    if (table.size() != table_size(q, d))
        throw std::invalid_argument("rule table must have exactly q^d entries");
    LocalRule r{q, d, {}};
    r.table.reserve(table.size());
    for (std::uint32_t v : table) {
        if (v >= q) throw std::invalid_argument("rule table entry out of range");
        r.table.push_back(static_cast<felt>(v));
    }
    return r;
}

std::uint64_t wolfram_code(const LocalRule& rule) {
    if (rule.q != 2) throw std::invalid_argument("Wolfram codes are defined for q = 2");
    if (rule.d > 6) throw std::invalid_argument("Wolfram code would exceed 64 bits (d > 6)");
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < rule.table.size(); ++i)
        if (rule.table[i]) code |= 1ULL << i;
    return code;
}

LocalRule rule_from_code(std::uint64_t code, std::uint32_t d) {
    if (d < 2 || d > 6) throw std::invalid_argument("Wolfram codes support 2 <= d <= 6");
    std::size_t n = std::size_t{1} << d;
    if (d < 6 && code >= (1ULL << n)) throw std::invalid_argument("Wolfram code out of range for this diameter");
    LocalRule r{2, d, std::vector<felt>(n, 0)};
    for (std::size_t i = 0; i < n; ++i) r.table[i] = static_cast<felt>((code >> i) & 1);
    return r;
}

bool is_bipermutive(const LocalRule& rule) {
    const std::uint32_t q = rule.q, d = rule.d;
    const std::size_t qd1 = rule.table.size() / q;
    std::vector<bool> seen(q);
    // Right restriction: xd varies in the least significant digit.
    for (std::size_t rest = 0; rest < qd1; ++rest) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::uint32_t x = 0; x < q; ++x) {
            felt v = rule.table[rest * q + x];
            if (seen[v]) return false;
            seen[v] = true;
        }
    }
    // Left restriction: x1 varies in the most significant digit.
    for (std::size_t rest = 0; rest < qd1; ++rest) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::uint32_t x = 0; x < q; ++x) {
            felt v = rule.table[x * qd1 + rest];
            if (seen[v]) return false;
            seen[v] = true;
        }
    }
    (void)d;
    return true;
}

std::vector<felt> nbca_apply(const LocalRule& rule, std::span<const felt> config) {
    if (config.size() < rule.d)
        throw std::invalid_argument("configuration shorter than the rule diameter");
    std::vector<felt> out(config.size() - rule.d + 1);
    nbca_into(rule, config, out.data());
    return out;
}

void nbca_into(const LocalRule& rule, std::span<const felt> config, felt* out) {
    const std::uint32_t q = rule.q, d = rule.d;
    const std::size_t cells = config.size() - d + 1;
    for (std::size_t i = 0; i < cells; ++i) {
        std::size_t idx = 0;
        for (std::uint32_t k = 0; k < d; ++k) idx = idx * q + config[i + k];
        out[i] = rule.table[idx];
    }
}

LinearRule make_linear_rule(std::uint32_t q, std::uint32_t d, std::vector<std::uint32_t> coeffs) {
    (void)Fq(q);
    if (d < 2 || coeffs.size() != d)
        throw std::invalid_argument("linear rule needs d >= 2 coefficients");
    LinearRule r{q, d, {}};
    for (std::uint32_t v : coeffs) r.coeffs.push_back(static_cast<felt>(v % q));
    if (r.coeffs.front() == 0 || r.coeffs.back() == 0)
        throw std::invalid_argument("linear rule must have nonzero first and last coefficients");
    return r;
}

LocalRule expand(const LinearRule& rule) {
    Fq F(rule.q);
    LocalRule out{rule.q, rule.d, std::vector<felt>(table_size(rule.q, rule.d), 0)};
    for (std::size_t idx = 0; idx < out.table.size(); ++idx) {
        std::size_t rest = idx;
        std::uint32_t acc = 0;
        for (std::uint32_t i = rule.d; i-- > 0;) {
            acc = F.add(acc, F.mul(rule.coeffs[i], rest % rule.q));
            rest /= rule.q;
        }
        out.table[idx] = static_cast<felt>(acc);
    }
    return out;
}

FqPolynomial linear_rule_to_poly(const LinearRule& rule) {
    std::vector<std::uint32_t> c(rule.coeffs.begin(), rule.coeffs.end());
    return FqPolynomial(rule.q, c);
}

LinearRule poly_to_linear_rule(const FqPolynomial& p) {
    if (p.degree() < 1) throw std::invalid_argument("polynomial degree must be at least 1");
    if (p.constant_term() == 0)
        throw std::invalid_argument("zero constant term: the rule would not be bipermutive");
    std::vector<std::uint32_t> c(p.coeffs().begin(), p.coeffs().end());
    return make_linear_rule(p.q(), static_cast<std::uint32_t>(p.degree()) + 1, c);
}

Anf anf(const LocalRule& rule) {
    if (rule.q != 2) throw std::invalid_argument("ANF is defined for q = 2");
    Anf a{rule.d, rule.table};
    for (std::uint32_t bit = 0; bit < rule.d; ++bit)
        for (std::size_t m = 0; m < a.a.size(); ++m)
            if (m & (std::size_t{1} << bit)) a.a[m] ^= a.a[m ^ (std::size_t{1} << bit)];
    return a;
}

LocalRule rule_from_anf(const Anf& a) {
    LocalRule r{2, a.d, a.a};
    for (std::uint32_t bit = 0; bit < a.d; ++bit)
        for (std::size_t m = 0; m < r.table.size(); ++m)
            if (m & (std::size_t{1} << bit)) r.table[m] ^= r.table[m ^ (std::size_t{1} << bit)];
    return r;
}

int algebraic_degree(const LocalRule& rule) {
    Anf a = anf(rule);
    int deg = 0;
    for (std::size_t m = 0; m < a.a.size(); ++m)
        if (a.a[m]) deg = std::max(deg, static_cast<int>(__builtin_popcountll(m)));
    return deg;
}

bool is_affine(const LocalRule& rule) { return algebraic_degree(rule) <= 1; }

bool is_strictly_linear(const LocalRule& rule) {
    Anf a = anf(rule);
    if (a.a[0]) return false;
    for (std::size_t m = 0; m < a.a.size(); ++m)
        if (a.a[m] && __builtin_popcountll(m) > 1) return false;
    return true;
}

LocalRule bipermutive_from_generator(std::uint64_t generator, std::uint32_t d) {
    if (d < 2 || d > 8) throw std::invalid_argument("generator expansion supports 2 <= d <= 8");
    std::uint32_t k = d - 2;
    if (k < 6 && generator >= (1ULL << (1ULL << k)))
        throw std::invalid_argument("generator out of range");
    LocalRule r{2, d, std::vector<felt>(std::size_t{1} << d, 0)};
    for (std::size_t x = 0; x < r.table.size(); ++x) {
        std::uint32_t x1 = (x >> (d - 1)) & 1, xd = x & 1;
        std::size_t center = (x >> 1) & ((std::size_t{1} << k) - 1);
        std::uint32_t g = k ? static_cast<std::uint32_t>((generator >> center) & 1) : 0;
        r.table[x] = static_cast<felt>(x1 ^ g ^ xd);
    }
    return r;
}

std::uint64_t generator_of_bipermutive(const LocalRule& rule) {
    if (rule.q != 2) throw std::invalid_argument("generator form is defined for q = 2");
    if (!is_bipermutive(rule)) throw std::invalid_argument("rule is not bipermutive");
    std::uint32_t k = rule.d - 2;
    std::uint64_t gen = 0;
    for (std::size_t c = 0; c < (std::size_t{1} << k); ++c)
        if (rule.table[c << 1]) gen |= 1ULL << c; // x1 = xd = 0
    return gen;
}

LocalRule random_bipermutive(std::uint32_t q, std::uint32_t d, std::mt19937_64& rng) {
    (void)Fq(q);
    if (d < 2) throw std::invalid_argument("rule diameter must be at least 2");
    if (q > 5) throw std::invalid_argument("random bipermutive sampler supports q <= 5");
    // All Latin squares of order q, built by row-wise backtracking.
    std::vector<std::vector<felt>> squares;
    std::vector<felt> grid(q * q, 0);
    auto fill = [&](auto&& self, std::uint32_t row) -> void {
        if (row == q) {
            squares.push_back(grid);
            return;
        }
        std::vector<std::uint32_t> perm(q);
        for (std::uint32_t i = 0; i < q; ++i) perm[i] = i;
        do {
            bool ok = true;
            for (std::uint32_t col = 0; col < q && ok; ++col)
                for (std::uint32_t r2 = 0; r2 < row && ok; ++r2)
                    if (grid[r2 * q + col] == perm[col]) ok = false;
            if (!ok) continue;
            for (std::uint32_t col = 0; col < q; ++col) grid[row * q + col] = static_cast<felt>(perm[col]);
            self(self, row + 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    fill(fill, 0);

    std::size_t centers = table_size(q, d) / (q * q);
    LocalRule r{q, d, std::vector<felt>(table_size(q, d), 0)};
    std::uniform_int_distribution<std::size_t> pick(0, squares.size() - 1);
    std::size_t qd1 = table_size(q, d) / q;
    for (std::size_t c = 0; c < centers; ++c) {
        const auto& sq = squares[pick(rng)];
        for (std::uint32_t x1 = 0; x1 < q; ++x1)
            for (std::uint32_t xd = 0; xd < q; ++xd)
                r.table[x1 * qd1 + c * q + xd] = sq[x1 * q + xd];
    }
    return r;
}

LocalRule reflect(const LocalRule& rule) {
    LocalRule out = rule;
    for (std::size_t x = 0; x < rule.table.size(); ++x) {
        std::size_t rev = 0, t = x;
        for (std::uint32_t i = 0; i < rule.d; ++i) {
            rev = rev * rule.q + t % rule.q;
            t /= rule.q;
        }
        out.table[rev] = rule.table[x];
    }
    return out;
}

LocalRule complement(const LocalRule& rule) {
    if (rule.q != 2) throw std::invalid_argument("complement symmetry is defined for q = 2");
    LocalRule out = rule;
    for (auto& v : out.table) v ^= 1;
    return out;
}

} // namespace oca
