// Brute-force oracles shared by the test binaries. Everything here is
// deliberately independent of the code paths it checks: plain loops, no
// normal forms, no order theory.
#ifndef OCA_TESTS_ORACLES_HPP
#define OCA_TESTS_ORACLES_HPP

#include <random>
#include <vector>

#include "oca/cycle_sum.hpp"
#include "oca/int_factor.hpp"
#include "oca/matrix.hpp"
#include "oca/poly.hpp"

namespace oracles {

// Successive powers of X mod f until 1 comes back.
inline std::uint64_t brute_poly_order(const oca::FqPolynomial& f, std::uint64_t cap = 2000000) {
    oca::FqPolynomial x = oca::FqPolynomial::x(f.q()) % f;
    oca::FqPolynomial acc = x;
    for (std::uint64_t t = 1; t <= cap; ++t) {
        if (acc.is_one()) return t;
        acc = (acc * x) % f;
    }
    throw std::runtime_error("brute_poly_order: cap exceeded");
}

// Repeated multiplication until the identity comes back.
inline std::uint64_t brute_mat_order(const oca::FqMatrix& A, std::uint64_t cap = 2000000) {
    oca::FqMatrix I = oca::FqMatrix::identity(A.q(), A.rows());
    oca::FqMatrix P = A;
    for (std::uint64_t t = 1; t <= cap; ++t) {
        if (P == I) return t;
        P = oca::mat_mul(P, A);
    }
    throw std::runtime_error("brute_mat_order: cap exceeded");
}

// Cycle structure of s -> A*s by sweeping the whole state space.
inline oca::CycleSum brute_matrix_cycle_sum(const oca::FqMatrix& A) {
    const std::uint32_t q = A.q();
    const std::size_t dim = A.rows();
    const std::uint64_t total = oca::checked_pow_u64(q, static_cast<std::uint32_t>(dim));
    std::vector<bool> visited(total, false);
    auto rank = [&](const std::vector<oca::felt>& s) {
        std::uint64_t r = 0;
        for (std::size_t i = s.size(); i-- > 0;) r = r * q + s[i];
        return r;
    };
    auto unrank = [&](std::uint64_t r) {
        std::vector<oca::felt> s(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            s[i] = static_cast<oca::felt>(r % q);
            r /= q;
        }
        return s;
    };
    oca::CycleSum sum;
    for (std::uint64_t start = 0; start < total; ++start) {
        if (visited[start]) continue;
        std::uint64_t len = 0, at = start;
        auto s = unrank(start);
        do {
            visited[at] = true;
            ++len;
            s = oca::mat_apply(A, s);
            at = rank(s);
        } while (at != start);
        sum.add_term(1, len);
    }
    sum.normalize();
    return sum;
}

inline oca::FqPolynomial random_poly(std::uint32_t q, int max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    std::uniform_int_distribution<std::uint32_t> dc(0, q - 1);
    int deg = dd(rng);
    std::vector<std::uint32_t> c(deg + 1);
    for (auto& v : c) v = dc(rng);
    if (c.back() == 0) c.back() = 1;
    return oca::FqPolynomial(q, c);
}

inline oca::FqMatrix random_matrix(std::uint32_t q, std::size_t m, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dc(0, q - 1);
    oca::FqMatrix A(q, m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) A.at(i, j) = static_cast<oca::felt>(dc(rng));
    return A;
}

// Monic polynomials of exact degree n with nonzero constant term, sorted.
inline std::vector<oca::FqPolynomial> monic_nonzero_const(std::uint32_t q, std::uint32_t n) {
    std::vector<oca::FqPolynomial> out;
    std::vector<std::uint32_t> c(n + 1, 0);
    c[n] = 1;
    for (;;) {
        if (c[0] != 0) out.push_back(oca::FqPolynomial(q, c));
        std::uint32_t i = 0;
        for (; i < n; ++i) {
            if (++c[i] < q) break;
            c[i] = 0;
        }
        if (i == n) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// det(XI - A) by cofactor expansion over polynomial entries; small m only.
inline oca::FqPolynomial cofactor_char_poly(const oca::FqMatrix& A) {
    const std::uint32_t q = A.q();
    oca::Fq F(q);
    std::size_t m = A.rows();
    std::vector<std::vector<oca::FqPolynomial>> M(m, std::vector<oca::FqPolynomial>(m, oca::FqPolynomial::zero(q)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<std::uint32_t> c{F.neg(A.at(i, j))};
            if (i == j) c.push_back(1);
            M[i][j] = oca::FqPolynomial(q, c);
        }
    auto det = [&](auto&& self, std::vector<std::size_t> rows, std::vector<std::size_t> cols) -> oca::FqPolynomial {
        if (rows.size() == 1) return M[rows[0]][cols[0]];
        oca::FqPolynomial acc = oca::FqPolynomial::zero(q);
        std::vector<std::size_t> subrows(rows.begin() + 1, rows.end());
        for (std::size_t k = 0; k < cols.size(); ++k) {
            std::vector<std::size_t> subcols;
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (j != k) subcols.push_back(cols[j]);
            oca::FqPolynomial term = M[rows[0]][cols[k]] * self(self, subrows, subcols);
            acc = (k % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    return det(det, idx, idx);
}

} // namespace oracles

#endif
