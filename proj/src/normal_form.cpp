#include "oca/normal_form.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace oca {

namespace {

using PolyMat = std::vector<std::vector<FqPolynomial>>;

PolyMat characteristic_matrix(const FqMatrix& A) {
    Fq F(A.q());
    std::size_t m = A.rows();
    PolyMat M(m, std::vector<FqPolynomial>(m, FqPolynomial::zero(A.q())));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<std::uint32_t> c{F.neg(A.at(i, j))};
            if (i == j) c.push_back(1);
            M[i][j] = FqPolynomial(A.q(), c);
        }
    return M;
}

// Smith normal form over F_q[X]; leaves the diagonal in divisibility order.
void snf_in_place(PolyMat& M) {
    const std::size_t m = M.size();
    for (std::size_t t = 0; t < m; ++t) {
        for (;;) {
            std::size_t bi = m, bj = m;
            int best = std::numeric_limits<int>::max();
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < m; ++j)
                    if (!M[i][j].is_zero() && M[i][j].degree() < best) {
                        best = M[i][j].degree();
                        bi = i;
                        bj = j;
                    }
            if (bi == m) return; // remaining submatrix is zero
            if (bi != t) std::swap(M[bi], M[t]);
            if (bj != t)
                for (std::size_t i = 0; i < m; ++i) std::swap(M[i][bj], M[i][t]);

            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (M[i][t].is_zero()) continue;
                FqPolynomial quo = M[i][t] / M[t][t];
                for (std::size_t j = t; j < m; ++j)
                    M[i][j] = M[i][j] - quo * M[t][j];
                if (!M[i][t].is_zero()) dirty = true;
            }
            for (std::size_t j = t + 1; j < m; ++j) {
                if (M[t][j].is_zero()) continue;
                FqPolynomial quo = M[t][j] / M[t][t];
                for (std::size_t i = t; i < m; ++i)
                    M[i][j] = M[i][j] - quo * M[i][t];
                if (!M[t][j].is_zero()) dirty = true;
            }
            if (dirty) continue;

            // Pivot must divide everything that remains.
            bool fixed = false;
            for (std::size_t i = t + 1; i < m && !fixed; ++i)
                for (std::size_t j = t + 1; j < m && !fixed; ++j)
                    if (!(M[i][j] % M[t][t]).is_zero()) {
                        for (std::size_t j2 = t; j2 < m; ++j2)
                            M[t][j2] = M[t][j2] + M[i][j2];
                        fixed = true;
                    }
            if (!fixed) break;
        }
    }
}

} // namespace

NormalFormReport min_char_poly(const FqMatrix& A) {
    if (!A.square()) throw std::invalid_argument("min_char_poly: matrix must be square");
    PolyMat M = characteristic_matrix(A);
    snf_in_place(M);

    NormalFormReport rep;
    rep.char_poly = FqPolynomial::one(A.q());
    for (std::size_t i = 0; i < M.size(); ++i) {
        FqPolynomial d = M[i][i].monic();
        rep.char_poly = rep.char_poly * d;
        if (d.degree() >= 1) rep.invariant_factors.push_back(d);
    }
    rep.min_poly = rep.invariant_factors.empty() ? FqPolynomial::one(A.q())
                                                 : rep.invariant_factors.back();
    for (const FqPolynomial& inv : rep.invariant_factors)
        for (auto& [f, mult] : poly_factor(inv).factors)
            rep.elementary_divisors.push_back({f, mult});
    std::sort(rep.elementary_divisors.begin(), rep.elementary_divisors.end(),
              [](const auto& a, const auto& b) {
                  if (a.first != b.first) return a.first < b.first;
                  return a.second < b.second;
              });
    return rep;
}

FqMatrix rcf(const FqMatrix& A) {
    NormalFormReport rep = min_char_poly(A);
    FqMatrix R(A.q(), A.rows(), A.cols());
    std::size_t off = 0;
    for (auto& [f, mult] : rep.elementary_divisors) {
        FqPolynomial block = poly_pow(f, mult);
        FqMatrix C = companion_matrix(block);
        for (std::size_t i = 0; i < C.rows(); ++i)
            for (std::size_t j = 0; j < C.cols(); ++j)
                R.at(off + i, off + j) = C.at(i, j);
        off += C.rows();
    }
    return R;
}

FqPolynomial cyclic_annihilator(const FqMatrix& A, std::span<const felt> v) {
    if (!A.square() || A.rows() != v.size())
        throw std::invalid_argument("cyclic_annihilator: dimension mismatch");
    Fq F(A.q());
    const std::size_t m = A.rows();

    struct Row {
        std::vector<felt> vec;           // reduced, vec[pivot] == 1
        std::size_t pivot;
        std::vector<felt> combo;         // expression over Krylov powers
    };
    std::vector<Row> basis;
    std::vector<felt> w(v.begin(), v.end());

    for (std::size_t k = 0; k <= m; ++k) {
        std::vector<felt> r = w;
        std::vector<felt> combo(k + 1, 0);
        combo[k] = 1;
        for (const Row& b : basis) {
            std::uint32_t c = r[b.pivot];
            if (c == 0) continue;
            for (std::size_t i = 0; i < m; ++i)
                r[i] = static_cast<felt>(F.sub(r[i], F.mul(c, b.vec[i])));
            for (std::size_t i = 0; i < b.combo.size(); ++i)
                combo[i] = static_cast<felt>(F.sub(combo[i], F.mul(c, b.combo[i])));
        }
        std::size_t piv = 0;
        while (piv < m && r[piv] == 0) ++piv;
        if (piv == m) {
            std::vector<std::uint32_t> cc(combo.begin(), combo.end());
            return FqPolynomial(A.q(), cc);
        }
        std::uint32_t inv = F.inv(r[piv]);
        for (auto& x : r) x = static_cast<felt>(F.mul(x, inv));
        for (auto& x : combo) x = static_cast<felt>(F.mul(x, inv));
        basis.push_back({std::move(r), piv, std::move(combo)});
        w = mat_apply(A, w);
    }
    throw std::logic_error("cyclic_annihilator: no dependence found"); // unreachable
}

} // namespace oca
