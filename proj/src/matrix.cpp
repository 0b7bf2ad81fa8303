#include "oca/matrix.hpp"

#include <stdexcept>

#include "oca/int_factor.hpp"
#include "oca/normal_form.hpp"

namespace oca {

FqMatrix FqMatrix::identity(std::uint32_t q, std::size_t m) {
    FqMatrix I(q, m, m);
    for (std::size_t i = 0; i < m; ++i) I.at(i, i) = 1;
    return I;
}

FqMatrix sylvester_matrix(const FqPolynomial& pf, const FqPolynomial& pg, std::uint32_t n) {
    if (pf.q() != pg.q()) throw std::invalid_argument("field mismatch");
    if (pf.degree() != static_cast<int>(n) || pg.degree() != static_cast<int>(n))
        throw std::invalid_argument("sylvester_matrix: both polynomials must have degree n");
    if (pf.constant_term() == 0 || pg.constant_term() == 0)
        throw std::invalid_argument("sylvester_matrix: zero constant term (rule not bipermutive)");
    if (!pf.is_monic() || !pg.is_monic())
        throw std::invalid_argument("sylvester_matrix: polynomials must be monic");
    FqMatrix M(pf.q(), 2 * n, 2 * n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t k = 0; k <= n; ++k) {
            M.at(i, i + k) = static_cast<felt>(pf.coeff(k));
            M.at(n + i, i + k) = static_cast<felt>(pg.coeff(k));
        }
    return M;
}

std::uint32_t mat_det(const FqMatrix& A) {
    if (!A.square()) throw std::invalid_argument("determinant of a non-square matrix");
    Fq F(A.q());
    FqMatrix M = A;
    std::size_t m = M.rows();
    std::uint32_t det = 1;
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        while (piv < m && M.at(piv, col) == 0) ++piv;
        if (piv == m) return 0;
        if (piv != col) {
            for (std::size_t j = 0; j < m; ++j) std::swap(M.at(piv, j), M.at(col, j));
            det = F.neg(det);
        }
        det = F.mul(det, M.at(col, col));
        std::uint32_t inv = F.inv(M.at(col, col));
        for (std::size_t i = col + 1; i < m; ++i) {
            if (M.at(i, col) == 0) continue;
            std::uint32_t c = F.mul(M.at(i, col), inv);
            for (std::size_t j = col; j < m; ++j)
                M.at(i, j) = static_cast<felt>(F.sub(M.at(i, j), F.mul(c, M.at(col, j))));
        }
    }
    return det;
}

bool mat_invertible(const FqMatrix& A) { return A.square() && mat_det(A) != 0; }

FqMatrix mat_mul(const FqMatrix& A, const FqMatrix& B) {
    if (A.q() != B.q()) throw std::invalid_argument("field mismatch");
    if (A.cols() != B.rows()) throw std::invalid_argument("dimension mismatch in matrix product");
    Fq F(A.q());
    FqMatrix C(A.q(), A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) {
            if (A.at(i, k) == 0) continue;
            std::uint32_t a = A.at(i, k);
            for (std::size_t j = 0; j < B.cols(); ++j)
                C.at(i, j) = static_cast<felt>(F.add(C.at(i, j), F.mul(a, B.at(k, j))));
        }
    return C;
}

std::vector<felt> mat_apply(const FqMatrix& A, std::span<const felt> v) {
    if (A.cols() != v.size()) throw std::invalid_argument("dimension mismatch in matrix-vector product");
    Fq F(A.q());
    std::vector<felt> out(A.rows(), 0);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        std::uint32_t acc = 0;
        for (std::size_t j = 0; j < A.cols(); ++j)
            acc = F.add(acc, F.mul(A.at(i, j), v[j]));
        out[i] = static_cast<felt>(acc);
    }
    return out;
}

FqMatrix mat_pow(const FqMatrix& A, std::uint64_t e) {
    if (!A.square()) throw std::invalid_argument("power of a non-square matrix");
    FqMatrix r = FqMatrix::identity(A.q(), A.rows());
    FqMatrix b = A;
    while (e) {
        if (e & 1) r = mat_mul(r, b);
        b = mat_mul(b, b);
        e >>= 1;
    }
    return r;
}

FqMatrix companion_matrix(const FqPolynomial& g) {
    if (!g.is_monic() || g.degree() < 1)
        throw std::invalid_argument("companion matrix needs a monic polynomial of degree >= 1");
    Fq F(g.q());
    std::size_t k = static_cast<std::size_t>(g.degree());
    FqMatrix M(g.q(), k, k);
    for (std::size_t i = 0; i + 1 < k; ++i) M.at(i + 1, i) = 1;
    for (std::size_t i = 0; i < k; ++i) M.at(i, k - 1) = static_cast<felt>(F.neg(g.coeff(i)));
    return M;
}

std::uint64_t gl_order(std::uint32_t m, std::uint32_t q) {
    if (m == 0) throw std::invalid_argument("gl_order: m must be positive");
    std::uint64_t qm = checked_pow_u64(q, m);
    std::uint64_t r = 1, qi = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        r = checked_mul_u64(r, qm - qi);
        if (i + 1 < m) qi = checked_mul_u64(qi, q);
    }
    return r;
}

std::uint64_t mat_order(const FqMatrix& A) {
    if (!mat_invertible(A)) throw std::domain_error("mat_order: matrix is singular");
    NormalFormReport rep = min_char_poly(A);
    std::uint64_t t = 1;
    for (auto& [f, m] : rep.elementary_divisors)
        t = lcm_u64(t, order_of_irreducible_power(f, m));
    return t;
}

} // namespace oca
