#ifndef OCA_MATRIX_HPP
#define OCA_MATRIX_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "oca/field.hpp"
#include "oca/poly.hpp"

namespace oca {

/// Dense row-major matrix over F_q. States multiply on the right as column
/// vectors: next = A * s.
class FqMatrix {
public:
    FqMatrix(std::uint32_t q, std::size_t rows, std::size_t cols)
        : q_(q), rows_(rows), cols_(cols), a_(rows * cols, 0) { (void)Fq(q); }

    static FqMatrix identity(std::uint32_t q, std::size_t m);

    std::uint32_t q() const { return q_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    felt& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    felt at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const FqMatrix& o) const {
        return q_ == o.q_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    std::uint32_t q_;
    std::size_t rows_, cols_;
    std::vector<felt> a_;
};

/// 2n x 2n matrix of the joint linear update: rows 1..n carry the coefficient
/// vector of pf slid one column per row, rows n+1..2n likewise for pg.
/// Both polynomials must be monic of degree n with nonzero constant term.
FqMatrix sylvester_matrix(const FqPolynomial& pf, const FqPolynomial& pg, std::uint32_t n);

std::uint32_t mat_det(const FqMatrix& A);
bool mat_invertible(const FqMatrix& A);
FqMatrix mat_mul(const FqMatrix& A, const FqMatrix& B);
std::vector<felt> mat_apply(const FqMatrix& A, std::span<const felt> v);
FqMatrix mat_pow(const FqMatrix& A, std::uint64_t e);

/// Companion matrix of a monic polynomial: subdiagonal ones, last column
/// holds the negated coefficients.
FqMatrix companion_matrix(const FqPolynomial& g);

/// Order of GL(m, F_q): prod_{i=0}^{m-1} (q^m - q^i). Throws on 64-bit overflow.
std::uint64_t gl_order(std::uint32_t m, std::uint32_t q);

/// Least t >= 1 with A^t = I (A invertible); computed as the lcm of the
/// elementary-divisor orders of A.
std::uint64_t mat_order(const FqMatrix& A);

} // namespace oca

#endif
