#ifndef OCA_POLY_HPP
#define OCA_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "oca/field.hpp"

namespace oca {

/// Univariate polynomial over F_q. Coefficients ascending: c[i] is the
/// coefficient of X^i. No trailing zeros; the zero polynomial has an empty
/// coefficient vector and degree -1.
class FqPolynomial {
public:
    FqPolynomial() : q_(2) {}
    explicit FqPolynomial(std::uint32_t q) : q_(q) { (void)Fq(q); }
    FqPolynomial(std::uint32_t q, std::vector<std::uint32_t> coeffs);

    static FqPolynomial zero(std::uint32_t q) { return FqPolynomial(q); }
    static FqPolynomial one(std::uint32_t q) { return FqPolynomial(q, {1}); }
    static FqPolynomial x(std::uint32_t q) { return FqPolynomial(q, {0, 1}); }
    /// X^k
    static FqPolynomial x_pow(std::uint32_t q, std::size_t k);

    std::uint32_t q() const { return q_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint32_t constant_term() const { return coeff(0); }
    std::uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return leading() == 1; }
    const std::vector<felt>& coeffs() const { return c_; }

    std::uint32_t eval(std::uint32_t x) const;

    bool operator==(const FqPolynomial& o) const { return q_ == o.q_ && c_ == o.c_; }
    bool operator!=(const FqPolynomial& o) const { return !(*this == o); }
    /// Orders by (degree, then coefficient vector from the top); used to keep
    /// factor lists and pair enumerations deterministic.
    bool operator<(const FqPolynomial& o) const;

    FqPolynomial operator+(const FqPolynomial& o) const;
    FqPolynomial operator-(const FqPolynomial& o) const;
    FqPolynomial operator*(const FqPolynomial& o) const;
    FqPolynomial operator*(std::uint32_t s) const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<FqPolynomial, FqPolynomial> divmod(const FqPolynomial& d) const;
    FqPolynomial operator/(const FqPolynomial& d) const { return divmod(d).first; }
    FqPolynomial operator%(const FqPolynomial& d) const { return divmod(d).second; }

    FqPolynomial monic() const;
    FqPolynomial derivative() const;

    /// Coefficient list "c0,c1,...,cn".
    std::string to_coeff_string() const;
    /// Pretty form "X^2+X+1" (coefficients > 1 printed as e.g. "2X^3").
    std::string to_pretty_string() const;

private:
    void trim();
    std::uint32_t q_;
    std::vector<felt> c_;
};

/// Accepts both the coefficient-list form "1,0,1" (ascending powers) and the
/// pretty form "X^2+1".
FqPolynomial parse_poly(std::uint32_t q, const std::string& text);

/// Monic greatest common divisor. gcd(f, 0) = monic f.
FqPolynomial poly_gcd(const FqPolynomial& a, const FqPolynomial& b);

FqPolynomial poly_pow_mod(const FqPolynomial& base, std::uint64_t e, const FqPolynomial& mod);
/// X^(q^k) mod f by k-fold Frobenius, avoiding huge exponents.
FqPolynomial frobenius_pow(std::uint32_t k, const FqPolynomial& mod);
FqPolynomial poly_pow(const FqPolynomial& base, std::uint32_t e);

bool is_irreducible(const FqPolynomial& f);
bool is_primitive(const FqPolynomial& f);
/// Variant taking the factorization of q^deg(f) - 1, for callers that test
/// many polynomials of one degree.
struct IntFactorization;
bool is_primitive_with(const FqPolynomial& f, const IntFactorization& group_order);

/// Least t >= 1 with X^t = 1 (mod f). Requires nonzero constant term.
std::uint64_t poly_order(const FqPolynomial& f);
/// ord(f^h) = ord(f) * p^ceil(log_p h) for irreducible f, p = char F_q.
/// The irreducibility of f is the caller's responsibility here.
std::uint64_t order_of_irreducible_power(const FqPolynomial& f, std::uint32_t h);

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted; product (times the leading unit) reproduces the input.
struct Factorization {
    std::uint32_t leading_unit = 1;
    std::vector<std::pair<FqPolynomial, std::uint32_t>> factors;

    FqPolynomial value(std::uint32_t q) const;
};

Factorization poly_factor(const FqPolynomial& f);

} // namespace oca

#endif
