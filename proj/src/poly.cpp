#include "oca/poly.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>
#include <stdexcept>

#include "oca/int_factor.hpp"

namespace oca {

FqPolynomial::FqPolynomial(std::uint32_t q, std::vector<std::uint32_t> coeffs) : q_(q) {
    (void)Fq(q);
    c_.reserve(coeffs.size());
    for (std::uint32_t v : coeffs) c_.push_back(static_cast<felt>(v % q));
    trim();
}

FqPolynomial FqPolynomial::x_pow(std::uint32_t q, std::size_t k) {
    FqPolynomial r(q);
    r.c_.assign(k + 1, 0);
    r.c_[k] = 1;
    return r;
}

void FqPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint32_t FqPolynomial::eval(std::uint32_t x) const {
    Fq F(q_);
    std::uint32_t r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = F.add(F.mul(r, x), c_[i]);
    return r;
}

bool FqPolynomial::operator<(const FqPolynomial& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (std::size_t i = c_.size(); i-- > 0;)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

FqPolynomial FqPolynomial::operator+(const FqPolynomial& o) const {
    if (q_ != o.q_) throw std::invalid_argument("field mismatch");
    Fq F(q_);
    FqPolynomial r(q_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = static_cast<felt>(F.add(coeff(i), o.coeff(i)));
    r.trim();
    return r;
}

FqPolynomial FqPolynomial::operator-(const FqPolynomial& o) const {
    if (q_ != o.q_) throw std::invalid_argument("field mismatch");
    Fq F(q_);
    FqPolynomial r(q_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = static_cast<felt>(F.sub(coeff(i), o.coeff(i)));
    r.trim();
    return r;
}

FqPolynomial FqPolynomial::operator*(const FqPolynomial& o) const {
    if (q_ != o.q_) throw std::invalid_argument("field mismatch");
    if (is_zero() || o.is_zero()) return zero(q_);
    FqPolynomial r(q_);
    std::vector<std::uint32_t> acc(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            acc[i + j] = (acc[i + j] + (std::uint32_t)c_[i] * o.c_[j]) % q_;
    }
    r.c_.assign(acc.begin(), acc.end());
    r.trim();
    return r;
}

FqPolynomial FqPolynomial::operator*(std::uint32_t s) const {
    Fq F(q_);
    FqPolynomial r = *this;
    for (auto& v : r.c_) v = static_cast<felt>(F.mul(v, s));
    r.trim();
    return r;
}

std::pair<FqPolynomial, FqPolynomial> FqPolynomial::divmod(const FqPolynomial& d) const {
    if (q_ != d.q_) throw std::invalid_argument("field mismatch");
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    Fq F(q_);
    FqPolynomial quo(q_), rem = *this;
    if (degree() < d.degree()) return {quo, rem};
    quo.c_.assign(c_.size() - d.c_.size() + 1, 0);
    std::uint32_t inv_lead = F.inv(d.leading());
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (k + 1 < d.c_.size()) break;
        std::uint32_t coef = F.mul(rem.c_[k], inv_lead);
        if (coef == 0) continue;
        std::size_t shift = k - (d.c_.size() - 1);
        quo.c_[shift] = static_cast<felt>(coef);
        for (std::size_t i = 0; i < d.c_.size(); ++i)
            rem.c_[shift + i] = static_cast<felt>(F.sub(rem.c_[shift + i], F.mul(coef, d.c_[i])));
    }
    quo.trim();
    rem.trim();
    return {quo, rem};
}

FqPolynomial FqPolynomial::monic() const {
    if (is_zero() || is_monic()) return *this;
    Fq F(q_);
    return *this * F.inv(leading());
}

FqPolynomial FqPolynomial::derivative() const {
    FqPolynomial r(q_);
    if (c_.size() < 2) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_[i - 1] = static_cast<felt>((std::uint64_t)c_[i] * i % q_);
    r.trim();
    return r;
}

std::string FqPolynomial::to_coeff_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ',';
        os << (unsigned)c_[i];
    }
    return os.str();
}

std::string FqPolynomial::to_pretty_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << (unsigned)c_[i];
        } else {
            if (c_[i] != 1) os << (unsigned)c_[i];
            os << 'X';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

FqPolynomial parse_poly(std::uint32_t q, const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty polynomial");

    bool pretty = s.find('X') != std::string::npos || s.find('x') != std::string::npos;
    if (!pretty) {
        std::vector<std::uint32_t> coeffs;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("bad coefficient list: " + text);
            std::size_t pos = 0;
            unsigned long v = std::stoul(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("bad coefficient '" + tok + "'");
            coeffs.push_back(static_cast<std::uint32_t>(v));
        }
        return FqPolynomial(q, coeffs);
    }

    // Terms joined by '+': "2X^3", "X^2", "X", "1".
    std::vector<std::uint32_t> coeffs;
    std::stringstream ss(s);
    std::string term;
    auto set_coeff = [&](std::size_t deg, std::uint32_t v) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
        coeffs[deg] = (coeffs[deg] + v) % q;
    };
    while (std::getline(ss, term, '+')) {
        if (term.empty()) throw std::invalid_argument("bad polynomial: " + text);
        std::size_t xpos = term.find_first_of("Xx");
        if (xpos == std::string::npos) {
            set_coeff(0, static_cast<std::uint32_t>(std::stoul(term)));
            continue;
        }
        std::uint32_t coef = 1;
        if (xpos > 0) {
            std::string cs = term.substr(0, xpos);
            if (cs.back() == '*') cs.pop_back();
            if (!cs.empty()) coef = static_cast<std::uint32_t>(std::stoul(cs));
        }
        std::size_t deg = 1;
        if (xpos + 1 < term.size()) {
            if (term[xpos + 1] != '^') throw std::invalid_argument("bad term '" + term + "'");
            deg = std::stoul(term.substr(xpos + 2));
        }
        set_coeff(deg, coef);
    }
    return FqPolynomial(q, coeffs);
}

FqPolynomial poly_gcd(const FqPolynomial& a, const FqPolynomial& b) {
    if (a.q() != b.q()) throw std::invalid_argument("field mismatch");
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
    FqPolynomial f = a, g = b;
    while (!g.is_zero()) {
        FqPolynomial r = f % g;
        f = g;
        g = r;
    }
    return f.monic();
}

FqPolynomial poly_pow_mod(const FqPolynomial& base, std::uint64_t e, const FqPolynomial& mod) {
    FqPolynomial r = FqPolynomial::one(base.q());
    FqPolynomial b = base % mod;
    while (e) {
        if (e & 1) r = (r * b) % mod;
        b = (b * b) % mod;
        e >>= 1;
    }
    return r;
}

FqPolynomial frobenius_pow(std::uint32_t k, const FqPolynomial& mod) {
    FqPolynomial t = FqPolynomial::x(mod.q()) % mod;
    for (std::uint32_t i = 0; i < k; ++i) t = poly_pow_mod(t, mod.q(), mod);
    return t;
}

FqPolynomial poly_pow(const FqPolynomial& base, std::uint32_t e) {
    FqPolynomial r = FqPolynomial::one(base.q());
    for (std::uint32_t i = 0; i < e; ++i) r = r * base;
    return r;
}

bool is_irreducible(const FqPolynomial& f) {
    int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const FqPolynomial fm = f.monic();
    const FqPolynomial X = FqPolynomial::x(f.q()) % fm;
    if (frobenius_pow(static_cast<std::uint32_t>(n), fm) != X) return false;
    for (auto [p, e] : int_factor(static_cast<std::uint64_t>(n)).factors) {
        (void)e;
        FqPolynomial h = frobenius_pow(static_cast<std::uint32_t>(n / p), fm) - X;
        if (h.is_zero() || poly_gcd(h, fm).degree() > 0) return false;
    }
    return true;
}

namespace {

std::uint64_t order_of_irreducible_with(const FqPolynomial& f, const IntFactorization& fac) {
    std::uint64_t t = fac.value();
    const FqPolynomial X = FqPolynomial::x(f.q());
    for (auto [p, e] : fac.factors) {
        for (std::uint32_t i = 0; i < e; ++i) {
            if (t % p) break;
            if (poly_pow_mod(X, t / p, f).is_one())
                t /= p;
            else
                break;
        }
    }
    return t;
}

std::uint64_t order_of_irreducible(const FqPolynomial& f) {
    std::uint32_t e = static_cast<std::uint32_t>(f.degree());
    std::uint64_t bound = checked_pow_u64(f.q(), e) - 1;
    if (bound == 0) return 1; // never: q >= 2, e >= 1
    return order_of_irreducible_with(f, int_factor(bound));
}

} // namespace

bool is_primitive_with(const FqPolynomial& f, const IntFactorization& group_order) {
    int k = f.degree();
    if (k < 1 || f.constant_term() == 0) return false;
    std::uint64_t t = group_order.value();
    const FqPolynomial fm = f.monic();
    const FqPolynomial X = FqPolynomial::x(f.q());
    // Order screens come first: far cheaper than the irreducibility test and
    // they reject nearly every non-primitive candidate.
    if (!poly_pow_mod(X, t, fm).is_one()) return false;
    for (auto [p, e] : group_order.factors) {
        (void)e;
        if (poly_pow_mod(X, t / p, fm).is_one()) return false;
    }
    return is_irreducible(fm);
}

bool is_primitive(const FqPolynomial& f) {
    if (f.degree() < 1 || f.constant_term() == 0) return false;
    std::uint64_t t = checked_pow_u64(f.q(), static_cast<std::uint32_t>(f.degree())) - 1;
    return is_primitive_with(f, int_factor(t));
}

std::uint64_t order_of_irreducible_power(const FqPolynomial& f, std::uint32_t h) {
    if (h == 0) throw std::invalid_argument("ord(f^0) is not defined here");
    if (f.constant_term() == 0) throw std::domain_error("order undefined: X divides the polynomial");
    std::uint64_t base = order_of_irreducible(f.monic());
    std::uint64_t boost = 1;
    std::uint64_t pw = 1;
    while (pw < h) { pw = checked_mul_u64(pw, f.q()); boost = checked_mul_u64(boost, f.q()); }
    return checked_mul_u64(base, boost);
}

std::uint64_t poly_order(const FqPolynomial& f) {
    if (f.degree() < 1) throw std::invalid_argument("poly_order needs degree >= 1");
    if (f.constant_term() == 0) throw std::domain_error("order undefined: zero constant term");
    Factorization fac = poly_factor(f);
    std::uint64_t t = 1;
    for (auto& [g, m] : fac.factors)
        t = lcm_u64(t, order_of_irreducible_power(g, m));
    return t;
}

namespace {

// p-th root of f(X) = g(X^p) over the prime field (Frobenius fixes F_p).
FqPolynomial pth_root(const FqPolynomial& f) {
    std::uint32_t p = f.q();
    std::vector<std::uint32_t> out;
    for (int i = 0; i <= f.degree(); i += p) out.push_back(f.coeff(i));
    return FqPolynomial(p, out);
}

// Square-free decomposition in characteristic p (Yun's algorithm adapted).
void squarefree_decompose(const FqPolynomial& f, std::uint32_t mult,
                          std::vector<std::pair<FqPolynomial, std::uint32_t>>& out) {
    std::uint32_t p = f.q();
    FqPolynomial d = f.derivative();
    if (d.is_zero()) {
        squarefree_decompose(pth_root(f), mult * p, out);
        return;
    }
    FqPolynomial c = poly_gcd(f, d);
    FqPolynomial w = f / c;
    std::uint32_t i = 1;
    while (!w.is_one()) {
        FqPolynomial y = poly_gcd(w, c);
        FqPolynomial z = w / y;
        if (!z.is_one()) out.push_back({z.monic(), mult * i});
        ++i;
        w = y;
        c = c / y;
    }
    // What is left collects the factors with multiplicity divisible by p,
    // so it is a p-th power.
    if (!c.is_one()) squarefree_decompose(pth_root(c), mult * p, out);
}

// Distinct-degree split of a square-free monic polynomial:
// returns (product of irreducibles of degree k, k).
std::vector<std::pair<FqPolynomial, std::uint32_t>> distinct_degree(const FqPolynomial& f) {
    std::vector<std::pair<FqPolynomial, std::uint32_t>> out;
    FqPolynomial rest = f;
    FqPolynomial h = FqPolynomial::x(f.q()) % rest;
    std::uint32_t k = 0;
    while (rest.degree() >= 2 * static_cast<int>(k + 1)) {
        ++k;
        h = poly_pow_mod(h, f.q(), rest);
        FqPolynomial g = poly_gcd(h - FqPolynomial::x(f.q()), rest);
        if (g.degree() > 0) {
            out.push_back({g, k});
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0) out.push_back({rest, static_cast<std::uint32_t>(rest.degree())});
    return out;
}

// Equal-degree splitting (Cantor-Zassenhaus; trace construction for q = 2).
void equal_degree(const FqPolynomial& f, std::uint32_t k, std::mt19937_64& rng,
                  std::vector<FqPolynomial>& out) {
    if (f.degree() == static_cast<int>(k)) {
        out.push_back(f.monic());
        return;
    }
    std::uint32_t q = f.q();
    std::uniform_int_distribution<std::uint32_t> coef(0, q - 1);
    for (;;) {
        std::vector<std::uint32_t> rc(static_cast<std::size_t>(f.degree()), 0);
        for (auto& v : rc) v = coef(rng);
        FqPolynomial r(q, rc);
        if (r.degree() < 1) continue;
        FqPolynomial u = poly_gcd(r, f);
        if (u.degree() == 0) {
            if (q == 2) {
                // Trace map r + r^2 + ... + r^{2^{k-1}} mod f.
                FqPolynomial t = r % f, acc = t;
                for (std::uint32_t i = 1; i < k; ++i) {
                    t = (t * t) % f;
                    acc = acc + t;
                }
                u = acc.is_zero() ? f : poly_gcd(acc, f);
            } else {
                // r^{(q^k-1)/2} = (r^{1+q+...+q^{k-1}})^{(q-1)/2}; all small exponents.
                FqPolynomial norm = r % f;
                FqPolynomial rq = r % f;
                for (std::uint32_t i = 1; i < k; ++i) {
                    rq = poly_pow_mod(rq, q, f);
                    norm = (norm * rq) % f;
                }
                FqPolynomial h = poly_pow_mod(norm, (q - 1) / 2, f) - FqPolynomial::one(q);
                u = h.is_zero() ? f : poly_gcd(h, f);
            }
        }
        if (u.degree() > 0 && u.degree() < f.degree()) {
            equal_degree(u, k, rng, out);
            equal_degree(f / u, k, rng, out);
            return;
        }
    }
}

} // namespace

FqPolynomial Factorization::value(std::uint32_t q) const {
    FqPolynomial r = FqPolynomial::one(q) * leading_unit;
    for (auto& [f, m] : factors)
        for (std::uint32_t i = 0; i < m; ++i) r = r * f;
    return r;
}

Factorization poly_factor(const FqPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    if (f.degree() < 1) throw std::invalid_argument("cannot factor a constant");
    Factorization result;
    result.leading_unit = f.leading();

    // Deterministic seed from the input so output is reproducible.
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL ^ f.q();
    for (felt v : f.coeffs()) seed = seed * 1099511628211ULL + v + 1;
    std::mt19937_64 rng(seed);

    std::vector<std::pair<FqPolynomial, std::uint32_t>> sqfree;
    squarefree_decompose(f.monic(), 1, sqfree);
    for (auto& [part, mult] : sqfree) {
        for (auto& [prod, k] : distinct_degree(part)) {
            std::vector<FqPolynomial> irr;
            equal_degree(prod, k, rng, irr);
            for (auto& g : irr) result.factors.push_back({g, mult});
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) {
                  if (a.first != b.first) return a.first < b.first;
                  return a.second < b.second;
              });
    return result;
}

} // namespace oca
