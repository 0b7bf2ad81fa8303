#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oca/dynamics.hpp"
#include "oca/enumerate.hpp"
#include "oca/lms.hpp"
#include "oca/matrix.hpp"
#include "oracles.hpp"

using namespace oca;

namespace {

// All monic irreducibles of degree e over F_q with nonzero constant term.
std::vector<FqPolynomial> irreducibles(std::uint32_t q, std::uint32_t e) {
    std::vector<FqPolynomial> out;
    for (auto& f : oracles::monic_nonzero_const(q, e))
        if (is_irreducible(f)) out.push_back(f);
    return out;
}

} // namespace

TEST_CASE("ord_power") {
    CHECK(ord_power(parse_poly(2, "X^2+X+1"), 1) == 3);
    CHECK(ord_power(parse_poly(2, "X+1"), 2) == 2);
    CHECK(ord_power(parse_poly(2, "X+1"), 1) == 1);
    CHECK(ord_power(parse_poly(2, "X+1"), 3) == 4);
    CHECK(ord_power(parse_poly(2, "X+1"), 4) == 4);
    CHECK(ord_power(parse_poly(3, "X+1"), 2) == 2 * 3);
    CHECK_THROWS_AS(ord_power(parse_poly(2, "X^2+1"), 1), std::invalid_argument);

    // h = 1 always matches poly_order; ord(f^h) matches brute force
    for (std::uint32_t e = 1; e <= 4; ++e)
        for (auto& f : irreducibles(2, e)) {
            CHECK(ord_power(f, 1) == poly_order(f));
            for (std::uint32_t h = 2; h <= 3; ++h)
                CHECK(ord_power(f, h) == oracles::brute_poly_order(poly_pow(f, h)));
        }
}

TEST_CASE("block cycle sum examples") {
    CycleSum a = block_cycle_sum({parse_poly(2, "X^2+X+1"), 1});
    REQUIRE(a.terms.size() == 2);
    CHECK(a.terms[0] == std::pair<std::uint64_t, std::uint64_t>{1, 1});
    CHECK(a.terms[1] == std::pair<std::uint64_t, std::uint64_t>{1, 3});
    CHECK(a.weight() == 4);

    // (X+1)^2: two fixed points and one 2-cycle
    CycleSum b = block_cycle_sum({parse_poly(2, "X+1"), 2});
    REQUIRE(b.terms.size() == 2);
    CHECK(b.terms[0] == std::pair<std::uint64_t, std::uint64_t>{2, 1});
    CHECK(b.terms[1] == std::pair<std::uint64_t, std::uint64_t>{1, 2});
    CHECK(b.weight() == 4);

    CHECK_THROWS_AS(block_cycle_sum({parse_poly(2, "X^2+1"), 1}), std::invalid_argument);
}

TEST_CASE("block cycle sum equals companion-system sweep") {
    // exhaustive for q=2 up to e*m = 10; q=3 up to e*m = 7
    for (std::uint32_t e = 1; e <= 10; ++e)
        for (auto& f : irreducibles(2, e))
            for (std::uint32_t m = 1; e * m <= 10; ++m) {
                CycleSum theory = block_cycle_sum({f, m});
                CycleSum brute = oracles::brute_matrix_cycle_sum(companion_matrix(poly_pow(f, m)));
                CHECK(theory == brute);
                CHECK(theory.weight() == checked_pow_u64(2, e * m));
            }
    for (std::uint32_t e = 1; e <= 7; ++e)
        for (auto& f : irreducibles(3, e))
            for (std::uint32_t m = 1; e * m <= 7; ++m) {
                CycleSum theory = block_cycle_sum({f, m});
                CycleSum brute = oracles::brute_matrix_cycle_sum(companion_matrix(poly_pow(f, m)));
                CHECK(theory == brute);
                CHECK(theory.weight() == checked_pow_u64(3, e * m));
            }
    // deeper q=3 blocks, sampled
    std::mt19937_64 rng(42);
    for (std::uint32_t dim = 8; dim <= 9; ++dim)
        for (std::uint32_t e = 1; e <= dim; ++e) {
            if (dim % e) continue;
            auto irr = irreducibles(3, e);
            std::uniform_int_distribution<std::size_t> pick(0, irr.size() - 1);
            for (int it = 0; it < 5; ++it) {
                const FqPolynomial& f = irr[pick(rng)];
                std::uint32_t m = dim / e;
                CHECK(block_cycle_sum({f, m}) ==
                      oracles::brute_matrix_cycle_sum(companion_matrix(poly_pow(f, m))));
            }
        }
}

TEST_CASE("cycle sum product") {
    CycleSum a = CycleSum::single(1, 1);
    a.add_term(1, 3);
    CycleSum b = CycleSum::single(1, 1);
    b.add_term(1, 7);
    CycleSum p = cycle_sum_product(a, b);
    REQUIRE(p.terms.size() == 4);
    CHECK(p.terms[0] == std::pair<std::uint64_t, std::uint64_t>{1, 1});
    CHECK(p.terms[1] == std::pair<std::uint64_t, std::uint64_t>{1, 3});
    CHECK(p.terms[2] == std::pair<std::uint64_t, std::uint64_t>{1, 7});
    CHECK(p.terms[3] == std::pair<std::uint64_t, std::uint64_t>{1, 21});

    // identity element
    CHECK(cycle_sum_product(p, CycleSum::single(1, 1)) == p);

    // weight multiplicativity on random sums
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::uint64_t> dc(1, 5), dl(1, 30);
    for (int it = 0; it < 50; ++it) {
        CycleSum x, y;
        for (int k = 0; k < 3; ++k) {
            x.add_term(dc(rng), dl(rng));
            y.add_term(dc(rng), dl(rng));
        }
        x.normalize();
        y.normalize();
        CHECK(cycle_sum_product(x, y).weight() == x.weight() * y.weight());
    }
}

TEST_CASE("cycle sum product equals direct-sum sweep") {
    // two companion blocks, brute force on the block-diagonal system
    auto combos = std::vector<std::pair<BlockSpec, BlockSpec>>{
        {{parse_poly(2, "X^2+X+1"), 1}, {parse_poly(2, "X^3+X+1"), 1}},
        {{parse_poly(2, "X+1"), 2}, {parse_poly(2, "X^2+X+1"), 1}},
        {{parse_poly(2, "X+1"), 1}, {parse_poly(2, "X+1"), 3}},
        {{parse_poly(3, "X+1"), 1}, {parse_poly(3, "X^2+1"), 1}},
        {{parse_poly(3, "X+2"), 2}, {parse_poly(3, "X+1"), 1}},
    };
    for (auto& [b1, b2] : combos) {
        FqMatrix c1 = companion_matrix(poly_pow(b1.f, b1.m));
        FqMatrix c2 = companion_matrix(poly_pow(b2.f, b2.m));
        std::size_t m = c1.rows() + c2.rows();
        FqMatrix D(c1.q(), m, m);
        for (std::size_t i = 0; i < c1.rows(); ++i)
            for (std::size_t j = 0; j < c1.rows(); ++j) D.at(i, j) = c1.at(i, j);
        for (std::size_t i = 0; i < c2.rows(); ++i)
            for (std::size_t j = 0; j < c2.rows(); ++j)
                D.at(c1.rows() + i, c1.rows() + j) = c2.at(i, j);
        CHECK(cycle_sum_product(block_cycle_sum(b1), block_cycle_sum(b2)) ==
              oracles::brute_matrix_cycle_sum(D));
    }
}

TEST_CASE("system cycle sum of the named pair") {
    CycleSum cs = system_cycle_sum(parse_poly(2, "X^2+1"), parse_poly(2, "X^2+X+1"));
    REQUIRE(cs.terms.size() == 2);
    CHECK(cs.terms[0] == std::pair<std::uint64_t, std::uint64_t>{1, 1});
    CHECK(cs.terms[1] == std::pair<std::uint64_t, std::uint64_t>{1, 15});

    CHECK_THROWS_AS(system_cycle_sum(parse_poly(2, "X^3+1"), parse_poly(2, "X^3+X^2+X+1")),
                    std::invalid_argument);
}

TEST_CASE("system cycle sum equals brute-force decomposition (exhaustive n <= 3)") {
    for (std::uint32_t n = 1; n <= 3; ++n) {
        auto polys = oracles::monic_nonzero_const(2, n);
        for (std::size_t i = 0; i < polys.size(); ++i)
            for (std::size_t j = 0; j < polys.size(); ++j) {
                if (i == j || poly_gcd(polys[i], polys[j]).degree() != 0) continue;
                LocalRule f = expand(poly_to_linear_rule(polys[i]));
                LocalRule g = expand(poly_to_linear_rule(polys[j]));
                CycleSum theory = system_cycle_sum(polys[i], polys[j]);
                CycleSum brute = cycle_decomposition(f, g);
                CHECK(theory == brute);
                // lcm of term lengths equals the matrix order
                CHECK(theory.lcm_length() == mat_order(sylvester_matrix(polys[i], polys[j], n)));
            }
    }
}

TEST_CASE("is_maximal") {
    CHECK(is_maximal(parse_poly(2, "X^2+1"), parse_poly(2, "X^2+X+1")));
    CHECK_THROWS_AS(is_maximal(parse_poly(2, "X^3+1"), parse_poly(2, "X^3+X^2+X+1")),
                    std::invalid_argument);

    // exactly one of the 5 coprime unordered degree-3 pairs is maximal
    // (pairs oriented by the canonical enumeration order)
    auto polys = poly_universe(2, 3, PolyUniverse::ConstantOne);
    int coprime = 0, maximal = 0;
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = i + 1; j < polys.size(); ++j) {
            if (poly_gcd(polys[i], polys[j]).degree() != 0) continue;
            ++coprime;
            if (is_maximal(polys[i], polys[j])) ++maximal;
        }
    CHECK(coprime == 5);
    CHECK(maximal == 1);
}

TEST_CASE("maximal pairs have cycle sum (1,1) + (1, q^2n - 1)") {
    for (std::uint32_t n = 2; n <= 4; ++n) {
        auto polys = oracles::monic_nonzero_const(2, n);
        for (std::size_t i = 0; i < polys.size(); ++i)
            for (std::size_t j = i + 1; j < polys.size(); ++j) {
                if (poly_gcd(polys[i], polys[j]).degree() != 0) continue;
                if (!is_maximal(polys[i], polys[j])) continue;
                CycleSum want = CycleSum::single(1, 1);
                want.add_term(1, checked_pow_u64(2, 2 * n) - 1);
                want.normalize();
                CHECK(system_cycle_sum(polys[i], polys[j]) == want);
            }
    }
}
