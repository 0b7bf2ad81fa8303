#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oca/dynamics.hpp"
#include "oca/latin.hpp"
#include "oca/matrix.hpp"
#include "oracles.hpp"

using namespace oca;

namespace {
const LocalRule R90 = rule_from_code(90, 3);
const LocalRule R150 = rule_from_code(150, 3);
}

TEST_CASE("step") {
    SystemState zero{0, 0, 0, 0};
    CHECK(step(R90, R150, zero) == zero);

    SystemState s{1, 0, 0, 0};
    SystemState next = step(R90, R150, s);
    CHECK(next == SystemState{1, 0, 1, 0});

    // must agree with the matrix route
    auto M = sylvester_matrix(parse_poly(2, "X^2+1"), parse_poly(2, "X^2+X+1"), 2);
    CHECK(next == mat_apply(M, s));

    SystemState bad{1, 0, 0};
    CHECK_THROWS_AS(step(R90, R150, bad), std::invalid_argument);
}

TEST_CASE("linear consistency: step equals matrix action (all linear pairs, d <= 4)") {
    for (std::uint32_t d = 3; d <= 4; ++d) {
        std::uint32_t n = d - 1, mid = d - 2;
        for (std::uint32_t mf = 0; mf < (1u << mid); ++mf)
            for (std::uint32_t mg = 0; mg < (1u << mid); ++mg) {
                std::vector<std::uint32_t> cf(d, 0), cg(d, 0);
                cf[0] = cf[d - 1] = cg[0] = cg[d - 1] = 1;
                for (std::uint32_t i = 0; i < mid; ++i) {
                    cf[1 + i] = (mf >> i) & 1;
                    cg[1 + i] = (mg >> i) & 1;
                }
                LinearRule lf = make_linear_rule(2, d, cf), lg = make_linear_rule(2, d, cg);
                LocalRule f = expand(lf), g = expand(lg);
                FqMatrix M = sylvester_matrix(linear_rule_to_poly(lf), linear_rule_to_poly(lg), n);
                for (std::uint64_t r = 0; r < (1ULL << (2 * n)); ++r) {
                    SystemState s = state_from_rank(r, 2, 2 * n);
                    CHECK(step(f, g, s) == mat_apply(M, s));
                }
            }
    }
}

TEST_CASE("cycle decomposition of the named pair") {
    CycleSum cs = cycle_decomposition(R90, R150);
    REQUIRE(cs.terms.size() == 2);
    CHECK(cs.terms[0] == std::pair<std::uint64_t, std::uint64_t>{1, 1});
    CHECK(cs.terms[1] == std::pair<std::uint64_t, std::uint64_t>{1, 15});
    CHECK(cs.weight() == 16);
    CHECK(cs.to_text() == "1×1 + 1×15");
    CHECK(max_cycle_length(R90, R150) == 15);

    CHECK_THROWS_AS(cycle_decomposition(R90, R90), std::invalid_argument);
}

TEST_CASE("every d=3 orthogonal pair has the same cycle structure") {
    CycleSum want = cycle_decomposition(R90, R150);
    int oca_pairs = 0;
    for (std::uint32_t g1 = 0; g1 < 4; ++g1)
        for (std::uint32_t g2 = 0; g2 < 4; ++g2) {
            auto f = bipermutive_from_generator(g1, 3);
            auto g = bipermutive_from_generator(g2, 3);
            if (!are_orthogonal(f, g)) continue;
            ++oca_pairs;
            CHECK(cycle_decomposition(f, g) == want);
        }
    CHECK(oca_pairs == 8);
}

TEST_CASE("cycle weights partition the phase space (all OCA pairs, d = 4)") {
    for (std::uint32_t g1 = 0; g1 < 16; ++g1)
        for (std::uint32_t g2 = 0; g2 < 16; ++g2) {
            auto f = bipermutive_from_generator(g1, 4);
            auto g = bipermutive_from_generator(g2, 4);
            if (!are_orthogonal(f, g)) continue;
            CycleSum cs = cycle_decomposition(f, g);
            CHECK(cs.weight() == 64);
            std::set<std::uint64_t> lens;
            for (auto& [c, l] : cs.terms) CHECK(lens.insert(l).second);
        }
}

TEST_CASE("period of a state") {
    SystemState zero{0, 0, 0, 0};
    CHECK(period_of_state(R90, R150, zero) == 1);
    SystemState s{1, 0, 0, 0};
    CHECK(period_of_state(R90, R150, s) == 15);

    // period divides the matrix order for linear pairs
    auto M = sylvester_matrix(parse_poly(2, "X^2+1"), parse_poly(2, "X^2+X+1"), 2);
    std::uint64_t t = mat_order(M);
    for (std::uint64_t r = 0; r < 16; ++r) {
        SystemState st = state_from_rank(r, 2, 4);
        CHECK(t % period_of_state(R90, R150, st) == 0);
    }
}

TEST_CASE("every state period is 1 or 15 for the named pair") {
    for (std::uint64_t r = 0; r < 16; ++r) {
        SystemState st = state_from_rank(r, 2, 4);
        std::uint64_t p = period_of_state(R90, R150, st);
        CHECK((p == 1 || p == 15));
    }
}

TEST_CASE("keystream") {
    SystemState seed{1, 0, 0, 0};
    CHECK(keystream(R90, R150, seed, 0).empty());

    auto one = keystream(R90, R150, seed, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == step(R90, R150, seed));

    auto orbit = keystream(R90, R150, seed, 15);
    REQUIRE(orbit.size() == 15);
    CHECK(orbit.back() == seed);
    // all intermediate states distinct (single 15-cycle)
    std::set<std::uint64_t> seen;
    for (auto& s : orbit) CHECK(seen.insert(state_rank(s, 2)).second);
}

TEST_CASE("update map is a bijection for OCA pairs (exhaustive d <= 4)") {
    for (std::uint32_t d = 3; d <= 4; ++d) {
        std::uint32_t B = 1u << (1u << (d - 2));
        for (std::uint32_t g1 = 0; g1 < B; ++g1)
            for (std::uint32_t g2 = 0; g2 < B; ++g2) {
                auto f = bipermutive_from_generator(g1, d);
                auto g = bipermutive_from_generator(g2, d);
                if (!are_orthogonal(f, g)) continue;
                std::set<std::uint64_t> images;
                for (std::uint64_t r = 0; r < (1ULL << (2 * (d - 1))); ++r) {
                    SystemState s = state_from_rank(r, 2, 2 * (d - 1));
                    images.insert(state_rank(step(f, g, s), 2));
                }
                CHECK(images.size() == (1ULL << (2 * (d - 1))));
            }
    }
}

TEST_CASE("multipermutation distance (all OCA pairs, d = 3)") {
    const std::uint32_t n = 2;
    for (std::uint32_t g1 = 0; g1 < 4; ++g1)
        for (std::uint32_t g2 = 0; g2 < 4; ++g2) {
            auto f = bipermutive_from_generator(g1, 3);
            auto g = bipermutive_from_generator(g2, 3);
            if (!are_orthogonal(f, g)) continue;
            // block tuples (x, y, F(s), G(s))
            std::vector<std::array<std::uint64_t, 4>> tuples;
            for (std::uint64_t r = 0; r < 16; ++r) {
                SystemState s = state_from_rank(r, 2, 4);
                SystemState ns = step(f, g, s);
                std::span<const felt> sx(s.data(), n), sy(s.data() + n, n);
                std::span<const felt> nx(ns.data(), n), ny(ns.data() + n, n);
                tuples.push_back({state_rank(sx, 2), state_rank(sy, 2), state_rank(nx, 2), state_rank(ny, 2)});
            }
            for (std::size_t i = 0; i < tuples.size(); ++i)
                for (std::size_t j = i + 1; j < tuples.size(); ++j) {
                    int differ = 0;
                    for (int k = 0; k < 4; ++k)
                        if (tuples[i][k] != tuples[j][k]) ++differ;
                    CHECK(differ >= 3);
                }
        }
}
