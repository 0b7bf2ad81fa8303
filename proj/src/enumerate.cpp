#include "oca/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include <omp.h>

#include "oca/int_factor.hpp"
#include "oca/lms.hpp"
#include "oca/matrix.hpp"
#include "oca/normal_form.hpp"

namespace oca {

std::vector<FqPolynomial> poly_universe(std::uint32_t q, std::uint32_t n, PolyUniverse u) {
    (void)Fq(q);
    if (n < 1) throw std::invalid_argument("polynomial degree must be at least 1");
    std::vector<FqPolynomial> out;
    std::vector<std::uint32_t> c(n + 1, 0);
    c[n] = 1;
    // Odometer over c[0..n-1]; constant term restricted by the universe.
    std::uint32_t c0_min = 1;
    std::uint32_t c0_max = (u == PolyUniverse::ConstantOne) ? 1 : q - 1;
    for (std::uint32_t c0 = c0_min; c0 <= c0_max; ++c0) {
        c[0] = c0;
        std::fill(c.begin() + 1, c.end() - 1, 0);
        for (;;) {
            out.push_back(FqPolynomial(q, c));
            std::uint32_t i = 1;
            for (; i < n; ++i) {
                if (++c[i] < q) break;
                c[i] = 0;
            }
            if (i == n) break;
        }
    }
    // Enumeration order is part of the counting convention: pairs are visited
    // once, oriented by the lexicographic order of the ascending coefficient
    // list (c0, c1, ..., cn). The first polynomial of a pair supplies the top
    // band of the update matrix, and the two orientations are genuinely
    // different systems, so this order is fixed and documented.
    std::sort(out.begin(), out.end(), [](const FqPolynomial& a, const FqPolynomial& b) {
        for (int i = 0; i <= std::max(a.degree(), b.degree()); ++i)
            if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
        return false;
    });
    return out;
}

namespace {

EnumReport run(const EnumOptions& opt, bool fast) {
    if (opt.d < 2) throw std::invalid_argument("diameter must be at least 2");
    const std::uint32_t n = opt.d - 1;
    EnumReport rep;
    rep.q = opt.q;
    rep.d = opt.d;
    const auto polys = poly_universe(opt.q, n, opt.universe);
    rep.poly_count = polys.size();
    rep.pairs = polys.size() * (polys.size() - 1) / 2;
    const IntFactorization group = int_factor(checked_pow_u64(opt.q, 2 * n) - 1);
    if (opt.threads > 0) omp_set_num_threads(opt.threads);

    const std::int64_t m = static_cast<std::int64_t>(polys.size());
    std::uint64_t coprime = 0, maximal = 0;
    std::vector<MaximalPairRecord> records;

#pragma omp parallel for schedule(dynamic) reduction(+ : coprime, maximal) if (fast)
    for (std::int64_t i = 0; i < m; ++i) {
        std::vector<MaximalPairRecord> local;
        for (std::int64_t j = i + 1; j < m; ++j) {
            if (poly_gcd(polys[i], polys[j]).degree() != 0) continue;
            ++coprime;
            bool max_pair;
            FqPolynomial minp;
            if (fast) {
                FqMatrix M = sylvester_matrix(polys[i], polys[j], n);
                std::vector<felt> e1(2 * n, 0);
                e1[0] = 1;
                FqPolynomial ann = cyclic_annihilator(M, e1);
                max_pair = ann.degree() == static_cast<int>(2 * n) && is_primitive_with(ann, group);
                if (max_pair) minp = ann;
            } else {
                max_pair = is_maximal(polys[i], polys[j]);
                if (max_pair) minp = min_char_poly(sylvester_matrix(polys[i], polys[j], n)).min_poly;
            }
            if (max_pair) {
                ++maximal;
                if (opt.collect_pairs) local.push_back({polys[i], polys[j], minp});
            }
        }
        if (!local.empty()) {
#pragma omp critical(oca_enum_records)
            records.insert(records.end(), local.begin(), local.end());
        }
    }

    rep.coprime_pairs = coprime;
    rep.maximal = maximal;
    std::sort(records.begin(), records.end(), [](const MaximalPairRecord& a, const MaximalPairRecord& b) {
        if (a.pf != b.pf) return a.pf < b.pf;
        return a.pg < b.pg;
    });
    rep.records = std::move(records);
    return rep;
}

} // namespace

EnumReport enumerate_maximal_linear(const EnumOptions& opt) { return run(opt, true); }

EnumReport enumerate_maximal_linear_reference(const EnumOptions& opt) { return run(opt, false); }

} // namespace oca
