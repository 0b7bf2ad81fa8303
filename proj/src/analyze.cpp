#include "oca/analyze.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "oca/dynamics.hpp"
#include "oca/int_factor.hpp"
#include "oca/latin.hpp"
#include "oca/lms.hpp"

namespace oca {

LocalRule parse_rule_token(std::uint32_t q, std::uint32_t d, const std::string& token) {
    if (token.empty()) throw std::invalid_argument("empty rule token");
    for (char ch : token)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("rule token must be decimal digits: '" + token + "'");
    std::uint64_t tlen = checked_pow_u64(q, d);
    if (token.size() == tlen) {
        std::vector<std::uint32_t> table;
        table.reserve(token.size());
        for (char ch : token) {
            std::uint32_t v = static_cast<std::uint32_t>(ch - '0');
            if (v >= q) throw std::invalid_argument("table digit out of range for F_" + std::to_string(q));
            table.push_back(v);
        }
        return make_rule(q, d, table);
    }
    if (q != 2) throw std::invalid_argument("only explicit q-ary tables are accepted for q != 2");
    std::size_t pos = 0;
    std::uint64_t code = std::stoull(token, &pos);
    if (pos != token.size()) throw std::invalid_argument("bad Wolfram code '" + token + "'");
    return rule_from_code(code, d);
}

namespace {

// Strictly linear rules turn into their polynomials for the theory path.
bool linear_poly_of(const LocalRule& r, FqPolynomial& out) {
    Fq F(r.q);
    std::vector<std::uint32_t> coeffs(r.d, 0);
    // Candidate coefficients from one-hot neighborhoods, then verify.
    std::uint64_t qpow = 1;
    for (std::uint32_t i = r.d; i-- > 0;) {
        coeffs[i] = r.table[qpow];
        qpow *= r.q;
    }
    LocalRule expanded;
    try {
        expanded = expand(make_linear_rule(r.q, r.d, coeffs));
    } catch (const std::invalid_argument&) {
        return false;
    }
    if (expanded.table != r.table) return false;
    out = linear_rule_to_poly(make_linear_rule(r.q, r.d, coeffs));
    return true;
}

} // namespace

AnalyzeReport analyze_pairs(std::istream& in, std::uint32_t q, std::uint32_t d) {
    AnalyzeReport rep;
    rep.q = q;
    rep.d = d;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = line.substr(0, line.find('#'));
        std::istringstream ss(body);
        std::string ta, tb, extra;
        if (!(ss >> ta)) continue; // blank
        PairAnalysis row;
        row.line = line_no;
        row.text = body;
        try {
            if (!(ss >> tb) || (ss >> extra))
                throw std::invalid_argument("expected exactly two rule tokens");
            LocalRule f = parse_rule_token(q, d, ta);
            LocalRule g = parse_rule_token(q, d, tb);
            if (!is_bipermutive(f) || !is_bipermutive(g))
                throw std::invalid_argument("rule is not bipermutive");
            row.orthogonal = are_orthogonal(f, g);
            if (row.orthogonal) {
                FqPolynomial pf, pg;
                if (linear_poly_of(f, pf) && linear_poly_of(g, pg) && pf.is_monic() && pg.is_monic()) {
                    row.cycles = system_cycle_sum(pf, pg);
                    row.method = "lms";
                } else {
                    if (checked_pow_u64(q, 2 * (d - 1)) > (1ULL << 30))
                        throw std::invalid_argument("phase space too large for brute-force decomposition");
                    row.cycles = cycle_decomposition(f, g);
                    row.method = "brute";
                }
                row.max_len = row.cycles.max_length();
                ++rep.histogram[row.max_len];
            }
            row.ok = true;
        } catch (const std::exception& e) {
            row.ok = false;
            row.error = e.what();
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

AnalyzeReport analyze_pair_file(const std::string& path, std::uint32_t q, std::uint32_t d) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open pair file: " + path);
    return analyze_pairs(in, q, d);
}

void export_distribution(const std::map<std::uint64_t, std::uint64_t>& hist, std::ostream& out) {
    out << "max_cycle_length,pair_count\n";
    for (auto& [len, cnt] : hist) out << len << ',' << cnt << '\n';
}

} // namespace oca
