#include "oca/text_io.hpp"

#include <iomanip>
#include <sstream>

namespace oca {

std::string matrix_to_text(const FqMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << (unsigned)m.at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

std::string latin_to_text(const LatinSquare& s) {
    std::ostringstream os;
    int w = s.n >= 100 ? 3 : (s.n >= 10 ? 2 : 1);
    for (std::uint32_t i = 0; i < s.n; ++i) {
        for (std::uint32_t j = 0; j < s.n; ++j) {
            if (j) os << ' ';
            os << std::setw(w) << s.at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

std::string latin_to_csv(const LatinSquare& s) {
    std::ostringstream os;
    for (std::uint32_t i = 0; i < s.n; ++i) {
        for (std::uint32_t j = 0; j < s.n; ++j) {
            if (j) os << ',';
            os << s.at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

nlohmann::json cycle_sum_to_json(const CycleSum& s) {
    auto terms = nlohmann::json::array();
    for (auto& [c, l] : s.terms) terms.push_back({{"count", c}, {"length", l}});
    return terms;
}

std::string search_report_to_text(const SearchReport& r) {
    std::ostringstream os;
    os << "exhaustive search, d=" << r.d << " q=" << r.q << "\n"
       << "  bipermutive rules:    " << r.rules << "\n"
       << "  ordered pairs:        " << r.pairs_total << "\n"
       << "  pairs tested:         " << r.pairs_visited << "\n"
       << "  orthogonal pairs:     " << r.oca_pairs << "\n"
       << "  maximal pairs:        " << r.maximal << "\n"
       << "  maximal nonlinear:    " << r.maximal_nonlinear << "\n"
       << "  maximal linear:       " << r.maximal_linear << "\n";
    if (!r.complete) os << "  INCOMPLETE, next outer index " << r.next_outer << "\n";
    return os.str();
}

nlohmann::json search_report_to_json(const SearchReport& r) {
    nlohmann::json j;
    j["d"] = r.d;
    j["q"] = r.q;
    j["rules"] = r.rules;
    j["pairs_total"] = r.pairs_total;
    j["pairs_visited"] = r.pairs_visited;
    j["oca_pairs"] = r.oca_pairs;
    j["maximal"] = r.maximal;
    j["maximal_nonlinear"] = r.maximal_nonlinear;
    j["maximal_linear"] = r.maximal_linear;
    j["complete"] = r.complete;
    auto hist = nlohmann::json::array();
    for (auto& [len, cnt] : r.histogram) hist.push_back({{"max_cycle_length", len}, {"pairs", cnt}});
    j["distribution"] = hist;
    return j;
}

std::string enum_report_to_text(const EnumReport& r, bool list_pairs) {
    std::ostringstream os;
    os << "maximal linear pair enumeration, q=" << r.q << " d=" << r.d
       << " (degree " << r.d - 1 << ")\n"
       << "  polynomials:    " << r.poly_count << "\n"
       << "  unordered pairs: " << r.pairs << "\n"
       << "  coprime pairs:  " << r.coprime_pairs << "\n"
       << "  maximal pairs:  " << r.maximal << "\n";
    if (list_pairs)
        for (auto& rec : r.records)
            os << rec.pf.to_coeff_string() << ' ' << rec.pg.to_coeff_string() << '\n';
    return os.str();
}

nlohmann::json enum_report_to_json(const EnumReport& r, bool list_pairs) {
    nlohmann::json j;
    j["q"] = r.q;
    j["d"] = r.d;
    j["degree"] = r.d - 1;
    j["polynomials"] = r.poly_count;
    j["pairs"] = r.pairs;
    j["coprime_pairs"] = r.coprime_pairs;
    j["maximal"] = r.maximal;
    if (list_pairs) {
        auto recs = nlohmann::json::array();
        for (auto& rec : r.records)
            recs.push_back({{"pf", rec.pf.to_coeff_string()},
                            {"pg", rec.pg.to_coeff_string()},
                            {"min_poly", rec.min_poly.to_coeff_string()}});
        j["records"] = recs;
    }
    return j;
}

std::string analyze_report_to_text(const AnalyzeReport& r) {
    std::ostringstream os;
    os << "pair analysis, q=" << r.q << " d=" << r.d << "\n";
    for (auto& row : r.rows) {
        os << "  line " << row.line << ": ";
        if (!row.ok) {
            os << "error: " << row.error << "\n";
        } else if (!row.orthogonal) {
            os << "not orthogonal\n";
        } else {
            os << "orthogonal, cycles " << row.cycles.to_text() << ", max "
               << row.max_len << " [" << row.method << "]\n";
        }
    }
    return os.str();
}

nlohmann::json analyze_report_to_json(const AnalyzeReport& r) {
    nlohmann::json j;
    j["q"] = r.q;
    j["d"] = r.d;
    auto rows = nlohmann::json::array();
    for (auto& row : r.rows) {
        nlohmann::json rj;
        rj["line"] = row.line;
        rj["ok"] = row.ok;
        if (!row.ok) {
            rj["error"] = row.error;
        } else {
            rj["orthogonal"] = row.orthogonal;
            if (row.orthogonal) {
                rj["cycles"] = cycle_sum_to_json(row.cycles);
                rj["max_cycle_length"] = row.max_len;
                rj["method"] = row.method;
            }
        }
        rows.push_back(rj);
    }
    j["pairs"] = rows;
    auto hist = nlohmann::json::array();
    for (auto& [len, cnt] : r.histogram) hist.push_back({{"max_cycle_length", len}, {"pairs", cnt}});
    j["distribution"] = hist;
    return j;
}

} // namespace oca
