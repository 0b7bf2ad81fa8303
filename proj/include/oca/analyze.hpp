#ifndef OCA_ANALYZE_HPP
#define OCA_ANALYZE_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "oca/cycle_sum.hpp"
#include "oca/rule.hpp"

namespace oca {

/// Per-line verdict for an externally supplied rule pair.
struct PairAnalysis {
    int line = 0;
    std::string text;
    bool ok = false;      // parsed and analyzed
    std::string error;    // parse/domain problem when !ok
    bool orthogonal = false;
    CycleSum cycles;      // when orthogonal
    std::uint64_t max_len = 0;
    std::string method;   // "lms" for strictly linear pairs, "brute" otherwise
};

struct AnalyzeReport {
    std::uint32_t q = 2, d = 0;
    std::vector<PairAnalysis> rows;
    std::map<std::uint64_t, std::uint64_t> histogram; // max cycle length -> pairs
};

/// A rule token is either a q-ary digit string of length q^d (explicit table)
/// or a decimal Wolfram code (q = 2).
LocalRule parse_rule_token(std::uint32_t q, std::uint32_t d, const std::string& token);

/// One pair per line, two whitespace-separated rule tokens. Lines that fail
/// to parse become error rows; processing continues. '#' starts a comment.
AnalyzeReport analyze_pairs(std::istream& in, std::uint32_t q, std::uint32_t d);
AnalyzeReport analyze_pair_file(const std::string& path, std::uint32_t q, std::uint32_t d);

/// CSV "max_cycle_length,pair_count", header always present.
void export_distribution(const std::map<std::uint64_t, std::uint64_t>& hist, std::ostream& out);

} // namespace oca

#endif
