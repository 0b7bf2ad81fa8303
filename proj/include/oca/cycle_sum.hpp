#ifndef OCA_CYCLE_SUM_HPP
#define OCA_CYCLE_SUM_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace oca {

/// Multiset of cycle terms (count, length), kept sorted by length with one
/// term per distinct length. The total weight, sum of count*length, equals
/// the number of states of the system it describes.
struct CycleSum {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> terms;

    static CycleSum single(std::uint64_t count, std::uint64_t length) {
        CycleSum s;
        s.terms.push_back({count, length});
        return s;
    }

    void add_term(std::uint64_t count, std::uint64_t length);
    void normalize();

    std::uint64_t weight() const;
    std::uint64_t max_length() const;
    std::uint64_t lcm_length() const;

    /// "1x1 + 1x15" with a multiplication sign between count and length.
    std::string to_text() const;

    bool operator==(const CycleSum& o) const { return terms == o.terms; }
};

} // namespace oca

#endif
