#ifndef OCA_SEARCH_HPP
#define OCA_SEARCH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace oca {

/// Exhaustive census of ordered bipermutive rule pairs over F_2: counts
/// orthogonal pairs, decomposes their cycles, and classifies the pairs whose
/// largest cycle fills the whole punctured phase space.
struct SearchOptions {
    std::uint32_t d = 4;
    /// Pre-filter on pairwise-balanced truth tables. An optimization only:
    /// results are identical with it off.
    bool use_filter = true;
    /// Keep one record per orthogonal pair (generator indices + max cycle).
    bool collect_pairs = false;
    /// 0 keeps the OpenMP default.
    int threads = 0;
    /// Resumable progress file (JSON). Written about every
    /// checkpoint_interval tested pairs, at outer-index granularity.
    std::string checkpoint_path;
    std::uint64_t checkpoint_interval = 1000000;
    /// Stop once the outer index reaches this bound (partial run; the
    /// checkpoint file carries the resume point). For tests and operations.
    std::uint64_t stop_after_outer = UINT64_MAX;
};

struct OcaPairDetail {
    std::uint32_t gen_f = 0, gen_g = 0;
    std::uint64_t max_len = 0;
};

struct SearchReport {
    std::uint32_t q = 2, d = 0;
    std::uint64_t rules = 0;          // bipermutive rules of diameter d
    std::uint64_t pairs_total = 0;    // ordered pairs
    std::uint64_t pairs_visited = 0;  // pairs actually tested (after the filter)
    std::uint64_t oca_pairs = 0;
    std::uint64_t maximal = 0;
    std::uint64_t maximal_nonlinear = 0;
    std::uint64_t maximal_linear = 0; // affine reading: algebraic degree <= 1
    std::map<std::uint64_t, std::uint64_t> histogram; // max cycle length -> OCA pairs
    std::vector<OcaPairDetail> details;
    bool complete = true;
    std::uint64_t next_outer = 0; // resume point when !complete

    bool counts_equal(const SearchReport& o) const {
        return d == o.d && pairs_total == o.pairs_total && oca_pairs == o.oca_pairs &&
               maximal == o.maximal && maximal_nonlinear == o.maximal_nonlinear &&
               maximal_linear == o.maximal_linear && histogram == o.histogram;
    }
};

/// OpenMP kernel. Supports 3 <= d <= 6.
SearchReport exhaustive_search(const SearchOptions& opt);

/// Serial reference built on the generic rule/Latin-square/dynamics paths;
/// no filter, no parallelism. Kept for cross-checking the kernel.
SearchReport exhaustive_search_reference(std::uint32_t d);

} // namespace oca

#endif
