// Wall-clock comparison of the OpenMP kernels against the serial reference
// implementations, on workloads small enough to run both.
#include <chrono>
#include <iostream>

#include <omp.h>

#include "oca/enumerate.hpp"
#include "oca/search.hpp"

using clk = std::chrono::steady_clock;

static double seconds(clk::time_point a, clk::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

int main() {
    std::cout << "threads available: " << omp_get_max_threads() << "\n\n";

    for (std::uint32_t d : {4u, 5u}) {
        auto t0 = clk::now();
        auto ref = oca::exhaustive_search_reference(d);
        auto t1 = clk::now();
        oca::SearchOptions opt;
        opt.d = d;
        auto ker = oca::exhaustive_search(opt);
        auto t2 = clk::now();
        bool same = ref.counts_equal(ker);
        std::cout << "table1 d=" << d << ": reference " << seconds(t0, t1) << " s, kernel "
                  << seconds(t1, t2) << " s, speedup x" << seconds(t0, t1) / seconds(t1, t2)
                  << (same ? "" : "  [MISMATCH]") << "\n";
    }

    std::cout << "\n";
    for (std::uint32_t d : {6u, 7u}) {
        oca::EnumOptions opt;
        opt.q = 2;
        opt.d = d;
        auto t0 = clk::now();
        auto ref = oca::enumerate_maximal_linear_reference(opt);
        auto t1 = clk::now();
        auto ker = oca::enumerate_maximal_linear(opt);
        auto t2 = clk::now();
        bool same = ref.maximal == ker.maximal && ref.coprime_pairs == ker.coprime_pairs;
        std::cout << "table2 q=2 d=" << d << ": reference " << seconds(t0, t1) << " s, kernel "
                  << seconds(t1, t2) << " s, speedup x" << seconds(t0, t1) / seconds(t1, t2)
                  << (same ? "" : "  [MISMATCH]") << "\n";
    }
    return 0;
}
