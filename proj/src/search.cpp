#include "oca/search.hpp"

#include <bit>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <omp.h>
#include <json.hpp>

#include "oca/dynamics.hpp"
#include "oca/latin.hpp"
#include "oca/rule.hpp"

namespace oca {

namespace {

struct Partial {
    std::uint64_t visited = 0, oca = 0, maximal = 0, max_lin = 0, max_non = 0;
    std::map<std::uint64_t, std::uint64_t> histogram;
    std::vector<OcaPairDetail> details;
};

bool generator_is_affine(std::uint32_t gen, std::uint32_t k) {
    std::uint32_t gbits = 1u << k;
    std::vector<std::uint8_t> a(gbits);
    for (std::uint32_t i = 0; i < gbits; ++i) a[i] = (gen >> i) & 1;
    for (std::uint32_t bit = 0; bit < k; ++bit)
        for (std::uint32_t m = 0; m < gbits; ++m)
            if (m & (1u << bit)) a[m] ^= a[m ^ (1u << bit)];
    for (std::uint32_t m = 0; m < gbits; ++m)
        if (a[m] && std::popcount(m) > 1) return false;
    return true;
}

struct Kernel {
    std::uint32_t d, k, n, gbits, B, S;
    std::vector<std::uint8_t> ftab;   // per generator: full-state output table
    std::vector<std::uint8_t> affine; // per generator
    std::vector<std::uint32_t> hs;    // balanced generator XORs (filter)

    explicit Kernel(std::uint32_t d_, bool filter) : d(d_), k(d_ - 2), n(d_ - 1) {
        gbits = 1u << k;
        B = 1u << gbits;
        S = 1u << (2 * n);
        ftab.resize(static_cast<std::size_t>(B) * S);
        affine.resize(B);
        const std::uint32_t wmask = (1u << d) - 1;
#pragma omp parallel for schedule(static)
        for (std::int64_t g = 0; g < static_cast<std::int64_t>(B); ++g) {
            std::uint8_t rt[64];
            for (std::uint32_t x = 0; x <= wmask; ++x)
                rt[x] = static_cast<std::uint8_t>(
                    ((x >> (d - 1)) ^ (g >> ((x >> 1) & (gbits - 1))) ^ x) & 1);
            std::uint8_t* row = &ftab[static_cast<std::size_t>(g) * S];
            for (std::uint32_t s = 0; s < S; ++s) {
                std::uint32_t out = 0;
                for (std::uint32_t i = 0; i < n; ++i)
                    out = (out << 1) | rt[(s >> (2 * n - d - i)) & wmask];
                row[s] = static_cast<std::uint8_t>(out);
            }
            affine[g] = generator_is_affine(static_cast<std::uint32_t>(g), k);
        }
        if (filter) {
            for (std::uint32_t h = 0; h < B; ++h)
                if (std::popcount(h) == static_cast<int>(gbits / 2)) hs.push_back(h);
        }
    }

    void run_pair(std::uint32_t g1, std::uint32_t g2, Partial& p, bool collect) const {
        ++p.visited;
        const std::uint8_t* r1 = &ftab[static_cast<std::size_t>(g1) * S];
        const std::uint8_t* r2 = &ftab[static_cast<std::size_t>(g2) * S];
        std::uint64_t bm[16];
        const std::size_t words = (S + 63) / 64;
        std::memset(bm, 0, words * 8);
        for (std::uint32_t s = 0; s < S; ++s) {
            std::uint32_t ns = (static_cast<std::uint32_t>(r1[s]) << n) | r2[s];
            std::uint64_t& w = bm[ns >> 6];
            std::uint64_t bit = 1ULL << (ns & 63);
            if (w & bit) return; // collision: not orthogonal
            w |= bit;
        }
        ++p.oca;

        std::memset(bm, 0, words * 8);
        std::uint64_t max_len = 0;
        for (std::uint32_t start = 0; start < S; ++start) {
            if (bm[start >> 6] & (1ULL << (start & 63))) continue;
            std::uint64_t len = 0;
            std::uint32_t at = start;
            do {
                bm[at >> 6] |= 1ULL << (at & 63);
                ++len;
                at = (static_cast<std::uint32_t>(r1[at]) << n) | r2[at];
            } while (at != start);
            if (len > max_len) max_len = len;
        }
        ++p.histogram[max_len];
        if (max_len == S - 1) {
            ++p.maximal;
            if (affine[g1] && affine[g2])
                ++p.max_lin;
            else
                ++p.max_non;
        }
        if (collect) p.details.push_back({g1, g2, max_len});
    }
};

void merge(SearchReport& rep, Partial&& p) {
    rep.pairs_visited += p.visited;
    rep.oca_pairs += p.oca;
    rep.maximal += p.maximal;
    rep.maximal_linear += p.max_lin;
    rep.maximal_nonlinear += p.max_non;
    for (auto& [len, cnt] : p.histogram) rep.histogram[len] += cnt;
    rep.details.insert(rep.details.end(), p.details.begin(), p.details.end());
}

nlohmann::json checkpoint_json(const SearchReport& rep, bool filter) {
    nlohmann::json j;
    j["version"] = 1;
    j["kind"] = "table1";
    j["q"] = rep.q;
    j["d"] = rep.d;
    j["filter"] = filter;
    j["next_outer"] = rep.next_outer;
    j["complete"] = rep.complete;
    j["pairs_visited"] = rep.pairs_visited;
    j["oca_pairs"] = rep.oca_pairs;
    j["maximal"] = rep.maximal;
    j["maximal_linear"] = rep.maximal_linear;
    j["maximal_nonlinear"] = rep.maximal_nonlinear;
    auto hist = nlohmann::json::array();
    for (auto& [len, cnt] : rep.histogram) hist.push_back({len, cnt});
    j["histogram"] = hist;
    return j;
}

void write_checkpoint(const std::string& path, const SearchReport& rep, bool filter) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write checkpoint file: " + tmp);
        out << checkpoint_json(rep, filter).dump(2) << "\n";
    }
    std::filesystem::rename(tmp, path);
}

bool load_checkpoint(const std::string& path, SearchReport& rep, bool filter) {
    std::ifstream in(path);
    if (!in) return false;
    nlohmann::json j;
    in >> j;
    if (j.value("version", 0) != 1 || j.value("kind", "") != "table1")
        throw std::runtime_error("unrecognized checkpoint file: " + path);
    if (j["d"] != rep.d || j["q"] != rep.q || j["filter"] != filter)
        throw std::runtime_error("checkpoint parameters do not match this run: " + path);
    rep.next_outer = j["next_outer"];
    rep.pairs_visited = j["pairs_visited"];
    rep.oca_pairs = j["oca_pairs"];
    rep.maximal = j["maximal"];
    rep.maximal_linear = j["maximal_linear"];
    rep.maximal_nonlinear = j["maximal_nonlinear"];
    for (auto& t : j["histogram"])
        rep.histogram[t[0].get<std::uint64_t>()] = t[1].get<std::uint64_t>();
    return true;
}

} // namespace

SearchReport exhaustive_search(const SearchOptions& opt) {
    if (opt.d < 3 || opt.d > 6)
        throw std::invalid_argument("exhaustive search supports 3 <= d <= 6");
    if (opt.collect_pairs && !opt.checkpoint_path.empty())
        throw std::invalid_argument("pair collection cannot be combined with checkpointing");
    if (opt.threads > 0) omp_set_num_threads(opt.threads);

    Kernel kern(opt.d, opt.use_filter);
    SearchReport rep;
    rep.d = opt.d;
    rep.rules = kern.B;
    rep.pairs_total = static_cast<std::uint64_t>(kern.B) * kern.B;

    std::uint64_t start_outer = 0;
    if (!opt.checkpoint_path.empty() && load_checkpoint(opt.checkpoint_path, rep, opt.use_filter)) {
        start_outer = rep.next_outer;
    }

    const std::uint64_t limit = std::min<std::uint64_t>(kern.B, opt.stop_after_outer);
    const std::uint64_t batch = 256;
    std::uint64_t since_ckpt = 0;
    std::vector<Partial> parts(batch);

    for (std::uint64_t b0 = start_outer; b0 < limit; b0 += batch) {
        const std::uint64_t b1 = std::min(b0 + batch, limit);
        for (auto& p : parts) p = Partial{};
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t g1 = static_cast<std::int64_t>(b0); g1 < static_cast<std::int64_t>(b1); ++g1) {
            Partial& p = parts[g1 - b0];
            const std::uint32_t a = static_cast<std::uint32_t>(g1);
            if (opt.use_filter) {
                for (std::uint32_t h : kern.hs)
                    kern.run_pair(a, a ^ h, p, opt.collect_pairs);
            } else {
                for (std::uint32_t g2 = 0; g2 < kern.B; ++g2)
                    kern.run_pair(a, g2, p, opt.collect_pairs);
            }
        }
        for (std::uint64_t i = 0; i < b1 - b0; ++i) {
            since_ckpt += parts[i].visited;
            merge(rep, std::move(parts[i]));
        }
        rep.next_outer = b1;
        if (!opt.checkpoint_path.empty() && since_ckpt >= opt.checkpoint_interval) {
            rep.complete = false;
            write_checkpoint(opt.checkpoint_path, rep, opt.use_filter);
            since_ckpt = 0;
        }
    }

    rep.next_outer = std::max(limit, start_outer);
    rep.complete = rep.next_outer >= kern.B;
    if (!opt.checkpoint_path.empty()) write_checkpoint(opt.checkpoint_path, rep, opt.use_filter);
    return rep;
}

SearchReport exhaustive_search_reference(std::uint32_t d) {
    if (d < 3 || d > 6)
        throw std::invalid_argument("exhaustive search supports 3 <= d <= 6");
    const std::uint32_t B = 1u << (1u << (d - 2));
    SearchReport rep;
    rep.d = d;
    rep.rules = B;
    rep.pairs_total = static_cast<std::uint64_t>(B) * B;
    const std::uint64_t space = 1ULL << (2 * (d - 1));

    std::vector<LocalRule> rules;
    std::vector<bool> affine;
    for (std::uint32_t g = 0; g < B; ++g) {
        rules.push_back(bipermutive_from_generator(g, d));
        affine.push_back(is_affine(rules.back()));
    }
    for (std::uint32_t g1 = 0; g1 < B; ++g1)
        for (std::uint32_t g2 = 0; g2 < B; ++g2) {
            ++rep.pairs_visited;
            if (!are_orthogonal(rules[g1], rules[g2])) continue;
            ++rep.oca_pairs;
            std::uint64_t max_len = cycle_decomposition(rules[g1], rules[g2]).max_length();
            ++rep.histogram[max_len];
            rep.details.push_back({g1, g2, max_len});
            if (max_len == space - 1) {
                ++rep.maximal;
                if (affine[g1] && affine[g2])
                    ++rep.maximal_linear;
                else
                    ++rep.maximal_nonlinear;
            }
        }
    rep.next_outer = B;
    return rep;
}

} // namespace oca
