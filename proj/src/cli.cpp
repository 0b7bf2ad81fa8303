#include "oca/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "oca/dynamics.hpp"
#include "oca/enumerate.hpp"
#include "oca/int_factor.hpp"
#include "oca/latin.hpp"
#include "oca/lms.hpp"
#include "oca/matrix.hpp"
#include "oca/normal_form.hpp"
#include "oca/search.hpp"
#include "oca/text_io.hpp"

namespace oca {

namespace {

// Post-parse flag conflicts: usage problems, not domain errors.
struct UsageError : std::exception {
    explicit UsageError(std::string m) : msg(std::move(m)) {}
    const char* what() const noexcept override { return msg.c_str(); }
    std::string msg;
};

struct RuleSpec {
    std::string codes;   // "90" or "90,150"
    std::string tables;  // digit strings, comma separated
    std::string linears; // coefficient lists, ';' separated
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

std::vector<LocalRule> resolve_rules(const RuleSpec& spec, std::uint32_t q, std::uint32_t d,
                                     std::size_t expected) {
    int given = !spec.codes.empty() + !spec.tables.empty() + !spec.linears.empty();
    if (given != 1)
        throw UsageError("specify rules exactly one way: --rule(s), --table(s) or --linear(s)");
    std::vector<LocalRule> rules;
    if (!spec.codes.empty()) {
        for (auto& tok : split(spec.codes, ',')) {
            if (q != 2) throw std::invalid_argument("Wolfram codes are defined for q = 2");
            rules.push_back(rule_from_code(std::stoull(tok), d));
        }
    } else if (!spec.tables.empty()) {
        for (auto& tok : split(spec.tables, ',')) {
            std::vector<std::uint32_t> t;
            for (char ch : tok) {
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    throw std::invalid_argument("table must be a digit string");
                t.push_back(static_cast<std::uint32_t>(ch - '0'));
            }
            rules.push_back(make_rule(q, d, t));
        }
    } else {
        for (auto& tok : split(spec.linears, ';')) {
            std::vector<std::uint32_t> c;
            for (auto& v : split(tok, ',')) c.push_back(static_cast<std::uint32_t>(std::stoul(v)));
            rules.push_back(expand(make_linear_rule(q, d, c)));
        }
    }
    if (rules.size() != expected)
        throw std::invalid_argument("expected " + std::to_string(expected) + " rule(s)");
    return rules;
}

// Strict linear-rule recognition so linear pairs get the algebraic path too.
bool poly_of_linear(const LocalRule& r, FqPolynomial& out) {
    std::vector<std::uint32_t> coeffs(r.d, 0);
    std::uint64_t qpow = 1;
    for (std::uint32_t i = r.d; i-- > 0;) {
        coeffs[i] = r.table[qpow];
        qpow *= r.q;
    }
    try {
        LinearRule lr = make_linear_rule(r.q, r.d, coeffs);
        if (expand(lr).table != r.table) return false;
        out = linear_rule_to_poly(lr);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

void emit(const std::string& text, const std::string& output_path, std::ostream& out) {
    if (output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(output_path);
    if (!f) throw std::runtime_error("cannot open output file: " + output_path);
    f << text;
}

int default_threads() {
    if (const char* env = std::getenv("OCA_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"orthogonal cellular automata workbench"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::uint32_t q = 2, d = 3;
    std::string format = "text", output_path;
    app.add_option("--q", q, "field size (prime)")->capture_default_str();
    app.add_option("--d", d, "rule diameter")->capture_default_str();
    app.add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--output", output_path, "write output to a file instead of stdout");

    RuleSpec one, two;
    std::string state_str, pair_file, csv_path, checkpoint, binary_path;
    std::uint64_t steps = 0;
    int threads = default_threads();
    bool no_filter = false, long_run = false, list_pairs = false, all_constants = false, csv_square = false;

    auto* latin = app.add_subcommand("latin", "Latin square of one bipermutive rule");
    latin->add_option("--rule", one.codes, "Wolfram code");
    latin->add_option("--table", one.tables, "explicit rule table (digit string)");
    latin->add_option("--linear", one.linears, "linear rule coefficients a1,..,ad");
    latin->add_flag("--csv", csv_square, "emit the square as CSV rows");

    auto* orth = app.add_subcommand("orthogonal", "orthogonality verdict for a rule pair");
    auto add_pair = [&](CLI::App* cmd) {
        cmd->add_option("--rules", two.codes, "two Wolfram codes, comma separated");
        cmd->add_option("--tables", two.tables, "two rule tables, comma separated");
        cmd->add_option("--linears", two.linears, "two coefficient lists, ';' separated");
    };
    add_pair(orth);

    auto* cycles = app.add_subcommand("cycles", "cycle structure of a rule pair");
    add_pair(cycles);

    auto* keystream_cmd = app.add_subcommand("keystream", "orbit prefix from a seed state");
    add_pair(keystream_cmd);
    keystream_cmd->add_option("--state", state_str, "seed state, 2(d-1) digits")->required();
    keystream_cmd->add_option("--steps", steps, "number of states to emit")->required();
    keystream_cmd->add_option("--binary", binary_path, "write a bit-packed binary file (q = 2)");

    auto* table1 = app.add_subcommand("table1", "exhaustive bipermutive pair census");
    table1->add_flag("--no-filter", no_filter, "disable the pairwise-balance pre-filter");
    table1->add_flag("--long", long_run, "allow the d=6 long run");
    table1->add_option("--threads", threads, "worker threads (default: OCA_THREADS or OpenMP)");
    table1->add_option("--checkpoint", checkpoint, "resumable progress file");
    table1->add_option("--csv", csv_path, "also export the max-cycle distribution as CSV");

    auto* table2 = app.add_subcommand("table2", "maximal linear pair enumeration");
    table2->add_flag("--list", list_pairs, "list the maximal pairs");
    table2->add_flag("--all-constants", all_constants,
                     "enumerate all nonzero constant terms (default: constant term 1)");
    table2->add_option("--threads", threads, "worker threads (default: OCA_THREADS or OpenMP)");

    auto* analyze_cmd = app.add_subcommand("analyze", "analyze a file of rule pairs");
    analyze_cmd->add_option("file", pair_file, "one pair per line: Wolfram codes or tables")->required();
    analyze_cmd->add_option("--csv", csv_path, "export the max-cycle distribution as CSV");

    std::vector<const char*> argv;
    argv.push_back("oca");
    for (auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        const bool json = format == "json";

        if (latin->parsed()) {
            LocalRule r = resolve_rules(one, q, d, 1)[0];
            LatinSquare s = latin_square(r);
            if (json) {
                nlohmann::json j;
                j["order"] = s.n;
                auto rows = nlohmann::json::array();
                for (std::uint32_t i = 0; i < s.n; ++i) {
                    auto row = nlohmann::json::array();
                    for (std::uint32_t jj = 0; jj < s.n; ++jj) row.push_back(s.at(i, jj));
                    rows.push_back(row);
                }
                j["square"] = rows;
                emit(j.dump(2) + "\n", output_path, out);
            } else {
                emit(csv_square ? latin_to_csv(s) : latin_to_text(s), output_path, out);
            }
            return 0;
        }

        if (orth->parsed()) {
            auto rules = resolve_rules(two, q, d, 2);
            bool brute = are_orthogonal(rules[0], rules[1]);
            FqPolynomial pf, pg;
            bool linear = poly_of_linear(rules[0], pf) && poly_of_linear(rules[1], pg);
            bool have_gcd = false, gcd_verdict = false;
            std::string gcd_str;
            if (linear) {
                FqPolynomial g = poly_gcd(pf, pg);
                gcd_verdict = g.degree() == 0;
                gcd_str = g.to_pretty_string();
                have_gcd = true;
                if (gcd_verdict != brute)
                    throw std::logic_error("internal error: superposition and gcd verdicts disagree");
            }
            if (json) {
                nlohmann::json j;
                j["orthogonal"] = brute;
                j["method_superposition"] = brute;
                if (have_gcd) {
                    j["method_gcd"] = gcd_verdict;
                    j["gcd"] = gcd_str;
                }
                emit(j.dump(2) + "\n", output_path, out);
            } else {
                std::ostringstream os;
                os << (brute ? "orthogonal" : "not orthogonal") << "\n";
                if (have_gcd) os << "gcd: " << gcd_str << "\n";
                emit(os.str(), output_path, out);
            }
            return 0;
        }

        if (cycles->parsed()) {
            auto rules = resolve_rules(two, q, d, 2);
            if (!are_orthogonal(rules[0], rules[1]))
                throw std::invalid_argument("pair is not orthogonal: the system is not a permutation");
            FqPolynomial pf, pg;
            bool linear = poly_of_linear(rules[0], pf) && poly_of_linear(rules[1], pg) &&
                          pf.is_monic() && pg.is_monic();
            bool brute_ok = checked_pow_u64(q, 2 * (d - 1)) <= (1ULL << 30);
            CycleSum brute, theory;
            if (brute_ok) brute = cycle_decomposition(rules[0], rules[1]);
            if (linear) theory = system_cycle_sum(pf, pg);
            if (!brute_ok && !linear)
                throw std::invalid_argument("phase space too large and the pair is not linear");
            if (brute_ok && linear && !(brute == theory))
                throw std::logic_error("internal error: brute-force and theoretical cycle sums disagree");
            const CycleSum& sum = brute_ok ? brute : theory;
            if (json) {
                nlohmann::json j;
                j["cycles"] = cycle_sum_to_json(sum);
                j["max_cycle_length"] = sum.max_length();
                if (brute_ok) j["brute"] = cycle_sum_to_json(brute);
                if (linear) j["lms"] = cycle_sum_to_json(theory);
                emit(j.dump(2) + "\n", output_path, out);
            } else {
                std::ostringstream os;
                os << sum.to_text() << "\n";
                if (brute_ok && linear) {
                    os << "  brute: " << brute.to_text() << "\n";
                    os << "  lms:   " << theory.to_text() << "\n";
                }
                emit(os.str(), output_path, out);
            }
            return 0;
        }

        if (keystream_cmd->parsed()) {
            auto rules = resolve_rules(two, q, d, 2);
            std::vector<felt> seed;
            for (char ch : state_str) {
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    throw std::invalid_argument("state must be a digit string");
                auto v = static_cast<std::uint32_t>(ch - '0');
                if (v >= q) throw std::invalid_argument("state digit out of range");
                seed.push_back(static_cast<felt>(v));
            }
            auto orbit = keystream(rules[0], rules[1], seed, steps);
            if (!binary_path.empty()) {
                if (q != 2) throw std::invalid_argument("bit-packed output is defined for q = 2");
                std::ofstream f(binary_path, std::ios::binary);
                if (!f) throw std::runtime_error("cannot open output file: " + binary_path);
                std::uint8_t acc = 0;
                int nbits = 0;
                for (auto& s : orbit)
                    for (felt v : s) {
                        acc = static_cast<std::uint8_t>((acc << 1) | v);
                        if (++nbits == 8) {
                            f.put(static_cast<char>(acc));
                            acc = 0;
                            nbits = 0;
                        }
                    }
                if (nbits) f.put(static_cast<char>(acc << (8 - nbits)));
                return 0;
            }
            std::ostringstream os;
            if (json) {
                auto arr = nlohmann::json::array();
                for (auto& s : orbit) {
                    std::string line;
                    for (felt v : s) line.push_back(static_cast<char>('0' + v));
                    arr.push_back(line);
                }
                os << nlohmann::json{{"orbit", arr}}.dump(2) << "\n";
            } else {
                for (auto& s : orbit) {
                    for (felt v : s) os << (char)('0' + v);
                    os << "\n";
                }
            }
            emit(os.str(), output_path, out);
            return 0;
        }

        if (table1->parsed()) {
            if (q != 2) throw std::invalid_argument("the exhaustive census is defined for q = 2");
            if (d == 6 && !long_run)
                throw std::invalid_argument("d=6 sweeps ~8.4e8 pairs; pass --long to confirm");
            SearchOptions opt;
            opt.d = d;
            opt.use_filter = !no_filter;
            opt.threads = threads;
            opt.checkpoint_path = checkpoint;
            SearchReport rep = exhaustive_search(opt);
            if (!csv_path.empty()) {
                std::ofstream f(csv_path);
                if (!f) throw std::runtime_error("cannot open CSV file: " + csv_path);
                export_distribution(rep.histogram, f);
            }
            emit(json ? search_report_to_json(rep).dump(2) + "\n" : search_report_to_text(rep),
                 output_path, out);
            return 0;
        }

        if (table2->parsed()) {
            EnumOptions opt;
            opt.q = q;
            opt.d = d;
            opt.universe = all_constants ? PolyUniverse::AnyNonzeroConstant : PolyUniverse::ConstantOne;
            opt.collect_pairs = list_pairs;
            opt.threads = threads;
            EnumReport rep = enumerate_maximal_linear(opt);
            emit(json ? enum_report_to_json(rep, list_pairs).dump(2) + "\n"
                      : enum_report_to_text(rep, list_pairs),
                 output_path, out);
            return 0;
        }

        if (analyze_cmd->parsed()) {
            AnalyzeReport rep = analyze_pair_file(pair_file, q, d);
            if (!csv_path.empty()) {
                std::ofstream f(csv_path);
                if (!f) throw std::runtime_error("cannot open CSV file: " + csv_path);
                export_distribution(rep.histogram, f);
            }
            emit(json ? analyze_report_to_json(rep).dump(2) + "\n" : analyze_report_to_text(rep),
                 output_path, out);
            return 0;
        }

        err << "no subcommand\n";
        return 1;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        err << "I/O error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace oca
