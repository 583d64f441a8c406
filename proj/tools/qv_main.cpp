// qv — exact q-series identity toolkit.
//
// Subcommands:
//   verify     run identity scripts and report pass/fail per assertion
//   series     print the coefficients of an expression
//   ranks      print the overpartition rank-residue table
//   dissect    print an arithmetic-progression slice of an expression
//   conjecture scan the rank-inequality chains for violations
//
// Exit codes: 0 success / all pass; 1 any failure (or violation/mismatch);
// 2 usage or script syntax error.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qv/products.hpp"
#include "qv/qid.hpp"
#include "qv/ranks.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qv;

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error("cannot read '" + p.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// ---------------------------------------------------------------- verify ---

struct VerifyOptions {
    std::vector<std::string> paths;
    bool use_corpus = false;
    long order = 0;  // 0 = each assertion's stated order
    int jobs = 1;
    std::string format = "text";
};

struct Row {
    const Assertion* assertion;
    std::string file;
    VerifyOutcome outcome;
};

fs::path corpus_dir() {
    if (const char* env = std::getenv("QV_CORPUS")) return fs::path(env);
    return fs::path("corpus");
}

int run_verify(const VerifyOptions& opt) {
    std::vector<std::string> files = opt.paths;
    if (opt.use_corpus) {
        const fs::path dir = corpus_dir();
        std::vector<std::string> found;
        std::error_code ec;
        for (const auto& entry : fs::directory_iterator(dir, ec))
            if (entry.path().extension() == ".qid") found.push_back(entry.path().string());
        if (ec || found.empty()) {
            std::cerr << "qv: no corpus scripts found in '" << dir.string() << "'\n";
            return 2;
        }
        std::sort(found.begin(), found.end());
        files.insert(files.begin(), found.begin(), found.end());
    }
    if (files.empty()) {
        std::cerr << "qv: verify needs script paths or --corpus\n";
        return 2;
    }

    // Parse everything up front: a script that does not parse is exit 2.
    std::vector<Script> scripts;
    for (const std::string& f : files) {
        std::string text;
        try {
            text = read_file(f);
        } catch (const Error& e) {
            std::cerr << "qv: " << e.what() << "\n";
            return 2;
        }
        try {
            scripts.push_back(parse_script(text, fs::path(f).filename().string()));
        } catch (const SyntaxError& e) {
            std::cerr << "qv: " << f << ": " << e.what() << "\n";
            return 2;
        }
    }

    std::vector<Row> rows;
    for (size_t i = 0; i < scripts.size(); ++i)
        for (const Assertion& a : scripts[i].assertions)
            rows.push_back(Row{&a, files[i], VerifyOutcome{}});

    // Assertion-level parallelism: workers pull indices from a shared counter;
    // results land in their slot, so output order (and content) is
    // independent of the schedule.
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < rows.size();)
            rows[i].outcome = verify(*rows[i].assertion, opt.order);
    };
    const int nthreads = std::max(1, std::min<int>(opt.jobs, static_cast<int>(rows.size())));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    size_t passed = 0, failed = 0, known = 0;
    for (const Row& r : rows) {
        if (is_failure(r.outcome.status))
            ++failed;
        else if (r.outcome.status == VerifyStatus::KnownDiscrepancy)
            ++known;
        else
            ++passed;
    }

    if (opt.format == "json") {
        json results = json::array();
        for (const Row& r : rows) {
            json o;
            o["assertion_id"] = r.assertion->id;
            o["file"] = r.file;
            o["line"] = r.assertion->line;
            o["status"] = status_name(r.outcome.status);
            if (r.outcome.first_diff >= 0) {
                o["first_diff_exponent"] = r.outcome.first_diff;
                o["diff_coefficient"] = rat_str(r.outcome.diff_coeff);
            } else {
                o["first_diff_exponent"] = nullptr;
                o["diff_coefficient"] = nullptr;
            }
            o["elapsed_ms"] = r.outcome.elapsed_ms;
            if (!r.outcome.message.empty()) o["message"] = r.outcome.message;
            results.push_back(std::move(o));
        }
        json doc;
        doc["results"] = std::move(results);
        doc["summary"] = {{"total", rows.size()},
                          {"passed", passed},
                          {"known_discrepancies", known},
                          {"failed", failed}};
        std::cout << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "assertion_id,file,line,status,first_diff_exponent,diff_coefficient,"
                     "elapsed_ms\n";
        for (const Row& r : rows) {
            std::cout << r.assertion->id << "," << r.file << "," << r.assertion->line << ","
                      << status_name(r.outcome.status) << ",";
            if (r.outcome.first_diff >= 0)
                std::cout << r.outcome.first_diff << "," << rat_str(r.outcome.diff_coeff);
            else
                std::cout << ",";
            std::cout << "," << r.outcome.elapsed_ms << "\n";
        }
    } else {
        for (const Row& r : rows) {
            std::cout << r.assertion->id << ": " << status_name(r.outcome.status) << " (order "
                      << r.outcome.order;
            if (r.outcome.first_diff >= 0)
                std::cout << ", first diff at q^" << r.outcome.first_diff
                          << ", lhs-rhs coefficient " << rat_str(r.outcome.diff_coeff);
            if (!r.outcome.message.empty()) std::cout << ", " << r.outcome.message;
            std::cout << ", " << r.outcome.elapsed_ms << " ms)\n";
        }
        std::cout << rows.size() << " assertions: " << passed << " passed, " << known
                  << " known discrepancies, " << failed << " failed\n";
    }
    return failed == 0 ? 0 : 1;
}

// --------------------------------------------------------- series/dissect ---

void print_pairs(const Series& s) {
    for (long n = 0; n <= s.order(); ++n) std::cout << n << "," << rat_str(s.at(n)) << "\n";
}

int run_series(const std::string& text, long order) {
    const ExprPtr e = parse_expression(text, "<series>");
    print_pairs(eval_to_order(*e, order));
    return 0;
}

int run_dissect(const std::string& text, long mod, long residue, long order) {
    if (mod < 1 || residue < 0 || residue >= mod) {
        std::cerr << "qv: dissect needs --mod m >= 1 and 0 <= --residue < m\n";
        return 2;
    }
    const ExprPtr e = parse_expression(text, "<dissect>");
    const Series full = eval_to_order(*e, mod * order + residue);
    print_pairs(full.dissected(mod, residue));
    return 0;
}

// ----------------------------------------------------------------- ranks ---

int run_ranks(long max_n, const std::string& oracle, bool cross_check, const std::string& format) {
    const bool need_enum = cross_check || oracle == "enum";
    if (need_enum && max_n > 25) {
        std::cerr << "qv: the enumeration oracle is limited to --max 25\n";
        return 2;
    }

    // table[n] = {N(0,6,n), N(1,6,n), N(2,6,n), N(3,6,n)}
    auto from_gf = [&] {
        std::vector<std::array<long long, 4>> t(max_n + 1);
        for (int s = 0; s < 4; ++s) {
            const Series g = residue_gf(s, max_n);
            for (long n = 0; n <= max_n; ++n) {
                const Rat& c = g.at(n);
                if (!is_integer(c)) throw Error("non-integer rank count at q^" + std::to_string(n));
                t[n][s] = c.get_num().get_si();
            }
        }
        return t;
    };
    auto from_enum = [&] {
        const RankTable tab = enumerate_ranks(max_n);
        std::vector<std::array<long long, 4>> t(max_n + 1);
        for (long n = 0; n <= max_n; ++n)
            for (int s = 0; s < 4; ++s) t[n][s] = count_rank_mod(tab, s, 6, n);
        return t;
    };

    std::vector<std::array<long long, 4>> table;
    if (cross_check) {
        const auto a = from_gf();
        const auto b = from_enum();
        for (long n = 0; n <= max_n; ++n)
            if (a[n] != b[n]) {
                std::cerr << "qv: oracle mismatch at n = " << n << "\n";
                return 1;
            }
        table = a;
    } else {
        table = oracle == "enum" ? from_enum() : from_gf();
    }

    if (format == "json") {
        json out = json::array();
        for (long n = 0; n <= max_n; ++n)
            out.push_back({{"n", n}, {"counts", table[n]}});
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "n,r0,r1,r2,r3\n";
        for (long n = 0; n <= max_n; ++n)
            std::cout << n << "," << table[n][0] << "," << table[n][1] << "," << table[n][2] << ","
                      << table[n][3] << "\n";
    } else {
        for (long n = 0; n <= max_n; ++n)
            std::cout << "n=" << n << ": " << table[n][0] << " " << table[n][1] << " "
                      << table[n][2] << " " << table[n][3] << "\n";
    }
    return 0;
}

// ------------------------------------------------------------- conjecture ---

int run_conjecture(long from, long to) {
    const std::vector<Violation> v = conjecture_scan(from, to);
    if (v.empty()) {
        std::cout << "no violations for sizes " << 3 * from << ".." << 3 * to + 2 << "\n";
        return 0;
    }
    for (const Violation& x : v)
        std::cout << "violation at size " << x.size << ": " << x.relation << " fails (" << x.lhs
                  << " vs " << x.rhs << ")\n";
    std::cout << v.size() << " violations\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series identity toolkit"};
    app.require_subcommand(1);

    VerifyOptions vopt;
    CLI::App* verify_cmd = app.add_subcommand("verify", "verify identity scripts");
    verify_cmd->add_option("paths", vopt.paths, "identity script files");
    verify_cmd->add_flag("--corpus", vopt.use_corpus, "verify the bundled corpus");
    verify_cmd->add_option("--order", vopt.order, "override the per-assertion order");
    verify_cmd->add_option("--jobs", vopt.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--format", vopt.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    std::string series_expr;
    long series_order = 20;
    CLI::App* series_cmd = app.add_subcommand("series", "print exponent,coefficient pairs");
    series_cmd->add_option("expr", series_expr, "expression to expand")->required();
    series_cmd->add_option("--order", series_order, "truncation order")
        ->check(CLI::NonNegativeNumber);

    long ranks_max = 12;
    std::string ranks_oracle = "gf";
    bool ranks_cross = false;
    std::string ranks_format = "text";
    CLI::App* ranks_cmd = app.add_subcommand("ranks", "rank-residue table N(s,6,n)");
    ranks_cmd->add_option("--max", ranks_max, "largest n")->check(CLI::NonNegativeNumber);
    ranks_cmd->add_option("--oracle", ranks_oracle, "enum|gf")
        ->check(CLI::IsMember({"enum", "gf"}));
    ranks_cmd->add_flag("--cross-check", ranks_cross, "require both oracles to agree");
    ranks_cmd->add_option("--format", ranks_format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    std::string dissect_expr;
    long dissect_mod = 1, dissect_res = 0, dissect_order = 20;
    CLI::App* dissect_cmd = app.add_subcommand("dissect", "arithmetic-progression slice");
    dissect_cmd->add_option("expr", dissect_expr, "expression to slice")->required();
    dissect_cmd->add_option("--mod", dissect_mod, "progression modulus")->required();
    dissect_cmd->add_option("--residue", dissect_res, "progression residue");
    dissect_cmd->add_option("--order", dissect_order, "truncation order of the slice")
        ->check(CLI::NonNegativeNumber);

    long conj_from = 0, conj_to = 0;
    CLI::App* conj_cmd = app.add_subcommand("conjecture", "scan rank inequality chains");
    conj_cmd->add_option("--from", conj_from, "first n")->required();
    conj_cmd->add_option("--to", conj_to, "last n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exits 0; any usage problem is 2
    }

    try {
        if (*verify_cmd) return run_verify(vopt);
        if (*series_cmd) return run_series(series_expr, series_order);
        if (*ranks_cmd) return run_ranks(ranks_max, ranks_oracle, ranks_cross, ranks_format);
        if (*dissect_cmd) return run_dissect(dissect_expr, dissect_mod, dissect_res, dissect_order);
        if (*conj_cmd) return run_conjecture(conj_from, conj_to);
    } catch (const SyntaxError& e) {
        std::cerr << "qv: syntax error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "qv: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "qv: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
