// Command-line front end: exact ranks, Smith forms, digit profiles, claim
// verifiers, and seeded experiment sweeps with machine-readable output.
//
// Exit codes: 0 success / all asserted checks hold; 1 a checked claim failed
// or a bound was violated; 2 usage, parse, or I/O error.
// Machine-parsable output goes to stdout, diagnostics and summaries to stderr.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "padiclab/constructions.hpp"
#include "padiclab/errors.hpp"
#include "padiclab/exact_linalg.hpp"
#include "padiclab/experiments.hpp"
#include "padiclab/matrix_io.hpp"
#include "padiclab/padic.hpp"
#include "padiclab/primes.hpp"
#include "padiclab/reports.hpp"
#include "padiclab/rng.hpp"
#include "padiclab/theorems.hpp"

namespace pl = padiclab;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 0xE15E;
    std::string out;
    std::string format = "csv";
    bool quiet = false;
};

// "2,3,5" and "5..17" (inclusive) mixed freely.
std::vector<std::uint64_t> parse_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        auto dots = tok.find("..");
        if (dots == std::string::npos) {
            out.push_back(std::stoull(tok));
        } else {
            std::uint64_t lo = std::stoull(tok.substr(0, dots));
            std::uint64_t hi = std::stoull(tok.substr(dots + 2));
            for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
        }
    }
    if (out.empty()) throw pl::DomainError("empty list: '" + text + "'");
    return out;
}

std::vector<std::uint64_t> odd_primes_in(const std::string& text) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t v : parse_list(text))
        if (v > 2 && pl::is_prime_u64(v)) out.push_back(v);
    if (out.empty()) throw pl::DomainError("no odd primes in '" + text + "'");
    return out;
}

// Writes to --out when given, else stdout.
class OutputSink {
  public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw pl::ParseError("cannot write '" + path + "'", 0, 0);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

void emit_records(const pl::SweepResult& res, const GlobalOpts& g) {
    OutputSink sink(g.out);
    std::ostream& out = sink.stream();
    if (g.format == "csv") {
        out << pl::trial_csv_header() << '\n';
        for (const auto& rec : res.records) out << pl::trial_csv_row(rec) << '\n';
    } else {
        for (const auto& rec : res.records) out << pl::trial_json(rec) << '\n';
    }
}

void emit_reports(const std::vector<pl::VerificationReport>& reports, const GlobalOpts& g) {
    OutputSink sink(g.out);
    std::ostream& out = sink.stream();
    for (const auto& rep : reports) out << pl::report_json(rep) << '\n';
}

void sweep_summary(const char* what, const pl::SweepResult& res, const GlobalOpts& g) {
    if (g.quiet) return;
    std::cerr << "# " << what << ": trials=" << res.records.size()
              << " violations=" << res.violations << " tight=" << res.tight
              << " inapplicable=" << res.inapplicable << '\n';
}

// True when every applicable report holds.
bool all_hold(const std::vector<pl::VerificationReport>& reports) {
    for (const auto& rep : reports)
        if (rep.applicable && !rep.holds) return false;
    return true;
}

void dump_violations(const pl::SweepResult& res, const GlobalOpts& g) {
    for (const auto& dump : res.dumps) {
        std::string base = g.out.empty() ? std::string("violation") : g.out + ".violation";
        std::string upath = base + std::to_string(dump.trial) + ".U.txt";
        std::string vpath = base + std::to_string(dump.trial) + ".V.txt";
        pl::save_matrix_file(dump.u, upath);
        pl::save_matrix_file(dump.v, vpath);
        std::cerr << "# violation in trial " << dump.trial << ": inputs written to " << upath
                  << " and " << vpath << '\n';
    }
}

int cmd_rank(const std::string& file, std::optional<std::uint64_t> mod) {
    pl::IntMatrix m = pl::load_matrix_file(file);
    pl::RankResult r = mod ? pl::rank_mod_p(m, *mod) : pl::rank_z(m);
    std::cout << "rank " << r.rank << '\n';
    return 0;
}

int cmd_snf(const std::string& file, bool transforms) {
    pl::IntMatrix m = pl::load_matrix_file(file);
    if (m.rows() != m.cols()) throw pl::ShapeError("snf expects a square matrix");
    pl::SmithDecomposition d = pl::smith_normal_form(m);
    bool first = true;
    for (const mpz_class& s : d.invariant_factors()) {
        if (!first) std::cout << ' ';
        std::cout << s.get_str();
        first = false;
    }
    std::cout << '\n';
    if (transforms) {
        std::cout << "U\n" << pl::serialize_matrix_text(d.U);
        std::cout << "V\n" << pl::serialize_matrix_text(d.V);
    }
    return 0;
}

int cmd_digits(const std::string& file, std::uint64_t p, const std::string& dump_dir) {
    pl::IntMatrix m = pl::load_matrix_file(file);
    pl::PAdicExpansion e = pl::padic_expand(m, p);
    std::cout << "digits " << e.length() << '\n';
    pl::DigitRankProfile profile = pl::digit_rank_profile(m, p);
    std::cout << "profile";
    for (std::size_t r : profile.ranks) std::cout << ' ' << r;
    std::cout << '\n';
    if (!dump_dir.empty()) {
        std::filesystem::create_directories(dump_dir);
        for (std::size_t i = 0; i < e.digits.size(); ++i)
            pl::save_matrix_file(e.digits[i],
                                 dump_dir + "/digit" + std::to_string(i) + ".txt");
    }
    return 0;
}

int cmd_verify_theorem1(const std::string& file, std::uint64_t p, const std::string& primes,
                        std::size_t trials, const GlobalOpts& g) {
    if (!file.empty()) {
        pl::IntMatrix a = pl::load_matrix_file(file);
        pl::VerificationReport rep = pl::verify_theorem1(a, p);
        emit_reports({rep}, g);
        if (!g.quiet) std::cerr << "# " << pl::report_brief(rep) << '\n';
        return rep.applicable && !rep.holds ? 1 : 0;
    }
    pl::ExperimentConfig cfg;
    cfg.ps = parse_list(primes);
    for (std::uint64_t q : cfg.ps) pl::require_prime(q);
    cfg.trials = trials;
    cfg.seed = g.seed;
    pl::SweepResult res = pl::run_theorem1_sweep(cfg);
    emit_records(res, g);
    sweep_summary("theorem1", res, g);
    return res.violations ? 1 : 0;
}

int cmd_verify_rank1rem(const std::string& u_text, std::uint64_t p, const GlobalOpts& g) {
    std::vector<std::uint64_t> vals = parse_list(u_text);
    pl::IntMatrix u(1, vals.size());
    for (std::size_t j = 0; j < vals.size(); ++j)
        u.at(0, j) = static_cast<unsigned long>(vals[j]);
    pl::VerificationReport rep = pl::verify_rank1_rem(u, p);
    emit_reports({rep}, g);
    if (!g.quiet) std::cerr << "# " << pl::report_brief(rep) << '\n';
    return rep.applicable && !rep.holds ? 1 : 0;
}

int cmd_verify_bcols(const std::string& prange, const GlobalOpts& g) {
    std::vector<pl::VerificationReport> reports;
    for (std::uint64_t p : odd_primes_in(prange))
        reports.push_back(pl::verify_B_columns(p));
    emit_reports(reports, g);
    if (!g.quiet)
        for (const auto& rep : reports) std::cerr << "# " << pl::report_brief(rep) << '\n';
    return all_hold(reports) ? 0 : 1;
}

int cmd_verify_latin(const std::string& prange, std::size_t samples, const GlobalOpts& g) {
    std::vector<pl::VerificationReport> asserted;
    std::vector<pl::VerificationReport> all;
    std::size_t sample_holds = 0, sample_total = 0;
    for (std::uint64_t p : odd_primes_in(prange)) {
        pl::VerificationReport cayley =
            pl::latin_square_rank_check(pl::cayley_table(p), p);
        asserted.push_back(cayley);
        all.push_back(cayley);
        for (std::size_t s = 0; s < samples; ++s) {
            pl::RngStream rng = pl::RngStream::substream(g.seed, p * 100000 + s);
            pl::VerificationReport rep =
                pl::latin_square_rank_check(pl::random_latin_square(p, rng), p);
            rep.notes = "random isotope; observational";
            ++sample_total;
            if (rep.holds) ++sample_holds;
            all.push_back(std::move(rep));
        }
    }
    emit_reports(all, g);
    if (!g.quiet) {
        for (const auto& rep : asserted) std::cerr << "# " << pl::report_brief(rep) << '\n';
        if (sample_total)
            std::cerr << "# latin random samples: " << sample_holds << "/" << sample_total
                      << " hold (observational)\n";
    }
    return all_hold(asserted) ? 0 : 1;
}

int cmd_verify_kummer(std::uint64_t max, const std::string& primes, const GlobalOpts& g) {
    std::vector<pl::VerificationReport> reports;
    for (std::uint64_t p : parse_list(primes)) {
        pl::require_prime(p);
        std::size_t mismatches = 0;
        for (std::uint64_t a = 0; a <= max; ++a)
            for (std::uint64_t b = 0; b <= max; ++b)
                if (pl::carry_count(a, b, p) != pl::binom_valuation(a, b, p)) ++mismatches;
        pl::VerificationReport rep;
        rep.claim = "kummer";
        rep.inputs = {{"p", std::to_string(p)}, {"max", std::to_string(max)}};
        rep.computed = {{"mismatches", std::to_string(mismatches)}};
        rep.holds = mismatches == 0;
        reports.push_back(std::move(rep));
    }
    emit_reports(reports, g);
    if (!g.quiet)
        for (const auto& rep : reports) std::cerr << "# " << pl::report_brief(rep) << '\n';
    return all_hold(reports) ? 0 : 1;
}

int cmd_verify_parity(std::size_t max_i, std::uint64_t max_k, const GlobalOpts& g) {
    std::size_t failures = 0, total = 0;
    for (std::size_t i = 1; i <= max_i; ++i)
        for (std::uint64_t k = 0; k <= max_k; ++k) {
            ++total;
            if (!pl::quo_binom_parity(i, k).holds) ++failures;
        }
    pl::VerificationReport rep;
    rep.claim = "parity";
    rep.inputs = {{"max_i", std::to_string(max_i)}, {"max_k", std::to_string(max_k)}};
    rep.computed = {{"checked", std::to_string(total)},
                    {"failures", std::to_string(failures)}};
    rep.holds = failures == 0;
    emit_reports({rep}, g);
    if (!g.quiet) std::cerr << "# " << pl::report_brief(rep) << '\n';
    return rep.holds ? 0 : 1;
}

int cmd_verify_blocks(const std::string& rrange, bool dependence, const GlobalOpts& g) {
    std::vector<pl::VerificationReport> reports;
    for (std::uint64_t r : parse_list(rrange))
        reports.push_back(dependence ? pl::verify_column_dependence(r)
                                     : pl::verify_block_lemmas(r));
    emit_reports(reports, g);
    if (!g.quiet)
        for (const auto& rep : reports) std::cerr << "# " << pl::report_brief(rep) << '\n';
    return all_hold(reports) ? 0 : 1;
}

int cmd_verify_padic(std::size_t r, std::size_t n, std::size_t trials, bool canonical,
                     const GlobalOpts& g) {
    std::vector<pl::VerificationReport> reports;
    if (canonical || trials == 0) {
        reports.push_back(pl::theorem_padic_canonical(r));
    }
    if (trials > 0) {
        if (n == 0) n = std::size_t(1) << r;
        pl::RngStream rng(g.seed);
        auto batch = pl::verify_theorem_padic(n, r, trials, rng);
        reports.insert(reports.end(), batch.begin(), batch.end());
    }
    emit_reports(reports, g);
    if (!g.quiet) {
        std::size_t covered = 0, matched = 0;
        for (const auto& rep : reports) {
            if (rep.applicable) ++covered;
            if (rep.computed.count("matches") && rep.computed.at("matches") == "1")
                ++matched;
        }
        std::cerr << "# padic: reports=" << reports.size() << " coverage=" << covered
                  << " matches=" << matched << '\n';
    }
    return all_hold(reports) ? 0 : 1;
}

int cmd_conjecture(const std::string& ps, const std::string& rs, const std::string& ns,
                   std::size_t trials, const GlobalOpts& g) {
    pl::ExperimentConfig cfg;
    cfg.ps = odd_primes_in(ps);
    for (std::uint64_t r : parse_list(rs)) cfg.rs.push_back(r);
    for (std::uint64_t n : parse_list(ns)) cfg.ns.push_back(n);
    cfg.trials = trials;
    cfg.seed = g.seed;
    pl::SweepResult res = pl::run_conjecture_sweep(cfg);
    emit_records(res, g);
    sweep_summary("conjecture", res, g);
    if (!g.quiet && !res.records.empty())
        std::cerr << "# tightness frequency: "
                  << static_cast<double>(res.tight) / res.records.size() << '\n';
    dump_violations(res, g);
    return res.violations ? 1 : 0;
}

int cmd_gen(const std::string& family, std::size_t r, std::uint64_t p, std::size_t n,
            std::uint64_t lo, std::uint64_t hi, const std::string& factors_text,
            const GlobalOpts& g) {
    pl::RngStream rng(g.seed);
    pl::IntMatrix m;
    if (family == "bcm") {
        m = pl::binary_code_matrix(r).matrix;
    } else if (family == "gram") {
        m = pl::gram(pl::binary_code_matrix(r).matrix);
    } else if (family == "cayley") {
        m = pl::cayley_table(p);
    } else if (family == "bmatrix") {
        m = pl::b_matrix(p);
    } else if (family == "latin") {
        m = pl::random_latin_square(p, rng);
    } else if (family == "invertible") {
        if (hi == 0) hi = p - 1;
        m = pl::random_mod_p_invertible(n, p, lo, hi, rng);
    } else if (family == "planted") {
        std::vector<mpz_class> factors;
        for (std::uint64_t f : parse_list(factors_text))
            factors.push_back(mpz_class(static_cast<unsigned long>(f)));
        factors.resize(n, mpz_class(0));
        m = pl::planted_smith_matrix(n, factors, rng);
    } else {
        throw pl::DomainError("unknown family '" + family + "'");
    }
    if (g.out.empty()) {
        if (g.format == "structured")
            std::cout << pl::serialize_matrix_json(m) << '\n';
        else
            std::cout << pl::serialize_matrix_text(m);
    } else {
        pl::save_matrix_file(m, g.out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact integer matrix ranks, Smith forms, base-p digit profiles, and "
                 "seeded experiments"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--seed", g.seed, "Master seed for randomized commands")
        ->default_val(0xE15EULL);
    app.add_option("--out", g.out, "Write machine output to a file instead of stdout");
    app.add_option("--format", g.format, "Record format")
        ->check(CLI::IsMember({"csv", "structured"}))
        ->default_val("csv");
    app.add_flag("--quiet", g.quiet, "Suppress stderr diagnostics");

    // rank
    std::string rank_file;
    std::optional<std::uint64_t> rank_mod;
    auto* rank = app.add_subcommand("rank", "Integer rank of a matrix file (or rank mod p)");
    rank->add_option("file", rank_file)->required();
    rank->add_option("--mod", rank_mod, "Compute rank over Z/pZ for this prime");

    // snf
    std::string snf_file;
    bool snf_transforms = false;
    auto* snf = app.add_subcommand("snf", "Invariant factors of a square matrix file");
    snf->add_option("file", snf_file)->required();
    snf->add_flag("--transforms", snf_transforms, "Also print the U and V transforms");

    // digits
    std::string digits_file, digits_dump;
    std::uint64_t digits_p = 0;
    auto* digits = app.add_subcommand("digits", "Base-p digit count and rank profile");
    digits->add_option("file", digits_file)->required();
    digits->add_option("--p", digits_p, "Prime base")->required();
    digits->add_option("--dump", digits_dump, "Directory for the digit matrices");

    // verify
    auto* verify = app.add_subcommand("verify", "Run a claim verifier");
    verify->require_subcommand(1);
    verify->fallthrough();

    std::string t1_file, t1_primes = "2,3,5,7";
    std::uint64_t t1_p = 3;
    std::size_t t1_trials = 500;
    auto* v_t1 = verify->add_subcommand(
        "theorem1", "rem/quo rank bounds on a file or a planted random sweep");
    v_t1->add_option("--file", t1_file, "Single matrix to check (with --p)");
    v_t1->add_option("--p", t1_p, "Prime for --file mode");
    v_t1->add_option("--primes", t1_primes, "Primes cycled through the sweep");
    v_t1->add_option("--trials", t1_trials, "Total sweep trials");

    std::string r1_u;
    std::uint64_t r1_p = 0;
    auto* v_r1 = verify->add_subcommand("rank1rem", "Scaled-vector remainder rank");
    v_r1->add_option("--u", r1_u, "Vector entries, e.g. 1,2,3,4")->required();
    v_r1->add_option("--p", r1_p, "Odd prime")->required();

    std::string bc_p = "3..101";
    auto* v_bc = verify->add_subcommand("bcols", "Column-prefix ranks of the B matrix");
    v_bc->add_option("--p", bc_p, "Odd primes (list/range)");

    std::string la_p = "3..97";
    std::size_t la_samples = 0;
    auto* v_la = verify->add_subcommand("latin", "Latin square ranks (Cayley asserted)");
    v_la->add_option("--p", la_p, "Odd primes (list/range)");
    v_la->add_option("--samples", la_samples, "Random isotopes per prime (observational)");

    std::uint64_t ku_max = 300;
    std::string ku_primes = "2,3,5,7,11";
    auto* v_ku = verify->add_subcommand("kummer", "Carry count vs binomial valuation");
    v_ku->add_option("--max", ku_max, "Check all a,b up to this");
    v_ku->add_option("--primes", ku_primes, "Primes to sweep");

    std::size_t pa_max_i = 12;
    std::uint64_t pa_max_k = 4096;
    auto* v_pa = verify->add_subcommand("parity", "Quotient vs binomial parity");
    v_pa->add_option("--max-i", pa_max_i, "Largest power index");
    v_pa->add_option("--max-k", pa_max_k, "Largest offset");

    std::string bl_r = "1..7";
    auto* v_bl = verify->add_subcommand("blocks", "Digit-block vanishing and ranks");
    v_bl->add_option("--r", bl_r, "Code sizes (list/range)");

    std::string de_r = "1..7";
    auto* v_de = verify->add_subcommand("dependence", "Digit column dependences");
    v_de->add_option("--r", de_r, "Code sizes (list/range)");

    std::size_t pd_r = 4, pd_n = 0, pd_trials = 0;
    bool pd_canonical = false;
    auto* v_pd = verify->add_subcommand("padic", "Digit-rank profile of usv products");
    v_pd->add_option("--r", pd_r, "Rank parameter (<= 6)");
    v_pd->add_option("--n", pd_n, "Matrix size (default 2^r)");
    v_pd->add_option("--trials", pd_trials, "Random trials (0 = canonical only)");
    v_pd->add_flag("--canonical", pd_canonical, "Include the embedded-code instance");

    // conjecture
    std::string cj_p = "3", cj_r = "2", cj_n = "20";
    std::size_t cj_trials = 100;
    auto* conjecture =
        app.add_subcommand("conjecture", "Digit-1 rank vs conjectured bound sweep");
    conjecture->add_option("--p", cj_p, "Odd primes (list/range)");
    conjecture->add_option("--r", cj_r, "Rank parameters (list/range)");
    conjecture->add_option("--n", cj_n, "Matrix sizes (list/range)");
    conjecture->add_option("--trials", cj_trials, "Trials per (p, r, n) combination");

    // gen
    std::string gen_family, gen_factors;
    std::size_t gen_r = 4, gen_n = 4;
    std::uint64_t gen_p = 5, gen_lo = 0, gen_hi = 0;
    auto* gen = app.add_subcommand("gen", "Write a constructed matrix");
    gen->add_option("family", gen_family,
                    "bcm | gram | cayley | bmatrix | latin | invertible | planted")
        ->required();
    gen->add_option("--r", gen_r, "Code size for bcm/gram");
    gen->add_option("--p", gen_p, "Prime for cayley/bmatrix/latin/invertible");
    gen->add_option("--n", gen_n, "Size for invertible/planted");
    gen->add_option("--lo", gen_lo, "Entry range low (invertible)");
    gen->add_option("--hi", gen_hi, "Entry range high (invertible, default p-1)");
    gen->add_option("--factors", gen_factors, "Planted invariant factors, e.g. 1,3,0,0");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (rank->parsed()) return cmd_rank(rank_file, rank_mod);
        if (snf->parsed()) return cmd_snf(snf_file, snf_transforms);
        if (digits->parsed()) return cmd_digits(digits_file, digits_p, digits_dump);
        if (verify->parsed()) {
            if (v_t1->parsed())
                return cmd_verify_theorem1(t1_file, t1_p, t1_primes, t1_trials, g);
            if (v_r1->parsed()) return cmd_verify_rank1rem(r1_u, r1_p, g);
            if (v_bc->parsed()) return cmd_verify_bcols(bc_p, g);
            if (v_la->parsed()) return cmd_verify_latin(la_p, la_samples, g);
            if (v_ku->parsed()) return cmd_verify_kummer(ku_max, ku_primes, g);
            if (v_pa->parsed()) return cmd_verify_parity(pa_max_i, pa_max_k, g);
            if (v_bl->parsed()) return cmd_verify_blocks(bl_r, false, g);
            if (v_de->parsed()) return cmd_verify_blocks(de_r, true, g);
            if (v_pd->parsed())
                return cmd_verify_padic(pd_r, pd_n, pd_trials, pd_canonical, g);
        }
        if (conjecture->parsed())
            return cmd_conjecture(cj_p, cj_r, cj_n, cj_trials, g);
        if (gen->parsed())
            return cmd_gen(gen_family, gen_r, gen_p, gen_n, gen_lo, gen_hi, gen_factors, g);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    std::cerr << "error: no command\n";
    return 2;
}
