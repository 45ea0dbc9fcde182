#include "padiclab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "padiclab/constructions.hpp"
#include "padiclab/errors.hpp"
#include "padiclab/exact_linalg.hpp"
#include "padiclab/rng.hpp"
#include "padiclab/theorems.hpp"

namespace padiclab {

int env_thread_count() {
    const char* s = std::getenv("PADICLAB_THREADS");
    if (!s || !*s) return 1;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if ((end && *end) || v <= 1) return 1;
    return static_cast<int>(std::min(v, 64L));
}

void parallel_run(std::size_t count, const std::function<void(std::size_t)>& fn) {
    int workers = env_thread_count();
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) break;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                next.store(count);  // drain remaining work
                break;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

namespace {

void summarize(SweepResult& res) {
    for (const TrialRecord& rec : res.records) {
        if (rec.applicable && !*rec.applicable) ++res.inapplicable;
        if (rec.holds && !*rec.holds) ++res.violations;
        if (rec.tight && *rec.tight) ++res.tight;
    }
}

}  // namespace

SweepResult run_conjecture_sweep(const ExperimentConfig& cfg) {
    if (cfg.ps.empty() || cfg.rs.empty() || cfg.ns.empty() || cfg.trials == 0)
        throw DomainError("conjecture sweep needs non-empty p/r/n lists and trials >= 1");
    std::size_t combos = cfg.ps.size() * cfg.rs.size() * cfg.ns.size();
    std::size_t total = combos * cfg.trials;

    SweepResult res;
    res.records.resize(total);
    parallel_run(total, [&](std::size_t g) {
        std::size_t combo = g / cfg.trials;
        std::size_t n_i = combo % cfg.ns.size();
        std::size_t r_i = combo / cfg.ns.size() % cfg.rs.size();
        std::size_t p_i = combo / (cfg.ns.size() * cfg.rs.size());
        RngStream stream = RngStream::substream(cfg.seed, g);
        std::uint64_t seed0 = stream.state();
        TrialRecord rec =
            conjecture_trial(cfg.ps[p_i], cfg.rs[r_i], cfg.ns[n_i], stream);
        rec.trial = g;
        rec.seed = seed0;
        res.records[g] = std::move(rec);
    });
    summarize(res);

    // Regenerate the inputs of any violating trial for independent replay.
    for (const TrialRecord& rec : res.records) {
        if (!rec.holds || *rec.holds) continue;
        ViolationDump dump;
        dump.trial = rec.trial;
        RngStream replay(rec.seed);
        conjecture_trial(rec.p, *rec.r, rec.n, replay, &dump.u, &dump.v);
        res.dumps.push_back(std::move(dump));
    }
    return res;
}

namespace {

// Largest exponent usable for the planted mod-p rank: p^cap <= 128, further
// capped so the quotient-rank elimination stays fast at n ~ 150.
std::size_t r0_cap(std::uint64_t p) {
    std::size_t cap = 0;
    std::uint64_t pw = 1;
    while (pw * p <= 128) {
        pw *= p;
        ++cap;
    }
    return std::min<std::size_t>(cap, 5);
}

TrialRecord theorem1_trial(std::uint64_t p, RngStream& rng) {
    auto start = std::chrono::steady_clock::now();
    std::size_t r0 = rng.next_below(r0_cap(p) + 1);
    std::size_t extra = rng.next_below(3);
    std::size_t r = r0 + extra;
    std::size_t n = static_cast<std::size_t>(rng.next_in(129, 150));

    // Divisibility chain with r0 factors coprime to p and r - r0 multiples.
    static const unsigned long choices[5] = {1, 1, 1, 2, 3};
    std::vector<mpz_class> factors(n, mpz_class(0));
    mpz_class v(1);
    for (std::size_t j = 0; j < r; ++j) {
        unsigned long m = choices[rng.next_below(5)];
        if (m % p == 0) m = 1;
        v *= m;
        if (j >= r0) v *= static_cast<unsigned long>(p);
        factors[j] = v;
    }
    IntMatrix a = planted_smith_matrix(n, factors, rng);

    std::size_t r_got = rank_z(a).rank;
    std::size_t r0_got = rank_mod_p(a, p).rank;
    std::size_t rank_rem = rank_z(mat_rem(a, p)).rank;
    std::size_t rank_quo = rank_z(mat_quo(a, p)).rank;
    mpq_class bound_rem = rem_rank_bound(p, r0_got);
    mpq_class bound_quo = mpq_class(static_cast<unsigned long>(r_got)) + bound_rem;

    TrialRecord rec;
    rec.p = p;
    rec.n = n;
    rec.r = r_got;
    rec.r0 = r0_got;
    rec.rank_rem = rank_rem;
    rec.rank_quo = rank_quo;
    rec.bound_rem = bound_rem;
    rec.bound_quo = bound_quo;
    rec.applicable = true;  // p^r0 <= 128 < n by construction
    rec.holds = r_got == r && r0_got == r0 &&
                mpq_class(static_cast<unsigned long>(rank_rem)) <= bound_rem &&
                mpq_class(static_cast<unsigned long>(rank_quo)) <= bound_quo;
    rec.wall_time_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count());
    return rec;
}

}  // namespace

SweepResult run_theorem1_sweep(const ExperimentConfig& cfg) {
    if (cfg.ps.empty() || cfg.trials == 0)
        throw DomainError("theorem sweep needs a prime list and trials >= 1");

    SweepResult res;
    res.records.resize(cfg.trials);
    parallel_run(cfg.trials, [&](std::size_t g) {
        std::uint64_t p = cfg.ps[g % cfg.ps.size()];
        RngStream stream = RngStream::substream(cfg.seed, g);
        std::uint64_t seed0 = stream.state();
        TrialRecord rec = theorem1_trial(p, stream);
        rec.trial = g;
        rec.seed = seed0;
        res.records[g] = std::move(rec);
    });
    summarize(res);
    return res;
}

}  // namespace padiclab
